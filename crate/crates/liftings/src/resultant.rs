//! Resultants, discriminants and fraction-free determinants.
//!
//! The resultant of two polynomials with respect to one variable is the
//! determinant of their Sylvester matrix, computed by Bareiss elimination:
//! the intermediate divisions are exact over the polynomial ring, so no
//! fractions appear. The discriminant follows the classical normalization
//! `(-1)^(d(d-1)/2) Res(f, f') / lc(f)`, so the quadratic `a x^2 + b x + c`
//! has discriminant `b^2 - 4ac`.

use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::poly::Poly;
use crate::ring::Ring;

/// Fraction-free (Bareiss) determinant of a square matrix of polynomials.
/// Row swaps are tracked by sign; the divisions Bareiss performs are exact.
pub fn bareiss_determinant(matrix: &[Vec<Poly>], ring: &Ring) -> Result<Poly> {
    let n = matrix.len();
    for row in matrix {
        if row.len() != n {
            return Err(Error::Dimension("determinant of a non-square matrix".into()));
        }
    }
    if n == 0 {
        return Ok(Poly::one(ring));
    }
    let field = &ring.field;
    let mut m: Vec<Vec<Poly>> = matrix.to_vec();
    let mut sign_flip = false;
    let mut prev_pivot = Poly::one(ring);
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign_flip = !sign_flip;
                }
                None => return Ok(Poly::zero()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let a = m[k][k].mul(&m[i][j], field)?;
                let b = m[i][k].mul(&m[k][j], field)?;
                let num = a.sub(&b, field);
                m[i][j] = if num.is_zero() {
                    Poly::zero()
                } else {
                    num.exact_div(&prev_pivot, field)?
                };
            }
            m[i][k] = Poly::zero();
        }
        prev_pivot = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    Ok(if sign_flip { det.neg(field) } else { det })
}

/// Sylvester matrix of `f` and `g` with respect to `var`; the entries are
/// polynomials in the remaining variables.
pub fn sylvester_matrix(f: &Poly, g: &Poly, var: usize, field: &FieldSpec) -> Result<Vec<Vec<Poly>>> {
    let df = f.degree_in(var) as usize;
    let dg = g.degree_in(var) as usize;
    if df == 0 || dg == 0 {
        return Err(Error::Argument(
            "resultant requires positive degree in the chosen variable".into(),
        ));
    }
    let fc = f.coeffs_in_var(var, field); // fc[k] multiplies var^k
    let gc = g.coeffs_in_var(var, field);
    let size = df + dg;
    let mut m = vec![vec![Poly::zero(); size]; size];
    for i in 0..dg {
        for k in 0..=df {
            m[i][i + k] = fc[df - k].clone();
        }
    }
    for i in 0..df {
        for k in 0..=dg {
            m[dg + i][i + k] = gc[dg - k].clone();
        }
    }
    Ok(m)
}

/// Resultant of `f` and `g` with respect to `var`.
pub fn resultant_univariate(f: &Poly, g: &Poly, var: usize, ring: &Ring) -> Result<Poly> {
    let m = sylvester_matrix(f, g, var, &ring.field)?;
    bareiss_determinant(&m, ring)
}

/// Discriminant of `f` with respect to `var`:
/// `(-1)^(d(d-1)/2) Res(f, df/dvar) / lc(f)`.
pub fn discriminant(f: &Poly, var: usize, ring: &Ring) -> Result<Poly> {
    let d = f.degree_in(var);
    if d == 0 {
        return Err(Error::Argument(
            "discriminant requires positive degree in the chosen variable".into(),
        ));
    }
    let fp = f.derivative(var, &ring.field);
    if fp.is_zero() {
        return Err(Error::Argument(
            "derivative vanishes (inseparable in this characteristic)".into(),
        ));
    }
    let res = resultant_univariate(f, &fp, var, ring)?;
    let lc = f.coeffs_in_var(var, &ring.field)[d as usize].clone();
    let quotient = res.exact_div(&lc, &ring.field)?;
    let sign = (d as u64) * (d as u64 - 1) / 2;
    Ok(if sign % 2 == 1 {
        quotient.neg(&ring.field)
    } else {
        quotient
    })
}

/// The `a+1` signed maximal minors of an `a x (a+1)` matrix: minor `j`
/// deletes column `j` and carries sign `(-1)^j`. Determinants are computed
/// fraction-free.
pub fn maximal_minors(rows: &[Vec<Poly>], ring: &Ring) -> Result<Vec<Poly>> {
    let a = rows.len();
    for row in rows {
        if row.len() != a + 1 {
            return Err(Error::Dimension(format!(
                "expected an {a} x {} matrix",
                a + 1
            )));
        }
    }
    let mut minors = vec![];
    for j in 0..=a {
        let sub: Vec<Vec<Poly>> = rows
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(c, _)| *c != j)
                    .map(|(_, p)| p.clone())
                    .collect()
            })
            .collect();
        let det = bareiss_determinant(&sub, ring)?;
        minors.push(if j % 2 == 1 { det.neg(&ring.field) } else { det });
    }
    Ok(minors)
}
