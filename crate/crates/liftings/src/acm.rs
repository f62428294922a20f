//! Radical liftings of codimension-two arithmetically Cohen-Macaulay
//! ideals.
//!
//! The pipeline: in generic coordinates the degrevlex initial ideal j of H
//! is a staircase in `K[x0, x1]` whose minimal syzygies form the bidiagonal
//! matrix M_j; lifting its rows along the reduced basis of H gives M_H,
//! the distraction of j gives a radical lifting N with matrix M_N, and a
//! weight vector makes the trailing terms of H flow to zero in a flat
//! family H(t). The maximal minors of
//!
//! ```text
//!   M(t) = M_{H(t)} + M_N - M_j
//! ```
//!
//! cut out a family of xn-liftings of H(t); for all but finitely many
//! values tbar the specialized ideal is radical, and pulling back along
//! x_i -> tbar^{w_i} x_i produces a radical lifting of H itself.

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::groebner::{self, Grading};
use crate::lifting;
use crate::order::{Exp, TermOrder};
use crate::poly::Poly;
use crate::resultant;
use crate::ring::Ring;
use crate::tower;
use crate::util::SplitMix64;

/// An a x (a+1) matrix of polynomials whose rows are first syzygies of the
/// ordered generator list and whose signed maximal minors regenerate the
/// ideal of the generators.
#[derive(Clone, Debug)]
pub struct HilbertBurchMatrix {
    pub rows: Vec<Vec<Poly>>,
    pub generators: Vec<Poly>,
    pub row_degrees: Vec<u32>,
    pub col_degrees: Vec<u32>,
}

impl HilbertBurchMatrix {
    pub fn ncols(&self) -> usize {
        self.generators.len()
    }

    /// Exact check that every row annihilates the generators.
    pub fn check_rows(&self, field: &FieldSpec) -> Result<bool> {
        for row in &self.rows {
            if !groebner::is_syzygy(row, &self.generators, field)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The signed maximal minors.
    pub fn minors(&self, ring: &Ring) -> Result<Vec<Poly>> {
        resultant::maximal_minors(&self.rows, ring)
    }
}

/// Entry-wise `a + b - c` for matrices of identical shape.
pub fn matrix_combine(
    a: &HilbertBurchMatrix,
    b: &HilbertBurchMatrix,
    c: &HilbertBurchMatrix,
    field: &FieldSpec,
) -> HilbertBurchMatrix {
    let rows = a
        .rows
        .iter()
        .zip(&b.rows)
        .zip(&c.rows)
        .map(|((ra, rb), rc)| {
            ra.iter()
                .zip(rb)
                .zip(rc)
                .map(|((x, y), z)| x.add(y, field).sub(z, field))
                .collect()
        })
        .collect();
    HilbertBurchMatrix {
        rows,
        generators: a.generators.clone(),
        row_degrees: a.row_degrees.clone(),
        col_degrees: a.col_degrees.clone(),
    }
}

/// Sorts basis elements into staircase order: descending power of the
/// first variable on head terms (descending pure lex).
pub fn staircase_sort(gb: &mut [Poly], order: &TermOrder) {
    gb.sort_by(|a, b| {
        let ha = a.head_term(order).unwrap().0.clone();
        let hb = b.head_term(order).unwrap().0.clone();
        hb.cmp(&ha)
    });
}

/// True when the degrevlex initial ideal of H is a codimension-two
/// staircase in the first two variables: every head involves only x0 and
/// x1, and pure powers of both occur.
pub fn check_generic_coordinates(h_gens: &[Poly], ring: &Ring) -> Result<bool> {
    let order = main_order(ring);
    let grading = main_grading(ring);
    let gb = groebner::buchberger(h_gens, &order, &ring.field, &grading)?;
    let heads: Vec<Exp> = gb
        .iter()
        .map(|g| g.head_term(&order).unwrap().0.clone())
        .collect();
    Ok(staircase_shape(&heads, ring.num_main))
}

fn staircase_shape(heads: &[Exp], num_main: usize) -> bool {
    let only_x0_x1 = heads
        .iter()
        .all(|h| h.0.iter().enumerate().all(|(i, &k)| i < 2 || i >= num_main || k == 0));
    let pure_x0 = heads.iter().any(|h| h.0[0] > 0 && h.0[1..].iter().all(|&k| k == 0));
    let pure_x1 = heads
        .iter()
        .any(|h| h.0[0] == 0 && h.0[1] > 0 && h.0[2..].iter().all(|&k| k == 0));
    only_x0_x1 && pure_x0 && pure_x1
}

fn main_order(ring: &Ring) -> TermOrder {
    ring.tower_order(TermOrder::DegRevLex, TermOrder::Lex)
}

fn main_grading(ring: &Ring) -> Grading {
    let mut w = vec![0u32; ring.nvars()];
    for x in w[..ring.num_main].iter_mut() {
        *x = 1;
    }
    Grading::Weighted(w)
}

/// Applies an invertible linear change of the main variables:
/// `x_i -> sum_j m[i][j] x_j`.
pub fn apply_linear_change(f: &Poly, m: &[Vec<Scalar>], ring: &Ring) -> Result<Poly> {
    let nm = ring.num_main;
    let field = &ring.field;
    let rows: Vec<Poly> = (0..nm)
        .map(|i| {
            let mut p = Poly::zero();
            for (j, c) in m[i].iter().enumerate() {
                p = p.add(
                    &Poly::monomial(Exp::unit(ring.nvars(), j), c.clone()),
                    field,
                );
            }
            p
        })
        .collect();
    let mut acc = Poly::zero();
    for (e, c) in f.terms() {
        let mut rest = e.clone();
        for k in rest.0[..nm].iter_mut() {
            *k = 0;
        }
        let mut term = Poly::monomial(rest, c.clone());
        for (i, row) in rows.iter().enumerate() {
            if e.0[i] > 0 {
                term = term.mul(&row.pow(e.0[i] as u32, ring)?, field)?;
            }
        }
        acc = acc.add(&term, field);
    }
    Ok(acc)
}

fn field_det(m: &[Vec<Scalar>], field: &FieldSpec) -> Scalar {
    let n = m.len();
    let mut a: Vec<Vec<Scalar>> = m.to_vec();
    let mut det = field.one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&r| !a[r][k].is_zero()) else {
            return field.zero();
        };
        if p != k {
            a.swap(p, k);
            det = field.neg(&det);
        }
        det = field.mul(&det, &a[k][k]);
        let inv = field.inv(&a[k][k]).unwrap();
        for r in k + 1..n {
            let factor = field.mul(&a[r][k], &inv);
            for c in k..n {
                let s = field.mul(&factor, &a[k][c]);
                a[r][c] = field.sub(&a[r][c], &s);
            }
        }
    }
    det
}

/// Seeks a random invertible linear change of the main variables putting H
/// in generic coordinates. Returns the transformed generators and the
/// matrix used (`None` if the input was already generic).
pub fn make_generic(
    h_gens: &[Poly],
    ring: &Ring,
    seed: u64,
    tries: usize,
) -> Result<(Vec<Poly>, Option<Vec<Vec<Scalar>>>)> {
    if check_generic_coordinates(h_gens, ring)? {
        return Ok((h_gens.to_vec(), None));
    }
    let nm = ring.num_main;
    let field = &ring.field;
    let mut rng = SplitMix64::new(seed);
    for _ in 0..tries {
        let m: Vec<Vec<Scalar>> = (0..nm)
            .map(|_| (0..nm).map(|_| field.from_i64(rng.small_int(2))).collect())
            .collect();
        if field_det(&m, field).is_zero() {
            continue;
        }
        let transformed: Vec<Poly> = h_gens
            .iter()
            .map(|f| apply_linear_change(f, &m, ring))
            .collect::<Result<Vec<_>>>()?;
        if check_generic_coordinates(&transformed, ring)? {
            return Ok((transformed, Some(m)));
        }
    }
    Err(Error::Genericity(format!(
        "no generic linear change found in {tries} tries \
         (field too small or H not aCM of codimension 2)"
    )))
}

/// The bidiagonal Hilbert-Burch matrix of a staircase monomial basis
/// x0^{a_i} x1^{b_i} (a strictly decreasing, b strictly increasing): row i
/// is `(0, ..., x1^{b_{i+1}-b_i}, -x0^{a_i-a_{i+1}}, ..., 0)`.
pub fn hilbert_burch_monomial(gens: &[Poly], ring: &Ring) -> Result<HilbertBurchMatrix> {
    let nv = ring.nvars();
    let field = &ring.field;
    let mut stairs: Vec<(u16, u16)> = vec![];
    for g in gens {
        if g.num_terms() != 1 || !g.terms()[0].1.is_one() {
            return Err(Error::NotMinimal(
                "expected monic monomial generators".into(),
            ));
        }
        let e = &g.terms()[0].0;
        if e.0.iter().enumerate().any(|(i, &k)| i >= 2 && k != 0) {
            return Err(Error::NotMinimal(
                "staircase generators must lie in the first two variables".into(),
            ));
        }
        stairs.push((e.0[0], e.0[1]));
    }
    for w in stairs.windows(2) {
        if !(w[0].0 > w[1].0 && w[0].1 < w[1].1) {
            return Err(Error::NotMinimal(
                "generators must have strictly decreasing x0 and increasing x1 exponents".into(),
            ));
        }
    }
    let a = stairs.len() - 1;
    let mut rows = vec![];
    for i in 0..a {
        let mut row = vec![Poly::zero(); a + 1];
        let mut e1 = Exp::zero(nv);
        e1.0[1] = stairs[i + 1].1 - stairs[i].1;
        row[i] = Poly::monomial(e1, field.one());
        let mut e0 = Exp::zero(nv);
        e0.0[0] = stairs[i].0 - stairs[i + 1].0;
        row[i + 1] = Poly::monomial(e0, field.neg(&field.one()));
        rows.push(row);
    }
    let col_degrees: Vec<u32> = gens.iter().map(|g| g.degree()).collect();
    let row_degrees: Vec<u32> = (0..a)
        .map(|i| col_degrees[i] + (stairs[i + 1].1 - stairs[i].1) as u32)
        .collect();
    Ok(HilbertBurchMatrix {
        rows,
        generators: gens.to_vec(),
        row_degrees,
        col_degrees,
    })
}

/// Lifts the rows of the monomial matrix along a basis with the same head
/// terms: each combination `sum row_k g_k` is reduced to zero by the basis
/// and the division cofactors correct the row. The maximal minors of the
/// result regenerate the ideal of the basis (checked).
pub fn lift_hilbert_burch(
    g: &[Poly],
    mj: &HilbertBurchMatrix,
    ring: &Ring,
    x_order: &TermOrder,
) -> Result<HilbertBurchMatrix> {
    let field = &ring.field;
    let mut rows = vec![];
    for mrow in &mj.rows {
        let mut s = Poly::zero();
        for (entry, gk) in mrow.iter().zip(g) {
            s = s.add(&entry.mul(gk, field)?, field);
        }
        let (rem, quots) = tower::normal_form_tower(&s, g, ring, x_order, None)?;
        if !rem.is_zero() {
            return Err(Error::NotGroebnerBasis(
                "syzygy combination does not reduce to zero".into(),
            ));
        }
        let row: Vec<Poly> = mrow
            .iter()
            .zip(&quots)
            .map(|(entry, q)| entry.sub(q, field))
            .collect();
        rows.push(row);
    }
    let out = HilbertBurchMatrix {
        rows,
        generators: g.to_vec(),
        row_degrees: mj.row_degrees.clone(),
        col_degrees: g.iter().map(|p| p.degree()).collect(),
    };
    if !out.check_rows(field)? {
        return Err(Error::InternalConsistency("lifted rows are not syzygies".into()));
    }
    let minors = out.minors(ring)?;
    if !groebner::ideal_equal(&minors, g, &main_order(ring), field)? {
        return Err(Error::InternalConsistency(
            "maximal minors do not regenerate the ideal".into(),
        ));
    }
    Ok(out)
}

/// Default distraction scalars 0, 1, 2, ... per variable; a prime field
/// must be large enough to provide the requested count.
pub fn default_scalars(ring: &Ring, counts: &[usize]) -> Result<Vec<Vec<Poly>>> {
    let field = &ring.field;
    let mut out = vec![];
    for &c in counts {
        if let Some(size) = field.size() {
            if c as u64 > size {
                return Err(Error::FieldSize {
                    needed: c,
                    available: size as usize,
                });
            }
        }
        out.push(
            (0..c)
                .map(|k| Poly::constant(ring, field.from_i64(k as i64)))
                .collect(),
        );
    }
    Ok(out)
}

/// The distraction of a staircase monomial ideal: each power x_i^d becomes
/// the product of d distinct linear forms x_i - s*xn. The result is a
/// monic basis with the same initial ideal (asserted) and is radical
/// whenever the scalars are distinct in the field; its matrix is obtained
/// by lifting the monomial rows.
pub fn distraction_lifting(
    j_gens: &[Poly],
    scalars: &[Vec<Poly>],
    ring: &Ring,
    mj: &HilbertBurchMatrix,
) -> Result<(Vec<Poly>, HilbertBurchMatrix)> {
    let field = &ring.field;
    let nm = ring.num_main;
    let xn = ring.xn_index();
    let mut n_gens = vec![];
    for g in j_gens {
        let e = &g.terms()[0].0;
        let mut p = Poly::one(ring);
        for i in 0..nm - 1 {
            let d = e.0[i] as usize;
            if d == 0 {
                continue;
            }
            if scalars.len() <= i || scalars[i].len() < d {
                return Err(Error::FieldSize {
                    needed: d,
                    available: scalars.get(i).map(|s| s.len()).unwrap_or(0),
                });
            }
            for k in 0..d {
                for l in 0..k {
                    if scalars[i][k] == scalars[i][l] {
                        return Err(Error::Argument(format!(
                            "distraction scalars for variable {} are not distinct",
                            ring.vars[i]
                        )));
                    }
                }
                let xi = Poly::var(ring, i);
                let sxn = scalars[i][k]
                    .mul_term(&Exp::unit(ring.nvars(), xn), &field.one(), field)?;
                p = p.mul(&xi.sub(&sxn, field), field)?;
            }
        }
        n_gens.push(p);
    }
    // the distraction is a monic basis with the expected initial ideal
    let order = main_order(ring);
    for (g, j) in n_gens.iter().zip(j_gens) {
        let (h, c) = g.head_term(&order)?;
        if !c.is_one() || h != &j.terms()[0].0 {
            return Err(Error::InternalConsistency(
                "distraction head terms drifted".into(),
            ));
        }
    }
    if !groebner::verify_groebner(&n_gens, &order, field)? {
        return Err(Error::InternalConsistency(
            "distraction is not a Groebner basis".into(),
        ));
    }
    let mn = lift_hilbert_burch(&n_gens, mj, ring, &order)?;
    Ok((n_gens, mn))
}

/// Searches for a weight vector w over the x variables with
/// `w . head > w . tail` for every basis element, scanning integer vectors
/// of increasing bound. Monomial bases get the convention [1, ..., 1, 0].
pub fn deformation_weight(g: &[Poly], ring: &Ring, order: &TermOrder) -> Result<Vec<u32>> {
    let nm = ring.num_main;
    let mut constraints: Vec<(Exp, Exp)> = vec![];
    for f in g {
        let head = f.head_term(order)?.0.clone();
        for (e, _) in f.terms() {
            if e != &head {
                constraints.push((head.clone(), e.clone()));
            }
        }
    }
    if constraints.is_empty() {
        let mut w = vec![1u32; nm];
        w[nm - 1] = 0;
        return Ok(w);
    }
    let valid = |w: &[u32]| {
        constraints.iter().all(|(a, b)| {
            let wa: u64 = (0..nm).map(|i| w[i] as u64 * a.0[i] as u64).sum();
            let wb: u64 = (0..nm).map(|i| w[i] as u64 * b.0[i] as u64).sum();
            wa > wb
        })
    };
    for bound in 1u32..=8 {
        let base = bound + 1;
        let total = (base as u64).pow(nm as u32);
        for code in 0..total {
            let mut w = vec![0u32; nm];
            let mut c = code;
            for i in (0..nm).rev() {
                w[i] = (c % base as u64) as u32;
                c /= base as u64;
            }
            if w.iter().all(|&x| x < bound) {
                continue; // already scanned at a smaller bound
            }
            if valid(&w) {
                return Ok(w);
            }
        }
    }
    Err(Error::WeightSearch(format!(
        "no weight vector up to bound 8 satisfies {} strict inequalities",
        constraints.len()
    )))
}

/// Checks a supplied weight against the basis.
pub fn validate_weight(g: &[Poly], w: &[u32], ring: &Ring, order: &TermOrder) -> Result<()> {
    let nm = ring.num_main;
    if w.len() < nm {
        return Err(Error::Argument("weight vector too short".into()));
    }
    for f in g {
        let head = f.head_term(order)?.0.clone();
        let wh: u64 = (0..nm).map(|i| w[i] as u64 * head.0[i] as u64).sum();
        for (e, _) in f.terms() {
            if e == &head {
                continue;
            }
            let we: u64 = (0..nm).map(|i| w[i] as u64 * e.0[i] as u64).sum();
            if wh <= we {
                return Err(Error::Argument(format!(
                    "weight does not separate head from tail (w.head {wh} <= w.tail {we})"
                )));
            }
        }
    }
    Ok(())
}

/// The Groebner deformation family: every trailing term of each basis
/// element is scaled by `t^(w.(head - tail))`; all t exponents are
/// strictly positive, f(1) recovers f and f(0) the initial term.
pub fn deformation_family(
    g: &[Poly],
    w: &[u32],
    ring: &Ring,
    t_var: usize,
    order: &TermOrder,
) -> Result<Vec<Poly>> {
    let nm = ring.num_main;
    let field = &ring.field;
    let mut out = vec![];
    for f in g {
        let head = f.head_term(order)?.0.clone();
        let wh: i64 = (0..nm).map(|i| w[i] as i64 * head.0[i] as i64).sum();
        let mut terms = vec![];
        for (e, c) in f.terms() {
            if e == &head {
                terms.push((e.clone(), c.clone()));
                continue;
            }
            let we: i64 = (0..nm).map(|i| w[i] as i64 * e.0[i] as i64).sum();
            let d = wh - we;
            if d <= 0 {
                return Err(Error::Argument(
                    "deformation exponent is not positive".into(),
                ));
            }
            let mut e2 = e.clone();
            e2.0[t_var] = e2.0[t_var]
                .checked_add(d as u16)
                .ok_or_else(|| Error::Argument("exponent overflow".into()))?;
            terms.push((e2, c.clone()));
        }
        out.push(Poly::from_terms(field, terms));
    }
    Ok(out)
}

/// One attempted specialization of the deformed matrix family.
#[derive(Clone, Debug)]
pub struct Specialization {
    pub t: Scalar,
    /// Minors of M(tbar), monic (the lifting of H(tbar)).
    pub i_gens: Vec<Poly>,
    /// The deformed ideal H(tbar).
    pub h_t: Vec<Poly>,
    pub is_lifting: bool,
    /// The candidate radical lifting of H: the inverse scaling
    /// automorphism applied to the minors (empty when not a lifting).
    pub lifted_back: Vec<Poly>,
}

/// The full output of the radical-lifting pipeline.
pub struct AcmLiftResult {
    /// `K[x, xn]` (plus any coefficient parameters of the input ring).
    pub main_ring: Ring,
    /// main ring with the deformation parameter t appended.
    pub t_ring: Ring,
    pub t_var: usize,
    /// The linear change applied to reach generic coordinates, if any.
    pub coordinate_change: Option<Vec<Vec<Scalar>>>,
    /// Reduced basis of H in staircase order (main ring).
    pub g: Vec<Poly>,
    /// Staircase monomial basis of the initial ideal (main ring).
    pub j_gens: Vec<Poly>,
    pub m_j: HilbertBurchMatrix,
    pub m_h: HilbertBurchMatrix,
    pub n_gens: Vec<Poly>,
    pub m_n: HilbertBurchMatrix,
    pub omega: Vec<u32>,
    /// M(t) over the t ring.
    pub m_t: HilbertBurchMatrix,
    /// Its maximal minors I(t).
    pub i_t: Vec<Poly>,
    pub specializations: Vec<Specialization>,
    /// First specialization that passed, with its radical lifting of H.
    pub final_lifting: Option<(Scalar, Vec<Poly>)>,
    /// Whether the unit-column retry path produced the final matrix.
    pub unit_column_retry: bool,
}

/// Options for [`radical_lift`].
pub struct AcmOptions {
    /// Values of t to try, in order; zero entries are skipped. Defaults to
    /// 7, 2, 3, 5, 11.
    pub t_values: Vec<i64>,
    /// Distraction scalars per main variable, as polynomials of the MAIN
    /// ring (constants or coefficient parameters). `None` picks 0, 1, 2...
    pub scalars: Option<Vec<Vec<Poly>>>,
    /// Deformation weight over the x variables; `None` searches one.
    pub omega: Option<Vec<u32>>,
    /// Apply a seeded random change of coordinates when H is not generic.
    pub auto_generic: bool,
    pub seed: u64,
}

impl Default for AcmOptions {
    fn default() -> Self {
        AcmOptions {
            t_values: vec![7, 2, 3, 5, 11],
            scalars: None,
            omega: None,
            auto_generic: false,
            seed: 0,
        }
    }
}

/// Builds the main ring `K[x, xn]` for an aCM input ring `K[x]`.
pub fn acm_main_ring(base_ring: &Ring) -> Result<(Ring, Vec<usize>)> {
    let name = base_ring.fresh_main_name();
    base_ring.append_main_var(&name)
}

fn scale_back(f: &Poly, t: &Scalar, omega: &[u32], ring: &Ring) -> Result<Poly> {
    // x_i -> t^{w_i} x_i on the x block (xn untouched), term-wise
    let field = &ring.field;
    let terms = f
        .terms()
        .iter()
        .map(|(e, c)| {
            let mut k = c.clone();
            for (i, &w) in omega.iter().enumerate() {
                let pow = w as i64 * e.0[i] as i64;
                k = field.mul(&k, &field.pow(t, pow).unwrap());
            }
            (e.clone(), k)
        })
        .collect();
    Ok(Poly::from_terms(field, terms))
}

/// Runs the whole radical-lifting pipeline for an aCM codimension-two
/// ideal H given in `base_ring` (which may carry inert coefficient
/// parameters such as a transcendental chi).
pub fn radical_lift(h_gens: &[Poly], base_ring: &Ring, opts: &AcmOptions) -> Result<AcmLiftResult> {
    // generic coordinates
    let (h_gens, coordinate_change) = if opts.auto_generic {
        make_generic(h_gens, base_ring, opts.seed, 64)?
    } else {
        if !check_generic_coordinates(h_gens, base_ring)? {
            return Err(Error::Genericity(
                "the degrevlex initial ideal is not a staircase in x0, x1".into(),
            ));
        }
        (h_gens.to_vec(), None)
    };

    let base_order = main_order(base_ring);
    let grading = main_grading(base_ring);
    let mut g0 = groebner::buchberger(&h_gens, &base_order, &base_ring.field, &grading)?;
    staircase_sort(&mut g0, &base_order);

    let (main_ring, map) = acm_main_ring(base_ring)?;
    let order = main_order(&main_ring);
    let g: Vec<Poly> = g0.iter().map(|p| p.map_vars(&map, main_ring.nvars())).collect();
    let j_gens: Vec<Poly> = g
        .iter()
        .map(|p| Poly::monomial(p.head_term(&order).unwrap().0.clone(), main_ring.field.one()))
        .collect();

    let m_j = hilbert_burch_monomial(&j_gens, &main_ring)?;
    let m_h = lift_hilbert_burch(&g, &m_j, &main_ring, &order)?;

    // distraction of the staircase
    let counts: Vec<usize> = (0..main_ring.num_main - 1)
        .map(|i| {
            j_gens
                .iter()
                .map(|p| p.terms()[0].0 .0[i] as usize)
                .max()
                .unwrap_or(0)
        })
        .collect();
    let scalars = match &opts.scalars {
        Some(s) => s.clone(),
        None => default_scalars(&main_ring, &counts)?,
    };
    let (n_gens, m_n) = distraction_lifting(&j_gens, &scalars, &main_ring, &m_j)?;

    // deformation weight over the base x variables
    let omega = match &opts.omega {
        Some(w) => {
            let mut w = w.clone();
            w.truncate(base_ring.num_main);
            while w.len() < base_ring.num_main {
                w.push(0);
            }
            validate_weight(&g0, &w, base_ring, &base_order)?;
            w
        }
        None => deformation_weight(&g0, base_ring, &base_order)?,
    };

    // the deformed family lives in K[t][x, xn]
    let t_name = std::iter::once("t".to_string())
        .chain((0..).map(|k| format!("t{k}")))
        .find(|n| main_ring.var_index(n).is_none())
        .unwrap();
    let t_ring = main_ring.extend_params(&[t_name])?;
    let t_var = t_ring.nvars() - 1;
    let up: Vec<usize> = (0..main_ring.nvars()).collect();
    let g_t_base: Vec<Poly> = g.iter().map(|p| p.map_vars(&up, t_ring.nvars())).collect();
    let t_order = main_order(&t_ring);
    // xn carries weight zero in the deformation
    let mut omega_main = omega.clone();
    omega_main.push(0);
    let g_t = deformation_family(&g_t_base, &omega_main, &t_ring, t_var, &t_order)?;

    let lift_to_t = |m: &HilbertBurchMatrix| -> HilbertBurchMatrix {
        HilbertBurchMatrix {
            rows: m
                .rows
                .iter()
                .map(|r| r.iter().map(|p| p.map_vars(&up, t_ring.nvars())).collect())
                .collect(),
            generators: m
                .generators
                .iter()
                .map(|p| p.map_vars(&up, t_ring.nvars()))
                .collect(),
            row_degrees: m.row_degrees.clone(),
            col_degrees: m.col_degrees.clone(),
        }
    };
    let m_j_t = lift_to_t(&m_j);
    let m_h_t = lift_hilbert_burch(&g_t, &m_j_t, &t_ring, &t_order)?;
    let m_n_t = lift_to_t(&m_n);

    let build_and_try = |m_t: &HilbertBurchMatrix| -> Result<(Vec<Poly>, Vec<Specialization>, Option<(Scalar, Vec<Poly>)>)> {
        let i_t = resultant::maximal_minors(&m_t.rows, &t_ring)?;
        let mut specs = vec![];
        let mut final_lifting = None;
        let down: Vec<usize> = (0..t_ring.nvars())
            .map(|i| if i == t_var { 0 } else { i })
            .collect();
        for &tv in &opts.t_values {
            let tbar = t_ring.field.from_i64(tv);
            if tbar.is_zero() {
                continue;
            }
            let i_bar: Vec<Poly> = i_t
                .iter()
                .map(|p| {
                    p.substitute_scalar(t_var, &tbar, &t_ring)
                        .and_then(|q| q.make_monic(&order, &t_ring.field))
                        .map(|q| q.map_vars(&down, main_ring.nvars()))
                })
                .collect::<Result<Vec<_>>>()?;
            let h_bar: Vec<Poly> = g_t
                .iter()
                .map(|p| {
                    p.substitute_scalar(t_var, &tbar, &t_ring)
                        .map(|q| q.map_vars(&down, main_ring.nvars()))
                })
                .collect::<Result<Vec<_>>>()?;
            let (ok, _) = lifting::is_lifting(&i_bar, &h_bar, &main_ring, &TermOrder::DegRevLex)?;
            let lifted_back = if ok {
                let back: Vec<Poly> = i_bar
                    .iter()
                    .map(|p| {
                        scale_back(p, &tbar, &omega, &main_ring)
                            .and_then(|q| q.make_monic(&order, &main_ring.field))
                    })
                    .collect::<Result<Vec<_>>>()?;
                back
            } else {
                vec![]
            };
            if ok && final_lifting.is_none() {
                final_lifting = Some((tbar.clone(), lifted_back.clone()));
            }
            specs.push(Specialization {
                t: tbar,
                i_gens: i_bar,
                h_t: h_bar,
                is_lifting: ok,
                lifted_back,
            });
            if final_lifting.is_some() {
                break;
            }
        }
        Ok((i_t, specs, final_lifting))
    };

    let m_t = matrix_combine(&m_h_t, &m_n_t, &m_j_t, &t_ring.field);
    let (mut i_t, mut specializations, mut final_lifting) = build_and_try(&m_t)?;
    let mut unit_column_retry = false;
    let mut m_t_final = m_t;
    if final_lifting.is_none() {
        // retry preserving the columns of M_H that carry constant entries
        let mut m_retry = m_t_final.clone();
        let mut touched = false;
        for col in 0..m_h.ncols() {
            let has_constant = m_h
                .rows
                .iter()
                .any(|r| !r[col].is_zero() && r[col].degree() == 0);
            if has_constant {
                touched = true;
                for (ri, row) in m_retry.rows.iter_mut().enumerate() {
                    row[col] = m_h.rows[ri][col].map_vars(&up, t_ring.nvars());
                }
            }
        }
        if touched {
            let (i2, s2, f2) = build_and_try(&m_retry)?;
            if f2.is_some() {
                unit_column_retry = true;
                m_t_final = m_retry;
                i_t = i2;
                specializations = s2;
                final_lifting = f2;
            }
        }
    }
    if final_lifting.is_none() {
        return Err(Error::SpecializationFailure(format!(
            "none of the supplied t values {:?} produced a lifting",
            opts.t_values
        )));
    }

    Ok(AcmLiftResult {
        main_ring,
        t_ring,
        t_var,
        coordinate_change,
        g,
        j_gens,
        m_j,
        m_h,
        n_gens,
        m_n,
        omega,
        m_t: m_t_final,
        i_t,
        specializations,
        final_lifting,
        unit_column_retry,
    })
}

/// Certifies I against a supplied (expected-prime) decomposition: the
/// intersection of the components, taken verbatim, must equal I.
pub fn verify_radical_against_decomposition(
    i_gens: &[Poly],
    components: &[Vec<Poly>],
    ring: &Ring,
    order: &TermOrder,
) -> Result<bool> {
    if components.is_empty() {
        return Err(Error::Argument("no components supplied".into()));
    }
    let mut acc = components[0].clone();
    for comp in &components[1..] {
        acc = groebner::intersect(&acc, comp, ring, order)?;
    }
    groebner::ideal_equal(i_gens, &acc, order, &ring.field)
}
