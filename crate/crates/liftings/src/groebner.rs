//! Buchberger engine and ideal operations.
//!
//! Complete reduction (normal form with quotients), S-polynomials,
//! reduced Groebner bases with the Gebauer-Moeller pair criteria, Schreyer
//! syzygy rows, and the ideal operations the lifting constructions consume:
//! elimination, intersection, saturation by the last variable, degree
//! truncation, membership and equality.
//!
//! Divisor selection in `normal_form` is first-match in list order and the
//! order-maximal reducible term is always reduced first, so reductions are
//! deterministic for a fixed divisor list.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::order::{Exp, TermOrder};
use crate::poly::Poly;
use crate::ring::Ring;

/// Homogeneity contract for [`buchberger`] inputs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Grading {
    /// Standard total degree; inhomogeneous input is rejected.
    Standard,
    /// Weighted degree with the given per-variable weights.
    Weighted(Vec<u32>),
    /// No homogeneity check (internal use: the auxiliary-variable
    /// intersection construction introduces inhomogeneity).
    None,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    pub order: TermOrder,
    /// Monic elements, sorted ascending by head term.
    pub elements: Vec<Poly>,
    pub reduced: bool,
}

impl GroebnerBasis {
    pub fn heads(&self) -> Vec<Exp> {
        self.elements
            .iter()
            .map(|g| g.head_term(&self.order).unwrap().0.clone())
            .collect()
    }
}

/// A first syzygy of an ordered generator list: `sum entries[i]*g[i] = 0`.
pub type SyzygyRow = Vec<Poly>;

// ---------------------------------------------------------------------------
// working representation: term list sorted descending by the active order
// ---------------------------------------------------------------------------

#[derive(Clone, Debug)]
struct WPoly {
    terms: Vec<(Exp, Scalar)>,
}

impl WPoly {
    fn from_poly(p: &Poly, order: &TermOrder) -> WPoly {
        let mut terms: Vec<(Exp, Scalar)> = p.terms().to_vec();
        terms.sort_by(|a, b| order.cmp_slices(&b.0 .0, &a.0 .0));
        WPoly { terms }
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn head(&self) -> Option<&(Exp, Scalar)> {
        self.terms.first()
    }

    /// self -= c * x^m * other, merging sorted term lists.
    fn sub_mul(&mut self, c: &Scalar, m: &Exp, other: &WPoly, order: &TermOrder, field: &FieldSpec) {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut i = 0;
        let mut j = 0;
        while i < self.terms.len() && j < other.terms.len() {
            let oe = other.terms[j].0.mul(m).expect("exponent overflow");
            match order.cmp_slices(&self.terms[i].0 .0, &oe.0) {
                Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let k = field.neg(&field.mul(&other.terms[j].1, c));
                    out.push((oe, k));
                    j += 1;
                }
                Ordering::Equal => {
                    let k = field.sub(&self.terms[i].1, &field.mul(&other.terms[j].1, c));
                    if !k.is_zero() {
                        out.push((oe, k));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        while j < other.terms.len() {
            let oe = other.terms[j].0.mul(m).expect("exponent overflow");
            out.push((oe, field.neg(&field.mul(&other.terms[j].1, c))));
            j += 1;
        }
        self.terms = out;
    }
}

fn check_monic_divisors(divisors: &[Poly], order: &TermOrder) -> Result<Vec<Exp>> {
    let mut heads = Vec::with_capacity(divisors.len());
    for (i, g) in divisors.iter().enumerate() {
        let (h, c) = g.head_term(order).map_err(|_| {
            Error::ZeroPolynomial(format!("divisor {i} is the zero polynomial"))
        })?;
        if !c.is_one() {
            return Err(Error::NonMonic(format!(
                "divisor {i} has head coefficient {c}"
            )));
        }
        heads.push(h.clone());
    }
    Ok(heads)
}

/// Complete reduction with quotients: `f = sum quotients[i]*divisors[i] +
/// remainder`, no term of the remainder divisible by any divisor head.
pub fn normal_form(
    f: &Poly,
    divisors: &[Poly],
    order: &TermOrder,
    field: &FieldSpec,
) -> Result<(Poly, Vec<Poly>)> {
    let heads = check_monic_divisors(divisors, order)?;
    let wdivs: Vec<WPoly> = divisors.iter().map(|g| WPoly::from_poly(g, order)).collect();
    let mut r = WPoly::from_poly(f, order);
    let mut rem: Vec<(Exp, Scalar)> = vec![];
    let mut quots: Vec<Vec<(Exp, Scalar)>> = vec![vec![]; divisors.len()];
    while let Some((e, c)) = r.head().cloned() {
        match heads.iter().position(|h| h.divides(&e)) {
            Some(i) => {
                let m = heads[i].div(&e);
                quots[i].push((m.clone(), c.clone()));
                r.sub_mul(&c, &m, &wdivs[i], order, field);
            }
            None => {
                rem.push((e, c));
                r.terms.remove(0);
            }
        }
    }
    Ok((
        Poly::from_terms(field, rem),
        quots
            .into_iter()
            .map(|q| Poly::from_terms(field, q))
            .collect(),
    ))
}

/// Reduction without quotient bookkeeping; over Q the intermediate result
/// is content-stripped periodically to control coefficient growth, so the
/// result is the normal form only up to a nonzero scalar.
fn reduce_fast(f: &Poly, divisors: &[Poly], heads: &[Exp], order: &TermOrder, field: &FieldSpec) -> Poly {
    let wdivs: Vec<WPoly> = divisors.iter().map(|g| WPoly::from_poly(g, order)).collect();
    let mut r = WPoly::from_poly(f, order);
    let mut rem: Vec<(Exp, Scalar)> = vec![];
    let mut steps = 0usize;
    while let Some((e, c)) = r.head().cloned() {
        match heads.iter().position(|h| h.divides(&e)) {
            Some(i) => {
                let m = heads[i].div(&e);
                r.sub_mul(&c, &m, &wdivs[i], order, field);
                steps += 1;
                if steps % 64 == 0 && matches!(field, FieldSpec::Rationals) && !r.is_zero() {
                    let stripped = Poly::from_terms(field, r.terms.clone()).primitive_part(field);
                    r = WPoly::from_poly(&stripped, order);
                }
            }
            None => {
                rem.push((e, c));
                r.terms.remove(0);
            }
        }
    }
    Poly::from_terms(field, rem)
}

/// The S-polynomial `lcm/Ht(f)*f - lcm/Ht(g)*g` of two monic polynomials.
pub fn s_polynomial(f: &Poly, g: &Poly, order: &TermOrder, field: &FieldSpec) -> Result<Poly> {
    let (hf, cf) = f
        .head_term(order)
        .map_err(|_| Error::ZeroPolynomial("s_polynomial of 0".into()))?;
    let (hg, cg) = g
        .head_term(order)
        .map_err(|_| Error::ZeroPolynomial("s_polynomial of 0".into()))?;
    if !cf.is_one() || !cg.is_one() {
        return Err(Error::NonMonic("s_polynomial requires monic inputs".into()));
    }
    let lcm = hf.lcm(hg);
    let a = f.mul_term(&hf.div(&lcm), &field.one(), field)?;
    let b = g.mul_term(&hg.div(&lcm), &field.one(), field)?;
    Ok(a.sub(&b, field))
}

// ---------------------------------------------------------------------------
// pair bookkeeping (Gebauer-Moeller)
// ---------------------------------------------------------------------------

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Exp,
}

/// Installs the pairs of a new element `t` against `heads[..t]`, pruning
/// with the Gebauer-Moeller M/F/B criteria. `pairs` holds the surviving
/// older pairs and is updated in place.
fn update_pairs(pairs: &mut Vec<Pair>, heads: &[Exp], t: usize) {
    let ht = &heads[t];
    let mut fresh: Vec<Pair> = (0..t)
        .map(|i| Pair {
            i,
            j: t,
            lcm: heads[i].lcm(ht),
        })
        .collect();

    // M: drop (i,t) when some (j,t) has a properly smaller lcm
    let mut keep = vec![true; fresh.len()];
    for a in 0..fresh.len() {
        for b in 0..fresh.len() {
            if a != b
                && keep[a]
                && keep[b]
                && fresh[b].lcm.divides(&fresh[a].lcm)
                && fresh[b].lcm != fresh[a].lcm
            {
                keep[a] = false;
            }
        }
    }
    // F: among equal lcms keep the first; prefer one with coprime heads so
    // the whole class can be dropped below
    let mut filtered: Vec<Pair> = vec![];
    for (a, p) in fresh.drain(..).enumerate() {
        if !keep[a] {
            continue;
        }
        if let Some(prev) = filtered.iter_mut().find(|q| q.lcm == p.lcm) {
            let p_coprime = heads[p.i].is_coprime(ht);
            let prev_coprime = heads[prev.i].is_coprime(ht);
            if p_coprime && !prev_coprime {
                *prev = p;
            }
            continue;
        }
        filtered.push(p);
    }
    // B: drop old pairs strictly refined by the new head
    pairs.retain(|p| {
        !(ht.divides(&p.lcm)
            && heads[p.i].lcm(ht) != p.lcm
            && heads[p.j].lcm(ht) != p.lcm)
    });
    // product criterion
    filtered.retain(|p| !heads[p.i].is_coprime(ht));
    pairs.extend(filtered);
}

fn check_grading(gens: &[Poly], grading: &Grading) -> Result<()> {
    let weights = match grading {
        Grading::None => return Ok(()),
        Grading::Standard => None,
        Grading::Weighted(w) => Some(w.as_slice()),
    };
    for (i, g) in gens.iter().enumerate() {
        if !g.is_homogeneous(weights) {
            return Err(Error::NotHomogeneous(format!("generator {i}")));
        }
    }
    Ok(())
}

/// Buchberger's algorithm with normal (degree-increasing) pair selection;
/// returns the unique reduced Groebner basis, elements monic and sorted
/// ascending by head term.
pub fn buchberger(
    gens: &[Poly],
    order: &TermOrder,
    field: &FieldSpec,
    grading: &Grading,
) -> Result<Vec<Poly>> {
    for (i, g) in gens.iter().enumerate() {
        if g.is_zero() {
            return Err(Error::ZeroPolynomial(format!("generator {i}")));
        }
    }
    check_grading(gens, grading)?;

    let mut basis: Vec<Poly> = vec![];
    let mut heads: Vec<Exp> = vec![];
    let mut pairs: Vec<Pair> = vec![];

    let insert = |p: Poly, basis: &mut Vec<Poly>, heads: &mut Vec<Exp>, pairs: &mut Vec<Pair>| -> Result<()> {
        let monic = p.primitive_part(field).make_monic(order, field)?;
        let h = monic.head_term(order)?.0.clone();
        basis.push(monic);
        heads.push(h);
        update_pairs(pairs, heads, basis.len() - 1);
        Ok(())
    };

    for g in gens {
        insert(g.clone(), &mut basis, &mut heads, &mut pairs)?;
    }

    while !pairs.is_empty() {
        // normal strategy: smallest lcm degree first, ties by the term
        // order on the lcm, then by indices
        let mut best = 0;
        for k in 1..pairs.len() {
            let a = &pairs[k];
            let b = &pairs[best];
            let c = a
                .lcm
                .degree()
                .cmp(&b.lcm.degree())
                .then_with(|| order.cmp_slices(&a.lcm.0, &b.lcm.0))
                .then_with(|| (a.i, a.j).cmp(&(b.i, b.j)));
            if c == Ordering::Less {
                best = k;
            }
        }
        let pair = pairs.remove(best);
        let s = s_polynomial(&basis[pair.i], &basis[pair.j], order, field)?;
        if s.is_zero() {
            continue;
        }
        let r = reduce_fast(&s, &basis, &heads, order, field);
        if !r.is_zero() {
            insert(r, &mut basis, &mut heads, &mut pairs)?;
        }
    }

    Ok(interreduce(basis, order, field))
}

/// Minimalizes and tail-reduces a Groebner basis into the reduced basis.
fn interreduce(mut basis: Vec<Poly>, order: &TermOrder, field: &FieldSpec) -> Vec<Poly> {
    // minimalize: drop elements whose head is divisible by another head
    basis.sort_by(|a, b| {
        order.cmp_slices(
            &a.head_term(order).unwrap().0 .0,
            &b.head_term(order).unwrap().0 .0,
        )
    });
    let mut kept: Vec<Poly> = vec![];
    for g in basis {
        let h = g.head_term(order).unwrap().0.clone();
        if !kept
            .iter()
            .any(|k| k.head_term(order).unwrap().0.divides(&h))
        {
            kept.push(g);
        }
    }
    // tail reduction until stable
    loop {
        let mut changed = false;
        for i in 0..kept.len() {
            let others: Vec<Poly> = kept
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .map(|(_, g)| g.clone())
                .collect();
            if others.is_empty() {
                break;
            }
            let (r, _) = normal_form(&kept[i], &others, order, field).unwrap();
            let r = r.make_monic(order, field).unwrap();
            if r != kept[i] {
                kept[i] = r;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    kept.sort_by(|a, b| {
        order.cmp_slices(
            &a.head_term(order).unwrap().0 .0,
            &b.head_term(order).unwrap().0 .0,
        )
    });
    kept
}

/// Convenience wrapper returning a [`GroebnerBasis`].
pub fn reduced_gb(
    gens: &[Poly],
    order: &TermOrder,
    field: &FieldSpec,
    grading: &Grading,
) -> Result<GroebnerBasis> {
    Ok(GroebnerBasis {
        order: order.clone(),
        elements: buchberger(gens, order, field, grading)?,
        reduced: true,
    })
}

/// Post-hoc audit: every S-pair of `gb` has normal form 0.
pub fn verify_groebner(gb: &[Poly], order: &TermOrder, field: &FieldSpec) -> Result<bool> {
    for i in 0..gb.len() {
        for j in i + 1..gb.len() {
            let s = s_polynomial(&gb[i], &gb[j], order, field)?;
            if s.is_zero() {
                continue;
            }
            let (r, _) = normal_form(&s, gb, order, field)?;
            if !r.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

// ---------------------------------------------------------------------------
// syzygies
// ---------------------------------------------------------------------------

/// Schreyer-style first syzygies of a monic Groebner basis: for each
/// surviving S-pair the row records `lcm/Ht(g_i)` at i, `-lcm/Ht(g_j)` at j
/// minus the division cofactors. Pairs eliminated by the chain and product
/// criteria are skipped, which for the staircase monomial ideals of the
/// Hilbert-Burch pipeline leaves exactly the minimal adjacent-pair rows.
pub fn syzygies(gb: &[Poly], order: &TermOrder, field: &FieldSpec) -> Result<Vec<SyzygyRow>> {
    let heads = check_monic_divisors(gb, order)?;
    let mut pairs: Vec<Pair> = vec![];
    for t in 0..gb.len() {
        update_pairs(&mut pairs, &heads, t);
    }
    pairs.sort_by(|a, b| (a.i, a.j).cmp(&(b.i, b.j)));
    let n = gb.len();
    let nvars = heads.first().map(|h| h.len()).unwrap_or(0);
    let mut rows: Vec<SyzygyRow> = vec![];
    for p in pairs {
        let s = s_polynomial(&gb[p.i], &gb[p.j], order, field)?;
        let (r, quots) = if s.is_zero() {
            (Poly::zero(), vec![Poly::zero(); n])
        } else {
            normal_form(&s, gb, order, field)?
        };
        if !r.is_zero() {
            return Err(Error::NotGroebnerBasis(format!(
                "S-pair ({}, {}) has nonzero normal form",
                p.i, p.j
            )));
        }
        let mut row: SyzygyRow = vec![Poly::zero(); n];
        row[p.i] = Poly::monomial(heads[p.i].div(&p.lcm), field.one());
        row[p.j] = Poly::monomial(heads[p.j].div(&p.lcm), field.neg(&field.one()));
        for (k, q) in quots.iter().enumerate() {
            row[k] = row[k].sub(q, field);
        }
        rows.push(row);
    }
    let _ = nvars;
    Ok(rows)
}

/// Exact check that a row annihilates the generators.
pub fn is_syzygy(row: &[Poly], gens: &[Poly], field: &FieldSpec) -> Result<bool> {
    let mut acc = Poly::zero();
    for (r, g) in row.iter().zip(gens) {
        acc = acc.add(&r.mul(g, field)?, field);
    }
    Ok(acc.is_zero())
}

// ---------------------------------------------------------------------------
// ideal operations
// ---------------------------------------------------------------------------

/// Membership via complete reduction against a Groebner basis.
pub fn ideal_member(f: &Poly, gb: &[Poly], order: &TermOrder, field: &FieldSpec) -> Result<bool> {
    if f.is_zero() {
        return Ok(true);
    }
    let (r, _) = normal_form(f, gb, order, field)?;
    Ok(r.is_zero())
}

/// Ideal equality through uniqueness of the reduced Groebner basis.
pub fn ideal_equal(
    a: &[Poly],
    b: &[Poly],
    order: &TermOrder,
    field: &FieldSpec,
) -> Result<bool> {
    let ga = buchberger(a, order, field, &Grading::None)?;
    let gb = buchberger(b, order, field, &Grading::None)?;
    Ok(ga == gb)
}

/// Generators of `I` intersected with the subring on the `keep` variables.
///
/// Computes a Groebner basis for a block order eliminating the complement
/// of `keep` and returns the elements supported on `keep` only.
pub fn eliminate(
    gens: &[Poly],
    keep: &[usize],
    ring: &Ring,
    grading: &Grading,
) -> Result<Vec<Poly>> {
    let n = ring.nvars();
    let elim: Vec<usize> = (0..n).filter(|i| !keep.contains(i)).collect();
    // permutation: eliminated variables first
    let perm: Vec<usize> = elim.iter().chain(keep.iter()).copied().collect();
    let mut inv = vec![0usize; n];
    for (new, &old) in perm.iter().enumerate() {
        inv[old] = new;
    }
    let block = TermOrder::block(elim.len(), TermOrder::DegRevLex, TermOrder::DegRevLex);
    let permuted: Vec<Poly> = gens.iter().map(|g| g.map_vars(&inv, n)).collect();
    let pgrading = match grading {
        Grading::Weighted(w) => Grading::Weighted(perm.iter().map(|&i| w[i]).collect()),
        g => g.clone(),
    };
    let gb = buchberger(&permuted, &block, &ring.field, &pgrading)?;
    let mut out = vec![];
    for g in gb {
        if g.support().all(|e| e.0[..elim.len()].iter().all(|&k| k == 0)) {
            out.push(g.map_vars(&perm, n));
        }
    }
    Ok(out)
}

/// Intersection of two ideals via the auxiliary-variable construction
/// `(t*I + (1-t)*J) \cap K[vars]`. The auxiliary polynomial data is
/// inhomogeneous in `t`, so the homogeneity precondition is relaxed for
/// this operation only. Returns a reduced Groebner basis for `order`.
pub fn intersect(
    a: &[Poly],
    b: &[Poly],
    ring: &Ring,
    order: &TermOrder,
) -> Result<Vec<Poly>> {
    if a.is_empty() || b.is_empty() {
        return Ok(vec![]);
    }
    let n = ring.nvars();
    // auxiliary ring: a fresh t first, then the original variables
    let t_name = std::iter::once("t".to_string())
        .chain((0..).map(|k| format!("t{k}")))
        .find(|name| ring.var_index(name).is_none())
        .unwrap();
    let mut vars = vec![t_name];
    vars.extend(ring.vars.iter().cloned());
    let aux = Ring::new(ring.field, vars)?;
    let shift: Vec<usize> = (1..=n).collect();
    let t = Poly::var(&aux, 0);
    let one_minus_t = Poly::one(&aux).sub(&t, &aux.field);
    let mut gens = vec![];
    for f in a {
        gens.push(f.map_vars(&shift, n + 1).mul(&t, &aux.field)?);
    }
    for f in b {
        gens.push(f.map_vars(&shift, n + 1).mul(&one_minus_t, &aux.field)?);
    }
    let block = TermOrder::block(1, TermOrder::Lex, order.clone());
    let gb = buchberger(&gens, &block, &aux.field, &Grading::None)?;
    let mut out = vec![];
    let back: Vec<usize> = (0..=n).map(|i| i.saturating_sub(1)).collect();
    for g in gb {
        if g.support().all(|e| e.0[0] == 0) {
            out.push(g.map_vars(&back, n));
        }
    }
    buchberger(&out, order, &ring.field, &Grading::None)
}

/// Saturation `(I : xn^inf)` for the distinguished last main variable,
/// computed with a degreverse order: take the reduced basis, strip the
/// maximal xn power from every element, and repeat until stable.
pub fn saturate_xn(
    gens: &[Poly],
    ring: &Ring,
    order: &TermOrder,
    grading: &Grading,
) -> Result<Vec<Poly>> {
    let xn = ring.xn_index();
    let mut current = gens.to_vec();
    loop {
        let gb = buchberger(&current, order, &ring.field, grading)?;
        let stripped: Vec<Poly> = gb
            .iter()
            .map(|g| {
                let r = g.var_power_divisor(xn).unwrap_or(0);
                if r > 0 {
                    g.shift_down_var(xn, r)
                } else {
                    g.clone()
                }
            })
            .collect();
        if stripped == gb {
            return Ok(gb);
        }
        current = stripped;
    }
}

/// All monomials of the given total degree in the first `nvars` variables
/// of the ring, as exponent vectors over the full ring.
pub fn monomials_of_degree(ring: &Ring, nvars: usize, degree: u32) -> Vec<Exp> {
    let mut out = vec![];
    let mut cur = vec![0u16; ring.nvars()];
    fn rec(cur: &mut Vec<u16>, pos: usize, nvars: usize, left: u32, out: &mut Vec<Exp>) {
        if pos == nvars - 1 {
            cur[pos] = left as u16;
            out.push(Exp(cur.clone()));
            cur[pos] = 0;
            return;
        }
        for k in (0..=left).rev() {
            cur[pos] = k as u16;
            rec(cur, pos + 1, nvars, left - k, out);
        }
        cur[pos] = 0;
    }
    if nvars == 0 {
        if degree == 0 {
            out.push(Exp(cur));
        }
        return out;
    }
    rec(&mut cur, 0, nvars, degree, &mut out);
    out
}

/// The truncation `I_{>=m}`: pads each basis element `f` by all monomials
/// of degree `max(0, m - deg f)`. The result is a (generally non-reduced)
/// monic Groebner basis when the input is one.
pub fn truncate(gb: &[Poly], m: i64, ring: &Ring) -> Result<Vec<Poly>> {
    if m < 0 {
        return Err(Error::Argument("truncation degree must be >= 0".into()));
    }
    let mut out = vec![];
    for f in gb {
        let d = f.degree() as i64;
        let pad = (m - d).max(0) as u32;
        if pad == 0 {
            out.push(f.clone());
        } else {
            for e in monomials_of_degree(ring, ring.num_main, pad) {
                out.push(f.mul_term(&e, &ring.field.one(), &ring.field)?);
            }
        }
    }
    Ok(out)
}
