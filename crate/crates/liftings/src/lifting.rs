//! The scheme of liftings and Groebner strata.
//!
//! Given a homogeneous ideal H in `K[x]` with reduced Groebner basis
//! {f_a} for a term order, the lifting template adjoins a fresh variable
//! xn and one parameter C for every term xn*x^g of the sous-escalier of
//! the initial ideal in each generator degree:
//!
//! ```text
//!   f_a + g_a,   g_a = sum C_{a,g} * xn * x^g .
//! ```
//!
//! Completely reducing every S-polynomial of the template by the template
//! and collecting the parameter coefficients of the remainders yields the
//! ideal h0 in `K[C]` whose spectrum is the scheme of xn-liftings of H. The
//! ideal is homogeneous for the grading w(C_{a,g}) = g_n + 1, which makes
//! a lexicographic order sorted by those weights eliminate every parameter
//! that occurs linearly; what is left embeds the scheme in the tangent
//! space at the trivial lifting.
//!
//! Groebner stratum templates are the same machinery with tails running
//! over all smaller terms of the same degree instead of the xn-multiples
//! of the sous-escalier.
//!
//! Canonical enumeration (fixed so printed parameters are reproducible):
//! basis elements are numbered by descending pure-lex head term; tail
//! terms within one generator by descending degreverse-degrevlex order,
//! whatever order drives the construction itself; the parameter order used
//! for elimination sorts by descending weight, then descending tail term,
//! then generator number.

use rayon::prelude::*;
use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::groebner::{self, Grading};
use crate::order::{Exp, TermOrder};
use crate::poly::Poly;
use crate::ring::Ring;
use crate::tower;
use crate::util::SplitMix64;

#[derive(Clone, Debug)]
pub struct ParamInfo {
    pub name: String,
    /// Index of the template member whose tail this parameter lives in.
    pub alpha_index: usize,
    /// Exponent of the tail term with the parameter stripped: for lifting
    /// templates the x^g of xn*x^g, for stratum templates the full tail
    /// term. Lives in the main ring block.
    pub gamma: Exp,
    /// Torus weight g_n + 1.
    pub weight: u32,
    /// Variable index in the template ring.
    pub var: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TemplateKind {
    Lifting,
    Stratum,
}

#[derive(Clone, Debug)]
pub struct LiftingTemplate {
    pub kind: TemplateKind,
    /// `K[x, xn, C..]`; the main block holds x and xn.
    pub ring: Ring,
    /// The order on `K[x]` the construction started from.
    pub x_order: TermOrder,
    /// Its degreverse extension to the main block (or sigma for strata).
    pub xn_order: TermOrder,
    /// Parameter order: weighted lex by (weight desc, tail desc, alpha asc).
    pub c_order: TermOrder,
    /// Block order on the whole template ring.
    pub order: TermOrder,
    /// Reduced basis elements f_a, embedded in the template ring, in
    /// canonical enumeration order.
    pub h_basis: Vec<Poly>,
    /// Their head terms (the basis of the initial ideal).
    pub j_basis: Vec<Exp>,
    /// The template members f_a + g_a.
    pub members: Vec<Poly>,
    pub params: Vec<ParamInfo>,
}

/// All degree-d terms outside the monomial ideal with the given basis, in
/// decreasing order.
pub fn sous_escalier(j_heads: &[Exp], degree: u32, ring: &Ring, order: &TermOrder) -> Vec<Exp> {
    let mut terms: Vec<Exp> = groebner::monomials_of_degree(ring, ring.num_main, degree)
        .into_iter()
        .filter(|e| !j_heads.iter().any(|h| h.divides(e)))
        .collect();
    terms.sort_by(|a, b| order.cmp_slices(&b.0, &a.0));
    terms
}

fn canonical_basis_order(gb: &mut [Poly], order: &TermOrder) {
    // descending pure lex on head terms: the visual order used throughout
    gb.sort_by(|a, b| {
        let ha = a.head_term(order).unwrap().0.clone();
        let hb = b.head_term(order).unwrap().0.clone();
        hb.cmp(&ha)
    });
}

fn check_proper_homogeneous(gens: &[Poly], what: &str) -> Result<()> {
    if gens.is_empty() || gens.iter().all(|g| g.is_zero()) {
        return Err(Error::Argument(format!("{what}: zero ideal")));
    }
    for g in gens {
        if !g.is_homogeneous(None) {
            return Err(Error::NotHomogeneous(what.into()));
        }
    }
    Ok(())
}

/// The fixed enumeration order on tail terms: descending
/// degreverse-degrevlex on the main block.
fn enumeration_order() -> TermOrder {
    TermOrder::degreverse(TermOrder::DegRevLex)
}

fn param_priority(params: &[ParamInfo]) -> Vec<usize> {
    let enum_order = enumeration_order();
    let mut priority: Vec<usize> = (0..params.len()).collect();
    priority.sort_by(|&a, &b| {
        params[b]
            .weight
            .cmp(&params[a].weight)
            .then_with(|| enum_order.cmp_slices(&params[b].gamma.0, &params[a].gamma.0))
            .then_with(|| params[a].alpha_index.cmp(&params[b].alpha_index))
    });
    priority
}

fn finish_template(
    kind: TemplateKind,
    main_ring: &Ring,
    x_order: TermOrder,
    xn_order: TermOrder,
    basis: Vec<Poly>,
    tails: Vec<Vec<Exp>>, // per basis element: tail terms (full term exponents)
    weight_of: impl Fn(&Exp) -> u32,
    prefix: &str,
) -> Result<LiftingTemplate> {
    let mut params: Vec<ParamInfo> = vec![];
    for (ai, tail) in tails.iter().enumerate() {
        for gamma in tail {
            params.push(ParamInfo {
                name: format!("{prefix}{}", params.len() + 1),
                alpha_index: ai,
                gamma: gamma.clone(),
                weight: weight_of(gamma),
                var: main_ring.nvars() + params.len(),
            });
        }
    }
    let names: Vec<String> = params.iter().map(|p| p.name.clone()).collect();
    let ring = main_ring.extend_params(&names)?;
    let nm = ring.num_main;

    let priority = param_priority(&params);
    let c_order = TermOrder::WeightedLex { priority };
    let order = ring.tower_order(xn_order.clone(), c_order.clone());

    let embed: Vec<usize> = (0..main_ring.nvars()).collect();
    let mut members = vec![];
    let mut j_basis = vec![];
    let mut h_basis = vec![];
    let mut pi = 0usize;
    let xn = nm - 1;
    for (ai, f) in basis.iter().enumerate() {
        let f = f.map_vars(&embed, ring.nvars());
        let head = f.head_term(&xn_order).unwrap().0.clone();
        let mut member = f.clone();
        for gamma in &tails[ai] {
            let mut e = Exp::zero(ring.nvars());
            e.0[..nm].copy_from_slice(&gamma.0[..nm]);
            if kind == TemplateKind::Lifting {
                e.0[xn] += 1;
            }
            e.0[params[pi].var] = 1;
            member = member.add(&Poly::monomial(e, ring.field.one()), &ring.field);
            pi += 1;
        }
        j_basis.push(head);
        h_basis.push(f);
        members.push(member);
    }

    Ok(LiftingTemplate {
        kind,
        ring,
        x_order,
        xn_order,
        c_order,
        order,
        h_basis,
        j_basis,
        members,
        params,
    })
}

/// Builds the lifting template of H with respect to the given order on
/// `K[x]`. `base_ring` is the ring of H (no parameters); the new last
/// variable gets the first free name of the form `x<k>` (or `xn`).
pub fn build_template(
    h_gens: &[Poly],
    base_ring: &Ring,
    x_order: &TermOrder,
    prefix: &str,
) -> Result<LiftingTemplate> {
    check_proper_homogeneous(h_gens, "lifting template input")?;
    if base_ring.num_params() != 0 {
        return Err(Error::Argument(
            "lifting templates require a parameter-free coefficient field".into(),
        ));
    }
    let mut gb = groebner::buchberger(h_gens, x_order, &base_ring.field, &Grading::Standard)?;
    if gb.iter().any(|g| g.degree() == 0) {
        return Err(Error::Argument(
            "the unit ideal has no proper liftings".into(),
        ));
    }
    canonical_basis_order(&mut gb, x_order);

    let n = base_ring.nvars();
    let xn_name = (n..)
        .map(|k| format!("x{k}"))
        .find(|name| base_ring.var_index(name).is_none())
        .unwrap();
    let mut vars = base_ring.vars.clone();
    vars.push(xn_name);
    let main_ring = Ring::new(base_ring.field, vars)?;
    let xn_order = TermOrder::degreverse(x_order.clone());

    // embed basis and heads into the main ring
    let embed: Vec<usize> = (0..n).collect();
    let basis: Vec<Poly> = gb.iter().map(|g| g.map_vars(&embed, n + 1)).collect();
    let j_heads: Vec<Exp> = basis
        .iter()
        .map(|g| g.head_term(&xn_order).unwrap().0.clone())
        .collect();

    let xn = n;
    let tails: Vec<Vec<Exp>> = basis
        .iter()
        .map(|f| {
            let d = f.degree();
            // tail terms xn*x^g with |g| = d-1 and xn*x^g outside J;
            // enumerated by the g part, descending
            sous_escalier(&j_heads, d - 1, &main_ring, &enumeration_order())
        })
        .collect();

    finish_template(
        TemplateKind::Lifting,
        &main_ring,
        x_order.clone(),
        xn_order,
        basis,
        tails,
        |gamma| gamma.0[xn] as u32 + 1,
        prefix,
    )
}

/// Builds the Groebner stratum template of a monomial ideal J under the
/// order sigma: tails run over all strictly smaller terms of the same
/// degree.
pub fn build_stratum_template(
    j_gens: &[Poly],
    ring: &Ring,
    sigma: &TermOrder,
    prefix: &str,
) -> Result<LiftingTemplate> {
    check_proper_homogeneous(j_gens, "stratum template input")?;
    if ring.num_params() != 0 {
        return Err(Error::Argument("stratum input must be parameter-free".into()));
    }
    for g in j_gens {
        if g.num_terms() != 1 {
            return Err(Error::Argument("stratum input must be a monomial ideal".into()));
        }
    }
    let mut gb = groebner::buchberger(j_gens, sigma, &ring.field, &Grading::Standard)?;
    canonical_basis_order(&mut gb, sigma);
    let heads: Vec<Exp> = gb
        .iter()
        .map(|g| g.head_term(sigma).unwrap().0.clone())
        .collect();

    let enum_order = enumeration_order();
    let tails: Vec<Vec<Exp>> = heads
        .iter()
        .map(|alpha| {
            let mut t: Vec<Exp> = groebner::monomials_of_degree(ring, ring.num_main, alpha.degree())
                .into_iter()
                .filter(|e| sigma.cmp_slices(&e.0, &alpha.0) == Ordering::Less)
                .collect();
            t.sort_by(|a, b| enum_order.cmp_slices(&b.0, &a.0));
            t
        })
        .collect();

    let xn = ring.num_main - 1;
    finish_template(
        TemplateKind::Stratum,
        ring,
        sigma.clone(),
        sigma.clone(),
        gb,
        tails,
        |gamma| gamma.0[xn] as u32 + 1,
        prefix,
    )
}

/// The ring of the template's parameters alone.
pub fn param_ring(t: &LiftingTemplate) -> Ring {
    t.ring.param_ring().unwrap()
}

/// Maps a parameter-only polynomial of the template ring into the
/// parameter ring.
pub fn to_param_ring(t: &LiftingTemplate, f: &Poly) -> Poly {
    let nm = t.ring.num_main;
    let map: Vec<usize> = (0..t.ring.nvars()).map(|i| i.saturating_sub(nm)).collect();
    debug_assert!(f.support().all(|e| e.0[..nm].iter().all(|&k| k == 0)));
    f.map_vars(&map, t.ring.nvars() - nm)
}

/// Maps a parameter-ring polynomial back into the template ring.
pub fn from_param_ring(t: &LiftingTemplate, f: &Poly) -> Poly {
    let nm = t.ring.num_main;
    let map: Vec<usize> = (0..t.ring.nvars() - nm).map(|i| i + nm).collect();
    f.map_vars(&map, t.ring.nvars())
}

/// The parameter order as an order on the parameter ring.
pub fn param_order(t: &LiftingTemplate) -> TermOrder {
    t.c_order.clone()
}

/// The parameter weights, indexed like the parameter ring variables.
pub fn param_weights(t: &LiftingTemplate) -> Vec<u32> {
    t.params.iter().map(|p| p.weight).collect()
}

/// The defining ideal of the template: for every pair of members, the
/// S-polynomial is completely reduced by the template and the parameter
/// coefficients of every x-term of the remainder are collected. Exact
/// duplicates are dropped; no interreduction is performed. Polynomials are
/// returned in the parameter ring.
///
/// `reverse_divisors` switches the divisor list to reversed order, which
/// changes the reduction strategy but (as the acceptance suite checks)
/// not the ideal generated.
pub fn compute_h0(t: &LiftingTemplate, reverse_divisors: bool, parallel: bool) -> Result<Vec<Poly>> {
    let mut divisors = t.members.clone();
    if reverse_divisors {
        divisors.reverse();
    }
    let mut pairs = vec![];
    for i in 0..t.members.len() {
        for j in i + 1..t.members.len() {
            pairs.push((i, j));
        }
    }
    let reduce_pair = |&(i, j): &(usize, usize)| -> Result<Vec<Poly>> {
        let s = tower::s_polynomial_tower(&t.members[i], &t.members[j], &t.ring, &t.xn_order)?;
        if s.is_zero() {
            return Ok(vec![]);
        }
        let (rem, _) = tower::normal_form_tower(&s, &divisors, &t.ring, &t.xn_order, None)?;
        Ok(tower::slot_coefficients(&rem, &t.ring, &t.xn_order))
    };
    let per_pair: Vec<Vec<Poly>> = if parallel {
        pairs
            .par_iter()
            .map(reduce_pair)
            .collect::<Result<Vec<_>>>()?
    } else {
        pairs.iter().map(reduce_pair).collect::<Result<Vec<_>>>()?
    };
    let mut out: Vec<Poly> = vec![];
    for coeffs in per_pair {
        for c in coeffs {
            let c = to_param_ring(t, &c).primitive_part(&t.ring.field);
            if !c.is_zero() && !out.contains(&c) {
                out.push(c);
            }
        }
    }
    Ok(out)
}

/// Result of the tangent-space elimination of Remark-style linear
/// parameters from h0.
#[derive(Clone, Debug)]
pub struct LiftingSchemeResult {
    pub c_ring: Ring,
    pub c_order: TermOrder,
    /// Raw generators of h0 (parameter ring).
    pub h0_generators: Vec<Poly>,
    /// The full reduced Groebner basis of h0 for the weighted-lex order.
    pub reduced_gb: Vec<Poly>,
    /// Reduced Groebner basis of the residual ideal in the free parameters.
    pub residual_gb: Vec<Poly>,
    /// Substitutions for eliminated parameters, RHS in free parameters.
    pub eliminated: Vec<(usize, Poly)>,
    /// Parameter-ring indices of the free parameters.
    pub free_params: Vec<usize>,
    /// True when the residual basis is empty, i.e. the scheme is the
    /// affine space on the free parameters.
    pub is_affine_space: bool,
}

/// Eliminates every parameter that occurs linearly in h0, iterating the
/// substitutions to closure. Every generator must be homogeneous for the
/// parameter weights; the head of a weight-homogeneous polynomial with a
/// nonzero linear part is a single parameter under the weighted-lex order,
/// which is what drives the elimination.
pub fn eliminate_linear(
    h0: &[Poly],
    weights: &[u32],
    c_ring: &Ring,
    c_order: &TermOrder,
) -> Result<LiftingSchemeResult> {
    for g in h0 {
        if !g.is_homogeneous(Some(weights)) {
            return Err(Error::Grading(
                "h0 generator is not homogeneous for the parameter weights".into(),
            ));
        }
    }
    let field = &c_ring.field;
    let nv = c_ring.nvars();
    let mut gens: Vec<Poly> = h0.to_vec();
    let mut subs: Vec<Option<Poly>> = vec![None; nv];

    // priority position: smaller = heavier variable
    let rank: Vec<usize> = {
        let mut rank = vec![0usize; nv];
        let mut idx: Vec<usize> = (0..nv).collect();
        idx.sort_by(|&a, &b| {
            c_order
                .cmp_slices(&Exp::unit(nv, b).0, &Exp::unit(nv, a).0)
        });
        for (pos, &v) in idx.iter().enumerate() {
            rank[v] = pos;
        }
        rank
    };

    loop {
        // the linearly-occurring variable of highest priority over all gens
        let mut best: Option<(usize, usize)> = None; // (gen index, var)
        for (gi, g) in gens.iter().enumerate() {
            for (e, _) in g.terms() {
                if e.degree() == 1 {
                    let v = e.0.iter().position(|&k| k == 1).unwrap();
                    if best.is_none() || rank[v] < rank[best.unwrap().1] {
                        best = Some((gi, v));
                    }
                }
            }
        }
        let Some((gi, v)) = best else { break };
        let g = gens.swap_remove(gi);
        let lambda = g.coeff_of(&Exp::unit(nv, v)).unwrap().clone();
        // v = -(g - lambda v)/lambda
        let rest = g.sub(
            &Poly::monomial(Exp::unit(nv, v), lambda.clone()),
            field,
        );
        let rhs = rest.scalar_mul(&field.neg(&field.inv(&lambda)?), field);
        subs[v] = Some(rhs.clone());
        let mut next = vec![];
        let mut seen: std::collections::HashSet<Poly> = std::collections::HashSet::new();
        for h in gens {
            let h2 = h.substitute(v, &rhs, c_ring)?.primitive_part(field);
            if !h2.is_zero() && seen.insert(h2.clone()) {
                next.push(h2);
            }
        }
        gens = next;
    }

    // close the substitutions: no solved variable may remain in any RHS
    loop {
        let mut changed = false;
        for v in 0..nv {
            let Some(rhs) = subs[v].clone() else { continue };
            let mut cur = rhs;
            for w in 0..nv {
                if w == v {
                    continue;
                }
                if let Some(wrhs) = &subs[w] {
                    if cur.support().any(|e| e.0[w] > 0) {
                        cur = cur.substitute(w, wrhs, c_ring)?;
                        changed = true;
                    }
                }
            }
            subs[v] = Some(cur);
        }
        if !changed {
            break;
        }
    }

    let free_params: Vec<usize> = (0..nv).filter(|&v| subs[v].is_none()).collect();

    // residual ideal in the free parameters
    let mut residual_raw: Vec<Poly> = vec![];
    for g in &gens {
        let g = g.primitive_part(field);
        if !g.is_zero() && !residual_raw.contains(&g) {
            residual_raw.push(g);
        }
    }
    let residual_gb = if residual_raw.is_empty() {
        vec![]
    } else {
        groebner::buchberger(
            &residual_raw,
            c_order,
            field,
            &Grading::Weighted(weights.to_vec()),
        )?
    };

    // full reduced basis: solved forms with residual-reduced tails
    let mut reduced = vec![];
    for v in 0..nv {
        if let Some(rhs) = &subs[v] {
            let tail = if residual_gb.is_empty() {
                rhs.clone()
            } else {
                groebner::normal_form(rhs, &residual_gb, c_order, field)?.0
            };
            reduced.push(Poly::monomial(Exp::unit(nv, v), field.one()).sub(&tail, field));
        }
    }
    reduced.extend(residual_gb.iter().cloned());
    reduced.sort_by(|a, b| {
        c_order.cmp_slices(
            &a.head_term(c_order).unwrap().0 .0,
            &b.head_term(c_order).unwrap().0 .0,
        )
    });

    let eliminated: Vec<(usize, Poly)> = (0..nv)
        .filter_map(|v| subs[v].clone().map(|s| (v, s)))
        .collect();
    Ok(LiftingSchemeResult {
        c_ring: c_ring.clone(),
        c_order: c_order.clone(),
        h0_generators: h0.to_vec(),
        is_affine_space: residual_gb.is_empty(),
        reduced_gb: reduced,
        residual_gb,
        eliminated,
        free_params,
    })
}

/// The template members with the eliminated parameters substituted: the
/// specialized family presenting the scheme inside its tangent space.
pub fn specialized_family(
    t: &LiftingTemplate,
    scheme: &LiftingSchemeResult,
) -> Result<Vec<Poly>> {
    let mut members = t.members.clone();
    for (v, rhs) in &scheme.eliminated {
        let rhs_t = from_param_ring(t, rhs);
        let var = t.ring.num_main + v;
        for m in members.iter_mut() {
            *m = m.substitute(var, &rhs_t, &t.ring)?;
        }
    }
    Ok(members)
}

/// Theorem-level predicate: I (in `K[x, xn]`, possibly with extra inert
/// parameters) is an xn-lifting of H (xn-free) iff the reduced basis of I
/// for the degreverse order has the shape {f_a + g_a} with {f_a} the
/// reduced basis of H and every g_a divisible by xn. Returns the g_a as a
/// certificate on success.
pub fn is_lifting(
    i_gens: &[Poly],
    h_gens: &[Poly],
    ring: &Ring,
    x_order: &TermOrder,
) -> Result<(bool, Vec<Poly>)> {
    let nm = ring.num_main;
    let xn = ring.xn_index();
    let xn_order = TermOrder::degreverse(x_order.clone());
    let order = ring.tower_order(xn_order, TermOrder::Lex);
    // grade only the geometric block so inert parameters do not interfere
    let mut weights = vec![0u32; ring.nvars()];
    for w in weights[..nm].iter_mut() {
        *w = 1;
    }
    for (what, gens) in [("is_lifting I", i_gens), ("is_lifting H", h_gens)] {
        if gens.is_empty() || gens.iter().all(|g| g.is_zero()) {
            return Err(Error::Argument(format!("{what}: zero ideal")));
        }
        for g in gens {
            if !g.is_homogeneous(Some(&weights)) {
                return Err(Error::NotHomogeneous(what.into()));
            }
        }
    }
    let grading = Grading::Weighted(weights);
    let gb_i = groebner::buchberger(i_gens, &order, &ring.field, &grading)?;
    let gb_h = groebner::buchberger(h_gens, &order, &ring.field, &grading)?;
    for f in &gb_h {
        if f.support().any(|e| e.0[xn] > 0) {
            return Err(Error::Argument("H must not involve the last variable".into()));
        }
    }
    if gb_i.len() != gb_h.len() {
        return Ok((false, vec![]));
    }
    let mut certificate = vec![];
    for f in &gb_h {
        let hf = f.head_term(&order)?.0.clone();
        let Some(b) = gb_i
            .iter()
            .find(|b| b.head_term(&order).unwrap().0 == &hf)
        else {
            return Ok((false, vec![]));
        };
        let g = b.sub(f, &ring.field);
        if !g.is_zero() && g.support().any(|e| e.0[xn] == 0) {
            return Ok((false, vec![]));
        }
        certificate.push(g);
    }
    // every head of I's basis must avoid xn (zero-divisor signature)
    for b in &gb_i {
        if b.head_term(&order)?.0 .0[xn] > 0 {
            return Ok((false, vec![]));
        }
    }
    Ok((true, certificate))
}

/// The torus action on parameter points: C_{a,g} -> C_{a,g} * t^weight.
pub fn torus_scale(point: &[Scalar], t: &Scalar, weights: &[u32], ring: &Ring) -> Vec<Scalar> {
    point
        .iter()
        .zip(weights)
        .map(|(c, &w)| {
            let mut acc = c.clone();
            let mut tw = ring.field.one();
            for _ in 0..w {
                tw = ring.field.mul(&tw, t);
            }
            acc = ring.field.mul(&acc, &tw);
            acc
        })
        .collect()
}

/// Substitutes a full parameter point into the template, producing the
/// ideal generators in `K[x, xn]`.
pub fn specialize(t: &LiftingTemplate, point: &[Scalar]) -> Result<Vec<Poly>> {
    if point.len() != t.params.len() {
        return Err(Error::Argument(format!(
            "expected {} parameter values, got {}",
            t.params.len(),
            point.len()
        )));
    }
    let nm = t.ring.num_main;
    let main_ring = Ring::new(t.ring.field, t.ring.vars[..nm].to_vec())?;
    let map: Vec<usize> = (0..t.ring.nvars()).map(|i| if i < nm { i } else { 0 }).collect();
    let mut out = vec![];
    for m in &t.members {
        let mut cur = m.clone();
        for (k, val) in point.iter().enumerate() {
            cur = cur.substitute_scalar(t.params[k].var, val, &t.ring)?;
        }
        out.push(cur.map_vars(&map, nm));
    }
    let _ = main_ring;
    Ok(out)
}

/// Samples up to `count` verified rational points of V(h0): free
/// parameters get small random integers, eliminated ones follow their
/// substitutions, and the candidate is kept only if every raw generator
/// vanishes on it (the residual ideal may reject candidates when the
/// scheme is not an affine space).
pub fn sample_zeros(
    t: &LiftingTemplate,
    scheme: &LiftingSchemeResult,
    seed: u64,
    count: usize,
) -> Vec<Vec<Scalar>> {
    let field = &t.ring.field;
    let nv = scheme.c_ring.nvars();
    let mut rng = SplitMix64::new(seed);
    let mut points = vec![];
    for _ in 0..(count * 8) {
        if points.len() >= count {
            break;
        }
        let mut point: Vec<Scalar> = vec![field.zero(); nv];
        for &v in &scheme.free_params {
            point[v] = field.from_i64(rng.small_int(3));
        }
        for (v, rhs) in &scheme.eliminated {
            point[*v] = rhs.evaluate(&point, field).unwrap();
        }
        if scheme
            .h0_generators
            .iter()
            .all(|g| g.evaluate(&point, field).unwrap().is_zero())
        {
            points.push(point);
        }
    }
    points
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldSpec;

    fn qring(vars: &[&str]) -> Ring {
        Ring::new(
            FieldSpec::Rationals,
            vars.iter().map(|s| s.to_string()).collect(),
        )
        .unwrap()
    }

    #[test]
    fn sous_escalier_examples() {
        // (x0, x1) in K[x0, x1]: no degree-1 terms outside; adjoining xn
        // leaves exactly xn
        let r2 = qring(&["x0", "x1"]);
        let heads = vec![Exp(vec![1, 0]), Exp(vec![0, 1])];
        assert!(sous_escalier(&heads, 1, &r2, &TermOrder::DegRevLex).is_empty());
        let r3 = qring(&["x0", "x1", "x2"]);
        let heads = vec![Exp(vec![1, 0, 0]), Exp(vec![0, 1, 0])];
        let ord = TermOrder::degreverse(TermOrder::DegRevLex);
        assert_eq!(sous_escalier(&heads, 1, &r3, &ord), vec![Exp(vec![0, 0, 1])]);

        // counting: dim N(J)_d = dim K[x]_d - dim J_d by brute enumeration
        let r4 = qring(&["x0", "x1", "x2", "x3"]);
        let heads = vec![
            Exp(vec![2, 0, 0, 0]),
            Exp(vec![1, 1, 0, 0]),
            Exp(vec![1, 0, 1, 0]),
            Exp(vec![0, 2, 0, 0]),
        ];
        let ord = TermOrder::degreverse(TermOrder::DegLex);
        let n2 = sous_escalier(&heads, 2, &r4, &ord);
        let all = groebner::monomials_of_degree(&r4, 4, 2);
        let in_j = all
            .iter()
            .filter(|e| heads.iter().any(|h| h.divides(e)))
            .count();
        assert_eq!(n2.len(), all.len() - in_j);
        assert_eq!(n2.len(), 6);
    }

    #[test]
    fn template_of_principal_ideal() {
        let r = qring(&["x0", "x1"]);
        let h = vec![r.parse_poly("x0^2").unwrap()];
        let t = build_template(&h, &r, &TermOrder::DegRevLex, "C").unwrap();
        assert_eq!(t.members.len(), 1);
        // tail runs over degree-2 xn-multiples outside (x0^2):
        // x2*{x0, x1, x2} -> 3 parameters
        assert_eq!(t.params.len(), 3);
        assert_eq!(t.ring.vars[2], "x2");
        // members are homogeneous for the torus weights
        let mut w = vec![1u32, 1, 0];
        w.extend(param_weights(&t));
        assert!(t.members[0].is_homogeneous(Some(&w)));
    }

    #[test]
    fn one_variable_base_ring() {
        // liftings of a principal ideal in a single variable
        let r = qring(&["x0"]);
        let h = vec![r.parse_poly("x0^2").unwrap()];
        let t = build_template(&h, &r, &TermOrder::Lex, "C").unwrap();
        // tails: x1*{x0, x1} outside (x0^2)
        assert_eq!(t.params.len(), 2);
        let h0 = compute_h0(&t, false, false).unwrap();
        assert!(h0.is_empty());
    }

    #[test]
    fn unit_ideal_is_rejected() {
        let r = qring(&["x0", "x1"]);
        let h = vec![r.parse_poly("x0 + x1").unwrap(), r.parse_poly("x0 - x1").unwrap(), r.parse_poly("x0").unwrap()];
        // proper but the GB of (x0+x1, x0-x1, x0) is (x0, x1): fine
        assert!(build_template(&h, &r, &TermOrder::DegRevLex, "C").is_ok());
        let bad = vec![r.parse_poly("3").unwrap()];
        assert!(build_template(&bad, &r, &TermOrder::DegRevLex, "C").is_err());
    }

    #[test]
    fn coprime_monomial_heads_give_zero_scheme_ideal() {
        // J = (x0^2, x1^2) in K[x0,x1] has one coprime pair; with the
        // template tails the S-pair still reduces with pure-parameter
        // coefficients that must vanish... for empty tails h0 = (0).
        let r = qring(&["x0"]);
        let h = vec![r.parse_poly("x0^2").unwrap()];
        let t = build_template(&h, &r, &TermOrder::Lex, "C").unwrap();
        let h0 = compute_h0(&t, false, false).unwrap();
        assert!(h0.is_empty());
    }
}
