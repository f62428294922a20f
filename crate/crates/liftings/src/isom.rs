//! The explicit isomorphism between the two presentations of a lifting
//! scheme built from different term orders.
//!
//! Both constructions present the same scheme, `K[C]`/h0 from the first
//! order and `K[C']`/h0' from the second. Writing each element f'_b of the
//! second reduced basis in terms of the first, the polynomials
//! `p'_b = sum h_ab (f_a + g_a)` together with the reduced basis of h0
//! form a basis for the second degreverse order; interreducing them gives
//! reduced forms `q'_b = f'_b + xn*m_b` whose tail coefficients are the
//! images of the primed parameters. The reverse direction is built
//! symmetrically (not by inversion: the parameter-ring map alone is in
//! general not invertible), and composing the two directions is the
//! identity modulo the scheme ideals.

use crate::error::{Error, Result};
use crate::groebner;
use crate::lifting::{
    self, compute_h0, eliminate_linear, param_order, param_ring, param_weights,
    LiftingSchemeResult, LiftingTemplate,
};
use crate::order::TermOrder;
use crate::poly::Poly;
use crate::ring::Ring;
use crate::tower;

/// A parameter-ring morphism: one image polynomial per source parameter.
#[derive(Clone, Debug)]
pub struct ParamMorphism {
    pub source_ring: Ring,
    pub target_ring: Ring,
    pub images: Vec<Poly>,
}

impl ParamMorphism {
    /// Applies the morphism to a source-ring polynomial.
    pub fn apply(&self, f: &Poly) -> Result<Poly> {
        let field = &self.target_ring.field;
        let mut acc = Poly::zero();
        for (e, c) in f.terms() {
            let mut term = Poly::constant(&self.target_ring, c.clone());
            for (v, &k) in e.0.iter().enumerate() {
                if k > 0 {
                    let p = self.images[v].pow(k as u32, &self.target_ring)?;
                    term = term.mul(&p, field)?;
                }
            }
            acc = acc.add(&term, field);
        }
        Ok(acc)
    }
}

/// Expresses `f` as a combination of a Groebner basis: the
/// division-algorithm cofactors, with a membership error when the
/// remainder is nonzero.
pub fn express_in_basis(
    f: &Poly,
    gb: &[Poly],
    order: &TermOrder,
    field: &crate::field::FieldSpec,
) -> Result<Vec<Poly>> {
    let (rem, quots) = groebner::normal_form(f, gb, order, field)?;
    if !rem.is_zero() {
        return Err(Error::NotMember(
            "polynomial is not in the ideal of the basis".into(),
        ));
    }
    Ok(quots)
}

/// Everything the construction produces for one ideal and two orders.
pub struct IsomorphismData {
    pub template1: LiftingTemplate,
    pub template2: LiftingTemplate,
    pub scheme1: LiftingSchemeResult,
    pub scheme2: LiftingSchemeResult,
    /// `K[C']` -> `K[C]` (second presentation into the first).
    pub phi: ParamMorphism,
    /// `K[C]` -> `K[C']`.
    pub psi: ParamMorphism,
    /// The interreduced q'_b for phi (template1 ring).
    pub q_fwd: Vec<Poly>,
    /// The interreduced q_a for psi (template2 ring).
    pub q_rev: Vec<Poly>,
}

/// Interreduces marked polynomials with x-monic heads against each other
/// and a parameter-only basis, processing in ascending head order until
/// stable. Heads must stay fixed; a head change violates the basis shape
/// and aborts.
fn interreduce_marked(
    mut polys: Vec<Poly>,
    ring: &Ring,
    x_order: &TermOrder,
    coeff_gb: &[Poly],
    coeff_order: &TermOrder,
) -> Result<Vec<Poly>> {
    let nm = ring.num_main;
    let x_head = |p: &Poly| -> Result<crate::order::Exp> {
        let slots = tower::decompose(p, ring, x_order);
        slots
            .slots
            .first()
            .map(|(e, _)| e.clone())
            .ok_or_else(|| Error::InternalConsistency("marked polynomial is zero".into()))
    };
    let heads: Vec<_> = polys.iter().map(&x_head).collect::<Result<Vec<_>>>()?;
    let mut order_idx: Vec<usize> = (0..polys.len()).collect();
    order_idx.sort_by(|&a, &b| x_order.cmp_slices(&heads[a].0[..nm], &heads[b].0[..nm]));
    let coeff = if coeff_gb.is_empty() {
        None
    } else {
        Some((coeff_gb, coeff_order))
    };
    loop {
        let mut changed = false;
        for &i in &order_idx {
            let divisors: Vec<Poly> = (0..polys.len())
                .filter(|&j| j != i)
                .map(|j| polys[j].clone())
                .collect();
            let (r, _) = tower::normal_form_tower(&polys[i], &divisors, ring, x_order, coeff)?;
            if r != polys[i] {
                if x_head(&r)? != heads[i] {
                    return Err(Error::InternalConsistency(
                        "interreduction changed a marked head term".into(),
                    ));
                }
                polys[i] = r;
                changed = true;
            }
        }
        if !changed {
            return Ok(polys);
        }
    }
}

/// Runs the whole two-order pipeline for H. Parameters of the first
/// presentation are named C1, C2, ...; of the second D1, D2, ...
pub fn build_isomorphism(
    h_gens: &[Poly],
    base_ring: &Ring,
    order1: &TermOrder,
    order2: &TermOrder,
    parallel: bool,
) -> Result<IsomorphismData> {
    let t1 = lifting::build_template(h_gens, base_ring, order1, "C")?;
    let t2 = lifting::build_template(h_gens, base_ring, order2, "D")?;
    let c1 = param_ring(&t1);
    let c2 = param_ring(&t2);
    let h0_1 = compute_h0(&t1, false, parallel)?;
    let h0_2 = compute_h0(&t2, false, parallel)?;
    let s1 = eliminate_linear(&h0_1, &param_weights(&t1), &c1, &param_order(&t1))?;
    let s2 = eliminate_linear(&h0_2, &param_weights(&t2), &c2, &param_order(&t2))?;

    let q_fwd = direction(&t1, &t2, &s1)?;
    let phi = read_images(&t1, &t2, &q_fwd)?;
    let q_rev = direction(&t2, &t1, &s2)?;
    let psi = read_images(&t2, &t1, &q_rev)?;

    Ok(IsomorphismData {
        template1: t1,
        template2: t2,
        scheme1: s1,
        scheme2: s2,
        phi,
        psi,
        q_fwd,
        q_rev,
    })
}

/// One direction of the construction: express the target basis in the
/// source basis, push the relations through the source template, and
/// interreduce under the target degreverse order modulo the source scheme
/// ideal. Returns the q'_b in the source template ring, aligned with the
/// target basis.
fn direction(
    src: &LiftingTemplate,
    dst: &LiftingTemplate,
    src_scheme: &LiftingSchemeResult,
) -> Result<Vec<Poly>> {
    let ring = &src.ring;
    let field = &ring.field;
    // both templates share the main ring; move dst's basis over
    let nm = ring.num_main;
    debug_assert_eq!(nm, dst.ring.num_main);
    let move_main: Vec<usize> = (0..dst.ring.nvars())
        .map(|i| if i < nm { i } else { 0 })
        .collect();
    let mut ps: Vec<Poly> = vec![];
    for f_dst in &dst.h_basis {
        let f = f_dst.map_vars(&move_main, ring.nvars());
        // cofactors of f'_b against the source basis under the source order
        let cof = express_in_basis(&f, &src.h_basis, &src.xn_order, field)?;
        let mut p = Poly::zero();
        for (h, member) in cof.iter().zip(&src.members) {
            p = p.add(&h.mul(member, field)?, field);
        }
        ps.push(p);
    }
    let hgb: Vec<Poly> = src_scheme
        .reduced_gb
        .iter()
        .map(|g| lifting::from_param_ring(src, g))
        .collect();
    let q = interreduce_marked(ps, ring, &dst.xn_order, &hgb, &src.order)?;
    // shape check: q'_b = f'_b + xn*m_b with m_b supported outside J'
    let xn = nm - 1;
    for (q_b, f_dst) in q.iter().zip(&dst.h_basis) {
        let f = f_dst.map_vars(&move_main, ring.nvars());
        let tail = q_b.sub(&f, field);
        for e in tail.support() {
            if e.0[xn] == 0 {
                return Err(Error::InternalConsistency(
                    "reduced form has a tail term not divisible by xn".into(),
                ));
            }
            let mut x_part = e.clone();
            for k in x_part.0[nm..].iter_mut() {
                *k = 0;
            }
            let in_j = dst.j_basis.iter().any(|h| h.divides(&x_part));
            if in_j {
                return Err(Error::InternalConsistency(
                    "reduced form has a tail term inside the initial ideal".into(),
                ));
            }
        }
    }
    Ok(q)
}

/// Reads the images of dst's parameters off the interreduced forms: the
/// image of the parameter attached to tail term T of f'_b is the source
/// parameter coefficient of T in q'_b.
fn read_images(src: &LiftingTemplate, dst: &LiftingTemplate, q: &[Poly]) -> Result<ParamMorphism> {
    let ring = &src.ring;
    let nm = ring.num_main;
    let xn = nm - 1;
    let src_params = param_ring(src);
    let mut images = vec![Poly::zero(); dst.params.len()];
    for (k, info) in dst.params.iter().enumerate() {
        let q_b = &q[info.alpha_index];
        // the tail term of the parameter: xn * x^gamma
        let mut target = vec![0u16; nm];
        target.copy_from_slice(&info.gamma.0[..nm]);
        target[xn] += 1;
        let slots = tower::decompose(q_b, ring, &dst.xn_order);
        for (xe, coeff) in &slots.slots {
            if xe.0[..nm] == target[..] {
                images[k] = lifting::to_param_ring(src, coeff);
                break;
            }
        }
    }
    Ok(ParamMorphism {
        source_ring: param_ring(dst),
        target_ring: src_params,
        images,
    })
}

/// Outcome of the theorem-level identity checks for the morphism pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsomVerification {
    /// phi maps h0' into (h0).
    pub phi_maps_ideal: bool,
    /// psi maps h0 into (h0').
    pub psi_maps_ideal: bool,
    /// C - phi(psi(C)) lies in (h0) for every parameter C.
    pub chi_identity: bool,
    /// C' - psi(phi(C')) lies in (h0') for every parameter C'.
    pub chi_identity_rev: bool,
    /// phi preserves the torus weights parameter-wise.
    pub weights_preserved: bool,
}

impl IsomVerification {
    pub fn all_pass(&self) -> bool {
        self.phi_maps_ideal
            && self.psi_maps_ideal
            && self.chi_identity
            && self.chi_identity_rev
            && self.weights_preserved
    }
}

/// Checks the identities behind the construction. A failure signals an
/// implementation bug, so callers usually escalate it to an error.
pub fn verify_isomorphism(data: &IsomorphismData) -> Result<IsomVerification> {
    let c1 = param_ring(&data.template1);
    let c2 = param_ring(&data.template2);
    let o1 = param_order(&data.template1);
    let o2 = param_order(&data.template2);
    let gb1 = &data.scheme1.reduced_gb;
    let gb2 = &data.scheme2.reduced_gb;
    let member1 = |f: &Poly| -> Result<bool> {
        if gb1.is_empty() {
            return Ok(f.is_zero());
        }
        groebner::ideal_member(f, gb1, &o1, &c1.field)
    };
    let member2 = |f: &Poly| -> Result<bool> {
        if gb2.is_empty() {
            return Ok(f.is_zero());
        }
        groebner::ideal_member(f, gb2, &o2, &c2.field)
    };

    let mut phi_maps_ideal = true;
    for g in &data.scheme2.h0_generators {
        if !member1(&data.phi.apply(g)?)? {
            phi_maps_ideal = false;
            break;
        }
    }
    let mut psi_maps_ideal = true;
    for g in &data.scheme1.h0_generators {
        if !member2(&data.psi.apply(g)?)? {
            psi_maps_ideal = false;
            break;
        }
    }
    let mut chi_identity = true;
    for v in 0..c1.nvars() {
        let cv = Poly::var(&c1, v);
        let chi = data.phi.apply(&data.psi.images[v])?;
        if !member1(&cv.sub(&chi, &c1.field))? {
            chi_identity = false;
            break;
        }
    }
    let mut chi_identity_rev = true;
    for v in 0..c2.nvars() {
        let dv = Poly::var(&c2, v);
        let chi = data.psi.apply(&data.phi.images[v])?;
        if !member2(&dv.sub(&chi, &c2.field))? {
            chi_identity_rev = false;
            break;
        }
    }
    let w1 = param_weights(&data.template1);
    let w2 = param_weights(&data.template2);
    let mut weights_preserved = true;
    for (k, img) in data.phi.images.iter().enumerate() {
        if img.is_zero() {
            continue;
        }
        match img.homogeneous_degree(Some(&w1)) {
            Some(d) if d == w2[k] as u64 => {}
            _ => {
                weights_preserved = false;
                break;
            }
        }
    }
    Ok(IsomVerification {
        phi_maps_ideal,
        psi_maps_ideal,
        chi_identity,
        chi_identity_rev,
        weights_preserved,
    })
}

/// Audit of the basis statement behind the construction: every S-pair of
/// the pushed-through relations and the scheme basis reduces to zero under
/// the target order, without adding new elements.
pub fn audit_direction_basis(
    src: &LiftingTemplate,
    dst_xn_order: &TermOrder,
    q: &[Poly],
    src_scheme: &LiftingSchemeResult,
) -> Result<bool> {
    let ring = &src.ring;
    let full: Vec<Poly> = q
        .iter()
        .cloned()
        .chain(
            src_scheme
                .reduced_gb
                .iter()
                .map(|g| lifting::from_param_ring(src, g)),
        )
        .collect();
    let order = ring.tower_order(dst_xn_order.clone(), src.c_order.clone());
    for i in 0..full.len() {
        for j in i + 1..full.len() {
            let s = groebner::s_polynomial(&full[i], &full[j], &order, &ring.field)?;
            if s.is_zero() {
                continue;
            }
            let (r, _) = groebner::normal_form(&s, &full, &order, &ring.field)?;
            if !r.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Sorted (source parameter, image) rows for reporting.
pub fn morphism_table(m: &ParamMorphism, order: &TermOrder) -> Vec<(String, String)> {
    let mut rows: Vec<(usize, String, String)> = m
        .source_ring
        .vars
        .iter()
        .enumerate()
        .map(|(k, v)| {
            let idx: usize = v
                .trim_start_matches(|c: char| c.is_ascii_alphabetic())
                .parse()
                .unwrap_or(0);
            (
                idx,
                v.clone(),
                m.target_ring.format_poly(&m.images[k], Some(order)),
            )
        })
        .collect();
    rows.sort();
    rows.into_iter().map(|(_, v, img)| (v, img)).collect()
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
    fn express_in_basis_examples() {
        let r = qring(&["x0", "x1", "x2"]);
        let ord = TermOrder::DegRevLex;
        let g: Vec<Poly> = ["x0^2", "x0*x1", "x1^4 + x0*x2^3"]
            .iter()
            .map(|t| r.parse_poly(t).unwrap())
            .collect();
        // a member of the basis has the unit cofactor
        let cof = express_in_basis(&g[0], &g, &ord, &r.field).unwrap();
        assert_eq!(cof[0], Poly::one(&r));
        assert!(cof[1].is_zero() && cof[2].is_zero());
        // x1^5 = x1*(x1^4 + x0 x2^3) - x2^3*(x0 x1)
        let f = r.parse_poly("x1^5").unwrap();
        let cof = express_in_basis(&f, &g, &ord, &r.field).unwrap();
        assert_eq!(cof[1], r.parse_poly("-x2^3").unwrap());
        assert_eq!(cof[2], r.parse_poly("x1").unwrap());
        assert!(cof[0].is_zero());
        // re-expansion identity
        let mut back = Poly::zero();
        for (c, b) in cof.iter().zip(&g) {
            back = back.add(&c.mul(b, &r.field).unwrap(), &r.field);
        }
        assert_eq!(back, f);
        // non-members are rejected
        assert!(express_in_basis(&r.parse_poly("x2").unwrap(), &g, &ord, &r.field).is_err());
    }

    #[test]
    fn identity_orders_give_identity_morphism() {
        let r = qring(&["x0", "x1", "x2"]);
        let h: Vec<Poly> = ["x0^2", "x0*x1", "x1^2"]
            .iter()
            .map(|t| r.parse_poly(t).unwrap())
            .collect();
        let data =
            build_isomorphism(&h, &r, &TermOrder::DegRevLex, &TermOrder::DegRevLex, false)
                .unwrap();
        let c1 = param_ring(&data.template1);
        let o1 = param_order(&data.template1);
        // literal identity on free parameters, identity modulo the scheme
        // ideal on all of them
        for &v in &data.scheme1.free_params {
            assert_eq!(data.phi.images[v], Poly::var(&c1, v));
        }
        for (k, img) in data.phi.images.iter().enumerate() {
            let diff = img.sub(&Poly::var(&c1, k), &c1.field);
            assert!(groebner::ideal_member(
                &diff,
                &data.scheme1.reduced_gb,
                &o1,
                &c1.field
            )
            .unwrap());
        }
        let v = verify_isomorphism(&data).unwrap();
        assert!(v.all_pass());
    }

    #[test]
    fn monomial_relative_across_orders() {
        // degrevlex vs deglex on (x0^2, x0x1, x1^3)
        let r = qring(&["x0", "x1", "x2"]);
        let h: Vec<Poly> = ["x0^2", "x0*x1", "x1^3"]
            .iter()
            .map(|t| r.parse_poly(t).unwrap())
            .collect();
        let data =
            build_isomorphism(&h, &r, &TermOrder::DegRevLex, &TermOrder::DegLex, false).unwrap();
        let v = verify_isomorphism(&data).unwrap();
        assert!(v.all_pass(), "{v:?}");
        assert!(audit_direction_basis(
            &data.template1,
            &data.template2.xn_order,
            &data.q_fwd,
            &data.scheme1
        )
        .unwrap());
        assert!(audit_direction_basis(
            &data.template2,
            &data.template1.xn_order,
            &data.q_rev,
            &data.scheme2
        )
        .unwrap());
    }
}
