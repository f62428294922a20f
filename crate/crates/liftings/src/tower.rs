//! Division in towers `K[params][x]`.
//!
//! The template computations reduce polynomials whose coefficients are
//! themselves polynomials in parameter variables. Divisors are monic in
//! the geometric block (their head is a pure x-term with coefficient 1),
//! so the division never divides coefficients. Reduction works slot-wise:
//! the order-maximal reducible x-term is eliminated in one step together
//! with its whole parameter coefficient.

use crate::error::{Error, Result};
use crate::order::{Exp, TermOrder};
use crate::poly::Poly;
use crate::ring::Ring;

/// A polynomial split into x-slots: pairs of a main-block exponent and the
/// parameter-only coefficient polynomial (both as full-ring objects).
pub struct Slots {
    /// sorted descending by `x_order` on the main block
    pub slots: Vec<(Exp, Poly)>,
}

fn main_part(e: &Exp, num_main: usize) -> Exp {
    let mut v = vec![0u16; e.len()];
    v[..num_main].copy_from_slice(&e.0[..num_main]);
    Exp(v)
}

fn param_part(e: &Exp, num_main: usize) -> Exp {
    let mut v = e.0.clone();
    for x in v[..num_main].iter_mut() {
        *x = 0;
    }
    Exp(v)
}

/// Splits into x-slots, sorted descending by `x_order` on the main block.
pub fn decompose(f: &Poly, ring: &Ring, x_order: &TermOrder) -> Slots {
    let nm = ring.num_main;
    let mut slots: Vec<(Exp, Vec<(Exp, crate::field::Scalar)>)> = vec![];
    for (e, c) in f.terms() {
        let xe = main_part(e, nm);
        let pe = param_part(e, nm);
        match slots.binary_search_by(|(s, _)| x_order.cmp_slices(&xe.0[..nm], &s.0[..nm])) {
            Ok(i) => slots[i].1.push((pe, c.clone())),
            Err(i) => slots.insert(i, (xe, vec![(pe, c.clone())])),
        }
    }
    Slots {
        slots: slots
            .into_iter()
            .map(|(xe, terms)| (xe, Poly::from_terms(&ring.field, terms)))
            .collect(),
    }
}

/// Reassembles a polynomial from x-slots.
pub fn recompose(slots: &Slots, ring: &Ring) -> Poly {
    let mut acc = Poly::zero();
    for (xe, c) in &slots.slots {
        acc = acc.add(
            &c.mul_term(xe, &ring.field.one(), &ring.field).unwrap(),
            &ring.field,
        );
    }
    acc
}

/// A divisor prepared for tower division: x-monic with its tail slots.
struct TowerDivisor {
    x_head: Exp,
    /// tail slots (x-part, coefficient), x-parts strictly below the head
    tail: Vec<(Exp, Poly)>,
}

fn prepare_divisors(
    divisors: &[Poly],
    ring: &Ring,
    x_order: &TermOrder,
) -> Result<Vec<TowerDivisor>> {
    let nm = ring.num_main;
    let mut out = vec![];
    for (i, d) in divisors.iter().enumerate() {
        let s = decompose(d, ring, x_order);
        let Some(((h, c), rest)) = s.slots.split_first() else {
            return Err(Error::ZeroPolynomial(format!("divisor {i} is zero")));
        };
        if !(c.num_terms() == 1
            && c.terms()[0].0.is_zero()
            && c.terms()[0].1.is_one())
        {
            return Err(Error::NonMonic(format!(
                "divisor {i} is not monic in the geometric block"
            )));
        }
        if h.0[nm..].iter().any(|&k| k != 0) {
            return Err(Error::NonMonic(format!(
                "divisor {i} head involves parameters"
            )));
        }
        out.push(TowerDivisor {
            x_head: h.clone(),
            tail: rest.to_vec(),
        });
    }
    Ok(out)
}

/// Complete reduction in the tower: `f = sum quotients[i]*divisors[i] +
/// remainder`, where no x-term of the remainder is divisible by any
/// divisor's x-head. When `coeff_gb` is given (a Groebner basis of
/// parameter-only polynomials together with its order), the remainder's
/// slot coefficients are additionally put in normal form modulo it, and
/// the discarded parts are NOT tracked in the quotients.
pub fn normal_form_tower(
    f: &Poly,
    divisors: &[Poly],
    ring: &Ring,
    x_order: &TermOrder,
    coeff_gb: Option<(&[Poly], &TermOrder)>,
) -> Result<(Poly, Vec<Poly>)> {
    let nm = ring.num_main;
    let divs = prepare_divisors(divisors, ring, x_order)?;
    let mut work = decompose(f, ring, x_order);
    let mut rem: Vec<(Exp, Poly)> = vec![];
    let mut quots: Vec<Poly> = vec![Poly::zero(); divisors.len()];
    while let Some((xe, coeff)) = work.slots.first().cloned() {
        work.slots.remove(0);
        if coeff.is_zero() {
            continue;
        }
        match divs.iter().position(|d| d.x_head.divides(&xe)) {
            Some(i) => {
                let m = divs[i].x_head.div(&xe);
                quots[i] = quots[i].add(
                    &coeff.mul_term(&m, &ring.field.one(), &ring.field)?,
                    &ring.field,
                );
                for (te, tc) in &divs[i].tail {
                    let target = te.mul(&m)?;
                    let addend = coeff.mul(tc, &ring.field)?.neg(&ring.field);
                    if addend.is_zero() {
                        continue;
                    }
                    match work
                        .slots
                        .binary_search_by(|(s, _)| x_order.cmp_slices(&target.0[..nm], &s.0[..nm]))
                    {
                        Ok(k) => {
                            work.slots[k].1 = work.slots[k].1.add(&addend, &ring.field);
                        }
                        Err(k) => work.slots.insert(k, (target, addend)),
                    }
                }
            }
            None => rem.push((xe, coeff)),
        }
    }
    // coefficient-level normal forms modulo the parameter ideal
    if let Some((hgb, horder)) = coeff_gb {
        if !hgb.is_empty() {
            for (_, c) in rem.iter_mut() {
                let (r, _) = crate::groebner::normal_form(c, hgb, horder, &ring.field)?;
                *c = r;
            }
        }
    }
    rem.retain(|(_, c)| !c.is_zero());
    let remainder = recompose(&Slots { slots: rem }, ring);
    Ok((remainder, quots))
}

/// The parameter coefficients of every x-term of a remainder: the raw
/// generators a complete reduction contributes to the template ideal.
pub fn slot_coefficients(f: &Poly, ring: &Ring, x_order: &TermOrder) -> Vec<Poly> {
    decompose(f, ring, x_order)
        .slots
        .into_iter()
        .map(|(_, c)| c)
        .collect()
}

/// S-polynomial for x-monic tower polynomials: both inputs must have pure
/// x-heads with coefficient one.
pub fn s_polynomial_tower(
    f: &Poly,
    g: &Poly,
    ring: &Ring,
    x_order: &TermOrder,
) -> Result<Poly> {
    let divs = prepare_divisors(&[f.clone(), g.clone()], ring, x_order)?;
    let lcm = divs[0].x_head.lcm(&divs[1].x_head);
    let a = f.mul_term(&divs[0].x_head.div(&lcm), &ring.field.one(), &ring.field)?;
    let b = g.mul_term(&divs[1].x_head.div(&lcm), &ring.field.one(), &ring.field)?;
    Ok(a.sub(&b, &ring.field))
}
