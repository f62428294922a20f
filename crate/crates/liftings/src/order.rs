//! Exponent vectors and term orders.
//!
//! A term order compares exponent vectors of a fixed length. Every order
//! here is total, compatible with multiplication and has 1 as the minimal
//! term. The `Degreverse` wrapper is the graded extension of a base order
//! to one more (last) variable in which a larger last exponent makes a term
//! smaller; `degrevlex` on n+1 variables is exactly
//! `Degreverse(degrevlex on n)`.

use serde::{Deserialize, Serialize};
use std::cmp::Ordering;

use crate::error::{Error, Result};

/// Exponent vector: one entry per ring variable. Entries are small by
/// construction (total degrees in scope are < 100); multiplication checks
/// for overflow.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Exp(pub Vec<u16>);

impl Exp {
    pub fn zero(n: usize) -> Self {
        Exp(vec![0; n])
    }

    pub fn unit(n: usize, i: usize) -> Self {
        let mut e = vec![0; n];
        e[i] = 1;
        Exp(e)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn weighted_degree(&self, weights: &[u32]) -> u64 {
        self.0
            .iter()
            .zip(weights)
            .map(|(&e, &w)| e as u64 * w as u64)
            .sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Product of terms; errors on exponent overflow.
    pub fn mul(&self, other: &Exp) -> Result<Exp> {
        if self.len() != other.len() {
            return Err(Error::Dimension(format!(
                "exponent lengths {} and {}",
                self.len(),
                other.len()
            )));
        }
        let mut out = Vec::with_capacity(self.len());
        for (&a, &b) in self.0.iter().zip(&other.0) {
            let s = a as u32 + b as u32;
            if s > u16::MAX as u32 {
                return Err(Error::Argument("exponent overflow".into()));
            }
            out.push(s as u16);
        }
        Ok(Exp(out))
    }

    pub fn divides(&self, other: &Exp) -> bool {
        self.len() == other.len() && self.0.iter().zip(&other.0).all(|(&a, &b)| a <= b)
    }

    /// `other / self`; caller must ensure divisibility.
    pub fn div(&self, other: &Exp) -> Exp {
        debug_assert!(self.divides(other));
        Exp(other.0.iter().zip(&self.0).map(|(&b, &a)| b - a).collect())
    }

    pub fn lcm(&self, other: &Exp) -> Exp {
        Exp(self
            .0
            .iter()
            .zip(&other.0)
            .map(|(&a, &b)| a.max(b))
            .collect())
    }

    pub fn gcd(&self, other: &Exp) -> Exp {
        Exp(self
            .0
            .iter()
            .zip(&other.0)
            .map(|(&a, &b)| a.min(b))
            .collect())
    }

    pub fn is_coprime(&self, other: &Exp) -> bool {
        self.0.iter().zip(&other.0).all(|(&a, &b)| a == 0 || b == 0)
    }

    pub fn permute(&self, perm: &[usize]) -> Exp {
        Exp(perm.iter().map(|&i| self.0[i]).collect())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum TermOrder {
    /// Pure lexicographic, first variable heaviest.
    Lex,
    /// Total degree, ties by lex.
    DegLex,
    /// Total degree, ties by reverse lexicographic.
    DegRevLex,
    /// Lexicographic with variables compared in the given priority
    /// sequence (indices; earlier = heavier). Built from a weight vector by
    /// [`TermOrder::weighted_lex`].
    WeightedLex { priority: Vec<usize> },
    /// Graded extension to one more (last) variable: among equal-degree
    /// terms, a larger last exponent is smaller; on equal last exponents the
    /// base order compares the remaining prefix.
    Degreverse(Box<TermOrder>),
    /// Block (elimination) order: the first `split` variables are compared
    /// by `outer` first; any term involving them beats any term that does
    /// not.
    Block {
        split: usize,
        outer: Box<TermOrder>,
        inner: Box<TermOrder>,
    },
}

impl TermOrder {
    /// Lexicographic order with variables sorted by decreasing weight,
    /// ties broken by increasing variable index.
    pub fn weighted_lex(weights: &[u32]) -> TermOrder {
        let mut priority: Vec<usize> = (0..weights.len()).collect();
        priority.sort_by(|&a, &b| weights[b].cmp(&weights[a]).then(a.cmp(&b)));
        TermOrder::WeightedLex { priority }
    }

    pub fn degreverse(base: TermOrder) -> TermOrder {
        TermOrder::Degreverse(Box::new(base))
    }

    pub fn block(split: usize, outer: TermOrder, inner: TermOrder) -> TermOrder {
        TermOrder::Block {
            split,
            outer: Box::new(outer),
            inner: Box::new(inner),
        }
    }

    /// Compares two exponent vectors; errors on length mismatch.
    pub fn compare(&self, a: &Exp, b: &Exp) -> Result<Ordering> {
        if a.len() != b.len() {
            return Err(Error::Dimension(format!(
                "cannot compare exponent vectors of lengths {} and {}",
                a.len(),
                b.len()
            )));
        }
        Ok(self.cmp_slices(&a.0, &b.0))
    }

    /// Total-order comparison on raw exponent slices of equal length.
    pub fn cmp_slices(&self, a: &[u16], b: &[u16]) -> Ordering {
        match self {
            TermOrder::Lex => a.cmp(b),
            TermOrder::DegLex => deg(a).cmp(&deg(b)).then_with(|| a.cmp(b)),
            TermOrder::DegRevLex => deg(a).cmp(&deg(b)).then_with(|| revlex(a, b)),
            TermOrder::WeightedLex { priority } => {
                for &i in priority {
                    match a[i].cmp(&b[i]) {
                        Ordering::Equal => continue,
                        ord => return ord,
                    }
                }
                Ordering::Equal
            }
            TermOrder::Degreverse(base) => {
                let n = a.len() - 1;
                deg(a)
                    .cmp(&deg(b))
                    // larger exponent of the last variable means smaller term
                    .then_with(|| b[n].cmp(&a[n]))
                    .then_with(|| base.cmp_slices(&a[..n], &b[..n]))
            }
            TermOrder::Block { split, outer, inner } => outer
                .cmp_slices(&a[..*split], &b[..*split])
                .then_with(|| inner.cmp_slices(&a[*split..], &b[*split..])),
        }
    }

    /// True if the order is graded with respect to total degree on the full
    /// variable range (used by sanity checks only).
    pub fn is_graded(&self) -> bool {
        matches!(
            self,
            TermOrder::DegLex | TermOrder::DegRevLex | TermOrder::Degreverse(_)
        )
    }
}

fn deg(a: &[u16]) -> u32 {
    a.iter().map(|&e| e as u32).sum()
}

fn revlex(a: &[u16], b: &[u16]) -> Ordering {
    // last differing exponent: the one with the smaller entry is larger
    for i in (0..a.len()).rev() {
        match a[i].cmp(&b[i]) {
            Ordering::Equal => continue,
            ord => return ord.reverse(),
        }
    }
    Ordering::Equal
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(v: &[u16]) -> Exp {
        Exp(v.to_vec())
    }

    #[test]
    fn degreverse_matches_definition() {
        // x2^3*x3 vs x1*x3^2 in K[x0..x3], both degree 4, last variable x3:
        // exponents of x3 are 1 and 2, so the second is smaller.
        let ord = TermOrder::degreverse(TermOrder::DegLex);
        let a = e(&[0, 3, 0, 1]); // x1^3 x3
        let b = e(&[0, 1, 0, 2]); // wrong on purpose? use the spec's terms below
        let _ = (a, b);
        // spec: Degreverse(deglex), x2^3*x3 vs x1*x3^2 (both degree 4):
        // x1*x3^2 < x2^3*x3 because 2 > 1 in the x_n exponent
        let t1 = e(&[0, 0, 3, 1]); // x2^3 x3
        let t2 = e(&[0, 1, 0, 2]); // x1 x3^2
        assert_eq!(ord.compare(&t2, &t1).unwrap(), Ordering::Less);
        // reflexivity
        assert_eq!(ord.compare(&t1, &t1).unwrap(), Ordering::Equal);
        // equal degree, equal xn exponent: deglex tie-break on the prefix,
        // x1*x3 < x0*x3 under x0 > x1
        let t3 = e(&[1, 0, 0, 1]); // x0 x3
        let t4 = e(&[0, 1, 0, 1]); // x1 x3
        assert_eq!(ord.compare(&t4, &t3).unwrap(), Ordering::Less);
    }

    #[test]
    fn degreverse_of_degrevlex_is_degrevlex() {
        let a = TermOrder::degreverse(TermOrder::DegRevLex);
        let b = TermOrder::DegRevLex;
        // exhaustive over all pairs of degree <= 4 in 3 variables
        let mut terms = vec![];
        for i in 0..=4u16 {
            for j in 0..=4u16 {
                for k in 0..=4u16 {
                    if i + j + k <= 4 {
                        terms.push(e(&[i, j, k]));
                    }
                }
            }
        }
        for s in &terms {
            for t in &terms {
                assert_eq!(a.compare(s, t).unwrap(), b.compare(s, t).unwrap());
            }
        }
    }

    #[test]
    fn degreverse_restriction_coincides_with_base() {
        // on terms with zero last exponent the degreverse order restricts to
        // the base order; exhaustive up to degree 6 in 4 variables
        let base = TermOrder::DegLex;
        let ext = TermOrder::degreverse(TermOrder::DegLex);
        let mut terms = vec![];
        for i in 0..=6u16 {
            for j in 0..=6u16 {
                for k in 0..=6u16 {
                    if i + j + k <= 6 {
                        terms.push(e(&[i, j, k]));
                    }
                }
            }
        }
        for s in &terms {
            for t in &terms {
                let mut s4 = s.0.clone();
                let mut t4 = t.0.clone();
                s4.push(0);
                t4.push(0);
                assert_eq!(
                    ext.compare(&Exp(s4), &Exp(t4)).unwrap(),
                    base.compare(s, t).unwrap()
                );
            }
        }
    }

    #[test]
    fn block_is_elimination_order() {
        // any term containing an outer variable exceeds every inner-only term
        let ord = TermOrder::block(1, TermOrder::Lex, TermOrder::DegRevLex);
        let with_outer = e(&[1, 0, 0]);
        let inner_only = e(&[0, 5, 7]);
        assert_eq!(ord.compare(&with_outer, &inner_only).unwrap(), Ordering::Greater);
    }

    #[test]
    fn weighted_lex_priority() {
        // weights [1, 3, 2]: priority x1 > x2 > x0
        let ord = TermOrder::weighted_lex(&[1, 3, 2]);
        assert_eq!(
            ord.compare(&e(&[5, 0, 0]), &e(&[0, 1, 0])).unwrap(),
            Ordering::Less
        );
        assert_eq!(
            ord.compare(&e(&[0, 0, 1]), &e(&[9, 0, 0])).unwrap(),
            Ordering::Greater
        );
    }

    #[test]
    fn length_mismatch_is_error() {
        let ord = TermOrder::Lex;
        assert!(ord.compare(&e(&[1, 2]), &e(&[1, 2, 3])).is_err());
    }
}
