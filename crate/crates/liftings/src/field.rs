//! Exact coefficient fields: the rationals and small prime fields.
//!
//! All arithmetic in the crate is exact; there is no floating point
//! anywhere. Rational numbers are kept in lowest terms with a positive
//! denominator (num-rational does this canonically), prime field elements
//! are stored as residues in `0..p` with `p < 2^31` so products fit in a
//! 64-bit word.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;

use crate::error::{Error, Result};

/// Largest admissible prime modulus: native-word multiplication must not
/// overflow, so `p^2 < 2^64` with margin.
pub const MAX_PRIME: u64 = (1 << 31) - 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FieldSpec {
    /// The field of rational numbers.
    Rationals,
    /// The prime field GF(p).
    PrimeField(u64),
}

impl FieldSpec {
    pub fn rationals() -> Self {
        FieldSpec::Rationals
    }

    /// Constructs GF(p), checking primality (deterministic Miller-Rabin).
    pub fn prime_field(p: u64) -> Result<Self> {
        if p > MAX_PRIME {
            return Err(Error::Argument(format!(
                "modulus {p} exceeds the native-word bound {MAX_PRIME}"
            )));
        }
        if !is_prime(p) {
            return Err(Error::Argument(format!("{p} is not prime")));
        }
        Ok(FieldSpec::PrimeField(p))
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::PrimeField(p) => *p,
        }
    }

    /// Number of elements, `None` for an infinite field.
    pub fn size(&self) -> Option<u64> {
        match self {
            FieldSpec::Rationals => None,
            FieldSpec::PrimeField(p) => Some(*p),
        }
    }

    pub fn zero(&self) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Q(BigRational::zero()),
            FieldSpec::PrimeField(_) => Scalar::Fp(0),
        }
    }

    pub fn one(&self) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Q(BigRational::one()),
            FieldSpec::PrimeField(_) => Scalar::Fp(1),
        }
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Q(BigRational::from(BigInt::from(n))),
            FieldSpec::PrimeField(p) => {
                let r = n.rem_euclid(*p as i64) as u64;
                Scalar::Fp(r)
            }
        }
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (FieldSpec::Rationals, Scalar::Q(x), Scalar::Q(y)) => Scalar::Q(x + y),
            (FieldSpec::PrimeField(p), Scalar::Fp(x), Scalar::Fp(y)) => Scalar::Fp((x + y) % p),
            _ => panic!("scalar/field mismatch"),
        }
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (FieldSpec::Rationals, Scalar::Q(x), Scalar::Q(y)) => Scalar::Q(x - y),
            (FieldSpec::PrimeField(p), Scalar::Fp(x), Scalar::Fp(y)) => {
                Scalar::Fp((x + p - y) % p)
            }
            _ => panic!("scalar/field mismatch"),
        }
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (FieldSpec::Rationals, Scalar::Q(x), Scalar::Q(y)) => Scalar::Q(x * y),
            (FieldSpec::PrimeField(p), Scalar::Fp(x), Scalar::Fp(y)) => Scalar::Fp(x * y % p),
            _ => panic!("scalar/field mismatch"),
        }
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        match (self, a) {
            (FieldSpec::Rationals, Scalar::Q(x)) => Scalar::Q(-x),
            (FieldSpec::PrimeField(p), Scalar::Fp(x)) => Scalar::Fp(if *x == 0 { 0 } else { p - x }),
            _ => panic!("scalar/field mismatch"),
        }
    }

    pub fn inv(&self, a: &Scalar) -> Result<Scalar> {
        if a.is_zero() {
            return Err(Error::Argument("division by zero".into()));
        }
        Ok(match (self, a) {
            (FieldSpec::Rationals, Scalar::Q(x)) => Scalar::Q(x.recip()),
            (FieldSpec::PrimeField(p), Scalar::Fp(x)) => Scalar::Fp(mod_pow(*x, p - 2, *p)),
            _ => panic!("scalar/field mismatch"),
        })
    }

    pub fn div(&self, a: &Scalar, b: &Scalar) -> Result<Scalar> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    pub fn pow(&self, a: &Scalar, e: i64) -> Result<Scalar> {
        if e < 0 {
            return self.pow(&self.inv(a)?, -e);
        }
        let mut acc = self.one();
        for _ in 0..e {
            acc = self.mul(&acc, a);
        }
        Ok(acc)
    }

    /// Parses an integer or fraction `a/b` literal.
    pub fn parse_scalar(&self, text: &str) -> Result<Scalar> {
        let bad = |m: &str| Error::Argument(format!("invalid coefficient `{text}`: {m}"));
        if let Some((num, den)) = text.split_once('/') {
            let n: i64 = num.trim().parse().map_err(|_| bad("bad numerator"))?;
            let d: i64 = den.trim().parse().map_err(|_| bad("bad denominator"))?;
            if d == 0 {
                return Err(bad("zero denominator"));
            }
            self.div(&self.from_i64(n), &self.from_i64(d))
        } else {
            let n: i64 = text.trim().parse().map_err(|_| bad("bad integer"))?;
            Ok(self.from_i64(n))
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::PrimeField(p) => write!(f, "GF({p})"),
        }
    }
}

/// An exact field element. Operations live on [`FieldSpec`] so that prime
/// field elements stay a single machine word.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Scalar {
    Q(BigRational),
    Fp(u64),
}

impl Scalar {
    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Q(x) => x.is_zero(),
            Scalar::Fp(x) => *x == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Q(x) => x.is_one(),
            Scalar::Fp(x) => *x == 1,
        }
    }

    /// The rational value, if this is a rational scalar.
    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Q(x) => Some(x),
            Scalar::Fp(_) => None,
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Q(x) => {
                if x.denom().is_one() {
                    write!(f, "{}", x.numer())
                } else {
                    write!(f, "{}/{}", x.numer(), x.denom())
                }
            }
            Scalar::Fp(x) => write!(f, "{x}"),
        }
    }
}

/// Signum of a rational scalar (1 for Fp nonzero), used for sign-canonical
/// printing and content normalization.
pub fn scalar_sign(s: &Scalar) -> i32 {
    match s {
        Scalar::Q(x) => {
            if x.is_zero() {
                0
            } else if x.is_positive() {
                1
            } else {
                -1
            }
        }
        Scalar::Fp(x) => {
            if *x == 0 {
                0
            } else {
                1
            }
        }
    }
}

fn mod_pow(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc: u64 = 1;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin, valid for all `n < 3_215_031_751` with the
/// witness set {2, 3, 5, 7}; our moduli are below 2^31.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7] {
        if n == q {
            return true;
        }
        if n % q == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7] {
        let mut x = mod_pow(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = x * x % n;
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality() {
        assert!(is_prime(2));
        assert!(is_prime(13));
        assert!(is_prime(2147483647));
        assert!(!is_prime(1));
        assert!(!is_prime(15));
        assert!(!is_prime(1024));
        assert!(FieldSpec::prime_field(91).is_err());
        assert!(FieldSpec::prime_field(13).is_ok());
    }

    #[test]
    fn rational_canonical_form() {
        let q = FieldSpec::Rationals;
        let half = q.div(&q.from_i64(2), &q.from_i64(-4)).unwrap();
        // lowest terms, positive denominator
        assert_eq!(half.to_string(), "-1/2");
        let one = q.div(&q.from_i64(3), &q.from_i64(3)).unwrap();
        assert!(one.is_one());
    }

    #[test]
    fn prime_field_ops() {
        let f = FieldSpec::prime_field(13).unwrap();
        let a = f.from_i64(7);
        let inv = f.inv(&a).unwrap();
        assert!(f.mul(&a, &inv).is_one());
        assert_eq!(f.from_i64(-1), f.from_i64(12));
        // char 2 sanity
        let f2 = FieldSpec::prime_field(2).unwrap();
        assert_eq!(f2.add(&f2.one(), &f2.one()), f2.zero());
    }

    #[test]
    fn scalar_parsing() {
        let q = FieldSpec::Rationals;
        assert_eq!(q.parse_scalar("3/6").unwrap().to_string(), "1/2");
        assert_eq!(q.parse_scalar("-4").unwrap().to_string(), "-4");
        assert!(q.parse_scalar("1/0").is_err());
        let f = FieldSpec::prime_field(5).unwrap();
        assert_eq!(f.parse_scalar("7").unwrap(), f.from_i64(2));
    }
}
