//! Sparse multivariate polynomials with exact coefficients.
//!
//! Storage is order-agnostic: terms are kept sorted by a fixed canonical
//! comparison on exponent vectors (plain lex, descending) so that equal
//! polynomials have equal representations regardless of which term order a
//! computation is using. Head terms are queries parameterized by a
//! [`TermOrder`], not stored state.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::order::{Exp, TermOrder};
use crate::ring::Ring;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly {
    /// Terms sorted descending by the canonical (lex) order on exponents,
    /// with no zero coefficients. The zero polynomial has no terms.
    terms: Vec<(Exp, Scalar)>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { terms: vec![] }
    }

    pub fn one(ring: &Ring) -> Self {
        Poly {
            terms: vec![(Exp::zero(ring.nvars()), ring.field.one())],
        }
    }

    pub fn monomial(exp: Exp, coeff: Scalar) -> Self {
        if coeff.is_zero() {
            Poly::zero()
        } else {
            Poly {
                terms: vec![(exp, coeff)],
            }
        }
    }

    pub fn var(ring: &Ring, i: usize) -> Self {
        Poly::monomial(Exp::unit(ring.nvars(), i), ring.field.one())
    }

    pub fn constant(ring: &Ring, c: Scalar) -> Self {
        Poly::monomial(Exp::zero(ring.nvars()), c)
    }

    /// Builds a polynomial from arbitrary (exp, coeff) pairs, merging
    /// duplicates and dropping zeros.
    pub fn from_terms(field: &FieldSpec, mut terms: Vec<(Exp, Scalar)>) -> Self {
        terms.sort_by(|a, b| b.0.cmp(&a.0));
        let mut out: Vec<(Exp, Scalar)> = Vec::with_capacity(terms.len());
        for (e, c) in terms {
            if let Some(last) = out.last_mut() {
                if last.0 == e {
                    last.1 = field.add(&last.1, &c);
                    if last.1.is_zero() {
                        out.pop();
                    }
                    continue;
                }
            }
            if !c.is_zero() {
                out.push((e, c));
            }
        }
        Poly { terms: out }
    }

    pub fn terms(&self) -> &[(Exp, Scalar)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// The support: stored exponent vectors.
    pub fn support(&self) -> impl Iterator<Item = &Exp> {
        self.terms.iter().map(|(e, _)| e)
    }

    pub fn coeff_of(&self, e: &Exp) -> Option<&Scalar> {
        self.terms
            .binary_search_by(|(t, _)| e.cmp(t))
            .ok()
            .map(|i| &self.terms[i].1)
    }

    /// Total degree (max over support); zero polynomial reports 0.
    pub fn degree(&self) -> u32 {
        self.terms.iter().map(|(e, _)| e.degree()).max().unwrap_or(0)
    }

    /// Degree in a single variable.
    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms
            .iter()
            .map(|(e, _)| e.0[var] as u32)
            .max()
            .unwrap_or(0)
    }

    /// If homogeneous for the given per-variable weights (all-1 when
    /// `None`), returns the common weighted degree.
    pub fn homogeneous_degree(&self, weights: Option<&[u32]>) -> Option<u64> {
        let wdeg = |e: &Exp| match weights {
            Some(w) => e.weighted_degree(w),
            None => e.degree() as u64,
        };
        let mut it = self.terms.iter();
        let first = wdeg(&it.next()?.0);
        for (e, _) in it {
            if wdeg(e) != first {
                return None;
            }
        }
        Some(first)
    }

    pub fn is_homogeneous(&self, weights: Option<&[u32]>) -> bool {
        self.is_zero() || self.homogeneous_degree(weights).is_some()
    }

    /// The order-maximal term. Errors on the zero polynomial.
    pub fn head_term(&self, order: &TermOrder) -> Result<(&Exp, &Scalar)> {
        if self.terms.is_empty() {
            return Err(Error::ZeroPolynomial("head term of 0".into()));
        }
        let mut best = 0;
        for i in 1..self.terms.len() {
            if order.cmp_slices(&self.terms[i].0 .0, &self.terms[best].0 .0) == Ordering::Greater {
                best = i;
            }
        }
        Ok((&self.terms[best].0, &self.terms[best].1))
    }

    pub fn add(&self, other: &Poly, field: &FieldSpec) -> Poly {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            match self.terms[i].0.cmp(&other.terms[j].0) {
                Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(other.terms[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = field.add(&self.terms[i].1, &other.terms[j].1);
                    if !c.is_zero() {
                        out.push((self.terms[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&other.terms[j..]);
        Poly { terms: out }
    }

    pub fn neg(&self, field: &FieldSpec) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), field.neg(c)))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Poly, field: &FieldSpec) -> Poly {
        self.add(&other.neg(field), field)
    }

    pub fn scalar_mul(&self, c: &Scalar, field: &FieldSpec) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(e, k)| (e.clone(), field.mul(k, c)))
                .collect(),
        }
    }

    /// Multiplication by a single term. Shifting every exponent by the same
    /// vector preserves the canonical sort.
    pub fn mul_term(&self, exp: &Exp, c: &Scalar, field: &FieldSpec) -> Result<Poly> {
        if c.is_zero() {
            return Ok(Poly::zero());
        }
        let mut out = Vec::with_capacity(self.terms.len());
        for (e, k) in &self.terms {
            out.push((e.mul(exp)?, field.mul(k, c)));
        }
        Ok(Poly { terms: out })
    }

    pub fn mul(&self, other: &Poly, field: &FieldSpec) -> Result<Poly> {
        let mut cross = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (e, c) in &other.terms {
            for (f, d) in &self.terms {
                cross.push((f.mul(e)?, field.mul(d, c)));
            }
        }
        Ok(Poly::from_terms(field, cross))
    }

    pub fn pow(&self, mut n: u32, ring: &Ring) -> Result<Poly> {
        let mut acc = Poly::one(ring);
        let mut base = self.clone();
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base, &ring.field)?;
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base, &ring.field)?;
            }
        }
        Ok(acc)
    }

    /// The largest r such that `var^r` divides this polynomial (minimum
    /// exponent of `var` over the support). Errors on zero.
    pub fn var_power_divisor(&self, var: usize) -> Result<u32> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial("xn power of 0".into()));
        }
        Ok(self
            .terms
            .iter()
            .map(|(e, _)| e.0[var] as u32)
            .min()
            .unwrap())
    }

    /// Divides by `var^r` (caller guarantees divisibility).
    pub fn shift_down_var(&self, var: usize, r: u32) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut v = e.clone();
                    v.0[var] -= r as u16;
                    (v, c.clone())
                })
                .collect(),
        }
    }

    /// Remaps exponents into another ring via `var_map[i] = new index of
    /// old variable i`. The target ring must have at least as many
    /// variables; unmapped target variables get exponent zero.
    pub fn map_vars(&self, var_map: &[usize], target_nvars: usize) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut v = vec![0u16; target_nvars];
                    for (i, &x) in e.0.iter().enumerate() {
                        if x != 0 {
                            v[var_map[i]] += x;
                        }
                    }
                    (Exp(v), c.clone())
                })
                .collect::<Vec<_>>(),
        }
        .renormalize()
    }

    fn renormalize(self) -> Poly {
        let mut terms = self.terms;
        terms.sort_by(|a, b| b.0.cmp(&a.0));
        Poly { terms }
    }

    /// Substitutes a polynomial for one variable. Terms free of the
    /// variable are passed through untouched.
    pub fn substitute(&self, var: usize, value: &Poly, ring: &Ring) -> Result<Poly> {
        if self.terms.iter().all(|(e, _)| e.0[var] == 0) {
            return Ok(self.clone());
        }
        let field = &ring.field;
        let mut powers: Vec<Poly> = vec![Poly::one(ring)];
        let mut out: Vec<(Exp, Scalar)> = vec![];
        for (e, c) in &self.terms {
            let k = e.0[var] as usize;
            if k == 0 {
                out.push((e.clone(), c.clone()));
                continue;
            }
            while powers.len() <= k {
                let next = powers.last().unwrap().mul(value, field)?;
                powers.push(next);
            }
            let mut rest = e.clone();
            rest.0[var] = 0;
            for (pe, pc) in powers[k].terms() {
                out.push((pe.mul(&rest)?, field.mul(pc, c)));
            }
        }
        Ok(Poly::from_terms(field, out))
    }

    /// Substitutes a scalar for one variable.
    pub fn substitute_scalar(&self, var: usize, value: &Scalar, ring: &Ring) -> Result<Poly> {
        self.substitute(var, &Poly::constant(ring, value.clone()), ring)
    }

    /// Full evaluation at a point (one scalar per variable).
    pub fn evaluate(&self, point: &[Scalar], field: &FieldSpec) -> Result<Scalar> {
        if !self.terms.is_empty() && point.len() != self.terms[0].0.len() {
            return Err(Error::Dimension("evaluation point length".into()));
        }
        let mut acc = field.zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (i, &k) in e.0.iter().enumerate() {
                for _ in 0..k {
                    t = field.mul(&t, &point[i]);
                }
            }
            acc = field.add(&acc, &t);
        }
        Ok(acc)
    }

    /// Partial derivative with respect to one variable.
    pub fn derivative(&self, var: usize, field: &FieldSpec) -> Poly {
        let terms = self
            .terms
            .iter()
            .filter(|(e, _)| e.0[var] > 0)
            .map(|(e, c)| {
                let mut v = e.clone();
                let k = v.0[var];
                v.0[var] = k - 1;
                (v, field.mul(c, &field.from_i64(k as i64)))
            })
            .filter(|(_, c)| !c.is_zero())
            .collect();
        Poly { terms }
    }

    /// Head coefficient under the given order normalized to 1.
    pub fn make_monic(&self, order: &TermOrder, field: &FieldSpec) -> Result<Poly> {
        if self.is_zero() {
            return Ok(Poly::zero());
        }
        let (_, c) = self.head_term(order)?;
        if c.is_one() {
            return Ok(self.clone());
        }
        let inv = field.inv(c)?;
        Ok(self.scalar_mul(&inv, field))
    }

    /// Over Q, rescales by a rational so coefficients become coprime
    /// integers with the canonically-leading one positive; over GF(p),
    /// rescales so the canonically-leading coefficient is 1. This is the
    /// content stripping used to control coefficient growth.
    pub fn primitive_part(&self, field: &FieldSpec) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        match field {
            FieldSpec::Rationals => {
                let mut num_gcd = BigInt::zero();
                let mut den_lcm = BigInt::one();
                for (_, c) in &self.terms {
                    let r = c.as_rational().unwrap();
                    num_gcd = num_gcd.gcd(r.numer());
                    den_lcm = den_lcm.lcm(r.denom());
                }
                let lead = self.terms[0].1.as_rational().unwrap();
                let mut scale = BigRational::new(den_lcm, num_gcd);
                if (lead * &scale).is_negative() {
                    scale = -scale;
                }
                self.scalar_mul(&Scalar::Q(scale), field)
            }
            FieldSpec::PrimeField(_) => {
                let inv = field.inv(&self.terms[0].1).unwrap();
                self.scalar_mul(&inv, field)
            }
        }
    }

    /// Exact division: `self / divisor`, error if not divisible.
    pub fn exact_div(&self, divisor: &Poly, field: &FieldSpec) -> Result<Poly> {
        if divisor.is_zero() {
            return Err(Error::ZeroPolynomial("division by zero polynomial".into()));
        }
        let mut rem = self.clone();
        let mut quot: Vec<(Exp, Scalar)> = vec![];
        let (dh, dc) = (&divisor.terms[0].0, &divisor.terms[0].1);
        let dinv = field.inv(dc)?;
        while !rem.is_zero() {
            let (rh, rc) = (&rem.terms[0].0, &rem.terms[0].1);
            if !dh.divides(rh) {
                return Err(Error::Argument("polynomial division is not exact".into()));
            }
            let qe = dh.div(rh);
            let qc = field.mul(rc, &dinv);
            rem = rem.sub(&divisor.mul_term(&qe, &qc, field)?, field);
            quot.push((qe, qc));
        }
        Ok(Poly::from_terms(field, quot))
    }

    /// Collects this polynomial as a univariate polynomial in `var` with
    /// coefficients in the remaining variables: returns `[c_0, ..., c_d]`.
    pub fn coeffs_in_var(&self, var: usize, field: &FieldSpec) -> Vec<Poly> {
        let d = self.degree_in(var) as usize;
        let mut buckets: Vec<Vec<(Exp, Scalar)>> = vec![vec![]; d + 1];
        for (e, c) in &self.terms {
            let k = e.0[var] as usize;
            let mut v = e.clone();
            v.0[var] = 0;
            buckets[k].push((v, c.clone()));
        }
        buckets
            .into_iter()
            .map(|b| Poly::from_terms(field, b))
            .collect()
    }
}

// ---------------------------------------------------------------------------
// parsing and printing
// ---------------------------------------------------------------------------

impl Ring {
    /// Renders a polynomial in the crate's text syntax, terms ordered
    /// descending by the given order (canonical lex when `None`).
    pub fn format_poly(&self, p: &Poly, order: Option<&TermOrder>) -> String {
        if p.is_zero() {
            return "0".into();
        }
        let mut idx: Vec<usize> = (0..p.terms.len()).collect();
        if let Some(ord) = order {
            idx.sort_by(|&a, &b| ord.cmp_slices(&p.terms[b].0 .0, &p.terms[a].0 .0));
        }
        let mut out = String::new();
        for (pos, &i) in idx.iter().enumerate() {
            let (e, c) = &p.terms[i];
            let (sign, mag) = match c {
                Scalar::Q(r) => {
                    if r.is_negative() {
                        ("-", Scalar::Q(-r))
                    } else {
                        ("+", c.clone())
                    }
                }
                Scalar::Fp(_) => ("+", c.clone()),
            };
            if pos == 0 {
                if sign == "-" {
                    out.push('-');
                }
            } else {
                out.push_str(if sign == "-" { " - " } else { " + " });
            }
            let vars: Vec<String> = e
                .0
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(v, &k)| {
                    if k == 1 {
                        self.vars[v].clone()
                    } else {
                        format!("{}^{}", self.vars[v], k)
                    }
                })
                .collect();
            if vars.is_empty() {
                out.push_str(&mag.to_string());
            } else if mag.is_one() {
                out.push_str(&vars.join("*"));
            } else {
                out.push_str(&format!("{}*{}", mag, vars.join("*")));
            }
        }
        out
    }

    /// Parses the text syntax: terms joined by `+`/`-`; a term is a product
    /// of an optional coefficient (integer or fraction `a/b`) and variable
    /// powers `x0^2`, with `*` optional at token boundaries.
    pub fn parse_poly(&self, text: &str) -> Result<Poly> {
        let mut terms: Vec<(Exp, Scalar)> = vec![];
        let bytes: Vec<char> = text.chars().collect();
        let mut i = 0;
        let n = bytes.len();
        let err = |i: usize, msg: &str| Error::Parse {
            line: 1,
            col: i + 1,
            msg: msg.to_string(),
        };
        let mut sign = 1i64;
        let mut expect_term = true;
        let mut dangling_sign = false;
        while i < n {
            let c = bytes[i];
            if c.is_whitespace() {
                i += 1;
                continue;
            }
            if c == '+' || c == '-' {
                if expect_term && c == '-' {
                    sign = -sign;
                } else if expect_term && c == '+' {
                    // unary plus, ignore
                } else {
                    sign = if c == '-' { -1 } else { 1 };
                    expect_term = true;
                }
                dangling_sign = true;
                i += 1;
                continue;
            }
            // parse one term
            let mut coeff = self.field.from_i64(sign);
            let mut exp = Exp::zero(self.nvars());
            let mut saw_factor = false;
            loop {
                while i < n && bytes[i].is_whitespace() {
                    i += 1;
                }
                if i < n && bytes[i] == '*' {
                    i += 1;
                    continue;
                }
                if i >= n {
                    break;
                }
                let c = bytes[i];
                if c.is_ascii_digit() {
                    let start = i;
                    while i < n && (bytes[i].is_ascii_digit() || bytes[i] == '/') {
                        // a fraction like 3/2; stop if '/' is followed by non-digit
                        if bytes[i] == '/' && (i + 1 >= n || !bytes[i + 1].is_ascii_digit()) {
                            break;
                        }
                        i += 1;
                    }
                    let lit: String = bytes[start..i].iter().collect();
                    let c = self.field.parse_scalar(&lit).map_err(|e| match e {
                        Error::Argument(m) => err(start, &m),
                        other => other,
                    })?;
                    coeff = self.field.mul(&coeff, &c);
                    saw_factor = true;
                } else if c.is_ascii_alphabetic() {
                    let start = i;
                    while i < n && (bytes[i].is_ascii_alphanumeric() || bytes[i] == '_') {
                        i += 1;
                    }
                    let name: String = bytes[start..i].iter().collect();
                    let v = self
                        .var_index(&name)
                        .ok_or_else(|| err(start, &format!("unknown variable `{name}`")))?;
                    let mut power: u16 = 1;
                    while i < n && bytes[i].is_whitespace() {
                        i += 1;
                    }
                    if i < n && bytes[i] == '^' {
                        i += 1;
                        while i < n && bytes[i].is_whitespace() {
                            i += 1;
                        }
                        let start = i;
                        while i < n && bytes[i].is_ascii_digit() {
                            i += 1;
                        }
                        if start == i {
                            return Err(err(i, "expected exponent after `^`"));
                        }
                        let lit: String = bytes[start..i].iter().collect();
                        power = lit
                            .parse()
                            .map_err(|_| err(start, "exponent out of range"))?;
                    }
                    exp.0[v] = exp.0[v]
                        .checked_add(power)
                        .ok_or_else(|| err(start, "exponent overflow"))?;
                    saw_factor = true;
                } else {
                    break;
                }
            }
            if !saw_factor {
                return Err(err(i, "expected a term"));
            }
            terms.push((exp, coeff));
            sign = 1;
            expect_term = false;
            dangling_sign = false;
        }
        if dangling_sign {
            return Err(err(n, "dangling sign"));
        }
        Ok(Poly::from_terms(&self.field, terms))
    }
}
