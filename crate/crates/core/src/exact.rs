//! Exact arithmetic substrate: rationals, sparse multivariate polynomials
//! over a fixed registry of named indeterminates, and their fraction field.
//!
//! Rational-function equality is decided by cross-multiplication; no
//! multivariate gcd is computed. A lightweight normalization (common
//! monomial factor, rational content, monic denominator) keeps
//! representatives small, which is enough because every expression in this
//! crate stays of low total degree.

use alloc::collections::BTreeMap;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{EngineError, Result};

/// Arbitrary-precision rational number, always stored reduced with a
/// positive denominator.
pub type Rat = num_rational::BigRational;

/// Convenience constructor for a rational `n/d`.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Convenience constructor for an integer rational.
pub fn int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// The fixed indeterminate registry.
///
/// `Pg`, `M1`, `M2`, `E`, `D` are the surface parameters (geometric genus,
/// the two odd multiplicities, the fiber-degree parameter with
/// `deg = 2e+1`, and the cover degree). `S2`, `Fs`, `Ks`, `Ss`, `Ds` are the
/// pairings of the probe 2-cycle against itself, the fiber, the primitive
/// vertical class, the section and the determinant class. `DeltaSq` is the
/// self-intersection of the determinant class, `DSig` its pairing with the
/// section upstairs. `C1`, `C2`, `D1`, `D2c` house the multiple-fiber
/// correction constants of the degree-2 and degree-4 invariants until they
/// are solved for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Var {
    Pg,
    M1,
    M2,
    E,
    D,
    S2,
    Fs,
    Ks,
    Ss,
    Ds,
    DeltaSq,
    DSig,
    C1,
    C2,
    D1,
    D2c,
}

pub const NVARS: usize = 16;

impl Var {
    pub const ALL: [Var; NVARS] = [
        Var::Pg,
        Var::M1,
        Var::M2,
        Var::E,
        Var::D,
        Var::S2,
        Var::Fs,
        Var::Ks,
        Var::Ss,
        Var::Ds,
        Var::DeltaSq,
        Var::DSig,
        Var::C1,
        Var::C2,
        Var::D1,
        Var::D2c,
    ];

    pub fn index(self) -> usize {
        Self::ALL.iter().position(|v| *v == self).unwrap()
    }

    pub fn name(self) -> &'static str {
        match self {
            Var::Pg => "pg",
            Var::M1 => "m1",
            Var::M2 => "m2",
            Var::E => "e",
            Var::D => "d",
            Var::S2 => "S2",
            Var::Fs => "fS",
            Var::Ks => "kS",
            Var::Ss => "sS",
            Var::Ds => "dS",
            Var::DeltaSq => "d2",
            Var::DSig => "dsig",
            Var::C1 => "c1",
            Var::C2 => "c2",
            Var::D1 => "d1",
            Var::D2c => "d2c",
        }
    }

    pub fn by_name(name: &str) -> Option<Var> {
        Var::ALL.iter().copied().find(|v| v.name() == name)
    }
}

/// Exponent vector over the registry. Exponents are bounded to 64 bits;
/// overflow is a hard error.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mono([u64; NVARS]);

impl Mono {
    pub const ONE: Mono = Mono([0; NVARS]);

    pub fn var(v: Var) -> Mono {
        let mut m = [0u64; NVARS];
        m[v.index()] = 1;
        Mono(m)
    }

    pub fn var_pow(v: Var, k: u64) -> Mono {
        let mut m = [0u64; NVARS];
        m[v.index()] = k;
        Mono(m)
    }

    pub fn exponent(&self, v: Var) -> u64 {
        self.0[v.index()]
    }

    pub fn total_degree(&self) -> u64 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    fn mul(&self, other: &Mono) -> Mono {
        let mut out = [0u64; NVARS];
        for i in 0..NVARS {
            out[i] = self.0[i]
                .checked_add(other.0[i])
                .expect("monomial exponent overflow");
        }
        Mono(out)
    }

    fn gcd(&self, other: &Mono) -> Mono {
        let mut out = [0u64; NVARS];
        for i in 0..NVARS {
            out[i] = self.0[i].min(other.0[i]);
        }
        Mono(out)
    }

    /// Exact division; caller guarantees divisibility.
    fn div(&self, other: &Mono) -> Mono {
        let mut out = [0u64; NVARS];
        for i in 0..NVARS {
            out[i] = self.0[i] - other.0[i];
        }
        Mono(out)
    }
}

/// Graded lexicographic order (total degree first, then the exponent vector).
impl Ord for Mono {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Mono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in Var::ALL {
            let e = self.exponent(v);
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{}", v.name())?;
            } else {
                write!(f, "{}^{}", v.name(), e)?;
            }
        }
        if first {
            write!(f, "1")?;
        }
        Ok(())
    }
}

/// Sparse multivariate polynomial with rational coefficients.
/// Invariant: no zero coefficient is stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    terms: BTreeMap<Mono, Rat>,
}

impl Poly {
    pub fn zero() -> Poly {
        Poly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Poly {
        Poly::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Poly {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Mono::ONE, c);
        }
        Poly { terms }
    }

    pub fn from_i64(n: i64) -> Poly {
        Poly::constant(int(n))
    }

    pub fn var(v: Var) -> Poly {
        let mut terms = BTreeMap::new();
        terms.insert(Mono::var(v), Rat::one());
        Poly { terms }
    }

    pub fn term(c: Rat, m: Mono) -> Poly {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Poly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&Mono::ONE)
                .map(|c| c.is_one())
                .unwrap_or(false)
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms.contains_key(&Mono::ONE))
    }

    pub fn as_constant(&self) -> Option<Rat> {
        if self.is_zero() {
            Some(Rat::zero())
        } else if self.is_constant() {
            self.terms.get(&Mono::ONE).cloned()
        } else {
            None
        }
    }

    pub fn total_degree(&self) -> u64 {
        self.terms.keys().map(Mono::total_degree).max().unwrap_or(0)
    }

    pub fn degree_in(&self, v: Var) -> u64 {
        self.terms.keys().map(|m| m.exponent(v)).max().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &Rat)> {
        self.terms.iter()
    }

    fn insert(&mut self, m: Mono, c: Rat) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            alloc::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().clone() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    /// Leading coefficient in graded lexicographic order.
    pub fn leading_coefficient(&self) -> Rat {
        self.terms
            .iter()
            .next_back()
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Rat::zero)
    }

    /// Componentwise-minimal monomial dividing every term.
    fn monomial_content(&self) -> Mono {
        let mut it = self.terms.keys();
        let first = match it.next() {
            Some(m) => m.clone(),
            None => return Mono::ONE,
        };
        it.fold(first, |acc, m| acc.gcd(m))
    }

    fn div_mono(&self, m: &Mono) -> Poly {
        let mut out = Poly::zero();
        for (k, c) in &self.terms {
            out.insert(k.div(m), c.clone());
        }
        out
    }

    fn scale(&self, c: &Rat) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        let mut out = Poly::zero();
        for (k, v) in &self.terms {
            out.insert(k.clone(), v * c);
        }
        out
    }

    pub fn pow(&self, n: u64) -> Poly {
        let mut acc = Poly::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Substitute rational values for some of the indeterminates.
    pub fn substitute(&self, bindings: &[(Var, Rat)]) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let mut coef = c.clone();
            let mut mono = m.clone();
            for (v, val) in bindings {
                let e = mono.exponent(*v);
                if e > 0 {
                    let mut p = Rat::one();
                    for _ in 0..e {
                        p *= val;
                    }
                    coef *= p;
                    mono.0[v.index()] = 0;
                }
            }
            out.insert(mono, coef);
        }
        out
    }

    /// Collect the coefficient of `v^k`, as a polynomial in the remaining
    /// indeterminates.
    pub fn coefficient_of(&self, v: Var, k: u64) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            if m.exponent(v) == k {
                let mut mono = m.clone();
                mono.0[v.index()] = 0;
                out.insert(mono, c.clone());
            }
        }
        out
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.insert(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.insert(m.clone(), -c.clone());
        }
        out
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.insert(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.scale(&-Rat::one())
    }
}

macro_rules! forward_owned_binop {
    ($t:ty, $trait:ident, $m:ident) => {
        impl $trait for $t {
            type Output = $t;
            fn $m(self, rhs: $t) -> $t {
                (&self).$m(&rhs)
            }
        }
        impl $trait<&$t> for $t {
            type Output = $t;
            fn $m(self, rhs: &$t) -> $t {
                (&self).$m(rhs)
            }
        }
        impl $trait<$t> for &$t {
            type Output = $t;
            fn $m(self, rhs: $t) -> $t {
                self.$m(&rhs)
            }
        }
    };
}

forward_owned_binop!(Poly, Add, add);
forward_owned_binop!(Poly, Sub, sub);
forward_owned_binop!(Poly, Mul, mul);

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        // Graded lexicographic, highest first.
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
                first = false;
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

/// Rational function: a quotient of two `Poly`. Equality is decided by
/// cross-multiplication, so representatives need not be fully reduced.
#[derive(Debug, Clone)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    pub fn new(num: Poly, den: Poly) -> RatFunc {
        assert!(!den.is_zero(), "zero denominator");
        let mut rf = RatFunc { num, den };
        rf.normalize();
        rf
    }

    pub fn zero() -> RatFunc {
        RatFunc {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    pub fn one() -> RatFunc {
        RatFunc {
            num: Poly::one(),
            den: Poly::one(),
        }
    }

    pub fn var(v: Var) -> RatFunc {
        RatFunc {
            num: Poly::var(v),
            den: Poly::one(),
        }
    }

    pub fn from_int(n: i64) -> RatFunc {
        RatFunc {
            num: Poly::from_i64(n),
            den: Poly::one(),
        }
    }

    pub fn from_rat(c: Rat) -> RatFunc {
        RatFunc {
            num: Poly::constant(c),
            den: Poly::one(),
        }
    }

    pub fn from_ratio(n: i64, d: i64) -> RatFunc {
        RatFunc::from_rat(rat(n, d))
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num == self.den
    }

    /// Strip common monomial and rational content and make the denominator's
    /// graded-lex leading coefficient 1.
    fn normalize(&mut self) {
        if self.num.is_zero() {
            self.den = Poly::one();
            return;
        }
        let g = self.num.monomial_content().gcd(&self.den.monomial_content());
        if !g.is_one() {
            self.num = self.num.div_mono(&g);
            self.den = self.den.div_mono(&g);
        }
        let lead = self.den.leading_coefficient();
        if !lead.is_one() {
            let inv = Rat::one() / lead;
            self.num = self.num.scale(&inv);
            self.den = self.den.scale(&inv);
        }
    }

    pub fn checked_div(&self, rhs: &RatFunc) -> Result<RatFunc> {
        if rhs.is_zero() {
            return Err(EngineError::DivisionByZero);
        }
        Ok(RatFunc::new(&self.num * &rhs.den, &self.den * &rhs.num))
    }

    pub fn inv(&self) -> Result<RatFunc> {
        RatFunc::one().checked_div(self)
    }

    /// Integer power; negative exponents require a nonzero function.
    pub fn pow(&self, n: i64) -> Result<RatFunc> {
        let base = if n < 0 { self.inv()? } else { self.clone() };
        Ok(RatFunc::new(
            base.num.pow(n.unsigned_abs()),
            base.den.pow(n.unsigned_abs()),
        ))
    }

    /// Substitute rational values for some indeterminates. Fails if the
    /// denominator vanishes under the binding.
    pub fn substitute(&self, bindings: &[(Var, Rat)]) -> Result<RatFunc> {
        let den = self.den.substitute(bindings);
        if den.is_zero() {
            return Err(EngineError::DenominatorVanishes);
        }
        Ok(RatFunc::new(self.num.substitute(bindings), den))
    }

    /// Substitute whole rational functions for some indeterminates (a ring
    /// homomorphism on the subfield where no denominator vanishes).
    pub fn substitute_fn(&self, bindings: &[(Var, RatFunc)]) -> Result<RatFunc> {
        let num = subst_poly(&self.num, bindings)?;
        let den = subst_poly(&self.den, bindings)?;
        if den.is_zero() {
            return Err(EngineError::DenominatorVanishes);
        }
        num.checked_div(&den)
    }

    /// Exact rational value, if the function is constant.
    pub fn as_constant(&self) -> Option<Rat> {
        let n = self.num.as_constant()?;
        let d = self.den.as_constant()?;
        if d.is_zero() {
            None
        } else {
            Some(n / d)
        }
    }

    /// Coefficient of `v^k` when the function is polynomial in `v`
    /// (the denominator must not involve `v`).
    pub fn coefficient_of(&self, v: Var, k: u64) -> Result<RatFunc> {
        if self.den.degree_in(v) != 0 {
            return Err(EngineError::NonConstantDenominator(v.name()));
        }
        Ok(RatFunc::new(self.num.coefficient_of(v, k), self.den.clone()))
    }

    pub fn degree_in(&self, v: Var) -> u64 {
        self.num.degree_in(v)
    }
}

fn subst_poly(p: &Poly, bindings: &[(Var, RatFunc)]) -> Result<RatFunc> {
    let mut acc = RatFunc::zero();
    for (m, c) in p.terms() {
        let mut term = RatFunc::from_rat(c.clone());
        let mut residual = Mono::ONE;
        for v in Var::ALL {
            let e = m.exponent(v);
            if e == 0 {
                continue;
            }
            if let Some((_, img)) = bindings.iter().find(|(bv, _)| *bv == v) {
                term = &term * &img.pow(e as i64)?;
            } else {
                residual = residual.mul(&Mono::var_pow(v, e));
            }
        }
        term = &term * &RatFunc::new(Poly::term(Rat::one(), residual), Poly::one());
        acc = &acc + &term;
    }
    Ok(acc)
}

impl PartialEq for RatFunc {
    /// Cross-multiplication: `a/b = c/d` iff `a·d = c·b`.
    fn eq(&self, other: &Self) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }
}

impl Eq for RatFunc {}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        RatFunc::new(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        RatFunc::new(
            &(&self.num * &rhs.den) - &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        RatFunc::new(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

/// Panics on a zero divisor; use `checked_div` where the divisor is data.
impl Div for &RatFunc {
    type Output = RatFunc;
    fn div(self, rhs: &RatFunc) -> RatFunc {
        self.checked_div(rhs)
            .expect("division by the zero rational function")
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc::new(-&self.num, self.den.clone())
    }
}

forward_owned_binop!(RatFunc, Add, add);
forward_owned_binop!(RatFunc, Sub, sub);
forward_owned_binop!(RatFunc, Mul, mul);
forward_owned_binop!(RatFunc, Div, div);

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -&self
    }
}

impl AddAssign<&RatFunc> for RatFunc {
    fn add_assign(&mut self, rhs: &RatFunc) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&RatFunc> for RatFunc {
    fn sub_assign(&mut self, rhs: &RatFunc) {
        *self = &*self - rhs;
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else if let Some(c) = self.as_constant() {
            write!(f, "{c}")
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

/// Shorthand used throughout the crate.
pub fn v(var: Var) -> RatFunc {
    RatFunc::var(var)
}

/// Shorthand for an integer constant.
pub fn rf(n: i64) -> RatFunc {
    RatFunc::from_int(n)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_arithmetic() {
        let a = RatFunc::from_ratio(1, 2);
        let b = RatFunc::from_ratio(1, 3);
        assert_eq!(&a + &b, RatFunc::from_ratio(5, 6));
    }

    #[test]
    fn field_inverse_of_variable() {
        let x = v(Var::M1);
        let prod = &x * &x.inv().unwrap();
        assert_eq!(prod, RatFunc::one());
    }

    #[test]
    fn cross_multiplication_recognizes_cancellation() {
        // (m1^2 - 1)/(m1 - 1) = m1 + 1 without any gcd computation.
        let m1 = v(Var::M1);
        let lhs = (&(&m1 * &m1) - &rf(1)).checked_div(&(&m1 - &rf(1))).unwrap();
        let rhs = &m1 + &rf(1);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn zero_representatives_equal() {
        let z1 = RatFunc::zero();
        let z2 = RatFunc::new(Poly::zero(), &Poly::var(Var::M1) + &Poly::one());
        assert_eq!(z1, z2);
    }

    #[test]
    fn unequal_polynomials() {
        let a = &v(Var::Pg) - &rf(1);
        let b = &v(Var::Pg) + &rf(1);
        assert_ne!(a, b);
    }

    #[test]
    fn substitute_is_evaluation() {
        let expr = &v(Var::Pg) + &rf(1);
        let out = expr.substitute(&[(Var::Pg, int(3))]).unwrap();
        assert_eq!(out, rf(4));
    }

    #[test]
    fn partial_substitution_keeps_other_vars() {
        let expr = &(&v(Var::M1) * &v(Var::M2)) * &v(Var::Ks);
        let out = expr
            .substitute(&[(Var::M1, int(3)), (Var::M2, int(5))])
            .unwrap();
        assert_eq!(out, &rf(15) * &v(Var::Ks));
    }

    #[test]
    fn degree_four_correction_value_at_three() {
        // 2/m^4 - 8/m + 6 at m=3 equals 272/81.
        let m = v(Var::M1);
        let expr = &(&rf(2) / &m.pow(4).unwrap() - &(&rf(8) / &m)) + &rf(6);
        let val = expr.substitute(&[(Var::M1, int(3))]).unwrap();
        assert_eq!(val, RatFunc::from_rat(rat(272, 81)));
        assert_eq!(val, RatFunc::from_rat(rat(2 + 270, 81)));
    }

    #[test]
    fn denominator_vanishing_is_an_error() {
        let expr = rf(1) / (&v(Var::M1) - &rf(1));
        assert_eq!(
            expr.substitute(&[(Var::M1, int(1))]),
            Err(EngineError::DenominatorVanishes)
        );
    }

    #[test]
    fn division_by_zero_function_is_an_error() {
        assert_eq!(
            rf(1).checked_div(&RatFunc::zero()),
            Err(EngineError::DivisionByZero)
        );
    }

    #[test]
    fn substitute_fn_replaces_by_expression() {
        // fS -> m1*m2*kS turns fS^2 into m1^2*m2^2*kS^2.
        let expr = v(Var::Fs).pow(2).unwrap();
        let image = &(&v(Var::M1) * &v(Var::M2)) * &v(Var::Ks);
        let out = expr.substitute_fn(&[(Var::Fs, image.clone())]).unwrap();
        assert_eq!(out, image.pow(2).unwrap());
    }

    #[test]
    fn coefficient_extraction() {
        let p = &(&v(Var::S2) * &v(Var::Ks).pow(2).unwrap()) + &(&rf(3) * &v(Var::Ks).pow(4).unwrap());
        assert_eq!(p.coefficient_of(Var::Ks, 4).unwrap(), rf(3));
        assert_eq!(p.coefficient_of(Var::Ks, 2).unwrap(), v(Var::S2));
        assert_eq!(p.coefficient_of(Var::Ks, 3).unwrap(), RatFunc::zero());
    }

    #[test]
    fn display_is_graded_lex_descending() {
        let p = &(&v(Var::S2) + &rf(2)) * &v(Var::Ks);
        assert_eq!(alloc::format!("{p}"), "S2*kS + 2*kS");
    }
}
