//! Exact elements of `Q(q, v)`.
//!
//! A [`Scalar`] is `num / den` with `den = prod Phi_d(q)^{e_d} * rest`. All
//! denominators created by the algebra (quantum integers, `q^n - 1`, `q - q^-1`)
//! are products of cyclotomic polynomials, so `rest` is almost always `1` and
//! fractions can be reduced by trial division instead of a multivariate gcd.
//! Divisions by anything else land in `rest` and are only cancelled when `rest`
//! divides the numerator exactly.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};

use super::cyclotomic::{self, cyclotomic};
use super::laurent::{LaurentPoly, Mono};
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct Scalar {
    num: LaurentPoly,
    cyclo: BTreeMap<u32, u32>,
    /// Residual denominator factor: nonzero, positive leading coefficient, no monomial factor.
    rest: LaurentPoly,
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar {
            num: LaurentPoly::zero(),
            cyclo: BTreeMap::new(),
            rest: LaurentPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_poly(LaurentPoly::one())
    }

    pub fn from_int(c: i64) -> Self {
        Self::from_poly(LaurentPoly::constant(c))
    }

    pub fn from_poly(num: LaurentPoly) -> Self {
        Scalar {
            num,
            cyclo: BTreeMap::new(),
            rest: LaurentPoly::one(),
        }
    }

    /// `q^i`
    pub fn q_pow(i: i32) -> Self {
        Self::from_poly(LaurentPoly::q_pow(i))
    }

    /// `q^i v^j`
    pub fn qv_pow(i: i32, j: i32) -> Self {
        Self::from_poly(LaurentPoly::qv_pow(i, j))
    }

    /// The parameter varsigma.
    pub fn varsigma() -> Self {
        Self::qv_pow(0, 1)
    }

    /// `(q v)^c`, the factor that recurs in every closed formula.
    pub fn qv_power(c: u32) -> Self {
        Self::qv_pow(c as i32, c as i32)
    }

    /// `num / den` for polynomials; fails when `den` is zero.
    pub fn from_fraction(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        Self::from_poly(num).checked_div(&Self::from_poly(den))
    }

    /// `sign * q^shift * prod Phi_d^{e_d}` with signed exponents.
    pub(crate) fn from_cyclotomic(sign: i32, shift: Mono, exps: &BTreeMap<u32, i32>) -> Self {
        let mut up = BTreeMap::new();
        let mut down = BTreeMap::new();
        for (&d, &e) in exps {
            if e > 0 {
                up.insert(d, e as u32);
            } else if e < 0 {
                down.insert(d, (-e) as u32);
            }
        }
        let mut num = cyclotomic::expand(&up).shift(shift);
        if sign < 0 {
            num = -num;
        }
        Scalar {
            num,
            cyclo: down,
            rest: LaurentPoly::one(),
        }
    }

    /// `1 / [n]` for `n != 0`.
    pub fn recip_qint(n: i32) -> Result<Self> {
        if n == 0 {
            return Err(Error::DivisionByZero);
        }
        let (shift, ds) = cyclotomic::qint_factors(n.unsigned_abs());
        let exps = ds.into_iter().map(|d| (d, -1)).collect();
        Ok(Self::from_cyclotomic(n.signum(), Mono::new(-shift, 0), &exps))
    }

    /// `1 / [n]!` for `n >= 0`.
    pub fn recip_qfact(n: u32) -> Self {
        let mut exps: BTreeMap<u32, i32> = BTreeMap::new();
        let mut shift = 0;
        for i in 1..=n {
            let (s, ds) = cyclotomic::qint_factors(i);
            shift -= s;
            for d in ds {
                *exps.entry(d).or_default() -= 1;
            }
        }
        Self::from_cyclotomic(1, Mono::new(shift, 0), &exps)
    }

    /// `1 / (q^m - 1)` for `m >= 1`.
    pub fn recip_q_power_minus_one(m: u32) -> Self {
        let exps = cyclotomic::q_power_minus_one_factors(m)
            .into_iter()
            .map(|d| (d, -1))
            .collect();
        Self::from_cyclotomic(1, Mono::ONE, &exps)
    }

    pub fn numer(&self) -> &LaurentPoly {
        &self.num
    }

    /// The denominator, expanded.
    pub fn denom(&self) -> LaurentPoly {
        if self.cyclo.is_empty() {
            return self.rest.clone();
        }
        &cyclotomic::expand(&self.cyclo) * &self.rest
    }

    fn den_is_one(&self) -> bool {
        self.cyclo.is_empty() && self.rest.is_one()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.den_is_one() && self.num.is_one()
    }

    pub fn is_varsigma_free(&self) -> bool {
        self.num.is_varsigma_free() && self.rest.is_varsigma_free()
    }

    /// Exact equality by cross-multiplication: `a.num * b.den == b.num * a.den`.
    pub fn sc_eq(&self, other: &Scalar) -> bool {
        &self.num * &other.denom() == &other.num * &self.denom()
    }

    /// Multiplies by the unit `c * q^i v^j`.
    pub fn mul_monomial(&self, m: Mono) -> Self {
        Scalar {
            num: self.num.shift(m),
            cyclo: self.cyclo.clone(),
            rest: self.rest.clone(),
        }
    }

    pub fn mul_q_pow(&self, i: i32) -> Self {
        self.mul_monomial(Mono::new(i, 0))
    }

    pub fn mul_int(&self, c: i64) -> Self {
        if c == 0 {
            return Self::zero();
        }
        normalize(self.num.scale(&BigInt::from(c)), self.cyclo.clone(), self.rest.clone())
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let new_num = self.denom();
        // split the old numerator into a unit, cyclotomic factors and a residual
        let lo = self.num.min_exponents();
        let body = self.num.shift(-lo);
        let (factors, rest) = cyclotomic::extract(&body);
        Ok(normalize(new_num.shift(-lo), factors, rest))
    }

    pub fn checked_div(&self, other: &Scalar) -> Result<Self> {
        Ok(self * &other.inv()?)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Scalar::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// The substitution `v -> q^-1`.
    pub fn specialize_varsigma(&self) -> Result<Self> {
        if self.is_varsigma_free() {
            return Ok(self.clone());
        }
        let rest = self.rest.specialize_varsigma();
        if rest.is_zero() {
            return Err(Error::DenominatorVanishes);
        }
        Ok(normalize(self.num.specialize_varsigma(), self.cyclo.clone(), rest))
    }

    /// The bar involution `q -> q^-1`, defined on `v`-free scalars only.
    pub fn bar(&self) -> Result<Self> {
        if !self.is_varsigma_free() {
            return Err(Error::RequiresSpecialized);
        }
        // bar(1 / Phi_d) = (bar(Phi_d) / Phi_d)^{-1} / Phi_d
        let mut num = self.num.bar();
        for (&d, &e) in &self.cyclo {
            let (sign, m) = cyclotomic::bar_ratio(d);
            num = num.shift(-Mono::new(m.q * e as i32, 0));
            if sign < 0 && e % 2 == 1 {
                num = -num;
            }
        }
        let rest = self.rest.bar();
        Ok(normalize(num, self.cyclo.clone(), rest))
    }

    /// The value as a Laurent polynomial, or `NotIntegral` if the denominator does not divide.
    pub fn to_laurent(&self) -> Result<LaurentPoly> {
        if self.den_is_one() {
            return Ok(self.num.clone());
        }
        self.num
            .div_exact(&self.denom())
            .ok_or_else(|| Error::NotIntegral(self.to_string()))
    }

    /// Sums many scalars, adding numerators over a shared denominator first.
    pub fn sum(items: impl IntoIterator<Item = Scalar>) -> Scalar {
        let mut groups: Vec<Scalar> = Vec::new();
        for x in items {
            if x.is_zero() {
                continue;
            }
            match groups.iter_mut().find(|g| g.cyclo == x.cyclo && g.rest == x.rest) {
                Some(g) => g.num += &x.num,
                None => groups.push(x),
            }
        }
        let mut acc = Scalar::zero();
        for g in groups {
            let g = if g.den_is_one() {
                g
            } else {
                normalize(g.num, g.cyclo, g.rest)
            };
            acc = acc.add_impl(&g, false);
        }
        acc
    }

    fn add_impl(&self, other: &Scalar, negate: bool) -> Scalar {
        let rhs_num = if negate { -&other.num } else { other.num.clone() };
        if other.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return Scalar {
                num: rhs_num,
                cyclo: other.cyclo.clone(),
                rest: other.rest.clone(),
            };
        }
        if self.cyclo == other.cyclo && self.rest == other.rest {
            let num = &self.num + &rhs_num;
            if self.den_is_one() {
                return Scalar::from_poly(num);
            }
            return normalize(num, self.cyclo.clone(), self.rest.clone());
        }
        // lcm of the cyclotomic parts
        let mut lcm = self.cyclo.clone();
        for (&d, &e) in &other.cyclo {
            let slot = lcm.entry(d).or_insert(0);
            *slot = (*slot).max(e);
        }
        let lift = |own: &BTreeMap<u32, u32>| {
            let mut missing = BTreeMap::new();
            for (&d, &e) in &lcm {
                let have = own.get(&d).copied().unwrap_or(0);
                if e > have {
                    missing.insert(d, e - have);
                }
            }
            cyclotomic::expand(&missing)
        };
        let mut a = &self.num * &lift(&self.cyclo);
        let mut b = &rhs_num * &lift(&other.cyclo);
        let rest = if self.rest == other.rest {
            self.rest.clone()
        } else {
            a = &a * &other.rest;
            b = &b * &self.rest;
            &self.rest * &other.rest
        };
        normalize(&a + &b, lcm, rest)
    }

    fn mul_impl(&self, other: &Scalar) -> Scalar {
        if self.is_zero() || other.is_zero() {
            return Scalar::zero();
        }
        if self.den_is_one() && other.den_is_one() {
            return Scalar::from_poly(&self.num * &other.num);
        }
        if self.rest.is_one() && other.rest.is_one() {
            // both sides are reduced, so only cross cancellation can happen
            let (an, bden) = cancel(&self.num, &other.cyclo);
            let (bn, aden) = cancel(&other.num, &self.cyclo);
            let mut cyclo = aden;
            for (d, e) in bden {
                *cyclo.entry(d).or_insert(0) += e;
            }
            return Scalar {
                num: &an * &bn,
                cyclo,
                rest: LaurentPoly::one(),
            };
        }
        let mut cyclo = self.cyclo.clone();
        for (&d, &e) in &other.cyclo {
            *cyclo.entry(d).or_insert(0) += e;
        }
        normalize(&self.num * &other.num, cyclo, &self.rest * &other.rest)
    }
}

/// Divides `num` by as many of the cyclotomic factors in `den` as possible.
fn cancel(num: &LaurentPoly, den: &BTreeMap<u32, u32>) -> (LaurentPoly, BTreeMap<u32, u32>) {
    let mut num = num.clone();
    let mut left = BTreeMap::new();
    for (&d, &e) in den {
        let phi = cyclotomic(d);
        let mut e = e;
        while e > 0 {
            match num.div_exact(&phi) {
                Some(quo) => {
                    num = quo;
                    e -= 1;
                }
                None => break,
            }
        }
        if e > 0 {
            left.insert(d, e);
        }
    }
    (num, left)
}

fn normalize(mut num: LaurentPoly, cyclo: BTreeMap<u32, u32>, mut rest: LaurentPoly) -> Scalar {
    debug_assert!(!rest.is_zero());
    if num.is_zero() {
        return Scalar::zero();
    }
    let mut cyclo = cyclo;
    if !rest.is_one() {
        let lo = rest.min_exponents();
        if lo != Mono::ONE {
            rest = rest.shift(-lo);
            num = num.shift(-lo);
        }
        if !rest.is_constant() {
            let (factors, residual) = cyclotomic::extract(&rest);
            for (d, e) in factors {
                *cyclo.entry(d).or_insert(0) += e;
            }
            rest = residual;
        }
    }
    let (mut num, cyclo) = cancel(&num, &cyclo);
    if !rest.is_constant() {
        if let Some(quo) = num.div_exact(&rest) {
            num = quo;
            rest = LaurentPoly::one();
        }
    }
    if !rest.is_one() {
        let g = num.content().gcd(&rest.content());
        if !g.is_one() {
            num = num.div_scalar_exact(&g).unwrap();
            rest = rest.div_scalar_exact(&g).unwrap();
        }
        if rest.leading().map(|(_, c)| c.is_negative()).unwrap_or(false) {
            num = -num;
            rest = -rest;
        }
    }
    Scalar { num, cyclo, rest }
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Scalar) -> bool {
        if self.cyclo == other.cyclo && self.rest == other.rest {
            return self.num == other.num;
        }
        self.sc_eq(other)
    }
}

impl Eq for Scalar {}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl From<i64> for Scalar {
    fn from(c: i64) -> Self {
        Scalar::from_int(c)
    }
}

impl From<LaurentPoly> for Scalar {
    fn from(p: LaurentPoly) -> Self {
        Scalar::from_poly(p)
    }
}

macro_rules! forward_scalar_binop {
    ($trait:ident, $method:ident, $body:expr) => {
        impl $trait<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                let f: fn(&Scalar, &Scalar) -> Scalar = $body;
                f(self, rhs)
            }
        }
        impl $trait<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                (&self).$method(rhs)
            }
        }
        impl $trait<Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                self.$method(&rhs)
            }
        }
    };
}

forward_scalar_binop!(Add, add, |a, b| a.add_impl(b, false));
forward_scalar_binop!(Sub, sub, |a, b| a.add_impl(b, true));
forward_scalar_binop!(Mul, mul, |a, b| a.mul_impl(b));

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        *self = self.add_impl(rhs, false);
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        *self = self.add_impl(rhs, true);
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = self.mul_impl(rhs);
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            num: -&self.num,
            cyclo: self.cyclo.clone(),
            rest: self.rest.clone(),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            num: -self.num,
            cyclo: self.cyclo,
            rest: self.rest,
        }
    }
}

/// `(<num>)/(<den>)` with the denominator expanded, or `<num>` when it is `1`.
impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den_is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.denom())
        }
    }
}

impl FromStr for Scalar {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some(body) = s.strip_prefix('(') {
            if let Some((num, den)) = body.split_once(")/(") {
                let den = den
                    .strip_suffix(')')
                    .ok_or_else(|| Error::Parse(format!("unterminated denominator in `{s}`")))?;
                return Scalar::from_fraction(num.parse()?, den.parse()?)
                    .map_err(|_| Error::Parse(format!("zero denominator in `{s}`")));
            }
        }
        Ok(Scalar::from_poly(s.parse()?))
    }
}
