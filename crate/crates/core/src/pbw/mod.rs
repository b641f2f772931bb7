//! `U_q(sl2)` in the PBW basis `E^a K^b F^c`.
//!
//! Relations: `KE = q^2 EK`, `KF = q^-2 FK`, `EF - FE = (K - K^-1)/(q - q^-1)`.

mod cartan;
mod normal;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::coeff::Scalar;
use crate::error::{nonneg, Result};

pub use cartan::{cartan_identity_residual, h, h_binom};

/// The monomial `E^e K^k F^f`. The derived order is lexicographic in `(e, k, f)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PbwMonomial {
    pub e: u32,
    pub k: i32,
    pub f: u32,
}

impl PbwMonomial {
    pub const ONE: PbwMonomial = PbwMonomial { e: 0, k: 0, f: 0 };

    pub const fn new(e: u32, k: i32, f: u32) -> Self {
        PbwMonomial { e, k, f }
    }
}

impl fmt::Display for PbwMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if *self == PbwMonomial::ONE {
            return f.write_str("1");
        }
        let mut parts = Vec::with_capacity(3);
        for (name, exp) in [("E", self.e as i32), ("K", self.k), ("F", self.f as i32)] {
            match exp {
                0 => {}
                1 => parts.push(name.to_string()),
                _ => parts.push(format!("{name}^{exp}")),
            }
        }
        f.write_str(&parts.join("*"))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Generator {
    E,
    F,
    K,
    Kinv,
}

/// Generators that have divided powers.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DividedGen {
    E,
    F,
    /// `v E K^-1`
    Echeck,
}

/// An element of `U_q(sl2)` as a finite sum of PBW monomials with nonzero coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct UElement {
    terms: BTreeMap<PbwMonomial, Scalar>,
}

impl UElement {
    pub fn zero() -> Self {
        UElement::default()
    }

    pub fn one() -> Self {
        Self::scalar(Scalar::one())
    }

    pub fn scalar(c: Scalar) -> Self {
        Self::monomial(PbwMonomial::ONE, c)
    }

    pub fn monomial(m: PbwMonomial, c: Scalar) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        UElement { terms }
    }

    pub fn unit_monomial(e: u32, k: i32, f: u32) -> Self {
        Self::monomial(PbwMonomial::new(e, k, f), Scalar::one())
    }

    pub fn gen(g: Generator) -> Self {
        match g {
            Generator::E => Self::unit_monomial(1, 0, 0),
            Generator::F => Self::unit_monomial(0, 0, 1),
            Generator::K => Self::unit_monomial(0, 1, 0),
            Generator::Kinv => Self::unit_monomial(0, -1, 0),
        }
    }

    /// `K^k`
    pub fn k_pow(k: i32) -> Self {
        Self::unit_monomial(0, k, 0)
    }

    /// `E-check = v E K^-1`
    pub fn echeck() -> Self {
        Self::monomial(PbwMonomial::new(1, -1, 0), Scalar::varsigma())
    }

    /// `B = F + v E K^-1`
    pub fn b() -> Self {
        &Self::gen(Generator::F) + &Self::echeck()
    }

    pub(crate) fn from_terms(terms: impl IntoIterator<Item = (PbwMonomial, Scalar)>) -> Self {
        let mut acc = Accumulator::default();
        for (m, c) in terms {
            acc.push(m, c);
        }
        acc.finish()
    }

    pub fn terms(&self) -> impl ExactSizeIterator<Item = (&PbwMonomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: PbwMonomial) -> Scalar {
        self.terms.get(&m).cloned().unwrap_or_default()
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        UElement {
            terms: self.terms.iter().map(|(m, x)| (*m, x * c)).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// `g^n / [n]!`
    pub fn divided_power(g: DividedGen, n: i32) -> Result<Self> {
        let n = nonneg(n)?;
        let inv = Scalar::recip_qfact(n);
        Ok(match g {
            DividedGen::E => Self::monomial(PbwMonomial::new(n, 0, 0), inv),
            DividedGen::F => Self::monomial(PbwMonomial::new(0, 0, n), inv),
            DividedGen::Echeck => Self::echeck().pow(n).scale(&inv),
        })
    }

    pub fn is_varsigma_free(&self) -> bool {
        self.terms.values().all(Scalar::is_varsigma_free)
    }

    /// Substitutes `v -> q^-1` in every coefficient.
    pub fn specialize_varsigma(&self) -> Result<Self> {
        let mut acc = Accumulator::default();
        for (m, c) in &self.terms {
            acc.push(*m, c.specialize_varsigma()?);
        }
        Ok(acc.finish())
    }

    /// The anti-involution fixing `E`, `F`, `K` and sending `q -> q^-1`.
    pub fn chi(&self) -> Result<Self> {
        let mut acc = Accumulator::default();
        for (m, c) in &self.terms {
            // F^f K^k E^e = q^{2ke} F^f E^e K^k, and F^z K^k = q^{2zk} K^k F^z
            let c = c.bar()?.mul_q_pow(2 * m.k * m.e as i32);
            for (n, d) in normal::fe_normal(m.f, m.e).iter() {
                let shift = 2 * n.f as i32 * m.k;
                acc.push(PbwMonomial::new(n.e, n.k + m.k, n.f), (d * &c).mul_q_pow(shift));
            }
        }
        Ok(acc.finish())
    }

    /// The linear map `E^a K^b F^c -> q^{m b} E^a F^c`.
    pub fn weight_eval(&self, m: i32) -> Self {
        Self::from_terms(
            self.terms
                .iter()
                .map(|(mono, c)| (PbwMonomial::new(mono.e, 0, mono.f), c.mul_q_pow(m * mono.k))),
        )
    }

    /// Maps every coefficient, dropping zeros.
    pub fn map_coeffs(&self, mut f: impl FnMut(&Scalar) -> Scalar) -> Self {
        Self::from_terms(self.terms.iter().map(|(m, c)| (*m, f(c))))
    }

    fn mul_impl(&self, other: &UElement) -> UElement {
        let mut acc = Accumulator::default();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let c = c1 * c2;
                monomial_product(*m1, *m2, |m, d| acc.push(m, &c * d));
            }
        }
        acc.finish()
    }
}

/// Calls `emit` for each term of the normal form of `m1 * m2`.
pub(crate) fn monomial_product(m1: PbwMonomial, m2: PbwMonomial, mut emit: impl FnMut(PbwMonomial, &Scalar)) {
    if m1.f == 0 || m2.e == 0 {
        // only K moves: K^k E^e = q^{2ke} E^e K^k and F^f K^k = q^{2fk} K^k F^f
        let shift = 2 * (m1.k * m2.e as i32 + m1.f as i32 * m2.k);
        emit(
            PbwMonomial::new(m1.e + m2.e, m1.k + m2.k, m1.f + m2.f),
            &Scalar::q_pow(shift),
        );
        return;
    }
    for (n, d) in normal::fe_normal(m1.f, m2.e).iter() {
        // E^{e1} K^{k1} (E^x K^y F^z) K^{k2} F^{f2}
        let shift = 2 * (m1.k * n.e as i32 + n.f as i32 * m2.k);
        let mono = PbwMonomial::new(m1.e + n.e, m1.k + n.k + m2.k, n.f + m2.f);
        emit(mono, &d.mul_q_pow(shift));
    }
}

/// Collects terms per monomial and sums each group once.
#[derive(Default)]
pub(crate) struct Accumulator {
    groups: BTreeMap<PbwMonomial, Vec<Scalar>>,
}

impl Accumulator {
    pub(crate) fn push(&mut self, m: PbwMonomial, c: Scalar) {
        if !c.is_zero() {
            self.groups.entry(m).or_default().push(c);
        }
    }

    pub(crate) fn finish(self) -> UElement {
        let mut terms = BTreeMap::new();
        for (m, cs) in self.groups {
            let s = Scalar::sum(cs);
            if !s.is_zero() {
                terms.insert(m, s);
            }
        }
        UElement { terms }
    }
}

impl Add<&UElement> for &UElement {
    type Output = UElement;
    fn add(self, rhs: &UElement) -> UElement {
        let mut terms = self.terms.clone();
        for (m, c) in &rhs.terms {
            let s = match terms.get(m) {
                Some(x) => x + c,
                None => c.clone(),
            };
            if s.is_zero() {
                terms.remove(m);
            } else {
                terms.insert(*m, s);
            }
        }
        UElement { terms }
    }
}

impl Sub<&UElement> for &UElement {
    type Output = UElement;
    fn sub(self, rhs: &UElement) -> UElement {
        self + &-rhs
    }
}

impl Neg for &UElement {
    type Output = UElement;
    fn neg(self) -> UElement {
        UElement {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl Mul<&UElement> for &UElement {
    type Output = UElement;
    fn mul(self, rhs: &UElement) -> UElement {
        self.mul_impl(rhs)
    }
}

macro_rules! owned_binops {
    ($($trait:ident $method:ident),*) => {$(
        impl $trait<UElement> for UElement {
            type Output = UElement;
            fn $method(self, rhs: UElement) -> UElement {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&UElement> for UElement {
            type Output = UElement;
            fn $method(self, rhs: &UElement) -> UElement {
                (&self).$method(rhs)
            }
        }
    )*};
}

owned_binops!(Add add, Sub sub, Mul mul);

impl Neg for UElement {
    type Output = UElement;
    fn neg(self) -> UElement {
        -&self
    }
}

/// Terms in monomial order, each `(<coefficient>)*E^a*K^b*F^c`.
///
/// A unit coefficient is omitted, so `E*K^-1` and `(q + q^-1)*F` are both valid;
/// a bare scalar prints as `(<coefficient>)` and the unit as `1`.
impl fmt::Display for UElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            if idx > 0 {
                f.write_str(" + ")?;
            }
            write_term(f, m, c)?;
        }
        Ok(())
    }
}

pub(crate) fn write_term(f: &mut fmt::Formatter<'_>, m: &PbwMonomial, c: &Scalar) -> fmt::Result {
    if c.is_one() {
        write!(f, "{m}")
    } else if *m == PbwMonomial::ONE {
        write!(f, "({c})")
    } else {
        write!(f, "({c})*{m}")
    }
}
