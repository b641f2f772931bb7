//! iota-divided powers `B^(n)` in the two parity families, as polynomials in
//! `B = F + v E K^-1` and as elements of `U_q(sl2)`.

mod comult;
mod mult;

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Sub};
use std::str::FromStr;
use std::sync::{Arc, OnceLock, RwLock};

use serde::{Deserialize, Serialize};

use crate::coeff::Scalar;
use crate::error::{nonneg, Error, Result};
use crate::pbw::UElement;
use crate::qcomb::qint;

pub use comult::{
    assemble_comult, comult_closed, comult_component, comult_direct, comult_fhy, comult_fhy_component,
    comult_fhy_with_sign, comult_recurrence_residual, ComultTerm, FhySign,
};
pub use mult::mult_closed;

/// The two families of iota-divided powers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Ev,
    Odd,
}

impl Parity {
    pub const ALL: [Parity; 2] = [Parity::Ev, Parity::Odd];

    /// Whether `B * B^(m)` picks up the extra `q v [m] B^(m-1)` term.
    pub fn carries(self, m: u32) -> bool {
        m > 0 && m.is_multiple_of(2) == (self == Parity::Ev)
    }

    /// The quantum integer in the `j`-th factor `B^2 - q v [root]^2` of the closed product for `B^(n)`.
    fn product_root(self, n: u32, j: i32) -> i32 {
        match self {
            Parity::Ev if n % 2 == 1 => 2 * j,
            Parity::Ev => 2 * j - 2,
            Parity::Odd => 2 * j - 1,
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Ev => "ev",
            Parity::Odd => "odd",
        })
    }
}

impl FromStr for Parity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "ev" | "even" => Ok(Parity::Ev),
            "odd" => Ok(Parity::Odd),
            _ => Err(Error::Parse(format!("unknown family `{s}`"))),
        }
    }
}

/// A polynomial in the single commuting generator `B`, dense in the degree.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BPolynomial {
    coeffs: Vec<Scalar>,
}

impl BPolynomial {
    pub fn zero() -> Self {
        BPolynomial::default()
    }

    pub fn one() -> Self {
        Self::constant(Scalar::one())
    }

    pub fn constant(c: Scalar) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `B`
    pub fn b() -> Self {
        Self::from_coeffs(vec![Scalar::zero(), Scalar::one()])
    }

    pub fn from_coeffs(mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(Scalar::is_zero) {
            coeffs.pop();
        }
        BPolynomial { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, j: usize) -> Scalar {
        self.coeffs.get(j).cloned().unwrap_or_default()
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn specialize_varsigma(&self) -> Result<Self> {
        Ok(Self::from_coeffs(
            self.coeffs
                .iter()
                .map(Scalar::specialize_varsigma)
                .collect::<Result<_>>()?,
        ))
    }

    fn zip(&self, other: &BPolynomial, f: impl Fn(&Scalar, &Scalar) -> Scalar) -> BPolynomial {
        let n = self.coeffs.len().max(other.coeffs.len());
        let zero = Scalar::zero();
        let get = |v: &'_ [Scalar], i: usize| -> Scalar { v.get(i).unwrap_or(&zero).clone() };
        Self::from_coeffs(
            (0..n)
                .map(|i| f(&get(&self.coeffs, i), &get(&other.coeffs, i)))
                .collect(),
        )
    }
}

impl Add<&BPolynomial> for &BPolynomial {
    type Output = BPolynomial;
    fn add(self, rhs: &BPolynomial) -> BPolynomial {
        self.zip(rhs, |a, b| a + b)
    }
}

impl Sub<&BPolynomial> for &BPolynomial {
    type Output = BPolynomial;
    fn sub(self, rhs: &BPolynomial) -> BPolynomial {
        self.zip(rhs, |a, b| a - b)
    }
}

impl Mul<&BPolynomial> for &BPolynomial {
    type Output = BPolynomial;
    fn mul(self, rhs: &BPolynomial) -> BPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return BPolynomial::zero();
        }
        let mut out = vec![Vec::new(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j].push(a * b);
            }
        }
        BPolynomial::from_coeffs(out.into_iter().map(Scalar::sum).collect())
    }
}

/// Ascending degree, each term `(<coefficient>)*B^j`; unit coefficients are omitted.
impl fmt::Display for BPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            let var = match j {
                0 => String::new(),
                1 => "B".to_string(),
                _ => format!("B^{j}"),
            };
            match (c.is_one(), j) {
                (true, 0) => f.write_str("1")?,
                (true, _) => f.write_str(&var)?,
                (false, 0) => write!(f, "({c})")?,
                (false, _) => write!(f, "({c})*{var}")?,
            }
        }
        Ok(())
    }
}

type ClosedCache = RwLock<HashMap<(Parity, u32), Arc<BPolynomial>>>;

fn closed_cache() -> &'static ClosedCache {
    static CACHE: OnceLock<ClosedCache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// The closed product formula for `B^(n)` in family `p`.
pub fn idp_closed(p: Parity, n: i32) -> Result<BPolynomial> {
    let n = nonneg(n)?;
    Ok((*closed_arc(p, n)).clone())
}

pub(crate) fn closed_arc(p: Parity, n: u32) -> Arc<BPolynomial> {
    if let Some(hit) = closed_cache().read().unwrap().get(&(p, n)) {
        return hit.clone();
    }
    let k = (n / 2) as i32;
    let mut acc = if n % 2 == 1 {
        BPolynomial::b()
    } else {
        BPolynomial::one()
    };
    let b2 = &BPolynomial::b() * &BPolynomial::b();
    for j in 1..=k {
        let root = qint(p.product_root(n, j));
        let c = -&Scalar::from_poly(&(&root * &root) * &crate::coeff::LaurentPoly::qv_pow(1, 1));
        acc = &acc * &(&b2 + &BPolynomial::constant(c));
    }
    let value = Arc::new(acc.scale(&Scalar::recip_qfact(n)));
    closed_cache().write().unwrap().insert((p, n), value.clone());
    value
}

/// `B^(n)` from the two-term recursion `B B^(m) = [m+1] B^(m+1) + (q v [m] B^(m-1) when p carries at m)`.
pub fn idp_recursive(p: Parity, n: i32) -> Result<BPolynomial> {
    let n = nonneg(n)?;
    let mut prev = BPolynomial::zero();
    let mut cur = BPolynomial::one();
    for m in 0..n {
        let mut next = &BPolynomial::b() * &cur;
        if p.carries(m) {
            let c = Scalar::from_poly(&qint(m as i32) * &crate::coeff::LaurentPoly::qv_pow(1, 1));
            next = &next - &prev.scale(&c);
        }
        let next = next.scale(&Scalar::recip_qint(m as i32 + 1).expect("m + 1 > 0"));
        prev = std::mem::replace(&mut cur, next);
    }
    Ok(cur)
}

/// Coordinates of `x` in the basis `{B^(j)}` of family `p`, zero coordinates omitted.
pub fn basis_expand(x: &BPolynomial, p: Parity) -> BTreeMap<u32, Scalar> {
    expand_in(x, |d| closed_arc(p, d))
}

/// Coordinates of a varsigma-free `x` in the basis `{B^(j)}` specialized at `v = q^-1`.
pub fn basis_expand_specialized(x: &BPolynomial, p: Parity) -> Result<BTreeMap<u32, Scalar>> {
    if !x.coeffs().iter().all(Scalar::is_varsigma_free) {
        return Err(Error::RequiresSpecialized);
    }
    let mut basis = Vec::new();
    for d in 0..x.coeffs().len() as u32 {
        basis.push(Arc::new(closed_arc(p, d).specialize_varsigma()?));
    }
    Ok(expand_in(x, |d| basis[d as usize].clone()))
}

fn expand_in(x: &BPolynomial, basis: impl Fn(u32) -> Arc<BPolynomial>) -> BTreeMap<u32, Scalar> {
    let mut rest = x.clone();
    let mut out = BTreeMap::new();
    while let Some(d) = rest.degree() {
        // B^(d) has leading coefficient 1/[d]!
        let c = &rest.coeff(d) * &Scalar::from_poly(crate::qcomb::qfact_u(d as u32));
        rest = &rest - &basis(d as u32).scale(&c);
        debug_assert!(rest.degree().is_none_or(|e| e < d));
        out.insert(d as u32, c);
    }
    out
}

type PbwCache = RwLock<HashMap<(Parity, u32), Arc<UElement>>>;

fn pbw_cache() -> &'static PbwCache {
    static CACHE: OnceLock<PbwCache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Substitutes `B = F + v E K^-1` and normalizes.
pub fn idp_to_pbw(x: &BPolynomial) -> UElement {
    let b = UElement::b();
    let mut acc = UElement::zero();
    for c in x.coeffs().iter().rev() {
        acc = &(&acc * &b) + &UElement::scalar(c.clone());
    }
    acc
}

/// The PBW image of `B^(n)` in family `p`, cached.
pub fn idp_pbw(p: Parity, n: u32) -> Arc<UElement> {
    if let Some(hit) = pbw_cache().read().unwrap().get(&(p, n)) {
        return hit.clone();
    }
    let value = Arc::new(idp_to_pbw(&closed_arc(p, n)));
    pbw_cache().write().unwrap().insert((p, n), value.clone());
    value
}
