//! Sparse bivariate Laurent polynomials over the integers.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

/// The monomial `q^q * v^v`. Ordered lexicographically by `(q, v)`.
#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mono {
    pub q: i32,
    pub v: i32,
}

impl Mono {
    pub const ONE: Mono = Mono { q: 0, v: 0 };

    pub const fn new(q: i32, v: i32) -> Self {
        Mono { q, v }
    }
}

impl Add for Mono {
    type Output = Mono;
    fn add(self, rhs: Mono) -> Mono {
        Mono::new(self.q + rhs.q, self.v + rhs.v)
    }
}

impl Sub for Mono {
    type Output = Mono;
    fn sub(self, rhs: Mono) -> Mono {
        Mono::new(self.q - rhs.q, self.v - rhs.v)
    }
}

impl Neg for Mono {
    type Output = Mono;
    fn neg(self) -> Mono {
        Mono::new(-self.q, -self.v)
    }
}

/// A Laurent polynomial in `q` and `v` with arbitrary-precision integer coefficients.
///
/// Terms are kept sorted by [`Mono`] with no zero coefficients, so structural
/// equality is mathematical equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: Vec<(Mono, BigInt)>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        Self::monomial(BigInt::from(c), Mono::ONE)
    }

    pub fn monomial(c: BigInt, m: Mono) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            LaurentPoly { terms: vec![(m, c)] }
        }
    }

    /// `q^i`
    pub fn q_pow(i: i32) -> Self {
        Self::monomial(BigInt::one(), Mono::new(i, 0))
    }

    /// `q^i v^j`
    pub fn qv_pow(i: i32, j: i32) -> Self {
        Self::monomial(BigInt::one(), Mono::new(i, j))
    }

    /// Builds a polynomial from arbitrary (possibly repeated, possibly zero) terms.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (Mono, BigInt)>,
    {
        let mut acc: BTreeMap<Mono, BigInt> = BTreeMap::new();
        for (m, c) in terms {
            *acc.entry(m).or_default() += c;
        }
        Self::from_sorted_unchecked(acc.into_iter().filter(|(_, c)| !c.is_zero()).collect())
    }

    /// Univariate polynomial in `q` from `(exponent, coefficient)` pairs.
    pub fn from_q_coeffs<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i32, i64)>,
    {
        Self::from_terms(terms.into_iter().map(|(e, c)| (Mono::new(e, 0), BigInt::from(c))))
    }

    fn from_sorted_unchecked(terms: Vec<(Mono, BigInt)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0].0 < w[1].0));
        debug_assert!(terms.iter().all(|(_, c)| !c.is_zero()));
        LaurentPoly { terms }
    }

    pub fn terms(&self) -> &[(Mono, BigInt)] {
        &self.terms
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

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == Mono::ONE && self.terms[0].1.is_one()
    }

    /// True for an integer constant (including zero).
    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| *m == Mono::ONE)
    }

    /// True for a single term `c q^i v^j`.
    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn coeff(&self, m: Mono) -> BigInt {
        match self.terms.binary_search_by(|(t, _)| t.cmp(&m)) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => BigInt::zero(),
        }
    }

    /// The largest term in the `(q, v)` lexicographic order.
    pub fn leading(&self) -> Option<&(Mono, BigInt)> {
        self.terms.last()
    }

    /// The smallest term in the `(q, v)` lexicographic order.
    pub fn trailing(&self) -> Option<&(Mono, BigInt)> {
        self.terms.first()
    }

    /// Componentwise minimum exponents over all terms; `Mono::ONE` for zero.
    pub fn min_exponents(&self) -> Mono {
        let mut it = self.terms.iter();
        match it.next() {
            None => Mono::ONE,
            Some((m0, _)) => it.fold(*m0, |acc, (m, _)| Mono::new(acc.q.min(m.q), acc.v.min(m.v))),
        }
    }

    /// Does no term involve `v`?
    pub fn is_varsigma_free(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.v == 0)
    }

    /// Nonnegative gcd of the coefficients (zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for (_, c) in &self.terms {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Multiplies every term by `m`.
    pub fn shift(&self, m: Mono) -> Self {
        if m == Mono::ONE {
            return self.clone();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(t, c)| (*t + m, c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(t, x)| (*t, x * c)).collect(),
        }
    }

    /// Exact division of every coefficient by `c`; `None` if some coefficient is not divisible.
    pub fn div_scalar_exact(&self, c: &BigInt) -> Option<Self> {
        if c.is_zero() {
            return None;
        }
        let mut out = Vec::with_capacity(self.terms.len());
        for (m, x) in &self.terms {
            let (quo, rem) = x.div_rem(c);
            if !rem.is_zero() {
                return None;
            }
            out.push((*m, quo));
        }
        Some(LaurentPoly { terms: out })
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Applies `(q, v) -> (q^a v^b... )` style exponent maps; the map must be injective.
    fn map_monos(&self, f: impl Fn(Mono) -> Mono) -> Self {
        let mut terms: Vec<(Mono, BigInt)> = self.terms.iter().map(|(m, c)| (f(*m), c.clone())).collect();
        terms.sort_by_key(|a| a.0);
        LaurentPoly { terms }
    }

    /// The substitution `v -> q^-1`.
    pub fn specialize_varsigma(&self) -> Self {
        if self.is_varsigma_free() {
            return self.clone();
        }
        Self::from_terms(self.terms.iter().map(|(m, c)| (Mono::new(m.q - m.v, 0), c.clone())))
    }

    /// The substitution `q -> q^-1` (the bar involution on `Z[q, q^-1]`).
    pub fn bar(&self) -> Self {
        self.map_monos(|m| Mono::new(-m.q, m.v))
    }

    /// True iff every coefficient is nonnegative.
    pub fn is_nonneg(&self) -> bool {
        self.terms.iter().all(|(_, c)| !c.is_negative())
    }

    /// True iff all coefficients share one sign.
    pub fn is_single_signed(&self) -> bool {
        self.is_nonneg() || self.terms.iter().all(|(_, c)| c.is_negative())
    }

    /// Value at `q = v = 1`, i.e. the sum of coefficients.
    pub fn coefficient_sum(&self) -> BigInt {
        self.terms.iter().map(|(_, c)| c).sum()
    }

    /// Exact quotient `self / d` in `Z[q^±1, v^±1]`, or `None` when `d` does not divide.
    ///
    /// Long division with respect to the lexicographic order on exponents. An exact
    /// quotient has its `q`- and `v`-exponents inside the box
    /// `[min(self) - min(d), max(self) - max(d)]` taken per variable, and a quotient term
    /// outside that box proves non-divisibility. The box is finite, so the loop terminates.
    pub fn div_exact(&self, d: &LaurentPoly) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        if d.is_monomial() {
            let (dm, dc) = &d.terms[0];
            return self.div_scalar_exact(dc).map(|p| p.shift(-*dm));
        }
        let (dlead_m, dlead_c) = d.leading().cloned().unwrap();
        let (slo, shi) = self.exponent_box();
        let (dlo, dhi) = d.exponent_box();
        let (lo, hi) = (slo - dlo, shi - dhi);
        let mut rem: BTreeMap<Mono, BigInt> = self.terms.iter().cloned().collect();
        let mut quotient: Vec<(Mono, BigInt)> = Vec::new();
        while let Some((&m, c)) = rem.iter().next_back() {
            let t = m - dlead_m;
            if t.q < lo.q || t.q > hi.q || t.v < lo.v || t.v > hi.v {
                return None;
            }
            let (coef, r) = c.div_rem(&dlead_c);
            if !r.is_zero() {
                return None;
            }
            for (dm, dc) in &d.terms {
                let key = *dm + t;
                let prod = &coef * dc;
                match rem.get_mut(&key) {
                    Some(slot) => {
                        *slot -= prod;
                        if slot.is_zero() {
                            rem.remove(&key);
                        }
                    }
                    None => {
                        rem.insert(key, -prod);
                    }
                }
            }
            quotient.push((t, coef));
        }
        quotient.reverse();
        Some(Self::from_sorted_unchecked(quotient))
    }

    /// Componentwise minimum and maximum exponents of a nonzero polynomial.
    fn exponent_box(&self) -> (Mono, Mono) {
        let mut lo = self.terms[0].0;
        let mut hi = lo;
        for (m, _) in &self.terms {
            lo = Mono::new(lo.q.min(m.q), lo.v.min(m.v));
            hi = Mono::new(hi.q.max(m.q), hi.v.max(m.v));
        }
        (lo, hi)
    }

    fn merge(&self, other: &LaurentPoly, negate_other: bool) -> LaurentPoly {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    let c = if negate_other { -&b[j].1 } else { b[j].1.clone() };
                    out.push((b[j].0, c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate_other {
                        &a[i].1 - &b[j].1
                    } else {
                        &a[i].1 + &b[j].1
                    };
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        for (m, c) in &b[j..] {
            out.push((*m, if negate_other { -c } else { c.clone() }));
        }
        LaurentPoly { terms: out }
    }

    fn product(&self, other: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if self.is_monomial() {
            let (m, c) = &self.terms[0];
            return other.scale(c).shift(*m);
        }
        if other.is_monomial() {
            let (m, c) = &other.terms[0];
            return self.scale(c).shift(*m);
        }
        let mut acc: HashMap<Mono, BigInt> = HashMap::with_capacity(self.len() * other.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                *acc.entry(*ma + *mb).or_default() += ca * cb;
            }
        }
        let mut terms: Vec<(Mono, BigInt)> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by_key(|a| a.0);
        LaurentPoly { terms }
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        LaurentPoly::constant(c)
    }
}

impl From<BigInt> for LaurentPoly {
    fn from(c: BigInt) -> Self {
        LaurentPoly::monomial(c, Mono::ONE)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $body:expr) => {
        impl $trait<&LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: &LaurentPoly) -> LaurentPoly {
                let f: fn(&LaurentPoly, &LaurentPoly) -> LaurentPoly = $body;
                f(self, rhs)
            }
        }
        impl $trait<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: &LaurentPoly) -> LaurentPoly {
                (&self).$method(rhs)
            }
        }
        impl $trait<LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a, b| a.merge(b, false));
forward_binop!(Sub, sub, |a, b| a.merge(b, true));
forward_binop!(Mul, mul, |a, b| a.product(b));

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        *self = self.merge(rhs, false);
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        *self = self.merge(rhs, true);
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(mut self) -> LaurentPoly {
        for (_, c) in &mut self.terms {
            *c = -std::mem::take(c);
        }
        self
    }
}

fn write_var(f: &mut fmt::Formatter<'_>, name: char, e: i32, first: &mut bool) -> fmt::Result {
    if e == 0 {
        return Ok(());
    }
    if !*first {
        f.write_str("*")?;
    }
    *first = false;
    if e == 1 {
        write!(f, "{name}")
    } else {
        write!(f, "{name}^{e}")
    }
}

/// Canonical text form: terms `C*q^I*v^J` in ascending `(I, J)` order.
///
/// Unit coefficients are written without `1*`, zero exponents are dropped and
/// `^1` is elided. Later terms are joined with ` + ` or ` - `.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            if idx == 0 {
                if negative {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if negative { " - " } else { " + " })?;
            }
            let abs = c.abs();
            let mut first = true;
            if *m == Mono::ONE || !abs.is_one() {
                write!(f, "{abs}")?;
                first = false;
            }
            write_var(f, 'q', m.q, &mut first)?;
            write_var(f, 'v', m.v, &mut first)?;
        }
        Ok(())
    }
}

fn parse_term(src: &str) -> Result<(Mono, BigInt), Error> {
    let bad = || Error::Parse(format!("malformed term `{src}`"));
    let mut coef = BigInt::one();
    let mut mono = Mono::ONE;
    let mut saw_factor = false;
    for factor in src.split('*') {
        let factor = factor.trim();
        if factor.is_empty() {
            return Err(bad());
        }
        let (var, exp) = match factor.split_once('^') {
            Some((var, exp)) => (var, exp.parse::<i32>().map_err(|_| bad())?),
            None => (factor, 1),
        };
        match var {
            "q" => mono.q += exp,
            "v" => mono.v += exp,
            _ => {
                if saw_factor || factor.contains('^') {
                    return Err(bad());
                }
                coef = factor.parse::<BigInt>().map_err(|_| bad())?;
            }
        }
        saw_factor = true;
    }
    Ok((mono, coef))
}

impl FromStr for LaurentPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        // split on signs that are not exponent signs
        let mut terms: Vec<(i32, String)> = Vec::new();
        let mut cur = String::new();
        let mut sign = 1;
        let mut prev = ' ';
        for ch in s.chars() {
            if (ch == '+' || ch == '-') && prev != '^' {
                if cur.trim().is_empty() {
                    if ch == '-' {
                        sign = -sign;
                    }
                } else {
                    terms.push((sign, std::mem::take(&mut cur)));
                    sign = if ch == '-' { -1 } else { 1 };
                }
            } else {
                cur.push(ch);
            }
            if !ch.is_whitespace() {
                prev = ch;
            }
        }
        if cur.trim().is_empty() {
            return Err(Error::Parse(format!("trailing sign in `{s}`")));
        }
        terms.push((sign, cur));
        let mut parsed = Vec::with_capacity(terms.len());
        for (sign, t) in terms {
            let (m, c) = parse_term(t.trim())?;
            parsed.push((m, if sign < 0 { -c } else { c }));
        }
        Ok(LaurentPoly::from_terms(parsed))
    }
}
