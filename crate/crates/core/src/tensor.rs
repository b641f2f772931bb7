//! The tensor square `U (x) U` and the coproduct.
//!
//! `Delta(E) = E (x) 1 + K (x) E`, `Delta(F) = 1 (x) F + F (x) K^-1`, `Delta(K^{+-1}) = K^{+-1} (x) K^{+-1}`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, OnceLock, RwLock};

use crate::coeff::Scalar;
use crate::error::Result;
use crate::pbw::{monomial_product, write_term, Generator, PbwMonomial, UElement};

type Pair = (PbwMonomial, PbwMonomial);

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TensorElement {
    terms: BTreeMap<Pair, Scalar>,
}

struct Acc<K: Ord> {
    groups: BTreeMap<K, Vec<Scalar>>,
}

impl<K: Ord> Default for Acc<K> {
    fn default() -> Self {
        Acc {
            groups: BTreeMap::new(),
        }
    }
}

impl<K: Ord> Acc<K> {
    fn push(&mut self, k: K, c: Scalar) {
        if !c.is_zero() {
            self.groups.entry(k).or_default().push(c);
        }
    }

    fn finish(self) -> BTreeMap<K, Scalar> {
        self.groups
            .into_iter()
            .filter_map(|(k, cs)| {
                let s = Scalar::sum(cs);
                (!s.is_zero()).then_some((k, s))
            })
            .collect()
    }
}

impl TensorElement {
    pub fn zero() -> Self {
        TensorElement::default()
    }

    pub fn one() -> Self {
        Self::from_pair(&UElement::one(), &UElement::one())
    }

    /// `x (x) y`, extended bilinearly.
    pub fn from_pair(x: &UElement, y: &UElement) -> Self {
        let mut acc = Acc::default();
        for (m1, c1) in x.terms() {
            for (m2, c2) in y.terms() {
                acc.push((*m1, *m2), c1 * c2);
            }
        }
        TensorElement { terms: acc.finish() }
    }

    pub fn terms(&self) -> impl ExactSizeIterator<Item = (&Pair, &Scalar)> {
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

    pub fn coeff(&self, left: PbwMonomial, right: PbwMonomial) -> Scalar {
        self.terms.get(&(left, right)).cloned().unwrap_or_default()
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        TensorElement {
            terms: self.terms.iter().map(|(k, x)| (*k, x * c)).collect(),
        }
    }

    pub fn specialize_varsigma(&self) -> Result<Self> {
        let mut acc = Acc::default();
        for (k, c) in &self.terms {
            acc.push(*k, c.specialize_varsigma()?);
        }
        Ok(TensorElement { terms: acc.finish() })
    }

    /// The coproduct of a generator.
    pub fn delta_gen(g: Generator) -> Self {
        let u = UElement::unit_monomial;
        match g {
            Generator::E => &Self::from_pair(&u(1, 0, 0), &u(0, 0, 0)) + &Self::from_pair(&u(0, 1, 0), &u(1, 0, 0)),
            Generator::F => &Self::from_pair(&u(0, 0, 0), &u(0, 0, 1)) + &Self::from_pair(&u(0, 0, 1), &u(0, -1, 0)),
            Generator::K => Self::from_pair(&u(0, 1, 0), &u(0, 1, 0)),
            Generator::Kinv => Self::from_pair(&u(0, -1, 0), &u(0, -1, 0)),
        }
    }

    /// The coproduct, as the algebra map determined by its values on generators.
    pub fn delta(x: &UElement) -> Self {
        let mut acc = Acc::default();
        for (m, c) in x.terms() {
            for (k, d) in delta_monomial(*m).terms.iter() {
                acc.push(*k, c * d);
            }
        }
        TensorElement { terms: acc.finish() }
    }

    fn mul_impl(&self, other: &TensorElement) -> TensorElement {
        let mut acc = Acc::default();
        let mut left = Vec::new();
        for ((l1, r1), c1) in &self.terms {
            for ((l2, r2), c2) in &other.terms {
                let c = c1 * c2;
                left.clear();
                monomial_product(*l1, *l2, |m, d| left.push((m, d.clone())));
                monomial_product(*r1, *r2, |m, d| {
                    for (lm, ld) in &left {
                        acc.push((*lm, m), &(&c * ld) * d);
                    }
                });
            }
        }
        TensorElement { terms: acc.finish() }
    }

    /// `(Delta (x) id)(self)` in the triple tensor product.
    pub fn delta_left(&self) -> TripleElement {
        let mut acc = Acc::default();
        for ((l, r), c) in &self.terms {
            for ((a, b), d) in delta_monomial(*l).terms.iter() {
                acc.push([*a, *b, *r], c * d);
            }
        }
        TripleElement { terms: acc.finish() }
    }

    /// `(id (x) Delta)(self)` in the triple tensor product.
    pub fn delta_right(&self) -> TripleElement {
        let mut acc = Acc::default();
        for ((l, r), c) in &self.terms {
            for ((a, b), d) in delta_monomial(*r).terms.iter() {
                acc.push([*l, *a, *b], c * d);
            }
        }
        TripleElement { terms: acc.finish() }
    }
}

/// An element of `U (x) U (x) U`; only used to state coassociativity.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TripleElement {
    terms: BTreeMap<[PbwMonomial; 3], Scalar>,
}

impl TripleElement {
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

type PowerCache = RwLock<HashMap<(bool, u32), Arc<TensorElement>>>;

fn power_cache() -> &'static PowerCache {
    static CACHE: OnceLock<PowerCache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// `Delta(E)^n` or `Delta(F)^n`.
fn delta_power(is_e: bool, n: u32) -> Arc<TensorElement> {
    if let Some(hit) = power_cache().read().unwrap().get(&(is_e, n)) {
        return hit.clone();
    }
    let value = if n == 0 {
        TensorElement::one()
    } else {
        let g = TensorElement::delta_gen(if is_e { Generator::E } else { Generator::F });
        &*delta_power(is_e, n - 1) * &g
    };
    let value = Arc::new(value);
    power_cache().write().unwrap().insert((is_e, n), value.clone());
    value
}

fn delta_monomial(m: PbwMonomial) -> TensorElement {
    let k = TensorElement::from_pair(&UElement::k_pow(m.k), &UElement::k_pow(m.k));
    &(&*delta_power(true, m.e) * &k) * &*delta_power(false, m.f)
}

impl Add<&TensorElement> for &TensorElement {
    type Output = TensorElement;
    fn add(self, rhs: &TensorElement) -> TensorElement {
        let mut terms = self.terms.clone();
        for (k, c) in &rhs.terms {
            let s = match terms.get(k) {
                Some(x) => x + c,
                None => c.clone(),
            };
            if s.is_zero() {
                terms.remove(k);
            } else {
                terms.insert(*k, s);
            }
        }
        TensorElement { terms }
    }
}

impl Sub<&TensorElement> for &TensorElement {
    type Output = TensorElement;
    fn sub(self, rhs: &TensorElement) -> TensorElement {
        self + &-rhs
    }
}

impl Neg for &TensorElement {
    type Output = TensorElement;
    fn neg(self) -> TensorElement {
        TensorElement {
            terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect(),
        }
    }
}

impl Mul<&TensorElement> for &TensorElement {
    type Output = TensorElement;
    fn mul(self, rhs: &TensorElement) -> TensorElement {
        self.mul_impl(rhs)
    }
}

impl Sum for TensorElement {
    fn sum<I: Iterator<Item = TensorElement>>(iter: I) -> TensorElement {
        let mut acc = Acc::default();
        for t in iter {
            for (k, c) in t.terms {
                acc.push(k, c);
            }
        }
        TensorElement { terms: acc.finish() }
    }
}

/// Terms ordered by the left monomial, then the right, each `(<coefficient>)*<left>⊗<right>`.
impl fmt::Display for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, ((l, r), c)) in self.terms.iter().enumerate() {
            if idx > 0 {
                f.write_str(" + ")?;
            }
            write_term(f, l, c)?;
            write!(f, "⊗{r}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pbw::DividedGen;
    use Generator::*;

    fn g(x: Generator) -> UElement {
        UElement::gen(x)
    }

    #[test]
    fn pair_examples() {
        assert_eq!(
            TensorElement::from_pair(&UElement::one(), &UElement::one()),
            TensorElement::one()
        );
        assert!(TensorElement::from_pair(&UElement::zero(), &g(F)).is_zero());
        let t = TensorElement::from_pair(&UElement::b(), &g(Kinv));
        assert_eq!(t.len(), 2);
    }

    #[test]
    fn product_examples() {
        let a = TensorElement::from_pair(&g(E), &UElement::one());
        let b = TensorElement::from_pair(&g(K), &g(E));
        assert_eq!(&a * &b, TensorElement::from_pair(&(&g(E) * &g(K)), &g(E)));
        let c = TensorElement::from_pair(&UElement::one(), &g(F));
        let d = TensorElement::from_pair(&g(F), &g(Kinv));
        assert_eq!(&c * &d, TensorElement::from_pair(&g(F), &(&g(F) * &g(Kinv))));
        assert_eq!(&TensorElement::one() * &d, d);
    }

    #[test]
    fn coproduct_of_generators_and_b() {
        assert_eq!(TensorElement::delta_gen(K), TensorElement::from_pair(&g(K), &g(K)));
        assert_eq!(TensorElement::delta(&UElement::one()), TensorElement::one());
        let db = TensorElement::delta(&UElement::b());
        let expected = &TensorElement::from_pair(&UElement::b(), &g(Kinv))
            + &TensorElement::from_pair(&UElement::one(), &(&g(F) + &UElement::echeck()));
        assert_eq!(db, expected);
    }

    #[test]
    fn coproduct_of_divided_f() {
        let f2 = UElement::divided_power(DividedGen::F, 2).unwrap();
        let expected = &(&TensorElement::from_pair(&UElement::one(), &f2)
            + &TensorElement::from_pair(&g(F), &(&g(F) * &g(Kinv))).scale(&Scalar::q_pow(1)))
            + &TensorElement::from_pair(&f2, &UElement::k_pow(-2));
        assert_eq!(TensorElement::delta(&f2), expected);
    }

    #[test]
    fn coassociative_on_generators() {
        for x in [E, F, K, Kinv] {
            let d = TensorElement::delta_gen(x);
            assert_eq!(d.delta_left(), d.delta_right());
        }
    }

    #[test]
    fn canonical_text() {
        assert_eq!(TensorElement::one().to_string(), "1⊗1");
        let d = TensorElement::delta_gen(F);
        assert_eq!(d.to_string(), "1⊗F + F⊗K^-1");
    }
}
