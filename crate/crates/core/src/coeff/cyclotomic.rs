//! Cyclotomic polynomials in `q` and the factorizations of quantum integers into them.
//!
//! Every denominator produced by the algebra is a monomial times a product of
//! cyclotomic polynomials, so fractions keep their denominators factored.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::Zero;

use super::laurent::{LaurentPoly, Mono};

fn cache() -> &'static RwLock<HashMap<u32, Arc<LaurentPoly>>> {
    static CACHE: OnceLock<RwLock<HashMap<u32, Arc<LaurentPoly>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

pub fn euler_phi(mut n: u32) -> u32 {
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

fn divisors(n: u32) -> Vec<u32> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

/// The cyclotomic polynomial `Phi_d(q)`, `d >= 1`.
pub fn cyclotomic(d: u32) -> Arc<LaurentPoly> {
    assert!(d >= 1);
    if let Some(p) = cache().read().unwrap().get(&d) {
        return p.clone();
    }
    // q^d - 1 = prod_{e | d} Phi_e
    let mut p = LaurentPoly::q_pow(d as i32) - LaurentPoly::one();
    for e in divisors(d) {
        if e < d {
            p = p.div_exact(&cyclotomic(e)).expect("cyclotomic recursion");
        }
    }
    let p = Arc::new(p);
    cache().write().unwrap().insert(d, p.clone());
    p
}

/// `[n] = q^shift * prod_{d in ds} Phi_d` for `n >= 1`.
pub fn qint_factors(n: u32) -> (i32, Vec<u32>) {
    debug_assert!(n >= 1);
    let ds = divisors(2 * n).into_iter().filter(|&d| d >= 3).collect();
    (1 - n as i32, ds)
}

/// `q^m - 1 = prod_{d | m} Phi_d` for `m >= 1`.
pub fn q_power_minus_one_factors(m: u32) -> Vec<u32> {
    divisors(m)
}

/// Expands `prod Phi_d^e`.
pub fn expand(factors: &BTreeMap<u32, u32>) -> LaurentPoly {
    let mut acc = LaurentPoly::one();
    for (&d, &e) in factors {
        acc = &acc * &cyclotomic(d).pow(e);
    }
    acc
}

/// Splits a `v`-free polynomial whose monomial factor has been removed into
/// cyclotomic factors and a residual: `p = expand(factors) * rest`.
///
/// Candidates are limited to `d <= 6 * deg + 6`, which covers every `d` with
/// `phi(d) <= deg` in the degree ranges that occur here; a missed factor only
/// leaves a less reduced residual.
pub fn extract(p: &LaurentPoly) -> (BTreeMap<u32, u32>, LaurentPoly) {
    let mut factors = BTreeMap::new();
    let mut rest = p.clone();
    if !p.is_varsigma_free() || p.is_constant() {
        return (factors, rest);
    }
    let mut d: u32 = 1;
    loop {
        let deg = degree_span(&rest);
        if deg == 0 || d as i32 > 6 * deg + 6 {
            break;
        }
        if euler_phi(d) as i32 <= deg && may_vanish_at_root(&rest, d) {
            let phi = cyclotomic(d);
            while let Some(quo) = rest.div_exact(&phi) {
                rest = quo;
                *factors.entry(d).or_insert(0) += 1;
            }
        }
        d += 1;
    }
    (factors, rest)
}

fn degree_span(p: &LaurentPoly) -> i32 {
    match (p.trailing(), p.leading()) {
        (Some(lo), Some(hi)) => hi.0.q - lo.0.q,
        _ => 0,
    }
}

// Cheap necessary conditions for Phi_1 and Phi_2.
fn may_vanish_at_root(p: &LaurentPoly, d: u32) -> bool {
    match d {
        1 => p.coefficient_sum().is_zero(),
        2 => {
            let s: BigInt = p
                .terms()
                .iter()
                .map(|(m, c)| if m.q.rem_euclid(2) == 0 { c.clone() } else { -c })
                .sum();
            s.is_zero()
        }
        _ => true,
    }
}

/// Value of `Phi_d(q^-1) / Phi_d(q)` as a signed monomial `(sign, q-exponent)`.
pub fn bar_ratio(d: u32) -> (i32, Mono) {
    if d == 1 {
        (-1, Mono::new(-1, 0))
    } else {
        (1, Mono::new(-(euler_phi(d) as i32), 0))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cyclotomics() {
        assert_eq!(*cyclotomic(1), "q - 1".parse().unwrap());
        assert_eq!(*cyclotomic(2), "q + 1".parse().unwrap());
        assert_eq!(*cyclotomic(4), "1 + q^2".parse().unwrap());
        assert_eq!(*cyclotomic(6), "1 - q + q^2".parse().unwrap());
        assert_eq!(*cyclotomic(12), "1 - q^2 + q^4".parse().unwrap());
        assert_eq!(cyclotomic(30).leading().unwrap().0.q, 8);
    }

    #[test]
    fn qint_factorization_matches_expansion() {
        for n in 1..=12u32 {
            let (shift, ds) = qint_factors(n);
            let mut f = BTreeMap::new();
            for d in ds {
                f.insert(d, 1);
            }
            let expanded = expand(&f).shift(Mono::new(shift, 0));
            assert_eq!(expanded, crate::qcomb::qint(n as i32), "n = {n}");
        }
    }

    #[test]
    fn extraction_recovers_products() {
        let p = &LaurentPoly::from_q_coeffs([(4, 1), (0, -1)]) * &LaurentPoly::from_q_coeffs([(2, 3), (1, 1), (0, 1)]);
        let (f, rest) = extract(&p);
        assert_eq!(f.get(&1), Some(&1));
        assert_eq!(f.get(&2), Some(&1));
        assert_eq!(f.get(&4), Some(&1));
        assert_eq!(rest, LaurentPoly::from_q_coeffs([(2, 3), (1, 1), (0, 1)]));
    }
}
