//! The check grids behind each suite.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::{job, Job, Outcome, Suite, VarsigmaMode};
use crate::coeff::{LaurentPoly, Scalar};
use crate::error::Result;
use crate::idp::{
    assemble_comult, basis_expand, basis_expand_specialized, comult_closed, comult_component, comult_direct,
    comult_fhy_component, comult_recurrence_residual, idp_closed, idp_pbw, mult_closed, FhySign, Parity,
};
use crate::pbw::{cartan_identity_residual, h, h_binom, DividedGen, Generator, UElement};
use crate::qcomb::{qbinom, qfact_u, qint, qint_base};
use crate::tensor::TensorElement;

pub(crate) fn jobs(suite: Suite, bound: i32, mode: VarsigmaMode) -> Vec<Job> {
    match suite {
        Suite::QIdentities => qidentities(bound),
        Suite::PbwCore => pbw_core(bound, mode),
        Suite::MultEven => mult(Parity::Ev, bound, mode),
        Suite::MultOdd => mult(Parity::Odd, bound, mode),
        Suite::ComultEven => comult(Parity::Ev, bound, mode),
        Suite::ComultOdd => comult(Parity::Odd, bound, mode),
        Suite::FhyForms => fhy_forms(bound, mode),
        Suite::ProofRecurrences => proof_recurrences(bound, mode),
        Suite::Chi => chi(bound),
        Suite::Positivity => positivity(bound),
    }
}

fn lp_zero(d: LaurentPoly) -> Outcome {
    Ok((!d.is_zero()).then(|| d.to_string()))
}

fn u_zero(d: UElement, mode: VarsigmaMode) -> Outcome {
    let d = match mode {
        VarsigmaMode::Generic => d,
        VarsigmaMode::Specialized => d.specialize_varsigma()?,
    };
    Ok((!d.is_zero()).then(|| d.to_string()))
}

fn t_zero(d: TensorElement, mode: VarsigmaMode) -> Outcome {
    let d = match mode {
        VarsigmaMode::Generic => d,
        VarsigmaMode::Specialized => d.specialize_varsigma()?,
    };
    Ok((!d.is_zero()).then(|| d.to_string()))
}

/// Coordinatewise difference of two sparse coefficient maps, rendered when nonzero.
fn map_diff(lhs: &BTreeMap<u32, Scalar>, rhs: &BTreeMap<u32, Scalar>) -> Option<String> {
    let keys: std::collections::BTreeSet<_> = lhs.keys().chain(rhs.keys()).collect();
    let zero = Scalar::zero();
    let bad: Vec<String> = keys
        .into_iter()
        .filter_map(|d| {
            let x = lhs.get(d).unwrap_or(&zero) - rhs.get(d).unwrap_or(&zero);
            (!x.is_zero()).then(|| format!("B^({d}): {x}"))
        })
        .collect();
    (!bad.is_empty()).then(|| bad.join("; "))
}

fn specialize_map(m: &BTreeMap<u32, Scalar>) -> Result<BTreeMap<u32, Scalar>> {
    let mut out = BTreeMap::new();
    for (d, c) in m {
        let s = c.specialize_varsigma()?;
        if !s.is_zero() {
            out.insert(*d, s);
        }
    }
    Ok(out)
}

fn qi(n: i32) -> LaurentPoly {
    qint(n)
}

fn qv() -> Scalar {
    Scalar::qv_pow(1, 1)
}

fn qidentities(bound: i32) -> Vec<Job> {
    let mut jobs = Vec::new();
    for n in -bound..=bound {
        for m in -bound..=bound {
            if m != 0 {
                jobs.push(job("qint-sum", &[("n", n as i64), ("m", m as i64)], move || {
                    lp_zero(&(&qi(n + m) + &qi(n - m)) - &(&qi(n) * &qint_base(2, m)?))
                }));
            }
            jobs.push(job("qint-product", &[("n", n as i64), ("m", m as i64)], move || {
                lp_zero(&(&qi(n + m) * &qi(n - m)) - &(&(&qi(n) * &qi(n)) - &(&qi(m) * &qi(m))))
            }));
        }
    }
    let c3 = bound.min(12);
    for m in -c3..=c3 {
        for n in -c3..=c3 {
            for l in -c3..=c3 {
                jobs.push(job(
                    "qint-difference",
                    &[("m", m as i64), ("n", n as i64), ("l", l as i64)],
                    move || {
                        let lhs = &(&qi(m) * &qi(m + n)) - &(&qi(l) * &qi(l + n));
                        lp_zero(&lhs - &(&qi(m - l) * &qi(m + l + n)))
                    },
                ));
            }
        }
    }
    for n in -bound..=bound {
        jobs.push(job("qint-double", &[("n", n as i64)], move || {
            lp_zero(&qi(2 * n) - &(&qi(2) * &qint_base(n, 2)?))
        }));
    }
    let c5 = bound.min(8);
    for l in 0..=c5 {
        for k in 0..=c5 {
            for a in 0..=c5 {
                jobs.push(job(
                    "qint-ladder",
                    &[("l", l as i64), ("k", k as i64), ("a", a as i64)],
                    move || {
                        let sq = |x: i32| &qi(x) * &qi(x);
                        let lhs = &(&(&(&qi(2 * k + 2 * a - 2 * l + 2) * &qi(2 * a - 2 * l + 2))
                            * &qi(2 * k - 2 * l + 2))
                            + &(&sq(2 * k + 2 * a - 2 * l + 3) * &qi(2 * l)))
                            - &(&sq(2 * k + 1) * &qi(2 * l));
                        let rhs = &(&qi(2 * a - 2 * l + 2) * &qi(2 * k + 2)) * &qi(2 * k + 2 * a + 2);
                        lp_zero(&lhs - &rhs)
                    },
                ));
            }
        }
    }
    for l in 1..=bound.min(12) / 2 {
        for r in 1..=2 * l {
            for c in 0..=r / 2 {
                for a in 0..=r - 2 * c {
                    for (n_even, id) in [(true, "cartan-2l"), (false, "cartan-2l+1")] {
                        let params = [("l", l as i64), ("r", r as i64), ("c", c as i64), ("a", a as i64)];
                        jobs.push(job(id, &params, move || {
                            u_zero(cartan_identity_residual(n_even, l, r, c, a), VarsigmaMode::Generic)
                        }));
                    }
                }
            }
        }
    }
    jobs
}

/// A fixed spread of small elements used for sampled algebraic laws.
pub(crate) fn samples() -> Vec<UElement> {
    let g = UElement::gen;
    let two = Scalar::from_poly(qint(2));
    vec![
        g(Generator::E),
        g(Generator::F),
        g(Generator::K),
        g(Generator::Kinv),
        UElement::b(),
        UElement::echeck(),
        h(),
        &UElement::divided_power(DividedGen::F, 2).unwrap() * &g(Generator::K),
        UElement::divided_power(DividedGen::E, 2).unwrap(),
        &UElement::unit_monomial(1, -1, 1).scale(&two) + &UElement::unit_monomial(0, 0, 2).scale(&Scalar::varsigma()),
    ]
}

fn pbw_core(bound: i32, mode: VarsigmaMode) -> Vec<Job> {
    let mut jobs = Vec::new();
    for (gi, g) in [(0, DividedGen::E), (1, DividedGen::F)] {
        for m in 0..=bound {
            for n in 0..=bound - m {
                jobs.push(job(
                    "divided-product",
                    &[("g", gi), ("m", m as i64), ("n", n as i64)],
                    move || {
                        let lhs = &UElement::divided_power(g, m)? * &UElement::divided_power(g, n)?;
                        let rhs = UElement::divided_power(g, m + n)?.scale(&Scalar::from_poly(qbinom(m + n, n)));
                        u_zero(&lhs - &rhs, mode)
                    },
                ));
            }
        }
    }
    jobs.push(job("k-inverse", &[], move || {
        u_zero(
            &(&UElement::gen(Generator::K) * &UElement::gen(Generator::Kinv)) - &UElement::one(),
            mode,
        )
    }));
    jobs.push(job("f-echeck-commutator", &[], move || {
        let (f, ec) = (UElement::gen(Generator::F), UElement::echeck());
        let lhs = &(&f * &ec) - &(&ec * &f).scale(&Scalar::q_pow(-2));
        u_zero(&lhs - &h().scale(&qv()), mode)
    }));
    for a in -4..=4 {
        for n in 0..=4 {
            jobs.push(job("hbinom-f", &[("a", a as i64), ("n", n as i64)], move || {
                let f = UElement::gen(Generator::F);
                u_zero(&(&h_binom(a, n)? * &f) - &(&f * &h_binom(a + 1, n)?), mode)
            }));
            jobs.push(job("hbinom-echeck", &[("a", a as i64), ("n", n as i64)], move || {
                let ec = UElement::echeck();
                u_zero(&(&h_binom(a, n)? * &ec) - &(&ec * &h_binom(a - 1, n)?), mode)
            }));
        }
    }
    for n in 0..=bound {
        jobs.push(job("coproduct-divided-f", &[("n", n as i64)], move || {
            let lhs = TensorElement::delta(&UElement::divided_power(DividedGen::F, n)?);
            let mut rhs = TensorElement::zero();
            for a in 0..=n {
                let right = &UElement::divided_power(DividedGen::F, n - a)? * &UElement::k_pow(-a);
                let left = UElement::divided_power(DividedGen::F, a)?;
                rhs = &rhs + &TensorElement::from_pair(&left, &right).scale(&Scalar::q_pow(a * (n - a)));
            }
            t_zero(&lhs - &rhs, mode)
        }));
    }
    jobs.push(job("coproduct-b", &[], move || {
        let expected = &TensorElement::from_pair(&UElement::b(), &UElement::k_pow(-1))
            + &TensorElement::from_pair(&UElement::one(), &(&UElement::gen(Generator::F) + &UElement::echeck()));
        t_zero(&TensorElement::delta(&UElement::b()) - &expected, mode)
    }));
    for (gi, g) in [Generator::E, Generator::F, Generator::K, Generator::Kinv]
        .into_iter()
        .enumerate()
    {
        jobs.push(job("coassociativity", &[("g", gi as i64)], move || {
            let d = TensorElement::delta_gen(g);
            Ok((d.delta_left() != d.delta_right()).then(|| "coassociativity fails".to_string()))
        }));
    }
    let s = Arc::new(samples());
    for i in 0..s.len() {
        for j in 0..s.len() {
            let s = s.clone();
            jobs.push(job(
                "coproduct-homomorphism",
                &[("i", i as i64), ("j", j as i64)],
                move || {
                    let lhs = TensorElement::delta(&(&s[i] * &s[j]));
                    t_zero(
                        &lhs - &(&TensorElement::delta(&s[i]) * &TensorElement::delta(&s[j])),
                        mode,
                    )
                },
            ));
        }
    }
    let few = 6;
    for i in 0..few {
        for j in 0..few {
            for k in 0..few {
                let s = s.clone();
                jobs.push(job(
                    "associativity",
                    &[("i", i as i64), ("j", j as i64), ("k", k as i64)],
                    move || u_zero(&(&(&s[i] * &s[j]) * &s[k]) - &(&s[i] * &(&s[j] * &s[k])), mode),
                ));
            }
        }
    }
    jobs
}

fn mult(p: Parity, bound: i32, mode: VarsigmaMode) -> Vec<Job> {
    let mut jobs = Vec::new();
    for m in 0..=bound {
        for n in 0..=bound - m {
            let params = [("m", m as i64), ("n", n as i64)];
            jobs.push(job("product-expansion", &params, move || {
                let prod = &idp_closed(p, m)? * &idp_closed(p, n)?;
                let closed = mult_closed(p, m, n)?;
                Ok(match mode {
                    VarsigmaMode::Generic => map_diff(&basis_expand(&prod, p), &closed),
                    VarsigmaMode::Specialized => {
                        let lhs = basis_expand_specialized(&prod.specialize_varsigma()?, p)?;
                        map_diff(&lhs, &specialize_map(&closed)?)
                    }
                })
            }));
            if m < n {
                jobs.push(job("symmetry", &params, move || {
                    Ok(map_diff(&mult_closed(p, m, n)?, &mult_closed(p, n, m)?))
                }));
            }
            if m + n <= bound.min(5) {
                jobs.push(job("pbw-image", &params, move || {
                    let lhs = &*idp_pbw(p, m as u32) * &*idp_pbw(p, n as u32);
                    let mut rhs = UElement::zero();
                    for (d, c) in mult_closed(p, m, n)? {
                        rhs = &rhs + &idp_pbw(p, d).scale(&c);
                    }
                    u_zero(&lhs - &rhs, mode)
                }));
            }
        }
    }
    jobs
}

fn comult(p: Parity, bound: i32, mode: VarsigmaMode) -> Vec<Job> {
    (0..=bound)
        .map(|n| {
            job("coproduct", &[("n", n as i64)], move || {
                let closed = assemble_comult(p, n as u32, &comult_closed(p, n)?);
                t_zero(&closed - &comult_direct(p, n)?, mode)
            })
        })
        .collect()
}

fn family_id(p: Parity) -> i64 {
    match p {
        Parity::Ev => 0,
        Parity::Odd => 1,
    }
}

fn fhy_forms(bound: i32, mode: VarsigmaMode) -> Vec<Job> {
    let mut jobs = Vec::new();
    for p in Parity::ALL {
        for n in 0..=bound {
            for r in 0..=n {
                let params = [("family", family_id(p)), ("n", n as i64), ("r", r as i64)];
                jobs.push(job("reversed-form", &params, move || {
                    let d = &comult_fhy_component(p, n, r, FhySign::Alternating)? - &comult_component(p, n, r)?;
                    u_zero(d, mode)
                }));
            }
        }
    }
    jobs
}

fn proof_recurrences(bound: i32, mode: VarsigmaMode) -> Vec<Job> {
    let mut jobs = Vec::new();
    for n in 2..=bound {
        for r in 0..=n {
            let id = match (n % 2 == 0, r % 2 == 0) {
                (true, true) => "even-family-2l-r-even",
                (true, false) => "even-family-2l-r-odd",
                (false, true) => "even-family-2l+1-r-even",
                (false, false) => "even-family-2l+1-r-odd",
            };
            jobs.push(job(id, &[("l", (n / 2) as i64), ("r", r as i64)], move || {
                u_zero(comult_recurrence_residual(Parity::Ev, n, r)?, mode)
            }));
        }
    }
    for n in 1..=bound {
        for r in 0..=n {
            jobs.push(job("odd-family", &[("n", n as i64), ("r", r as i64)], move || {
                u_zero(comult_recurrence_residual(Parity::Odd, n, r)?, mode)
            }));
        }
    }
    jobs
}

/// `chi` is only defined at `v = q^-1`, so this suite always specializes.
fn chi(bound: i32) -> Vec<Job> {
    let spec = VarsigmaMode::Specialized;
    let mut jobs = Vec::new();
    let s: Arc<Vec<UElement>> = Arc::new(samples().iter().map(|x| x.specialize_varsigma().unwrap()).collect());
    for i in 0..s.len() {
        let s2 = s.clone();
        jobs.push(job("involution", &[("i", i as i64)], move || {
            u_zero(&s2[i].chi()?.chi()? - &s2[i], spec)
        }));
        for j in 0..s.len() {
            let s = s.clone();
            jobs.push(job(
                "anti-homomorphism",
                &[("i", i as i64), ("j", j as i64)],
                move || u_zero(&(&s[i] * &s[j]).chi()? - &(&s[j].chi()? * &s[i].chi()?), spec),
            ));
        }
    }
    jobs.push(job("h-image", &[], move || {
        u_zero(&h().chi()? + &h().scale(&Scalar::q_pow(2)), spec)
    }));
    for a in -4..=4 {
        for n in 0..=4 {
            jobs.push(job("hbinom-image", &[("a", a as i64), ("n", n as i64)], move || {
                let sign = if n % 2 == 0 { 1 } else { -1 };
                let c = Scalar::q_pow(2 * n * (n + 1)).mul_int(sign);
                u_zero(&h_binom(a, n)?.chi()? - &h_binom(1 - a - n, n)?.scale(&c), spec)
            }));
        }
    }
    let gens = [
        UElement::gen(Generator::F),
        UElement::unit_monomial(1, -1, 0).scale(&Scalar::q_pow(-1)),
        UElement::k_pow(-1),
    ];
    for (gi, g) in gens.into_iter().enumerate() {
        jobs.push(job("generator-image", &[("g", gi as i64)], move || {
            u_zero(&g.chi()? - &g, spec)
        }));
    }
    for p in Parity::ALL {
        for n in 0..=bound {
            jobs.push(job(
                "idp-fixed",
                &[("family", family_id(p)), ("n", n as i64)],
                move || {
                    let x = idp_pbw(p, n as u32).specialize_varsigma()?;
                    u_zero(&x.chi()? - &x, spec)
                },
            ));
        }
    }
    jobs
}

fn positivity(bound: i32) -> Vec<Job> {
    let mut jobs = Vec::new();
    for p in Parity::ALL {
        for m in 0..=bound {
            for n in 0..=bound - m {
                jobs.push(job(
                    "integral-positive",
                    &[("family", family_id(p)), ("m", m as i64), ("n", n as i64)],
                    move || {
                        let mut bad = Vec::new();
                        for (d, c) in mult_closed(p, m, n)? {
                            match c.specialize_varsigma()?.to_laurent() {
                                Ok(lp) if lp.is_nonneg() => {}
                                Ok(lp) => bad.push(format!("B^({d}): {lp}")),
                                Err(e) => bad.push(format!("B^({d}): {e}")),
                            }
                        }
                        Ok((!bad.is_empty()).then(|| bad.join("; ")))
                    },
                ));
            }
        }
    }
    // Coproduct components evaluated at a weight: no coefficient may mix signs on
    // the grid m = n mod 2, and at even weights all coefficients must be integral.
    // Odd weights give non-integral h-binomial values; those are only counted.
    for p in Parity::ALL {
        for n in 0..=WEIGHT_MAX_N {
            for r in 0..=n {
                for m in -WEIGHT_MAX..=WEIGHT_MAX {
                    let params = [
                        ("family", family_id(p)),
                        ("n", n as i64),
                        ("r", r as i64),
                        ("m", m as i64),
                    ];
                    let run = move |want_integral: bool| -> Outcome {
                        let s = comult_component(p, n as i32, r as i32)?.specialize_varsigma()?;
                        let prof = profile(p, n, r, m, &s);
                        let ok = prof.mixed == 0 && (!want_integral || prof.non_integral == 0);
                        Ok((!ok).then(|| format!("{prof:?}")))
                    };
                    if (m - n as i32).rem_euclid(2) == 0 {
                        jobs.push(job("weight-single-signed", &params, move || run(false)));
                    }
                    if m % 2 == 0 {
                        jobs.push(job("weight-integral", &params, move || run(true)));
                    }
                }
            }
        }
    }
    jobs
}

const WEIGHT_MAX_N: u32 = 6;
const WEIGHT_MAX: i32 = 6;

/// Sign profile of `S_{n,r}` at `v = q^-1` after evaluating `K` at a weight.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightProfile {
    pub family: Parity,
    pub n: u32,
    pub r: u32,
    pub weight: i32,
    pub terms: usize,
    /// Coefficients in `N[q, q^-1]`.
    pub nonneg: usize,
    /// Coefficients in `-N[q, q^-1]`.
    pub nonpos: usize,
    /// Laurent polynomials with both signs.
    pub mixed: usize,
    /// Coefficients that are not Laurent polynomials.
    pub non_integral: usize,
}

impl WeightProfile {
    pub fn single_signed(&self) -> bool {
        self.mixed == 0 && self.non_integral == 0
    }
}

/// Coefficients are taken against the divided-power monomials `E^(a) F^(c)`.
///
/// Profiles for all `n <= max_n`, `r <= n` and weights `|m| <= max_weight` with `m = n mod 2`.
pub fn weight_profiles(p: Parity, max_n: u32, max_weight: i32) -> Result<Vec<WeightProfile>> {
    let mut out = Vec::new();
    for n in 0..=max_n {
        let terms = comult_closed(p, n as i32)?;
        for t in &terms {
            let s = t.right.specialize_varsigma()?;
            for m in -max_weight..=max_weight {
                if (m - n as i32).rem_euclid(2) == 0 {
                    out.push(profile(p, n, t.r, m, &s));
                }
            }
        }
    }
    Ok(out)
}

/// Profile of a specialized `S_{n,r}` at weight `m`.
fn profile(p: Parity, n: u32, r: u32, m: i32, s: &UElement) -> WeightProfile {
    let u = s.weight_eval(m);
    let mut prof = WeightProfile {
        family: p,
        n,
        r,
        weight: m,
        terms: u.len(),
        nonneg: 0,
        nonpos: 0,
        mixed: 0,
        non_integral: 0,
    };
    for (mono, c) in u.terms() {
        // coordinates against E^(a) F^(c)
        let c = c * &Scalar::from_poly(&qfact_u(mono.e) * &qfact_u(mono.f));
        match c.to_laurent() {
            Ok(lp) if lp.is_nonneg() => prof.nonneg += 1,
            Ok(lp) if (-&lp).is_nonneg() => prof.nonpos += 1,
            Ok(_) => prof.mixed += 1,
            Err(_) => prof.non_integral += 1,
        }
    }
    prof
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::run_suite;

    #[test]
    fn mult_count_is_per_pair() {
        let r = run_suite(Suite::MultEven, 6, VarsigmaMode::Generic).unwrap();
        assert!(r.passed());
        // pairs (m, n) with m + n <= 6
        assert_eq!(r.count("product-expansion"), 28);
        assert_eq!(r.count("symmetry"), 12);
    }

    #[test]
    fn failing_check_carries_witness() {
        let j = job("demo", &[], || u_zero(UElement::b(), VarsigmaMode::Generic));
        assert_eq!((j.run)().unwrap(), Some(UElement::b().to_string()));
        let diff = map_diff(&BTreeMap::from([(1, Scalar::one())]), &BTreeMap::new()).unwrap();
        assert_eq!(diff, "B^(1): 1");
    }

    #[test]
    fn small_suites_pass() {
        for (s, b) in [
            (Suite::QIdentities, 4),
            (Suite::FhyForms, 3),
            (Suite::ProofRecurrences, 4),
            (Suite::Chi, 3),
        ] {
            for mode in [VarsigmaMode::Generic, VarsigmaMode::Specialized] {
                let r = run_suite(s, b, mode).unwrap();
                assert!(r.passed(), "{s} {mode}: {:?}", r.failures().next());
            }
        }
    }
}
