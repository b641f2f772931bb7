//! Comultiplication `Delta(B^(n)) = sum_r B^(n-r) (x) S_{n,r}` in closed form,
//! in the reversed (F before E-check) form, and computed directly.

use super::{idp_pbw, Parity};
use crate::coeff::Scalar;
use crate::error::{nonneg, Result};
use crate::pbw::{h_binom, DividedGen, UElement};
use crate::qcomb::qint;
use crate::tensor::TensorElement;

/// The right tensor factor `S_{n,r}` paired with `B^(n-r)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComultTerm {
    pub r: u32,
    pub right: UElement,
}

/// Sign convention for the reversed form.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FhySign {
    /// `(-1)^c` in front of every summand.
    Alternating,
    /// No sign.
    Omitted,
}

/// Whether `(p, n)` uses `binom(2c, 2)` and `floor((r-2)/2)` (else `binom(2c+1, 2)` and `floor((r-1)/2)`).
fn first_variant(p: Parity, n: u32) -> bool {
    (p == Parity::Ev) == n.is_multiple_of(2)
}

fn floor_half(x: i32) -> i32 {
    x.div_euclid(2)
}

fn echeck_powers(n: u32) -> Vec<UElement> {
    (0..=n)
        .map(|a| UElement::divided_power(DividedGen::Echeck, a as i32).expect("a >= 0"))
        .collect()
}

fn f_power(b: i32) -> UElement {
    UElement::divided_power(DividedGen::F, b).expect("b >= 0")
}

fn component(p: Parity, n: u32, r: u32, echecks: &[UElement]) -> UElement {
    let (n, r) = (n as i32, r as i32);
    let first = first_variant(p, n as u32);
    let shift = if first { -floor_half(r - 2) } else { -floor_half(r - 1) };
    let kpow = UElement::k_pow(r - n);
    let mut acc = UElement::zero();
    for c in 0..=r / 2 {
        let binom = if first { c * (2 * c - 1) } else { c * (2 * c + 1) };
        let hb = &h_binom(shift, c).expect("c >= 0") * &kpow;
        for a in 0..=r - 2 * c {
            let b = r - 2 * c - a;
            let e = binom + (r - 2 * c) * (r - n) - a * b;
            let coef = &Scalar::q_pow(e) * &Scalar::qv_power(c as u32);
            let term = &(&echecks[a as usize] * &hb) * &f_power(b);
            acc = &acc + &term.scale(&coef);
        }
    }
    acc
}

fn fhy_component(p: Parity, n: u32, r: u32, sign: FhySign, echecks: &[UElement]) -> UElement {
    let (n, r) = (n as i32, r as i32);
    let first = first_variant(p, n as u32);
    let base = if first { floor_half(r - 2) } else { floor_half(r - 1) };
    let kpow = UElement::k_pow(r - n);
    let mut acc = UElement::zero();
    for c in 0..=r / 2 {
        let hb = &h_binom(1 - c + base, c).expect("c >= 0") * &kpow;
        for a in 0..=r - 2 * c {
            let b = r - 2 * c - a;
            let e = if first { 3 * c } else { c } - (r - 2 * c) * (r - n) + a * b;
            let mut coef = &Scalar::q_pow(e) * &Scalar::qv_power(c as u32);
            if sign == FhySign::Alternating && c % 2 == 1 {
                coef = -coef;
            }
            let term = &(&f_power(a) * &hb) * &echecks[b as usize];
            acc = &acc + &term.scale(&coef);
        }
    }
    acc
}

/// `S_{n,r}` from the closed formula.
pub fn comult_component(p: Parity, n: i32, r: i32) -> Result<UElement> {
    let (n, r) = (nonneg(n)?, nonneg(r)?);
    if r > n {
        return Ok(UElement::zero());
    }
    Ok(component(p, n, r, &echeck_powers(r)))
}

/// `S_{n,r}` from the reversed form.
pub fn comult_fhy_component(p: Parity, n: i32, r: i32, sign: FhySign) -> Result<UElement> {
    let (n, r) = (nonneg(n)?, nonneg(r)?);
    if r > n {
        return Ok(UElement::zero());
    }
    Ok(fhy_component(p, n, r, sign, &echeck_powers(r)))
}

/// All `S_{n,r}`, `0 <= r <= n`, from the closed formula.
pub fn comult_closed(p: Parity, n: i32) -> Result<Vec<ComultTerm>> {
    let n = nonneg(n)?;
    let echecks = echeck_powers(n);
    Ok((0..=n)
        .map(|r| ComultTerm {
            r,
            right: component(p, n, r, &echecks),
        })
        .collect())
}

/// All `S_{n,r}` from the reversed form `F^(a) [h; .]_c K^{r-n} E-check^(b)` with alternating signs.
pub fn comult_fhy(p: Parity, n: i32) -> Result<Vec<ComultTerm>> {
    comult_fhy_with_sign(p, n, FhySign::Alternating)
}

pub fn comult_fhy_with_sign(p: Parity, n: i32, sign: FhySign) -> Result<Vec<ComultTerm>> {
    let n = nonneg(n)?;
    let echecks = echeck_powers(n);
    Ok((0..=n)
        .map(|r| ComultTerm {
            r,
            right: fhy_component(p, n, r, sign, &echecks),
        })
        .collect())
}

/// `sum_r B^(n-r) (x) S_{n,r}` with the left factors expanded in PBW form.
pub fn assemble_comult(p: Parity, n: u32, terms: &[ComultTerm]) -> TensorElement {
    terms
        .iter()
        .map(|t| TensorElement::from_pair(&idp_pbw(p, n - t.r), &t.right))
        .sum()
}

/// `Delta` applied to the PBW image of `B^(n)`.
pub fn comult_direct(p: Parity, n: i32) -> Result<TensorElement> {
    let n = nonneg(n)?;
    Ok(TensorElement::delta(&idp_pbw(p, n)))
}

/// LHS minus RHS of the recurrence for `S_{n,r}` obtained from `B B^(n-1)`:
///
/// `[n] S_{n,r} = [n-r] K^-1 S_{n-1,r} + (E-check + F) S_{n-1,r-1}
///   + [n-r+1] q v K^-1 S_{n-1,r-2}   (when p carries at n-r+1)
///   - [n-1] q v S_{n-2,r-2}          (when p carries at n-1)`.
pub fn comult_recurrence_residual(p: Parity, n: i32, r: i32) -> Result<UElement> {
    let s = |nn: i32, rr: i32| -> Result<UElement> {
        if nn < 0 || rr < 0 || rr > nn {
            Ok(UElement::zero())
        } else {
            comult_component(p, nn, rr)
        }
    };
    let qi = |k: i32| Scalar::from_poly(qint(k));
    let qv = Scalar::qv_pow(1, 1);
    let kinv = UElement::k_pow(-1);
    let mut rhs = &(&kinv * &s(n - 1, r)?).scale(&qi(n - r)) + &(&UElement::b() * &s(n - 1, r - 1)?);
    if n - r + 1 >= 0 && p.carries((n - r + 1) as u32) {
        rhs = &rhs + &(&kinv * &s(n - 1, r - 2)?).scale(&(&qi(n - r + 1) * &qv));
    }
    if n >= 1 && p.carries((n - 1) as u32) {
        rhs = &rhs - &s(n - 2, r - 2)?.scale(&(&qi(n - 1) * &qv));
    }
    Ok(&s(n, r)?.scale(&qi(n)) - &rhs)
}
