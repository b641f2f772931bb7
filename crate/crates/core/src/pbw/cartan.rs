//! The Cartan elements `h`, `[h; a]_n` and the rational identities in `K^-2`
//! that drive the coproduct recurrences.

use super::{PbwMonomial, UElement};
use crate::coeff::Scalar;
use crate::error::{nonneg, Result};
use crate::qcomb::qint;

/// `h = (K^-2 - 1) / (q^2 - 1)`
pub fn h() -> UElement {
    let inv = Scalar::recip_q_power_minus_one(2);
    UElement::from_terms([(PbwMonomial::new(0, -2, 0), inv.clone()), (PbwMonomial::ONE, -inv)])
}

/// `q^s K^-2 - 1`
fn lin(s: i32) -> UElement {
    UElement::from_terms([
        (PbwMonomial::new(0, -2, 0), Scalar::q_pow(s)),
        (PbwMonomial::ONE, Scalar::from_int(-1)),
    ])
}

/// `[h; a]_n = prod_{i=1}^n (q^{4a+4i-4} K^-2 - 1) / (q^{4i} - 1)`
pub fn h_binom(a: i32, n: i32) -> Result<UElement> {
    let n = nonneg(n)?;
    let mut acc = UElement::one();
    for i in 1..=n {
        let factor = lin(4 * a + 4 * i as i32 - 4).scale(&Scalar::recip_q_power_minus_one(4 * i));
        acc = &acc * &factor;
    }
    Ok(acc)
}

/// One summand `coef * num / den` of an identity, where `den` is `q^s K^-2 - 1` when present.
struct Part {
    coef: Scalar,
    num: UElement,
    den: bool,
}

fn part(coef: Scalar, num: UElement, den: bool) -> Part {
    Part { coef, num, den }
}

/// LHS minus RHS of the identity in `K^-2` behind the coproduct recurrence at
/// target index `n` (`2l` when `n_even`, else `2l + 1`) and summand `(r, c, a)`,
/// with the common denominator cleared. The identity holds iff this is zero.
pub fn cartan_identity_residual(n_even: bool, l: i32, r: i32, c: i32, a: i32) -> UElement {
    let q = Scalar::q_pow;
    let qi = |n: i32| Scalar::from_poly(qint(n));
    let one = UElement::one;
    let x = || UElement::k_pow(-2);
    let q4c = &q(4 * c) - &Scalar::one();
    let (den, target, parts) = match (n_even, r % 2 == 0) {
        (true, true) => (
            4 * c - 2 * r,
            qi(2 * l),
            vec![
                part(&q(r - 2 * a) * &qi(2 * l - r), one(), false),
                part(&q(2 * l - a) * &qi(a), one(), false),
                part(&q(2 * c + r - 2 * l - a) * &qi(r - 2 * c - a), lin(-2 * r), true),
                part(&q(2 * c - 2 * l) * &qi(2 * c), lin(-2 * a), true),
            ],
        ),
        (true, false) => (
            4 * c - 2 * r + 2,
            qi(2 * l),
            vec![
                part(&q(r - 2 * a) * &qi(2 * l - r), lin(2 - 2 * r), true),
                part(&q(2 * l - a) * &qi(a), one(), false),
                part(&q(2 * c + r - 2 * l - a) * &qi(r - 2 * c - a), lin(2 - 2 * r), true),
                part(&q(2 * c - 2 * l) * &qi(2 * c), lin(-2 * a), true),
                part(&(&q(1 - r - 2 * a) * &qi(2 * l - r + 1)) * &q4c, x(), true),
            ],
        ),
        (false, true) => (
            4 - 2 * r,
            qi(2 * l + 1),
            vec![
                part(&q(r - 4 * c - 2 * a) * &qi(2 * l + 1 - r), one(), false),
                part(&(&q(-4 * c - r + 3 - 2 * a) * &q4c) * &qi(2 * l + 2 - r), x(), true),
                part(&q(-4 * c - a + 2 * l + 1) * &qi(a), lin(4 * c + 4 - 2 * r), true),
                part(&q(r - a - 2 * c - 1 - 2 * l) * &qi(r - 2 * c - a), one(), false),
                part(
                    &(&q(-4 * c + 2 - 2 * l) * &Scalar::recip_q_power_minus_one(2)) * &q4c,
                    lin(-2 * a),
                    true,
                ),
                part(-&(&(&q(-4 * c + 1) * &q4c) * &qi(2 * l)), one(), true),
            ],
        ),
        (false, false) => (
            2 - 2 * r,
            qi(2 * l + 1),
            vec![
                part(&q(r - 4 * c - 2 * a) * &qi(2 * l + 1 - r), lin(4 * c + 2 - 2 * r), true),
                part(&q(1 + 2 * l - 4 * c - a) * &qi(a), lin(4 * c + 2 - 2 * r), true),
                part(&q(-2 * c + r - 1 - 2 * l - a) * &qi(r - 2 * c - a), one(), false),
                part(&q(-2 * c + 1 - 2 * l) * &qi(2 * c), lin(-2 * a), true),
                part(-&(&(&q(-4 * c + 1) * &qi(2 * l)) * &q4c), one(), true),
            ],
        ),
    };
    let d = lin(den);
    let mut acc = d.scale(&-target);
    for p in parts {
        let term = if p.den { p.num } else { &p.num * &d };
        acc = &acc + &term.scale(&p.coef);
    }
    acc
}
