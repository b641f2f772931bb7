//! Closed multiplication formulas `B^(m) B^(n) = sum_l c_l B^(m+n-2l)`.

use std::collections::BTreeMap;

use super::Parity;
use crate::coeff::Scalar;
use crate::error::{nonneg, Error, Result};
use crate::qcomb::{qbinom, qint};

/// A product of quantum integers `prod [n_i]^{e_i}` kept unevaluated, so that
/// `[0] / [0]` from a vanishing numerator and denominator cancels formally.
#[derive(Clone, Debug, Default)]
struct QRatio {
    sign: i32,
    zeros: i32,
    exps: BTreeMap<i32, i32>,
}

impl QRatio {
    fn one() -> Self {
        QRatio {
            sign: 1,
            ..Default::default()
        }
    }

    fn with(mut self, n: i32, e: i32) -> Self {
        if n == 0 {
            self.zeros += e;
        } else {
            if n < 0 && e % 2 != 0 {
                self.sign = -self.sign;
            }
            *self.exps.entry(n.abs()).or_default() += e;
        }
        self
    }

    fn num(self, n: i32) -> Self {
        self.with(n, 1)
    }

    fn den(self, n: i32) -> Self {
        self.with(n, -1)
    }

    fn times(mut self, other: &QRatio) -> Self {
        self.sign *= other.sign;
        self.zeros += other.zeros;
        for (n, e) in &other.exps {
            *self.exps.entry(*n).or_default() += e;
        }
        self
    }

    fn eval(&self) -> Result<Scalar> {
        if self.zeros > 0 {
            return Ok(Scalar::zero());
        }
        if self.zeros < 0 {
            return Err(Error::DivisionByZero);
        }
        let mut acc = Scalar::from_int(self.sign as i64);
        for (&n, &e) in &self.exps {
            let f = if e > 0 {
                Scalar::from_poly(qint(n))
            } else {
                Scalar::recip_qint(n)?
            };
            for _ in 0..e.abs() {
                acc = &acc * &f;
            }
        }
        Ok(acc)
    }
}

/// `prod_{m=lo}^{l} [2a-2m+2][top(m)] / ([bottom(m)][2m + shift])`
fn ladder(lo: i32, l: i32, a: i32, top: impl Fn(i32) -> i32, bottom: impl Fn(i32) -> i32, shift: i32) -> QRatio {
    (lo..=l).fold(QRatio::one(), |r, m| {
        r.num(2 * a - 2 * m + 2).num(top(m)).den(bottom(m)).den(2 * m + shift)
    })
}

/// Coefficients of `B^(d)` in `B^(m) B^(n)` from the closed formulas, zero coefficients omitted.
pub fn mult_closed(p: Parity, m: i32, n: i32) -> Result<BTreeMap<u32, Scalar>> {
    let (m, n) = (nonneg(m)? as i32, nonneg(n)? as i32);
    let qv = |l: i32| Scalar::qv_power(l as u32);
    // (degree, prefactor binomial, ratio, power of q v)
    let mut terms: Vec<(i32, (i32, i32), QRatio, i32)> = Vec::new();
    match p {
        Parity::Ev if m == 0 || n == 0 => terms.push((m + n, (0, 0), QRatio::one(), 0)),
        Parity::Ev => {
            let (k, a) = ((m + 1) / 2, (n + 1) / 2);
            let step = |mm: i32| 2 * k + 2 * a - 2 * mm + 1;
            let top = |mm: i32| 2 * k - 2 * mm + 2;
            match (m % 2, n % 2) {
                (1, 1) => {
                    let binom = (2 * k + 2 * a - 2, 2 * k - 1);
                    terms.push((m + n, binom, QRatio::one(), 0));
                    for l in 2..=k {
                        terms.push((2 * k + 2 * a - 2 * l, binom, ladder(2, l, a, top, step, -2), l - 1));
                    }
                }
                (1, 0) | (0, 1) => {
                    // n = 2a' with a' = a for (odd, ev); for (ev, odd) m = 2k and n = 2a - 1
                    let (k, a) = if m % 2 == 1 { (k, n / 2) } else { (m / 2, a) };
                    let step = |mm: i32| 2 * k + 2 * a - 2 * mm + 1;
                    let top = |mm: i32| 2 * k - 2 * mm + 2;
                    let binom = (2 * k + 2 * a - 1, m);
                    terms.push((m + n, binom, QRatio::one(), 0));
                    for l in 1..=k {
                        terms.push((2 * k + 2 * a - 2 * l - 1, binom, ladder(1, l, a, top, step, 0), l));
                    }
                }
                _ => {
                    let (k, a) = (m / 2, n / 2);
                    let step = |mm: i32| 2 * k + 2 * a - 2 * mm + 1;
                    let top = |mm: i32| 2 * k - 2 * mm + 2;
                    let binom = (2 * k + 2 * a, 2 * k);
                    terms.push((m + n, binom, QRatio::one(), 0));
                    for l in 1..=k {
                        let r = ladder(1, l, a, top, step, 0)
                            .num(2 * k + 2 * a - 2 * l)
                            .den(2 * k + 2 * a);
                        terms.push((2 * k + 2 * a - 2 * l, binom, r, l));
                    }
                }
            }
        }
        Parity::Odd => {
            let (k, a) = (m / 2, n / 2);
            let top = |mm: i32| 2 * k - 2 * mm + 2;
            match (m % 2, n % 2) {
                (0, 0) => {
                    let step = |mm: i32| 2 * k + 2 * a - 2 * mm + 1;
                    let binom = (2 * k + 2 * a, 2 * k);
                    terms.push((m + n, binom, QRatio::one(), 0));
                    for l in 1..=k {
                        terms.push((2 * k + 2 * a - 2 * l, binom, ladder(1, l, a, top, step, 0), l));
                    }
                }
                (0, 1) | (1, 0) => {
                    let step = |mm: i32| 2 * k + 2 * a - 2 * mm + 3;
                    let binom = (2 * k + 2 * a + 1, m);
                    terms.push((m + n, binom, QRatio::one(), 0));
                    for l in 1..=k {
                        terms.push((2 * k + 2 * a - 2 * l + 1, binom, ladder(1, l, a, top, step, 0), l));
                    }
                }
                _ => {
                    let step = |mm: i32| 2 * k + 2 * a - 2 * mm + 3;
                    let top = |mm: i32| 2 * k - 2 * mm + 4;
                    let binom = (2 * k + 2 * a + 2, 2 * k + 1);
                    terms.push((m + n, binom, QRatio::one(), 0));
                    for l in 1..=k + 1 {
                        let prod = ladder(1, l, a, top, step, 0);
                        let first = QRatio::one()
                            .num(2 * k + 2 * a - 2 * l + 2)
                            .num(2 * k - 2 * l + 2)
                            .den(2 * k + 2 * a + 2)
                            .den(2 * k + 2);
                        let second = QRatio::one()
                            .num(2 * k + 2 * a - 2 * l + 3)
                            .num(2 * k + 2 * a - 2 * l + 3)
                            .num(2 * l)
                            .den(2 * k + 2 * a + 2)
                            .den(2 * a - 2 * l + 2)
                            .den(2 * k + 2);
                        let d = 2 * k + 2 * a - 2 * l + 2;
                        terms.push((d, binom, first.times(&prod), l));
                        terms.push((d, binom, second.times(&prod), l));
                    }
                }
            }
        }
    }
    let mut out: BTreeMap<u32, Vec<Scalar>> = BTreeMap::new();
    for (d, (top, bottom), ratio, power) in terms {
        let c = &(&Scalar::from_poly(qbinom(top, bottom)) * &ratio.eval()?) * &qv(power);
        out.entry(d as u32).or_default().push(c);
    }
    Ok(out
        .into_iter()
        .filter_map(|(d, cs)| {
            let s = Scalar::sum(cs);
            (!s.is_zero()).then_some((d, s))
        })
        .collect())
}
