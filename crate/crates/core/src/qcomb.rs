//! Balanced quantum integers, factorials and binomials.

use crate::coeff::LaurentPoly;
use crate::error::{Error, Result};

/// `[n] = (q^n - q^-n) / (q - q^-1)`, so `[-n] = -[n]`.
pub fn qint(n: i32) -> LaurentPoly {
    let sign = n.signum() as i64;
    let n = n.abs();
    LaurentPoly::from_q_coeffs((0..n).map(|i| (n - 1 - 2 * i, sign)))
}

/// `[n]_{q^m} = (q^{mn} - q^{-mn}) / (q^m - q^-m)`.
pub fn qint_base(n: i32, m: i32) -> Result<LaurentPoly> {
    if m == 0 {
        return Err(Error::ZeroBase);
    }
    let m = m.abs();
    let sign = n.signum() as i64;
    let n = n.abs();
    Ok(LaurentPoly::from_q_coeffs((0..n).map(|i| (m * (n - 1 - 2 * i), sign))))
}

/// `[n]! = [1][2]...[n]`.
pub fn qfact(n: i32) -> Result<LaurentPoly> {
    let n = crate::error::nonneg(n)?;
    Ok(qfact_u(n))
}

pub(crate) fn qfact_u(n: u32) -> LaurentPoly {
    (1..=n as i32).fold(LaurentPoly::one(), |acc, i| &acc * &qint(i))
}

/// The quantum binomial `[m]! / ([n]! [m-n]!)`, zero when `n < 0` or `n > m`.
pub fn qbinom(m: i32, n: i32) -> LaurentPoly {
    if m < 0 || n < 0 || n > m {
        return LaurentPoly::zero();
    }
    let n = n.min(m - n);
    // [m][m-1]...[m-n+1] / [n]!
    let top = (m - n + 1..=m).fold(LaurentPoly::one(), |acc, i| &acc * &qint(i));
    top.div_exact(&qfact_u(n as u32))
        .expect("quantum binomials are Laurent polynomials")
}
