//! Coefficient arithmetic: [`LaurentPoly`] in `(q, v)` and its fraction field [`Scalar`].
//!
//! Throughout the crate `v` denotes the parameter varsigma; it is an independent
//! invertible variable unless a value has been specialized to `v = q^-1`.

pub(crate) mod cyclotomic;
mod laurent;
mod scalar;

pub use laurent::{LaurentPoly, Mono};
pub use scalar::Scalar;
