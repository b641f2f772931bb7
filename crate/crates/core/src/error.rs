use thiserror::Error;

/// Errors raised by the algebra kernel and the verification harness.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("denominator vanishes after substituting varsigma = q^-1")]
    DenominatorVanishes,
    #[error("operation requires a varsigma-free (specialized) value")]
    RequiresSpecialized,
    #[error("value is not a Laurent polynomial: {0}")]
    NotIntegral(String),
    #[error("quantum integer base q^0 is undefined")]
    ZeroBase,
    #[error("negative input {0} where a nonnegative integer is required")]
    NegativeInput(i64),
    #[error("bound {0} is below 1")]
    InvalidBound(i64),
    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
    #[error("bound {requested} exceeds the resource ceiling {ceiling}")]
    ResourceLimit { requested: i64, ceiling: i64 },
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn nonneg(n: i32) -> Result<u32> {
    u32::try_from(n).map_err(|_| Error::NegativeInput(n as i64))
}
