//! Exact symbolic kernel for the split rank-one iquantum group inside `U_q(sl2)`.
//!
//! The crate is layered bottom-up:
//!
//! - [`coeff`]: bivariate Laurent polynomials in `(q, v)` (with `v` standing for the
//!   parameter varsigma) and their field of fractions [`Scalar`].
//! - [`qcomb`]: balanced quantum integers, factorials and binomials.
//! - [`pbw`]: `U_q(sl2)` in the PBW basis `E^a K^b F^c`, the Cartan elements `h` and
//!   `[h; a]_n`, divided powers and the anti-involution `chi`.
//! - [`tensor`]: `U (x) U` and the coproduct.
//! - [`idp`]: iota-divided powers of both parities, their multiplication and
//!   comultiplication structure constants in closed form, and the direct
//!   computations they are checked against.
//! - [`verify`]: verification suites, structure-constant tables and reports.

pub mod coeff;
pub mod error;
pub mod idp;
pub mod pbw;
pub mod qcomb;
pub mod tensor;
pub mod verify;

pub use coeff::{LaurentPoly, Mono, Scalar};
pub use error::{Error, Result};

pub use idp::{BPolynomial, ComultTerm, Parity};
pub use pbw::{PbwMonomial, UElement};
pub use tensor::TensorElement;
