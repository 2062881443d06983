//! Exact arithmetic over `Q(z)`: canonical rational functions in one
//! parameter, sparse multivariate polynomials over them, and exact
//! determinants.

pub mod intpoly;
pub mod matrix;
pub mod mpoly;
pub mod polyzeta;
pub mod ratzeta;
pub mod text;

pub use intpoly::IntPoly;
pub use matrix::{det_bareiss, det_cofactor, det_minors, ExactDivRing, Ring};
pub use mpoly::{Monomial, MPolyX};
pub use polyzeta::PolyZeta;
pub use ratzeta::RatZeta;
pub use text::{parse_mpoly, parse_ratzeta};

/// Arbitrary-precision rational number, always in lowest terms.
pub type Rat = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExactError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("inexact division: remainder is nonzero")]
    InexactDivision,
    #[error("operation undefined for the zero function")]
    ZeroFunction,
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

/// Shorthand for an integer-valued [`Rat`].
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(n.into())
}

/// Shorthand for `a / b` as a [`Rat`].
pub fn frac(a: i64, b: i64) -> Rat {
    Rat::new(a.into(), b.into())
}
