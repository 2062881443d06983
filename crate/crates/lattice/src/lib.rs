//! The `m = 0` lattice `t^(k)`, generated from three seed values by two
//! bilinear differential recursions and the `S_4` and complement
//! symmetries, with cross-checks against the determinant formula.

pub mod build;
pub mod coeffs;
pub mod ode;
pub mod persist;
pub mod recursion;
pub mod store;
pub mod toda;

pub use build::{build, build_with_order, seeds, Order};
pub use coeffs::{rec_coeff, Coeff};
pub use ode::fn_ode_check;
pub use persist::{load, persist};
pub use recursion::{rec_residual, rec_solve, Corner, Direction, RecStep};
pub use store::{LatticeBox, LatticeStore, Provenance};
pub use toda::toda_step;

use ev_core::ExactError;
use ev_tsystem::TError;

pub type K = [i64; 4];

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum LatticeError {
    #[error("missing dependency t^{0:?}")]
    MissingDependency(K),
    #[error("t^{0:?} is the zero function but is needed as a divisor")]
    ZeroDivisor(K),
    #[error("{0} cells unreachable, first t^{1:?}")]
    Unreachable(usize, K),
    #[error("conflicting values for t^{0:?}")]
    Conflict(K),
    #[error("index {0:?} has odd sum")]
    OddIndex(K),
    #[error("not a polynomial: {0}")]
    NonPolynomial(String),
    #[error("format error: {0}")]
    Format(String),
    #[error("io error: {0}")]
    Io(String),
    #[error(transparent)]
    T(#[from] TError),
    #[error(transparent)]
    Exact(#[from] ExactError),
}
