//! High-precision numerics for the theta-function and modular side: theta
//! products, eta quotients, the uniformizing functions `x(z)` and
//! `zeta(tau)`, and sampling checks of identities involving them.

pub mod eval;
pub mod hpc;
pub mod modular;
pub mod schrodinger;
pub mod span;
pub mod taylor;
pub mod tep;
pub mod theta;
pub mod trt;
pub mod wp;

pub use eval::{eval_poly, eval_ratzeta, eval_xfrac};
pub use hpc::{prec_for, Hpc};
pub use modular::{modular_suite, ModularPoint, ModularSuite};
pub use schrodinger::{schrodinger_check, SchrodingerReport};
pub use span::{span_check, SpanReport};
pub use taylor::{taylor_coeffs, Series, TaylorOptions};
pub use tep::{reduce_to_upper, tep_check, TepReport};
pub use theta::{eta, theta, theta_prod};
pub use trt::{trt_qd_check, TrtContext, TrtQdReport};
pub use wp::{weierstrass_p, E2};

use ev_core::ExactError;
use ev_lattice::LatticeError;
use ev_painleve::PError;
use ev_tsystem::TError;

/// Smallest supported working precision in decimal digits.
pub const MIN_DIGITS: u32 = 40;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum ModError {
    #[error("domain error: {0}")]
    DomainError(String),
    #[error("sample too close to a singularity: {0}")]
    NearSingularSample(String),
    #[error("precision exhausted: error bound {bound:e} above tolerance {tol:e}")]
    PrecisionExhausted { bound: f64, tol: f64 },
    #[error("missing dependency t^{0:?}")]
    MissingDependency([i64; 4]),
    #[error(transparent)]
    T(#[from] TError),
    #[error(transparent)]
    P(#[from] PError),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    Exact(#[from] ExactError),
}

pub(crate) fn check_digits(digits: u32) -> Result<(), ModError> {
    if digits < MIN_DIGITS {
        return Err(ModError::DomainError(format!(
            "digits = {digits} is below the minimum {MIN_DIGITS}"
        )));
    }
    Ok(())
}
