//! Painleve VI on the orbit of an algebraic Picard solution: Backlund
//! transformations realized on concrete rational functions of `z`, tau
//! function monomials, and the factorization of the orbit into `t^(k)`.

pub mod checks;
pub mod probe;
pub mod state;
pub mod tau;
pub mod tqf;

pub use probe::{spp_probe, SppProbe};
pub use checks::{evi_residual, modified_hamiltonian, pa_residual, ph_residual, py_residual};
pub use state::{backlund_apply, picard_seed, q_lattice, state_at, ti_word, Gen, LVector, PVIState};
pub use tau::{tau_lattice, tau_normalizer, TauExponent, TauState};
pub use tqf::{
    factor_match_tqf, klr_inverse, klr_map, scc_exponents, tau_factor_check, tqf_indices,
    tqf_quotient, SccReport,
    TqfMatch,
};

use ev_core::ExactError;
use ev_lattice::LatticeError;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum PError {
    #[error("degenerate state: {0}")]
    DegenerateState(String),
    #[error("missing dependency t^{0:?}")]
    MissingDependency([i64; 4]),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    Exact(#[from] ExactError),
}
