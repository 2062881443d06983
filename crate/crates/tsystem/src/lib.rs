//! The lattice `T_n^(k)` of symmetric functions over `Q(z)`, built from
//! split Izergin–Korepin type determinants, together with its symmetries,
//! cusp behaviour and the derived polynomial families.

pub mod cusp;
pub mod families;
pub mod pdet;
pub mod split;
pub mod symmetry;
pub mod tnk;
pub mod trig;
pub mod weights;
pub mod xfrac;
pub mod yseq;

use std::fmt;

use ev_core::ExactError;

pub use split::{big_t, split_t};
pub use symmetry::{apply_symmetry, Symmetry};
pub use tnk::{tk, tnk, TValue};
pub use weights::{xi, Weight};
pub use xfrac::XFrac;
pub use yseq::yseq;
pub use families::{family_eval, Family, FamilyValue};
pub use pdet::pdet_ad;
pub use cusp::{cusp_order, Cusp};
pub use trig::trig_limit_check;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TError {
    #[error("invalid index: {0}")]
    InvalidIndex(String),
    #[error("size bound exceeded: {0}")]
    SizeBound(String),
    #[error("|k| = {0} is odd")]
    ParityError(i64),
    #[error("this symmetry needs m = 0")]
    MZeroRequired,
    #[error("computed function vanishes identically: {0}")]
    ZeroFunction(String),
    #[error("expected a polynomial: {0}")]
    NonPolynomial(String),
    #[error(transparent)]
    Exact(#[from] ExactError),
}

/// Lattice address `(k_0..k_3; n)`; the number of free variables is
/// `m = 2n - |k|`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KIndex {
    pub k: [i64; 4],
    pub n: i64,
}

impl KIndex {
    pub fn new(k: [i64; 4], n: i64) -> Result<Self, TError> {
        let idx = KIndex { k, n };
        if idx.m() < 0 {
            return Err(TError::InvalidIndex(format!(
                "m = 2n - |k| = {} is negative for {idx}",
                idx.m()
            )));
        }
        Ok(idx)
    }

    /// Index with `m` free variables.
    pub fn with_m(k: [i64; 4], m: usize) -> Result<Self, TError> {
        let s = m as i64 + k.iter().sum::<i64>();
        if s % 2 != 0 {
            return Err(TError::ParityError(s));
        }
        Self::new(k, s / 2)
    }

    /// The `m = 0` index `t^(k)`.
    pub fn m_zero(k: [i64; 4]) -> Result<Self, TError> {
        let s: i64 = k.iter().sum();
        if s % 2 != 0 {
            return Err(TError::ParityError(s));
        }
        Ok(KIndex { k, n: s / 2 })
    }

    pub fn abs_k(&self) -> i64 {
        self.k.iter().sum()
    }

    pub fn m(&self) -> i64 {
        2 * self.n - self.abs_k()
    }

    /// Half-size of the underlying determinant: `n + |k^-|`.
    pub fn underlying_n(&self) -> i64 {
        self.n + self.k.iter().map(|&x| (-x).max(0)).sum::<i64>()
    }
}

impl fmt::Display for KIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.k;
        write!(f, "T_{}^({a},{b},{c},{d})", self.n)
    }
}

/// Size bounds for the exact determinant engine.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest `n` for fully symbolic `T(x_1..x_2n)`.
    pub max_symbolic_n: usize,
    /// Largest half-size of any determinant built for `T_n^(k)`.
    pub max_underlying_n: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_symbolic_n: 4,
            max_underlying_n: 6,
        }
    }
}
