//! The two bilinear recursions in the `k_0` direction,
//!
//! `t^(k-2e0) t^(k+e0±e1) = c1 (t^(k) t'^(k-e0±e1)/(2k0-1) - t'^(k) t^(k-e0±e1)/(2k0+1))
//!                           + c2 C^(k) t^(k) t^(k-e0±e1)`,
//!
//! with `C = A` for the upper sign and `C = B` for the lower one.

use ev_core::{Rat, RatZeta};

use crate::coeffs::{rec_coeff, Coeff};
use crate::store::LatticeStore;
use crate::{LatticeError, K};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    /// `k + e0 + e1` on the left
    Kma,
    /// `k + e0 - e1` on the left
    Kmb,
}

/// The corner of the identity being solved for; only the two factors of the
/// left-hand side enter algebraically.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Corner {
    /// `k - 2e0`
    Low,
    /// `k + e0 ± e1`
    High,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RecStep {
    pub direction: Direction,
    pub base: K,
    pub solved: Corner,
}

/// The four indices `(low, high, base, side)` of the identity at `k`.
pub fn corners(direction: Direction, k: K) -> (K, K, K, K) {
    let s = match direction {
        Direction::Kma => 1,
        Direction::Kmb => -1,
    };
    let [a, b, c, d] = k;
    ([a - 2, b, c, d], [a + 1, b + s, c, d], k, [a - 1, b + s, c, d])
}

impl RecStep {
    pub fn target(&self) -> K {
        let (low, high, _, _) = corners(self.direction, self.base);
        match self.solved {
            Corner::Low => low,
            Corner::High => high,
        }
    }

    /// The step solving for `target` as the given corner.
    pub fn solving(direction: Direction, solved: Corner, target: K) -> RecStep {
        let [a, b, c, d] = target;
        let s = match direction {
            Direction::Kma => 1,
            Direction::Kmb => -1,
        };
        let base = match solved {
            Corner::Low => [a + 2, b, c, d],
            Corner::High => [a - 1, b - s, c, d],
        };
        RecStep {
            direction,
            base,
            solved,
        }
    }
}

fn int(k: i64) -> RatZeta {
    RatZeta::from_int(k)
}

fn poly(s: &str) -> RatZeta {
    ev_core::parse_ratzeta(s).expect("constant text")
}

/// The right-hand side at `k` from `t^(k)` and `t^(k-e0±e1)`.
pub fn rec_rhs(direction: Direction, k: K, base: &RatZeta, side: &RatZeta) -> RatZeta {
    let k0 = k[0];
    let (c1, c2, coeff) = match direction {
        Direction::Kma => (
            poly("z^2*(z + 1)*(z - 1)*(2*z + 1)^2"),
            poly("z*(2*z + 1)/(z + 2)"),
            Coeff::A,
        ),
        Direction::Kmb => (
            poly("(z + 1)*(z - 1)*(2*z + 1)^2*(z + 2)^2/z^2"),
            poly("(2*z + 1)*(z + 2)/z^3"),
            Coeff::B,
        ),
    };
    let m = int(2 * k0 - 1);
    let p = int(2 * k0 + 1);
    let wronskian = base
        .mul(&side.derivative())
        .div(&m)
        .and_then(|x| Ok(x.sub(&base.derivative().mul(side).div(&p)?)))
        .expect("odd integers are nonzero");
    let c = RatZeta::from_polyzeta(&rec_coeff(coeff, k))
        .scale(&Rat::new(1.into(), (2 * (2 * k0 - 1) * (2 * k0 + 1)).into()));
    c1.mul(&wronskian).add(&c2.mul(&c).mul(base).mul(side))
}

/// `lhs - rhs` of the identity at `k` with all four corners from `store`.
pub fn rec_residual(direction: Direction, k: K, store: &LatticeStore) -> Result<RatZeta, LatticeError> {
    let (low, high, base, side) = corners(direction, k);
    let lhs = store.require(&low)?.mul(store.require(&high)?);
    let rhs = rec_rhs(direction, k, store.require(&base)?, store.require(&side)?);
    Ok(lhs.sub(&rhs))
}

/// Solves the identity for the unknown corner of `step`.
pub fn rec_solve(step: &RecStep, store: &LatticeStore) -> Result<RatZeta, LatticeError> {
    let (low, high, base, side) = corners(step.direction, step.base);
    let rhs = rec_rhs(
        step.direction,
        step.base,
        store.require(&base)?,
        store.require(&side)?,
    );
    let other = match step.solved {
        Corner::Low => high,
        Corner::High => low,
    };
    let div = store.require(&other)?;
    if div.is_zero() {
        return Err(LatticeError::ZeroDivisor(other));
    }
    Ok(rhs.div(div)?)
}
