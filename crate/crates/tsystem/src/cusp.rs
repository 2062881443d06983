//! Orders of vanishing of `T_n^(k)` at the hyperbolic cusps `z = 0, -1, oo`.

use ev_core::{Rat, RatZeta};
use num_traits::Zero;

use crate::tnk::tnk;
use crate::xfrac::XFrac;
use crate::{KIndex, Limits, TError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Cusp {
    Zero,
    MinusOne,
    Infinity,
}

fn val(f: &RatZeta, cusp: Cusp) -> Result<i64, TError> {
    Ok(match cusp {
        Cusp::Zero => f.valuation_at(&Rat::zero())?,
        Cusp::MinusOne => f.valuation_at(&Rat::from_integer((-1).into()))?,
        Cusp::Infinity => f.valuation_at_infinity()?,
    })
}

/// Gauss valuation of `T` at the cusp: minimum over the numerator
/// coefficients, minus the valuations of the pole factors `(x - a)` for
/// generic `x`.
pub fn measured_order(value: &XFrac, cusp: Cusp) -> Result<i64, TError> {
    let mut best: Option<i64> = None;
    for (_, c) in value.numerator().terms() {
        let v = val(c, cusp)?;
        best = Some(best.map_or(v, |b| b.min(v)));
    }
    let mut v = best.ok_or_else(|| TError::ZeroFunction("T".into()))?;
    let m = value.nvars() as i64;
    for (a, e) in value.poles() {
        let va = if a.is_zero() { 0 } else { val(a, cusp)?.min(0) };
        v -= *e as i64 * m * va;
    }
    Ok(v)
}

/// The order `L` at `z = 0` from the three-case formula.
pub fn predicted_order_at_zero(idx: &KIndex) -> i64 {
    let [k0, k1, k2, k3] = idx.k;
    let n = idx.n;
    let m = idx.m();
    let s = k1 + k2;
    let base = s * (2 * n - s - 1);
    let r = m + (k0 + k3 + 1).abs();
    if (s + 1).abs() <= r {
        base
    } else if s < -r {
        base + (n + 1) * (n - k0 - k3)
    } else {
        base + (n + 1 - m) * (s - n)
    }
}

/// Predicted order at a hyperbolic cusp; `z = -1` and `z = oo` are reduced
/// to `z = 0` through the first two generators of the `S_4` symmetry.
pub fn predicted_order(idx: &KIndex, cusp: Cusp) -> i64 {
    let [k0, k1, k2, k3] = idx.k;
    let n = idx.n;
    match cusp {
        Cusp::Zero => predicted_order_at_zero(idx),
        Cusp::MinusOne => predicted_order_at_zero(&KIndex {
            k: [k2, k1, k0, k3],
            n,
        }),
        Cusp::Infinity => {
            // z^{2n(n-1)} prod xi_j^{k_j(n-1)} has order -2n(n-1) - (k0+k2)(n-1)
            -2 * n * (n - 1)
                - (k0 + k2) * (n - 1)
                + predicted_order_at_zero(&KIndex {
                    k: [k1, k0, k2, k3],
                    n,
                })
        }
    }
}

/// `(measured, predicted)` order of `T_n^(k)` at the cusp.
pub fn cusp_order(idx: &KIndex, cusp: Cusp, limits: &Limits) -> Result<(i64, i64), TError> {
    let v = tnk(idx, limits)?;
    Ok((measured_order(&v.value, cusp)?, predicted_order(idx, cusp)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seed_order() {
        let idx = KIndex::m_zero([0, -1, -1, 0]).unwrap();
        assert_eq!(predicted_order_at_zero(&idx), 2);
        assert_eq!(cusp_order(&idx, Cusp::Zero, &Limits::default()).unwrap(), (2, 2));
    }

    #[test]
    fn trivial_order() {
        let idx = KIndex::with_m([0, 0, 0, 0], 2).unwrap();
        assert_eq!(cusp_order(&idx, Cusp::Zero, &Limits::default()).unwrap(), (0, 0));
        // k1 + k2 + 1 = 3 >= m + |k0 + k3 + 1| = 1 selects the third case
        let idx = KIndex::m_zero([0, 2, 0, 0]).unwrap();
        assert_eq!(predicted_order_at_zero(&idx), 0);
        assert_eq!(cusp_order(&idx, Cusp::Zero, &Limits::default()).unwrap(), (0, 0));
    }
}
