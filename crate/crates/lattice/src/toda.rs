//! The Toda-type recursion along `t_n = t^(k0+n, k1+n, k2, k3)`.

use ev_core::{parse_ratzeta, RatZeta};

use crate::store::LatticeStore;
use crate::{LatticeError, K};

/// Returns `(lhs, C_n)` where `lhs` is the bilinear part of the recursion
/// at `n` and `C_n = lhs / t_n^2` must be a polynomial in `z`.
pub fn toda_step(k: K, n: i64, store: &LatticeStore) -> Result<(RatZeta, RatZeta), LatticeError> {
    let at = |m: i64| [k[0] + m, k[1] + m, k[2], k[3]];
    let prev = store.require(&at(n - 1))?;
    let cur = store.require(&at(n))?;
    let next = store.require(&at(n + 1))?;
    let a = parse_ratzeta("z*(z + 1)^2*(z - 1)^2*(z + 2)*(2*z + 1)")?;
    let b = parse_ratzeta("2*(z + 1)^2*(z - 1)*(z^3 - 3*z^2 - 6*z - 1)")?;
    let d1 = cur.derivative();
    let d2 = d1.derivative();
    let f = RatZeta::from_int(-(2 * k[0] + 2 * n + 1) * (2 * k[1] + 2 * n + 1))
        .mul(&parse_ratzeta("(z + 2)^2 / z^2")?);
    let lhs = f
        .mul(next)
        .mul(prev)
        .sub(&a.mul(&d2.mul(cur).sub(&d1.mul(&d1))))
        .sub(&b.mul(&d1).mul(cur));
    let cn = lhs.div(&cur.mul(cur))?;
    if !cn.is_polynomial() {
        return Err(LatticeError::NonPolynomial(format!("C_{n} at {k:?}: {cn}")));
    }
    Ok((lhs, cn))
}
