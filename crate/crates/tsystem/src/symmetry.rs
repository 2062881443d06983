//! Symmetry images of `T_n^(k)`: the three generators of the `S_4` action
//! and the two extra involutions available when `m = 0`.

use ev_core::RatZeta;

use crate::tnk::{tnk, Provenance, TValue};
use crate::weights::xi;
use crate::yseq::yseq;
use crate::xfrac::XFrac;
use crate::{KIndex, Limits, TError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Symmetry {
    /// `k0 <-> k1`, `x -> 1/x`, `z -> 1/z`.
    Swap01Invert,
    /// `k0 <-> k2`, `x -> ((z+2)x - 2z - 1)/(1 - z)`, `z -> -z - 1`.
    Swap02Mobius,
    /// `k0 <-> k1`, `k2 <-> k3`, `x -> z(2z+1)/((z+2)x)`.
    Swap01Swap23Reflect,
    /// `k -> -k - 1`.
    ComplementZscc,
    /// `k -> n - k`.
    ComplementEsp,
}

impl Symmetry {
    pub const ALL: [Symmetry; 5] = [
        Symmetry::Swap01Invert,
        Symmetry::Swap02Mobius,
        Symmetry::Swap01Swap23Reflect,
        Symmetry::ComplementZscc,
        Symmetry::ComplementEsp,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Symmetry::Swap01Invert => "swap01_invert",
            Symmetry::Swap02Mobius => "swap02_mobius",
            Symmetry::Swap01Swap23Reflect => "swap01_swap23_reflect",
            Symmetry::ComplementZscc => "complement_zscc",
            Symmetry::ComplementEsp => "complement_esp",
        }
    }

    pub fn needs_m_zero(self) -> bool {
        matches!(self, Symmetry::ComplementZscc | Symmetry::ComplementEsp)
    }

    /// The index whose value the image is computed from.
    pub fn source_index(self, idx: &KIndex) -> Result<KIndex, TError> {
        let [k0, k1, k2, k3] = idx.k;
        let n = idx.n;
        match self {
            Symmetry::Swap01Invert => KIndex::new([k1, k0, k2, k3], n),
            Symmetry::Swap02Mobius => KIndex::new([k2, k1, k0, k3], n),
            Symmetry::Swap01Swap23Reflect => KIndex::new([k1, k0, k3, k2], n),
            Symmetry::ComplementZscc => KIndex::m_zero([-k0 - 1, -k1 - 1, -k2 - 1, -k3 - 1]),
            Symmetry::ComplementEsp => KIndex::m_zero([n - k0, n - k1, n - k2, n - k3]),
        }
    }
}

fn rz(k: i64) -> RatZeta {
    RatZeta::from_int(k)
}

fn pw(f: &RatZeta, e: i64) -> RatZeta {
    f.pow(e).expect("nonzero base")
}

/// `prod_j xi_j^{k_j (n-1)}`
fn xi_power(idx: &KIndex) -> RatZeta {
    let xs = xi();
    (0..4).fold(RatZeta::one(), |acc, j| {
        acc.mul(&pw(&xs[j], idx.k[j] * (idx.n - 1)))
    })
}

/// Transforms the value at `source_index` into the value at `idx`.
pub fn transform(which: Symmetry, idx: &KIndex, source: &XFrac) -> Result<XFrac, TError> {
    if which.needs_m_zero() && idx.m() != 0 {
        return Err(TError::MZeroRequired);
    }
    let n = idx.n;
    let z = RatZeta::z();
    let nn1 = n * (n - 1);
    let out = match which {
        Symmetry::Swap01Invert => {
            let pre = pw(&z, 2 * nn1).mul(&xi_power(idx));
            source
                .map_zeta(|c| c.compose_mobius(0, 1, 1, 0))?
                .inverse_subst(&RatZeta::one())?
                .mul_linear_power(&RatZeta::zero(), n - 1)?
                .scale(&pre)
        }
        Symmetry::Swap02Mobius => {
            let pre = pw(&RatZeta::linear(1, -1).div(&RatZeta::linear(1, 2))?, nn1);
            let one_minus_z = RatZeta::linear(-1, 1);
            let alpha = RatZeta::linear(1, 2).div(&one_minus_z)?;
            let beta = RatZeta::linear(2, 1).neg().div(&one_minus_z)?;
            source
                .map_zeta(|c| c.compose_mobius(-1, -1, 0, 1))?
                .affine_subst(&alpha, &beta)?
                .scale(&pre)
        }
        Symmetry::Swap01Swap23Reflect => {
            let zp2 = RatZeta::linear(1, 2);
            let gamma = z.mul(&RatZeta::linear(2, 1)).div(&zp2)?;
            let pre = pw(&gamma.inv()?, nn1).mul(&xi_power(idx));
            source
                .inverse_subst(&gamma)?
                .mul_linear_power(&RatZeta::zero(), n - 1)?
                .scale(&pre)
        }
        Symmetry::ComplementZscc => {
            let [k0, k1, k2, k3] = idx.k;
            let mut num = pw(&RatZeta::linear(1, 2), 2 * (k1 + k2 + n + 2));
            if (n + 1).rem_euclid(2) == 1 {
                num = num.neg();
            }
            let den = pw(&rz(12), n + 1)
                .mul(&pw(&z, 2 * (k1 + k2 + 2 * n + 3)))
                .mul(&pw(&RatZeta::linear(1, -1), 2 * (k2 + k3 + 1)))
                .mul(&pw(&RatZeta::linear(1, 1), 2 * (k0 + k1 + 2 * n + 3)))
                .mul(&pw(&RatZeta::linear(2, 1), 2 * (k0 + k2 + 1)));
            source.scale(&num.div(&den)?)
        }
        Symmetry::ComplementEsp => {
            let [k0, k1, k2, k3] = idx.k;
            let ys = |f: &dyn Fn(i64) -> i64| -> ev_core::Rat {
                idx.k.iter().map(|&k| yseq(f(k))).product()
            };
            let yratio = ys(&|k| n - k) / ys(&|k| k);
            let mut c = RatZeta::from_rat(yratio);
            if ((k0 + k1 + n) * (k1 + k3 + n)).rem_euclid(2) == 1 {
                c = c.neg();
            }
            let a = k1 + k2 - n;
            let b = k0 + k1 - n;
            let inner = pw(&z, a)
                .mul(&pw(&RatZeta::linear(1, 1), b))
                .div(
                    &pw(&RatZeta::linear(1, -1), b)
                        .mul(&pw(&RatZeta::linear(1, 2), a))
                        .mul(&pw(&RatZeta::linear(2, 1), k1 + k3 - n)),
                )?;
            source.scale(&c.mul(&pw(&inner, n - 1)))
        }
    };
    Ok(out)
}

/// The symmetry image at `idx`, computed from a determinant evaluation at
/// the source index.
pub fn apply_symmetry(which: Symmetry, idx: &KIndex, limits: &Limits) -> Result<TValue, TError> {
    if which.needs_m_zero() && idx.m() != 0 {
        return Err(TError::MZeroRequired);
    }
    let src = which.source_index(idx)?;
    let v = tnk(&src, limits)?;
    Ok(TValue {
        index: *idx,
        value: transform(which, idx, &v.value)?,
        provenance: Provenance::Symmetry,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn source_indices() {
        let idx = KIndex::m_zero([3, 2, 0, -1]).unwrap();
        assert_eq!(
            Symmetry::ComplementEsp.source_index(&idx).unwrap().k,
            [-1, 0, 2, 3]
        );
        assert_eq!(
            Symmetry::ComplementZscc.source_index(&idx).unwrap().k,
            [-4, -3, -1, 0]
        );
    }

    #[test]
    fn complements_need_m_zero() {
        let idx = KIndex::with_m([0, 0, 0, 0], 2).unwrap();
        assert_eq!(
            apply_symmetry(Symmetry::ComplementZscc, &idx, &Limits::default()),
            Err(TError::MZeroRequired)
        );
    }
}
