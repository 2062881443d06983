//! One-dimensionality of the top exterior power of the theta space: the
//! alternant, the Izergin-Korepin type determinant and the uniformized
//! polynomial `T` must be proportional.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rug::ops::Pow;
use rug::Float;

use ev_tsystem::{tnk, KIndex, Limits};

use crate::eval::eval_xfrac;
use crate::hpc::Hpc;
use crate::modular::{e2pi, omega, ModularPoint};
use crate::theta::{theta, theta_prod};
use crate::ModError;

/// Determinant by Gaussian elimination with partial pivoting.
pub fn det(mut a: Vec<Vec<Hpc>>) -> Hpc {
    let n = a.len();
    if n == 0 {
        return Hpc::one(64);
    }
    let prec = a[0][0].prec();
    let mut d = Hpc::one(prec);
    for col in 0..n {
        let piv = (col..n)
            .max_by(|&i, &j| a[i][col].abs().partial_cmp(&a[j][col].abs()).expect("finite"))
            .expect("nonempty");
        if a[piv][col].is_zero() {
            return Hpc::zero(prec);
        }
        if piv != col {
            a.swap(piv, col);
            d = -d;
        }
        let p = a[col][col].clone();
        d = d * &p;
        let pinv = p.recip();
        for row in col + 1..n {
            let f = &a[row][col] * &pinv;
            for k in col..n {
                let v = &a[row][k] - &(&f * &a[col][k]);
                a[row][k] = v;
            }
        }
    }
    d
}

/// `prod_{i<j} (x_j - x_i)`
pub fn vandermonde(xs: &[Hpc]) -> Hpc {
    let prec = xs.first().map_or(64, |x| x.prec());
    let mut v = Hpc::one(prec);
    for j in 0..xs.len() {
        for i in 0..j {
            v = v * (&xs[j] - &xs[i]);
        }
    }
    v
}

/// Basis element `f_j` of the `2n`-dimensional theta space.
pub fn basis_fn(n: i64, j: i64, z: &Hpc, mp: &ModularPoint) -> Result<Hpc, ModError> {
    let nome = mp.p.powi(12 * n);
    let p2j = mp.p.powi(2 * j);
    let e = e2pi(z, 6 * n);
    let a = e2pi(z, j - 3 * n) * theta(&-(&p2j * &e), &nome)?;
    let b = e2pi(z, 3 * n - j) * theta(&-(&p2j * &e.recip()), &nome)?;
    Ok(a - b)
}

/// The indices `1 <= j <= 3n - 1` with `3 ∤ j`.
pub fn basis_indices(n: i64) -> Vec<i64> {
    (1..3 * n).filter(|j| j % 3 != 0).collect()
}

/// The alternant `det(f_j(z_i))`.
pub fn alternant(n: i64, zs: &[Hpc], mp: &ModularPoint) -> Result<Hpc, ModError> {
    let idx = basis_indices(n);
    let mut rows = Vec::with_capacity(zs.len());
    for z in zs {
        let mut row = Vec::with_capacity(idx.len());
        for &j in &idx {
            row.push(basis_fn(n, j, z, mp)?);
        }
        rows.push(row);
    }
    Ok(det(rows))
}

/// `e^{-2 pi i k z} theta(e^{2 pi i k (z + w)}, e^{2 pi i k (z - w)}; p^{2k})`
fn pair_factor(k: i64, z: &Hpc, w: &Hpc, mp: &ModularPoint) -> Result<Hpc, ModError> {
    let nome = mp.p.powi(2 * k);
    let v = theta_prod(&[e2pi(&(z + w), k), e2pi(&(z - w), k)], &nome)?;
    Ok(e2pi(z, -k) * v)
}

/// `e^{-2 pi i z} theta(e^{4 pi i z}; p^2)`
fn odd_factor(z: &Hpc, mp: &ModularPoint) -> Result<Hpc, ModError> {
    Ok(e2pi(z, -1) * theta(&e2pi(z, 2), &(&mp.p * &mp.p))?)
}

/// The determinant generator of the top exterior power.
pub fn eik(n: i64, zs: &[Hpc], mp: &ModularPoint) -> Result<Hpc, ModError> {
    let n = n as usize;
    let prec = mp.prec();
    let mut pre = Hpc::one(prec);
    for z in zs {
        pre = pre * odd_factor(z, mp)?;
    }
    let mut rows = Vec::with_capacity(n);
    for i in 0..n {
        let mut row = Vec::with_capacity(n);
        for j in 0..n {
            let (zi, zj) = (&zs[i], &zs[n + j]);
            let big = pair_factor(3, zj, zi, mp)?;
            pre = pre * &big;
            row.push(pair_factor(1, zj, zi, mp)? / big);
        }
        rows.push(row);
    }
    Ok(pre * det(rows))
}

/// `e^{-2 pi i z} theta(e^{4 pi i z}; p^2) theta(p omega e^{+-2 pi i z}; p^2)^{e}`
pub fn theta_weight(z: &Hpc, e: i64, mp: &ModularPoint) -> Result<Hpc, ModError> {
    let pw = &mp.p * &omega(mp.prec());
    let ez = e2pi(z, 1);
    let w = theta_prod(&[&pw * &ez, &pw * &ez.recip()], &(&mp.p * &mp.p))?;
    Ok(odd_factor(z, mp)? * w.powi(e))
}

/// The uniformized generator built from `T = T_n^(0,0,0,0)`.
pub fn tut(n: i64, zs: &[Hpc], mp: &ModularPoint, limits: &Limits) -> Result<Hpc, ModError> {
    let m = 2 * n as usize;
    let t = tnk(&KIndex::with_m([0, 0, 0, 0], m)?, limits)?;
    if t.value.is_zero() {
        return Err(ModError::DomainError(format!("T_{n} is the zero function")));
    }
    let zeta = mp.zeta()?;
    let xs: Vec<Hpc> = zs.iter().map(|z| mp.x(z)).collect::<Result<_, _>>()?;
    let mut v = vandermonde(&xs) * eval_xfrac(&t.value, &zeta, &xs)?;
    for z in zs {
        v = v * theta_weight(z, 3 * n - 2, mp)?;
    }
    Ok(v)
}

/// Deterministic sample vectors: real parts in `(0.03, 0.47)`, small
/// imaginary parts.
pub fn sample_points(len: usize, count: usize, seed: u64, prec: u32) -> Vec<Vec<Hpc>> {
    let mut rng = StdRng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            (0..len)
                .map(|_| {
                    let re: f64 = rng.gen_range(0.03..0.47);
                    let im: f64 = rng.gen_range(-0.05..0.05);
                    Hpc::from_f64(prec, re, im)
                })
                .collect()
        })
        .collect()
}

/// Largest relative deviation of the values from the first one.
pub fn spread(values: &[Hpc]) -> f64 {
    let Some(first) = values.first() else {
        return 0.0;
    };
    let mut worst = Float::new(first.prec());
    for v in values {
        let d = v.rel_diff(first);
        if d > worst {
            worst = d;
        }
    }
    worst.to_f64()
}

#[derive(Debug, Clone)]
pub struct SpanReport {
    pub n: i64,
    pub alt_over_tut: Vec<Hpc>,
    pub eik_over_tut: Vec<Hpc>,
    pub deviation: f64,
}

/// Ratios of the three generators at each sample; they must not depend on
/// the sample.
pub fn span_check(
    n: i64,
    mp: &ModularPoint,
    samples: &[Vec<Hpc>],
    limits: &Limits,
) -> Result<SpanReport, ModError> {
    if !(1..=2).contains(&n) {
        return Err(ModError::DomainError(format!("span check needs 1 <= n <= 2, got {n}")));
    }
    let tiny = Float::with_val(mp.prec(), 10).pow(10 - mp.digits as i32);
    let mut alt_over_tut = Vec::new();
    let mut eik_over_tut = Vec::new();
    for zs in samples {
        if zs.len() != 2 * n as usize {
            return Err(ModError::DomainError(format!("sample of length {}", zs.len())));
        }
        let u = tut(n, zs, mp, limits)?;
        let a = alternant(n, zs, mp)?;
        let e = eik(n, zs, mp)?;
        if u.abs() < tiny || a.abs() < tiny || e.abs() < tiny {
            return Err(ModError::NearSingularSample(format!("generator vanishes at {zs:?}")));
        }
        alt_over_tut.push(&a / &u);
        eik_over_tut.push(&e / &u);
    }
    let deviation = spread(&alt_over_tut).max(spread(&eik_over_tut));
    Ok(SpanReport {
        n,
        alt_over_tut,
        eik_over_tut,
        deviation,
    })
}
