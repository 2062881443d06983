//! The non-stationary Schrodinger equation with the four-term elliptic
//! potential, checked on `Phi^{-1} Psi` by sampling.

use rug::ops::Pow;
use rug::Float;

use ev_core::RatZeta;
use ev_tsystem::weights::xi;
use ev_tsystem::{tnk, KIndex, Limits, XFrac};

use crate::eval::{eval_ratzeta, eval_xfrac};
use crate::hpc::Hpc;
use crate::modular::{e2pi, ModularPoint};
use crate::span::{theta_weight, vandermonde};
use crate::taylor::{taylor_coeffs, TaylorOptions};
use crate::theta::theta;
use crate::wp::weierstrass_p;
use crate::ModError;

/// The exact data needed to evaluate `Psi`.
struct PsiData {
    n: i64,
    k: [i64; 4],
    t: XFrac,
    xi: [RatZeta; 4],
}

impl PsiData {
    fn psi(&self, zs: &[Hpc], mp: &ModularPoint) -> Result<Hpc, ModError> {
        let zeta = mp.zeta()?;
        let xis: Vec<Hpc> = self
            .xi
            .iter()
            .map(|a| eval_ratzeta(a, &zeta))
            .collect::<Result<_, _>>()?;
        let xs: Vec<Hpc> = zs.iter().map(|z| mp.x(z)).collect::<Result<_, _>>()?;
        let mut v = vandermonde(&xs) * eval_xfrac(&self.t, &zeta, &xs)?;
        for (z, x) in zs.iter().zip(&xs) {
            let mut w = theta_weight(z, 3 * self.n - 2, mp)?;
            for (xl, &kl) in xis.iter().zip(&self.k) {
                w = w * (x - xl).powi(kl);
            }
            v = v * w;
        }
        Ok(v)
    }

    fn phi(&self, zs: &[Hpc], mp: &ModularPoint) -> Result<Hpc, ModError> {
        let prec = mp.prec();
        let p3 = mp.p.powi(3);
        let p6 = &p3 * &p3;
        let [k0, k1, k2, k3] = self.k;
        let mut v = Hpc::one(prec);
        for z in zs {
            let e = e2pi(z, 3);
            let half = e2pi(&z.scale(&Float::with_val(prec, 1.5)), -1);
            let f0 = &half * &theta(&e, &p6)?;
            let f1 = theta(&(&p3 * &e), &p6)?;
            let f2 = theta(&-(&p3 * &e), &p6)?;
            let f3 = &half * &theta(&-e.clone(), &p6)?;
            v = v * f0.powi(k0) * f1.powi(k1) * f2.powi(k2) * f3.powi(k3);
        }
        Ok(v)
    }

    fn f(&self, zs: &[Hpc], mp: &ModularPoint) -> Result<Hpc, ModError> {
        Ok(self.psi(zs, mp)? / self.phi(zs, mp)?)
    }
}

/// `V(x) = sum_l k_l (k_l + 1)/2 wp(x - gamma_l | 1, 3 tau)` with the half
/// periods `0, 3tau/2, 3tau/2 + 1/2, 1/2`.
pub fn potential(x: &Hpc, k: [i64; 4], mp: &ModularPoint) -> Result<Hpc, ModError> {
    let prec = mp.prec();
    let period = mp.tau.scale(&Float::with_val(prec, 3));
    let half_t = period.scale(&Float::with_val(prec, 0.5));
    let half = Hpc::from_f64(prec, 0.5, 0.0);
    let gammas = [Hpc::zero(prec), half_t.clone(), &half_t + &half, half];
    let mut v = Hpc::zero(prec);
    for (g, &kl) in gammas.iter().zip(&k) {
        let c = kl * (kl + 1);
        if c != 0 {
            let w = weierstrass_p(&(x - g), &period)?;
            v = v + w.scale(&Float::with_val(prec, c as f64 / 2.0));
        }
    }
    Ok(v)
}

/// Distance from `z` to the points `a/6 + b tau/2`.
fn singular_distance(z: &Hpc, mp: &ModularPoint) -> Float {
    let prec = mp.prec();
    let half_tau = mp.tau.scale(&Float::with_val(prec, 0.5));
    let b0 = Float::with_val(prec, &z.im / &half_tau.im).floor().to_f64() as i64;
    let mut best: Option<Float> = None;
    for b in b0 - 1..=b0 + 2 {
        let base = half_tau.scale(&Float::with_val(prec, b));
        let re = Float::with_val(prec, &z.re - &base.re) * 6u32;
        let a0 = re.floor().to_f64() as i64;
        for a in a0 - 1..=a0 + 2 {
            let pt = &base + &Hpc::from_f64(prec, a as f64 / 6.0, 0.0);
            let d = (z - &pt).abs();
            if best.as_ref().is_none_or(|b| d < *b) {
                best = Some(d);
            }
        }
    }
    best.expect("nonempty")
}

#[derive(Debug, Clone)]
pub struct SchrodingerReport {
    /// `H F / F` at each sample
    pub c_values: Vec<Hpc>,
    /// spread of `C` relative to the largest term of `H F / F`
    pub deviation: f64,
    /// largest relative error estimate of the numerical derivatives
    pub derivative_error: f64,
}

/// Evaluates `C = H F / F` for `F = Phi^{-1} Psi` at every sample and
/// reports how much it varies.
pub fn schrodinger_check(
    n: i64,
    k: [i64; 4],
    m: usize,
    mp: &ModularPoint,
    samples: &[Vec<Hpc>],
    limits: &Limits,
) -> Result<SchrodingerReport, ModError> {
    let idx = KIndex::new(k, n)?;
    if idx.m() as usize != m || m == 0 {
        return Err(ModError::DomainError(format!(
            "m = {m} does not match 2n - |k| = {} or is zero",
            idx.m()
        )));
    }
    let t = tnk(&idx, limits)?.value;
    if t.is_zero() {
        return Err(ModError::DomainError(format!("T at {idx} is the zero function")));
    }
    let data = PsiData { n, k, t, xi: xi() };
    let prec = mp.prec();
    let tol = 10f64.powi(-(mp.digits as i32) / 2);
    let opts = TaylorOptions::with_tol(tol);
    let two_pi_i_3 = Hpc::new(Float::new(prec), Hpc::pi(prec) * Float::with_val(prec, 2) / 3u32);
    let mut c_values = Vec::new();
    let mut scale = Float::new(prec);
    let mut derivative_error: f64 = 0.0;
    for zs in samples {
        if zs.len() != m {
            return Err(ModError::DomainError(format!("sample of length {}", zs.len())));
        }
        let dmin = zs
            .iter()
            .map(|z| singular_distance(z, mp))
            .min_by(|a, b| a.partial_cmp(b).expect("finite"))
            .expect("nonempty");
        let tiny = Float::with_val(prec, 10).pow(-(mp.digits as i32) / 4);
        if dmin < tiny {
            return Err(ModError::NearSingularSample(format!("{zs:?}")));
        }
        let f0 = data.f(zs, mp)?;
        // time derivative
        let r_tau = Float::with_val(prec, &mp.tau.im / 16u32).min(&Float::with_val(prec, &dmin / 2u32));
        let (st, et) = taylor_coeffs(|tau| data.f(zs, &mp.at(tau.clone())?), &mp.tau, &r_tau, 1, &opts)?;
        derivative_error = derivative_error.max(et);
        let mut terms = vec![-(two_pi_i_3.scale(&Float::with_val(prec, m as f64)) * &st.c[1]) / &f0];
        // space derivatives
        let r_z = Float::with_val(prec, &dmin / 4u32);
        for j in 0..m {
            let (sz, ez) = taylor_coeffs(
                |zj| {
                    let mut moved = zs.clone();
                    moved[j] = zj.clone();
                    data.f(&moved, mp)
                },
                &zs[j],
                &r_z,
                2,
                &opts,
            )?;
            derivative_error = derivative_error.max(ez);
            // (1/2) d^2/dx^2 with x = 3z is (1/18) d^2/dz^2, and d^2/dz^2 = 2 c_2
            terms.push(sz.c[2].scale(&(Float::with_val(prec, 1) / 9u32)) / &f0);
            let x = zs[j].scale(&Float::with_val(prec, 3));
            terms.push(-potential(&x, k, mp)?);
        }
        let mut c = Hpc::zero(prec);
        for term in &terms {
            let a = term.abs();
            if a > scale {
                scale = a;
            }
            c = c + term;
        }
        c_values.push(c);
    }
    let first = c_values.first().cloned().unwrap_or_else(|| Hpc::zero(prec));
    let mut worst = Float::new(prec);
    for c in &c_values {
        let d = (c - &first).abs();
        if d > worst {
            worst = d;
        }
    }
    let denom = Float::with_val(prec, first.abs().max(&scale));
    let deviation = if denom.is_zero() { 0.0 } else { (worst / denom).to_f64() };
    Ok(SchrodingerReport {
        c_values,
        deviation,
        derivative_error,
    })
}
