//! Numerical evaluation of the lattice tau functions: comparison with the
//! normalized `t^(k)`, and the fourth-order equation they satisfy.

use std::collections::HashMap;
use std::sync::Mutex;

use rug::Float;

use ev_core::Rat;
use ev_lattice::LatticeStore;
use ev_painleve::{klr_map, state_at, tau_lattice, tau_normalizer, LVector, TauExponent};
use ev_tsystem::yseq;

use crate::eval::{eval_rat, eval_ratzeta};
use crate::hpc::Hpc;
use crate::modular::ModularPoint;
use crate::taylor::{taylor_coeffs, Series, TaylorOptions};
use crate::tep::{delta_series, x_values, XValues};
use crate::ModError;

/// A tau monomial evaluated with the modular values of `u`, `v`, `tau_j`.
pub fn eval_tau_exponent(te: &TauExponent, xv: &XValues) -> Result<Hpc, ModError> {
    let prec = xv.zeta.prec();
    let mut v = eval_ratzeta(&te.coeff, &xv.zeta)?
        * Hpc::root_of_unity(prec, te.root24, 12)
        * Hpc::two_pow_third(prec, te.pow2third)
        * xv.u.powi(te.pow_u)
        * xv.v.powi(te.pow_v);
    for (t, &e) in xv.tau.iter().zip(&te.pow_tau) {
        if e != 0 {
            v = v * t.powi(e);
        }
    }
    Ok(v)
}

#[derive(Debug, Clone)]
pub struct TrtQdReport {
    pub l: [i64; 4],
    /// `|tau_l - phi_l Y t^(k)| / |phi_l Y t^(k)|`
    pub trt_residual: f64,
    /// the fourth-order equation, relative to its largest term
    pub qd_residual: f64,
    pub derivative_error: f64,
}

/// `(C, G(t))` with the shifted parameters `alpha_j - l_j`.
fn qd_constants(l: &LVector) -> Result<(Rat, Rat, Rat), ModError> {
    let a = state_at(l)?.alpha;
    let one = Rat::from_integer(1.into());
    let a0m = &a[0] - &one;
    let c = &a0m * &a0m + &a[1] * &a[1] + &a[3] * &a[3] + &a[4] * &a[4];
    let g1 = (&a[4] - &a[3]) * (&a[3] + &a[4]) * (&a[0] + &a[1] - &one) * (&a[0] - &a[1] - &one);
    let g0 = (&a[3] - &a[1]) * (&a[3] + &a[1]) * (&a[0] + &a[4] - &one) * (&a[0] - &a[4] - &one);
    Ok((c, g1, g0))
}

/// The terms of the fourth-order equation for `tau` with derivatives
/// `d[k] = delta^k tau`.
pub fn qd_terms(d: &[Hpc; 5], t: &Hpc, c: &Rat, g1: &Rat, g0: &Rat) -> Vec<Hpc> {
    let prec = t.prec();
    let one = Hpc::one(prec);
    let two = Hpc::from_int(prec, 2);
    let three = Hpc::from_int(prec, 3);
    let cc = eval_rat(c, prec);
    let tt1 = t * &(t - &one);
    let omt2 = &one - &(&two * t);
    let g = &(&eval_rat(g1, prec) * t) + &eval_rat(g0, prec);
    let six = Hpc::from_int(prec, 6);
    let [f, d1, d2, d3, d4] = d;
    vec![
        d4 * f,
        -(Hpc::from_int(prec, 4) * d3 * d1),
        &two * &omt2 * d3 * f,
        &three * d2 * d2,
        -(&two * &omt2 * d2 * d1),
        -((&(&cc - &six) * &tt1 + &cc - &three) / &three * d2 * f),
        (&(&cc * &(&(t * t) - t + one.clone())) - &three) / &three * d1 * d1,
        &cc * &tt1 * &(&(&two * t) - &one) / &six * d1 * f,
        -(&tt1 * &g / Hpc::from_int(prec, 8) * f * f),
    ]
}

/// Values shared by every lattice point at one `tau`: the modular images at
/// `tau` and on the sampling circle, and the series of `t`.
pub struct TrtContext {
    mp: ModularPoint,
    xv: XValues,
    ts: Series,
    et: f64,
    g: Series,
    radius: Float,
    opts: TaylorOptions,
    nodes: Mutex<HashMap<(String, String), XValues>>,
}

const QD_ORDER: usize = 4;

impl TrtContext {
    pub fn new(mp: &ModularPoint) -> Result<Self, ModError> {
        let tol = 10f64.powi(-(mp.digits as i32) * 2 / 3);
        let mut ctx = TrtContext {
            mp: mp.clone(),
            xv: x_values(mp)?,
            ts: Series { c: Vec::new() },
            et: 0.0,
            g: Series { c: Vec::new() },
            radius: Float::with_val(mp.prec(), &mp.tau.im / 16u32),
            opts: TaylorOptions::with_tol(tol),
            nodes: Mutex::new(HashMap::new()),
        };
        let (ts, et) = taylor_coeffs(|tau| Ok(ctx.x_at(tau)?.t), &mp.tau, &ctx.radius, QD_ORDER, &ctx.opts)?;
        ctx.g = delta_series(&ts)?;
        ctx.ts = ts;
        ctx.et = et;
        Ok(ctx)
    }

    fn x_at(&self, tau: &Hpc) -> Result<XValues, ModError> {
        let key = (tau.re.to_string_radix(16, None), tau.im.to_string_radix(16, None));
        if let Some(v) = self.nodes.lock().expect("node cache").get(&key) {
            return Ok(v.clone());
        }
        let v = x_values(&self.mp.at(tau.clone())?)?;
        self.nodes.lock().expect("node cache").insert(key, v.clone());
        Ok(v)
    }

    /// Both checks for one lattice point.
    pub fn check(&self, l: &LVector, store: &LatticeStore) -> Result<TrtQdReport, ModError> {
        let prec = self.mp.prec();
        let k = klr_map(l);
        let tk = store.get(&k).ok_or(ModError::MissingDependency(k))?;
        if tk.is_zero() {
            return Err(ModError::DomainError(format!("t^{k:?} is the zero function")));
        }
        let tau_l = tau_lattice(l)?;
        let phi = tau_normalizer(l);
        let xv = &self.xv;
        let lhs = eval_tau_exponent(&tau_l, xv)?;
        let y: Rat = k.iter().map(|&kj| yseq(kj)).product();
        let rhs = eval_tau_exponent(&phi, xv)? * eval_rat(&y, prec) * eval_ratzeta(tk, &xv.zeta)?;
        let trt_residual = lhs.rel_diff(&rhs).to_f64();

        let (fs, ef) = taylor_coeffs(
            |tau| eval_tau_exponent(&tau_l, &self.x_at(tau)?),
            &self.mp.tau,
            &self.radius,
            QD_ORDER,
            &self.opts,
        )?;
        let mut ds: Vec<Series> = vec![fs];
        for _ in 0..QD_ORDER {
            let next = ds.last().expect("nonempty").derive_with(&self.g);
            ds.push(next);
        }
        let d: [Hpc; 5] = std::array::from_fn(|i| ds[i].value().clone());
        let (c, g1, g0) = qd_constants(l)?;
        let terms = qd_terms(&d, self.ts.value(), &c, &g1, &g0);
        let mut sum = Hpc::zero(prec);
        let mut scale = Float::new(prec);
        for term in &terms {
            let a = term.abs();
            if a > scale {
                scale = a;
            }
            sum = sum + term;
        }
        let qd_residual = if scale.is_zero() { 0.0 } else { (sum.abs() / scale).to_f64() };
        Ok(TrtQdReport {
            l: l.l,
            trt_residual,
            qd_residual,
            derivative_error: self.et.max(ef),
        })
    }
}

/// Both checks for one lattice point.
pub fn trt_qd_check(l: &LVector, mp: &ModularPoint, store: &LatticeStore) -> Result<TrtQdReport, ModError> {
    TrtContext::new(mp)?.check(l, store)
}
