//! The theta product `theta(x; p)` and Dedekind's eta function.

use rug::ops::Pow;
use rug::Float;

use crate::hpc::Hpc;
use crate::ModError;

const MAX_FACTORS: usize = 1_000_000;

/// `2^{-prec}`
pub(crate) fn eps(prec: u32) -> Float {
    Float::with_val(prec, 2).pow(-(prec as i32))
}

fn check_nome(p: &Hpc) -> Result<(), ModError> {
    if p.abs() >= 1 {
        return Err(ModError::DomainError(format!("|p| >= 1 for p = {p}")));
    }
    Ok(())
}

/// `theta(x; p) = prod_{j >= 0} (1 - p^j x)(1 - p^{j+1}/x)`
pub fn theta(x: &Hpc, p: &Hpc) -> Result<Hpc, ModError> {
    check_nome(p)?;
    if x.is_zero() {
        return Err(ModError::DomainError("theta at x = 0".into()));
    }
    let prec = x.prec();
    let tiny = eps(prec);
    let one = Hpc::one(prec);
    let xinv = x.recip();
    let mut a = x.clone();
    let mut b = p * &xinv;
    let mut acc = one.clone();
    for _ in 0..MAX_FACTORS {
        acc = acc * (&one - &a) * (&one - &b);
        if a.abs() < tiny && b.abs() < tiny {
            return Ok(acc);
        }
        a = &a * p;
        b = &b * p;
    }
    Err(ModError::DomainError("theta product did not converge".into()))
}

/// `theta(x_1, ..., x_k; p)`, the product over the arguments.
pub fn theta_prod(xs: &[Hpc], p: &Hpc) -> Result<Hpc, ModError> {
    let mut acc: Option<Hpc> = None;
    for x in xs {
        let t = theta(x, p)?;
        acc = Some(match acc {
            Some(a) => a * t,
            None => t,
        });
    }
    acc.ok_or_else(|| ModError::DomainError("empty theta product".into()))
}

/// `theta(x^{+-1}; p) = theta(x; p) theta(1/x; p)`
pub fn theta_pm(x: &Hpc, p: &Hpc) -> Result<Hpc, ModError> {
    theta_prod(&[x.clone(), x.recip()], p)
}

/// `eta(tau) = e^{pi i tau/12} prod_{k >= 1} (1 - e^{2 pi i k tau})`
pub fn eta(tau: &Hpc) -> Result<Hpc, ModError> {
    let prec = tau.prec();
    if tau.im <= 0 {
        return Err(ModError::DomainError(format!("eta at tau = {tau} outside the upper half-plane")));
    }
    let pi = Hpc::pi(prec);
    let ipi = Hpc::new(Float::new(prec), pi);
    let q = (&ipi * tau).scale(&Float::with_val(prec, 2)).exp();
    let pre = (&ipi * tau).scale(&(Float::with_val(prec, 1) / 12u32)).exp();
    let tiny = eps(prec);
    let one = Hpc::one(prec);
    let mut qk = q.clone();
    let mut acc = one.clone();
    for _ in 0..MAX_FACTORS {
        acc = acc * (&one - &qk);
        if qk.abs() < tiny {
            return Ok(pre * acc);
        }
        qk = &qk * &q;
    }
    Err(ModError::DomainError("eta product did not converge".into()))
}
