//! Points of the upper half-plane and the modular objects evaluated there.

use rug::Float;

use crate::hpc::{prec_for, Hpc};
use crate::theta::{eta, theta, theta_prod};
use crate::ModError;

/// `tau` with `p = e^{pi i tau}`, at a fixed working precision.
#[derive(Debug, Clone)]
pub struct ModularPoint {
    pub tau: Hpc,
    pub p: Hpc,
    pub digits: u32,
}

/// `e^{2 pi i k z}`
pub fn e2pi(z: &Hpc, k: i64) -> Hpc {
    let prec = z.prec();
    let f = Hpc::pi(prec) * Float::with_val(prec, 2 * k);
    (Hpc::new(Float::new(prec), f) * z).exp()
}

/// `omega = e^{2 pi i/3}`
pub fn omega(prec: u32) -> Hpc {
    Hpc::root_of_unity(prec, 2, 3)
}

impl ModularPoint {
    pub fn new(tau: Hpc, digits: u32) -> Result<Self, ModError> {
        crate::check_digits(digits)?;
        let prec = prec_for(digits);
        let tau = Hpc::new(Float::with_val(prec, &tau.re), Float::with_val(prec, &tau.im));
        if tau.im <= 0 {
            return Err(ModError::DomainError(format!("tau = {tau} is not in the upper half-plane")));
        }
        let half = Hpc::from_f64(prec, 0.5, 0.0);
        let p = e2pi(&(&tau * &half), 1);
        Ok(ModularPoint { tau, p, digits })
    }

    /// Reads decimal strings for the real and imaginary part.
    pub fn parse(re: &str, im: &str, digits: u32) -> Result<Self, ModError> {
        let prec = prec_for(digits);
        let tau = Hpc::parse(prec, re, im)
            .ok_or_else(|| ModError::DomainError(format!("cannot parse tau = {re} + {im}i")))?;
        Self::new(tau, digits)
    }

    pub fn prec(&self) -> u32 {
        self.tau.prec()
    }

    /// The same point at a nearby `tau`.
    pub fn at(&self, tau: Hpc) -> Result<Self, ModError> {
        Self::new(tau, self.digits)
    }

    fn p2(&self) -> Hpc {
        &self.p * &self.p
    }

    /// `zeta(tau) = omega^2 theta(-1, -p omega; p^2) / theta(-p, -omega; p^2)`
    pub fn zeta(&self) -> Result<Hpc, ModError> {
        let prec = self.prec();
        let w = omega(prec);
        let one = Hpc::one(prec);
        let p2 = self.p2();
        let num = theta_prod(&[-&one, -(&self.p * &w)], &p2)?;
        let den = theta_prod(&[-self.p.clone(), -w.clone()], &p2)?;
        Ok(&w * &w * num / den)
    }

    /// `t = p^3 theta(-1; p^6)^4 / theta(-p^3; p^6)^4`, the modular lambda
    /// function at `3 tau`.
    pub fn t_theta(&self) -> Result<Hpc, ModError> {
        let prec = self.prec();
        let p3 = self.p.powi(3);
        let p6 = &p3 * &p3;
        let r = theta(&-Hpc::one(prec), &p6)? / theta(&-p3.clone(), &p6)?;
        Ok(p3 * r.powi(4))
    }

    /// The elliptic function `x(z)` with periods `1` and `tau`.
    pub fn x(&self, z: &Hpc) -> Result<Hpc, ModError> {
        let prec = self.prec();
        let w = omega(prec);
        let p2 = self.p2();
        let pw = &self.p * &w;
        let e = e2pi(z, 1);
        let ei = e.recip();
        let c = theta(&-pw.clone(), &p2)? / theta(&-w.clone(), &p2)?;
        let num = theta_prod(&[&w * &e, &w * &ei], &p2)?;
        let den = theta_prod(&[&pw * &e, &pw * &ei], &p2)?;
        if den.abs() < crate::theta::eps(prec) {
            return Err(ModError::NearSingularSample(format!("x has a pole at z = {z}")));
        }
        Ok(&c * &c * num / den)
    }

    /// `eta(k tau / d)`
    pub fn eta_at(&self, k: i64, d: i64) -> Result<Hpc, ModError> {
        let prec = self.prec();
        let s = Float::with_val(prec, k) / Float::with_val(prec, d);
        eta(&self.tau.scale(&s))
    }

    /// `phi_1..phi_5`
    pub fn phis(&self) -> Result<[Hpc; 5], ModError> {
        let e1 = self.eta_at(1, 1)?;
        let eh = self.eta_at(1, 2)?;
        let e2 = self.eta_at(2, 1)?;
        let e32 = self.eta_at(3, 2)?;
        let e6 = self.eta_at(6, 1)?;
        let e3 = self.eta_at(3, 1)?;
        let e1sq = &e1 * &e1;
        Ok([
            &eh * &eh / &e1sq,
            &e2 * &e2 / &e1sq,
            &e32 / &eh,
            &e6 / &e2,
            &e3 / &e1,
        ])
    }
}

/// The rational parametrization `t = zeta (zeta+2)^3 / (2 zeta + 1)^3`.
pub fn t_of_zeta(zeta: &Hpc) -> Hpc {
    let prec = zeta.prec();
    let one = Hpc::one(prec);
    let two = Hpc::from_int(prec, 2);
    zeta * &(zeta + &two).powi(3) / (&two * zeta + one).powi(3)
}

/// Distance from `zeta` to the nearest finite cusp value.
pub fn cusp_distance(zeta: &Hpc) -> Float {
    let prec = zeta.prec();
    [-2.0, -1.0, -0.5, 0.0, 1.0]
        .iter()
        .map(|&c| (zeta - &Hpc::from_f64(prec, c, 0.0)).abs())
        .min_by(|a, b| a.partial_cmp(b).expect("finite"))
        .expect("nonempty")
}

#[derive(Debug, Clone)]
pub struct ModularSuite {
    pub eta: Hpc,
    pub phi: [Hpc; 5],
    pub zeta: Hpc,
    pub t: Hpc,
    /// relative difference between `t(p)` and the rational expression in `zeta`
    pub tz_residual: Float,
}

pub fn modular_suite(mp: &ModularPoint) -> Result<ModularSuite, ModError> {
    let zeta = mp.zeta()?;
    let t = mp.t_theta()?;
    let tz_residual = t_of_zeta(&zeta).rel_diff(&t);
    Ok(ModularSuite {
        eta: mp.eta_at(1, 1)?,
        phi: mp.phis()?,
        zeta,
        t,
        tz_residual,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_lower_half_plane() {
        assert!(ModularPoint::parse("0", "-1", 50).is_err());
        assert!(ModularPoint::parse("0", "1", 20).is_err());
    }

    #[test]
    fn tz_identity() {
        let mp = ModularPoint::parse("0", "1.1", 60).unwrap();
        let s = modular_suite(&mp).unwrap();
        assert!(s.tz_residual < 1e-50, "{}", s.tz_residual);
    }
}
