//! The Weierstrass function `wp(x | 1, T)` from its `q`-expansion.

use rug::Float;

use crate::hpc::Hpc;
use crate::modular::e2pi;
use crate::theta::eps;
use crate::ModError;

const MAX_TERMS: usize = 1_000_000;

/// `E_2(T) = 1 - 24 sum_{n >= 1} n Q^n / (1 - Q^n)`, `Q = e^{2 pi i T}`.
#[allow(non_snake_case)]
pub fn E2(period: &Hpc) -> Result<Hpc, ModError> {
    let prec = period.prec();
    if period.im <= 0 {
        return Err(ModError::DomainError(format!("E2 at {period}")));
    }
    let q = e2pi(period, 1);
    let one = Hpc::one(prec);
    let tiny = eps(prec);
    let mut qn = q.clone();
    let mut s = Hpc::zero(prec);
    for n in 1..MAX_TERMS {
        let term = (&qn / &(&one - &qn)).scale(&Float::with_val(prec, n));
        s = s + &term;
        if term.abs() < tiny {
            return Ok(one - s.scale(&Float::with_val(prec, 24)));
        }
        qn = &qn * &q;
    }
    Err(ModError::DomainError("E2 series did not converge".into()))
}

/// `wp(x)` for the lattice `Z + T Z`:
/// `-4 pi^2 [sum_{n>=0} Q^n w/(1-Q^n w)^2 + sum_{n>=1} Q^n w^{-1}/(1-Q^n w^{-1})^2] - pi^2 E_2(T)/3`
/// with `w = e^{2 pi i x}`.
pub fn weierstrass_p(x: &Hpc, period: &Hpc) -> Result<Hpc, ModError> {
    let prec = x.prec();
    if period.im <= 0 {
        return Err(ModError::DomainError(format!("period {period} not in the upper half-plane")));
    }
    // shift x so that |Im x| <= Im T / 2
    let k = Float::with_val(prec, &x.im / &period.im).round();
    let x = x - &period.scale(&k);
    let w = e2pi(&x, 1);
    let tiny = eps(prec);
    if (&Hpc::one(prec) - &w).abs() < tiny {
        return Err(ModError::NearSingularSample(format!("wp at a lattice point {x}")));
    }
    let q = e2pi(period, 1);
    let one = Hpc::one(prec);
    let wi = w.recip();
    let term = |a: &Hpc| -> Hpc {
        let d = &one - a;
        a / &(&d * &d)
    };
    let mut s = term(&w);
    let mut qn = q.clone();
    let mut converged = false;
    for _ in 0..MAX_TERMS {
        let a = term(&(&qn * &w));
        let b = term(&(&qn * &wi));
        s = s + &a + &b;
        if a.abs() < tiny && b.abs() < tiny {
            converged = true;
            break;
        }
        qn = &qn * &q;
    }
    if !converged {
        return Err(ModError::DomainError("wp series did not converge".into()));
    }
    let pi = Hpc::pi(prec);
    let pi2 = Float::with_val(prec, &pi * &pi);
    let e2 = E2(period)?;
    Ok(-s.scale(&(Float::with_val(prec, 4) * &pi2))
        - e2.scale(&(pi2 / Float::with_val(prec, 3))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hpc::prec_for;

    #[test]
    fn laurent_leading_term() {
        let prec = prec_for(50);
        let period = Hpc::from_f64(prec, 0.1, 1.3);
        let x = Hpc::from_f64(prec, 1e-6, 2e-6);
        let v = weierstrass_p(&x, &period).unwrap();
        let lead = (&x * &x).recip();
        // wp(x) - 1/x^2 = O(x^2)
        assert!((&v - &lead).abs() < 1e-8);
    }

    #[test]
    fn even_and_periodic() {
        let prec = prec_for(50);
        let period = Hpc::from_f64(prec, 0.1, 1.3);
        let x = Hpc::from_f64(prec, 0.21, 0.17);
        let v = weierstrass_p(&x, &period).unwrap();
        assert!(weierstrass_p(&-x.clone(), &period).unwrap().rel_diff(&v) < 1e-45);
        let shifted = &(&x + &period) + &Hpc::one(prec);
        assert!(weierstrass_p(&shifted, &period).unwrap().rel_diff(&v) < 1e-45);
    }

    #[test]
    fn real_at_half_period_for_imaginary_period() {
        let prec = prec_for(50);
        let period = Hpc::from_f64(prec, 0.0, 1.7);
        for x in [Hpc::from_f64(prec, 0.5, 0.0), Hpc::from_f64(prec, 0.0, 0.85)] {
            let v = weierstrass_p(&x, &period).unwrap();
            assert!(v.im.clone().abs() < 1e-45 * v.abs());
        }
    }
}
