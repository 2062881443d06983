//! Numerical evaluation of exact objects at a complex `zeta` and complex
//! points `x`.

use ev_core::{MPolyX, PolyZeta, Rat, RatZeta};
use ev_tsystem::XFrac;

use crate::hpc::Hpc;
use crate::ModError;

/// Horner evaluation of a polynomial in `zeta` with rational coefficients.
pub fn eval_poly(p: &PolyZeta, zeta: &Hpc) -> Hpc {
    let prec = zeta.prec();
    p.coeffs()
        .iter()
        .rev()
        .fold(Hpc::zero(prec), |acc, c| acc * zeta + Hpc::from_rat(prec, c))
}

pub fn eval_rat(r: &Rat, prec: u32) -> Hpc {
    Hpc::from_rat(prec, r)
}

/// A rational function of `zeta`; errors if the denominator vanishes to
/// working precision.
pub fn eval_ratzeta(f: &RatZeta, zeta: &Hpc) -> Result<Hpc, ModError> {
    let num = eval_poly(&f.numerator(), zeta);
    let den = eval_poly(&f.denominator(), zeta);
    if den.abs() < crate::theta::eps(zeta.prec()) {
        return Err(ModError::NearSingularSample(format!("pole of {f} at zeta = {zeta}")));
    }
    Ok(num / den)
}

/// A polynomial in `x_1..x_m` with coefficients in `Q(zeta)`.
pub fn eval_mpoly(p: &MPolyX, zeta: &Hpc, xs: &[Hpc]) -> Result<Hpc, ModError> {
    if xs.len() != p.nvars() {
        return Err(ModError::DomainError(format!(
            "{} values for {} variables",
            xs.len(),
            p.nvars()
        )));
    }
    let prec = zeta.prec();
    let mut acc = Hpc::zero(prec);
    for (mono, c) in p.terms() {
        let mut term = eval_ratzeta(c, zeta)?;
        for (x, &e) in xs.iter().zip(mono.exps()) {
            if e > 0 {
                term = term * x.powi(e as i64);
            }
        }
        acc = acc + term;
    }
    Ok(acc)
}

/// `num(x) / prod_j prod_a (x_j - a)^e`
pub fn eval_xfrac(f: &XFrac, zeta: &Hpc, xs: &[Hpc]) -> Result<Hpc, ModError> {
    let mut v = eval_mpoly(f.numerator(), zeta, xs)?;
    for (a, e) in f.poles() {
        let av = eval_ratzeta(a, zeta)?;
        for x in xs {
            let d = x - &av;
            if d.abs() < crate::theta::eps(zeta.prec()) {
                return Err(ModError::NearSingularSample(format!("x = {x} at a pole")));
            }
            v = v / d.powi(*e as i64);
        }
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hpc::prec_for;
    use ev_core::parse_ratzeta;

    #[test]
    fn rational_function() {
        let prec = prec_for(40);
        let f = parse_ratzeta("z*(z + 2)^3 / (2*z + 1)^3").unwrap();
        let z = Hpc::from_f64(prec, 0.5, 0.25);
        let one = Hpc::one(prec);
        let two = Hpc::from_int(prec, 2);
        let expect = &z * &(&z + &two).powi(3) / (&two * &z + one).powi(3);
        assert!(eval_ratzeta(&f, &z).unwrap().rel_diff(&expect) < 1e-40);
        let pole = Hpc::from_f64(prec, -0.5, 0.0);
        assert!(matches!(eval_ratzeta(&f, &pole), Err(ModError::NearSingularSample(_))));
    }
}
