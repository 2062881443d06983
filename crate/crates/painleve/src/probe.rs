//! The factorization `s_{2n+1}(y^2) = p_n(y) p_n(-y)` evaluated on the
//! determinant formulas for `s` and `p`. Reported, never assumed.

use ev_core::{PolyZeta, Rat, RatZeta};
use ev_tsystem::{family_eval, Family, FamilyValue, Limits, TError};

fn zeta_value(which: Family, n: i64, limits: &Limits) -> Result<RatZeta, TError> {
    match family_eval(which, n, limits)?.value {
        FamilyValue::Zeta(v) => Ok(v),
        other => Err(TError::InvalidIndex(format!("{} gave {other:?}", which.name()))),
    }
}

/// Coefficients of the polynomial `s` with `s(w(z)) = g(z)`, where `w` has a
/// simple zero at `z = 0`; `None` if no polynomial of degree `<= max_deg`
/// fits.
pub fn expand_in(g: &RatZeta, w: &RatZeta, max_deg: usize) -> Option<PolyZeta> {
    let zero = Rat::from_integer(0.into());
    let mut rest = g.clone();
    let mut coeffs = Vec::new();
    for _ in 0..=max_deg {
        if rest.is_zero() {
            return Some(PolyZeta::from_coeffs(coeffs));
        }
        let c = rest.eval(&zero)?;
        rest = rest.sub(&RatZeta::from_rat(c.clone())).div(w).ok()?;
        coeffs.push(c);
    }
    rest.is_zero().then(|| PolyZeta::from_coeffs(coeffs))
}

/// `s_n` as a polynomial in its own argument `z/((z+2)(2z+1))`.
pub fn s_leading_poly(n: i64, limits: &Limits) -> Result<Option<PolyZeta>, TError> {
    let g = zeta_value(Family::SLeading, n, limits)?;
    let w = RatZeta::z()
        .div(&RatZeta::linear(1, 2).mul(&RatZeta::linear(2, 1)))
        .expect("nonzero");
    let bound = (g.valuation_at(&Rat::from_integer((-2).into()))?.unsigned_abs() as usize).max(1) + 1;
    Ok(expand_in(&g, &w, bound))
}

/// Zinn-Justin `p_n` as a polynomial in `y = 1/(2z+1)`.
pub fn zj_p_poly(n: i64, limits: &Limits) -> Result<Option<PolyZeta>, TError> {
    // z = (1 - y) / (2 y)
    let p = zeta_value(Family::ZjP, n, limits)?.compose_mobius(-1, 1, 2, 0);
    Ok(p.to_polyzeta())
}

#[derive(Debug, Clone, PartialEq)]
pub struct SppProbe {
    pub n: i64,
    pub s: Option<PolyZeta>,
    pub p: Option<PolyZeta>,
    pub holds: bool,
    /// equality after dividing both sides by their leading coefficients
    pub holds_up_to_constant: bool,
}

fn monic(p: &PolyZeta) -> PolyZeta {
    match p.coeffs().last() {
        Some(lc) => p.scale(&(Rat::from_integer(1.into()) / lc)),
        None => p.clone(),
    }
}

pub fn spp_probe(n: i64, limits: &Limits) -> Result<SppProbe, TError> {
    let s = s_leading_poly(2 * n + 1, limits)?;
    let p = zj_p_poly(n, limits)?;
    let (holds, up_to) = match (&s, &p) {
        (Some(s), Some(p)) => {
            let zero = Rat::from_integer(0.into());
            let s_sq = PolyZeta::from_coeffs(
                s.coeffs()
                    .iter()
                    .flat_map(|c| [c.clone(), zero.clone()])
                    .collect(),
            );
            let p_neg = PolyZeta::from_coeffs(
                p.coeffs()
                    .iter()
                    .enumerate()
                    .map(|(i, c)| if i % 2 == 1 { -c.clone() } else { c.clone() })
                    .collect(),
            );
            let rhs = p.mul(&p_neg);
            (s_sq == rhs, monic(&s_sq) == monic(&rhs))
        }
        _ => (false, false),
    };
    Ok(SppProbe {
        n,
        s,
        p,
        holds,
        holds_up_to_constant: up_to,
    })
}
