//! Polynomial families expressed through `T_n^(k)` and `t^(k)`.

use ev_core::{parse_mpoly, MPolyX, PolyZeta, Rat, RatZeta};
use num_bigint::BigInt;

use crate::split::divide_vandermonde;
use crate::tnk::{tk, tnk};
use crate::trig::delta;
use crate::weights::{compose, compose2, weight, Weight};
use crate::xfrac::XFrac;
use crate::{KIndex, Limits, TError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// Three-colour polynomial in `2n+1` variables.
    S,
    /// `P_n(x)` from `T_n^(n,n,0,-1)`.
    BigP,
    /// `p_n` from `t^(n+1,n,0,-1)`.
    SmallP,
    /// `y_n` from `t^(n+2,n-1,0,-1)`.
    Y,
    /// `p~_n` from `t^(n,n+1,0,-1)`.
    PTilde,
    /// Leading coefficient `s_n` of the Q-operator eigenvalue polynomial.
    SLeading,
    /// Constant term `s-bar_n`.
    SConstant,
    /// The determinant `H_2n` with weight `h`.
    H,
    /// Zinn-Justin `p_n`.
    ZjP,
    /// Zinn-Justin `q_n`.
    ZjQ,
    /// `f_n` with `t^(0,2n,0,0) = (z(z+1)/(z+2))^{n(n-1)} f_n((2z+1)^2)`.
    F,
}

impl Family {
    pub const ALL: [Family; 11] = [
        Family::S,
        Family::BigP,
        Family::SmallP,
        Family::Y,
        Family::PTilde,
        Family::SLeading,
        Family::SConstant,
        Family::H,
        Family::ZjP,
        Family::ZjQ,
        Family::F,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::S => "S_n",
            Family::BigP => "P_n",
            Family::SmallP => "p_n",
            Family::Y => "y_n",
            Family::PTilde => "ptilde_n",
            Family::SLeading => "s_n",
            Family::SConstant => "sbar_n",
            Family::H => "H_2n",
            Family::ZjP => "zj_p_n",
            Family::ZjQ => "zj_q_n",
            Family::F => "f_n",
        }
    }

    pub fn from_name(s: &str) -> Option<Family> {
        Self::ALL.into_iter().find(|f| f.name() == s)
    }

    /// The reparameterization under which the family is reported in `z`.
    pub fn substitution(self) -> Option<&'static str> {
        match self {
            Family::SLeading | Family::SConstant => Some("argument = z/((z + 2)*(2*z + 1))"),
            Family::ZjP | Family::ZjQ => Some("argument = 1/(2*z + 1)"),
            Family::H => Some("zeta_Z = 2*z + 1"),
            Family::F => Some("argument w = (2*z + 1)^2"),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum FamilyValue {
    Poly(MPolyX),
    Frac(XFrac),
    Zeta(RatZeta),
    /// Polynomial in the argument named by [`Family::substitution`].
    Univariate(PolyZeta),
}

#[derive(Debug, Clone, PartialEq)]
pub struct FamilyResult {
    pub family: Family,
    pub n: i64,
    pub value: FamilyValue,
    pub substitution: Option<&'static str>,
}

fn rz(k: i64) -> RatZeta {
    RatZeta::from_int(k)
}

fn pw(f: &RatZeta, e: i64) -> RatZeta {
    f.pow(e).expect("nonzero base")
}

fn floor_half(n: i64) -> i64 {
    n.div_euclid(2)
}

fn sign(e: i64) -> RatZeta {
    if e.rem_euclid(2) == 0 {
        rz(1)
    } else {
        rz(-1)
    }
}

fn two_pow(e: i64) -> RatZeta {
    pw(&rz(2), e)
}

/// `z/2 + 1`
fn half_z_plus_one() -> RatZeta {
    RatZeta::linear(1, 2).scale(&Rat::new(1.into(), 2.into()))
}

fn z() -> RatZeta {
    RatZeta::z()
}

fn zp1() -> RatZeta {
    RatZeta::linear(1, 1)
}

fn tzp1() -> RatZeta {
    RatZeta::linear(2, 1)
}

fn one_minus_z() -> RatZeta {
    RatZeta::linear(-1, 1)
}

const F_TEXT: &str = "(z + 2)*x1*x2*x3 - z*(x1*x2 + x2*x3 + x1*x3 + x1 + x2 + x3) + z*(2*z + 1)";
const H_TEXT: &str = "1 - (3 + (2*z + 1)^2)*x1*x2 + (1 - (2*z + 1)^2)*x1*x2*(x1 + x2)";

/// Determinant `prod w(x_i, y_j) / (Delta(x) Delta(y)) det(e(x_i, y_j) / w(x_i, y_j))`
/// in numerator form.
fn ik_determinant(
    n: usize,
    nv: usize,
    w: impl Fn(&MPolyX, &MPolyX) -> MPolyX,
    e: impl Fn(&MPolyX, &MPolyX) -> MPolyX,
) -> Result<MPolyX, TError> {
    let xs: Vec<MPolyX> = (0..n).map(|i| MPolyX::var(nv, i)).collect();
    let ys: Vec<MPolyX> = (0..n).map(|i| MPolyX::var(nv, n + i)).collect();
    let one = MPolyX::one(nv);
    let mut mat = Vec::with_capacity(n);
    for x in &xs {
        let ws: Vec<MPolyX> = ys.iter().map(|y| w(x, y)).collect();
        let row: Vec<MPolyX> = ys
            .iter()
            .enumerate()
            .map(|(j, y)| {
                ws.iter()
                    .enumerate()
                    .filter(|&(jj, _)| jj != j)
                    .fold(e(x, y), |acc, (_, wj)| acc.mul(wj))
            })
            .collect();
        mat.push(row);
    }
    let num = ev_core::det_minors(&mat, &one, |a, b| a.mul(b));
    let num = divide_vandermonde(num, &xs)?;
    divide_vandermonde(num, &ys)
}

/// `S_n(x_1..x_n, y_1..y_n, z)` from its own determinant.
pub fn s_poly(n: usize, limits: &Limits) -> Result<MPolyX, TError> {
    if n > limits.max_symbolic_n {
        return Err(TError::SizeBound(format!("S_{n}")));
    }
    let nv = 2 * n + 1;
    let f = parse_mpoly(F_TEXT, Some(3)).expect("F parses");
    let last = MPolyX::var(nv, 2 * n);
    ik_determinant(
        n,
        nv,
        |a, b| weight(Weight::G, a, b),
        |a, b| compose(&f, &[a.clone(), b.clone(), last.clone()]),
    )
}

/// `H_2n(x_1..x_n, y_1..y_n)` with `zeta_Z = 2z + 1`.
pub fn h_poly(n: usize, limits: &Limits) -> Result<MPolyX, TError> {
    if n > limits.max_symbolic_n {
        return Err(TError::SizeBound(format!("H_{}", 2 * n)));
    }
    let h = parse_mpoly(H_TEXT, Some(2)).expect("h parses");
    ik_determinant(n, 2 * n, |a, b| compose2(&h, a, b), |a, _| MPolyX::one(a.nvars()))
}

/// `phi(x) = z/(z+2) (1 - 2(z+1) x)`
pub fn phi_affine() -> (RatZeta, RatZeta) {
    let c = z().div(&RatZeta::linear(1, 2)).unwrap();
    (c.mul(&zp1()).scale(&Rat::from_integer((-2).into())), c)
}

#[allow(clippy::too_many_arguments)]
fn t_prefactor(
    sgn: i64,
    two_exp: i64,
    half_exp: i64,
    z_exp: i64,
    zp1_exp: i64,
    tzp1_exp: i64,
    one_minus_z: bool,
) -> RatZeta {
    let num = sign(sgn).mul(&two_pow(two_exp)).mul(&pw(&half_z_plus_one(), half_exp));
    let mut den = pw(&z(), z_exp).mul(&pw(&zp1(), zp1_exp)).mul(&pw(&tzp1(), tzp1_exp));
    if one_minus_z {
        den = den.mul(&self::one_minus_z());
    }
    num.div(&den).unwrap()
}

/// Evaluates a family at `n`.
pub fn family_eval(which: Family, n: i64, limits: &Limits) -> Result<FamilyResult, TError> {
    let value = match which {
        Family::S => {
            if n < 0 {
                return Err(TError::InvalidIndex(format!("S_{n}")));
            }
            FamilyValue::Poly(s_poly(n as usize, limits)?)
        }
        Family::H => {
            if n < 0 {
                return Err(TError::InvalidIndex(format!("H_{}", 2 * n)));
            }
            FamilyValue::Poly(h_poly(n as usize, limits)?)
        }
        Family::BigP => {
            let t = tnk(&KIndex::new([n, n, 0, -1], n)?, limits)?.value;
            let pre = t_prefactor(
                floor_half(n),
                0,
                n * (n - 1) - delta(n - 1),
                n * (n - 1),
                n * (n - 2),
                delta(n - 1),
                true,
            );
            let v = t.scale(&pre).mul_linear_power(&z(), 1)?;
            if v.is_polynomial() {
                FamilyValue::Poly(v.numerator().clone())
            } else {
                FamilyValue::Frac(v)
            }
        }
        Family::SmallP => {
            let t = tk([n + 1, n, 0, -1], limits)?;
            FamilyValue::Zeta(t.mul(&t_prefactor(
                floor_half(n),
                0,
                n * (n - 1) - delta(n - 1),
                n * (n - 1),
                n * n - 2 * n - 1,
                delta(n),
                true,
            )))
        }
        Family::Y => {
            let t = tk([n + 2, n - 1, 0, -1], limits)?;
            FamilyValue::Zeta(t.mul(&t_prefactor(
                floor_half(n),
                -floor_half(n + 3),
                (n - 1) * (n - 1) - delta(n - 2),
                n * (n - 1),
                n * n - 2 * n - 1,
                delta(n + 1),
                true,
            )))
        }
        Family::PTilde => {
            let t = tk([n, n + 1, 0, -1], limits)?;
            FamilyValue::Zeta(t.mul(&t_prefactor(
                floor_half(n) + 1,
                floor_half(n - 1),
                n * n - 1 - delta(n),
                n * n - 1,
                n * n - 2 * n - 1,
                delta(n - 1),
                true,
            )))
        }
        Family::SLeading | Family::SConstant => {
            let rhs = if which == Family::SLeading {
                tk([n, n, 0, 0], limits)?.mul(&t_prefactor(
                    floor_half(n),
                    0,
                    n * (n - 1) - delta(n - 1),
                    n * (n - 1),
                    n * (n - 1),
                    delta(n - 1),
                    false,
                ))
            } else {
                tk([n, n, 1, -1], limits)?.mul(&t_prefactor(
                    floor_half(n) + 1,
                    n - 1,
                    n * n - 1 - delta(n - 1),
                    n * n - 1,
                    n * (n - 1),
                    delta(n - 1),
                    false,
                ))
            };
            let lhs_factor = RatZeta::linear(1, 2)
                .mul(&tzp1())
                .scale(&Rat::new(1.into(), 2.into()));
            FamilyValue::Zeta(rhs.div(&pw(&lhs_factor, delta(n)))?)
        }
        Family::ZjP => {
            let t = tk([-1, 2 * n + 1, 0, 0], limits)?;
            let c = if n >= 0 {
                two_pow(n)
            } else {
                pw(&rz(3), n + 1).div(&two_pow(n + 2))?
            };
            let pre = sign(n)
                .mul(&c)
                .mul(&pw(&RatZeta::linear(1, 2), n * n - n - 1))
                .div(
                    &pw(&z(), n * n - 2 * n - 1)
                        .mul(&pw(&zp1(), n * (n - 1)))
                        .mul(&pw(&tzp1(), n * n + n + 1)),
                )?;
            FamilyValue::Zeta(t.mul(&pre))
        }
        Family::ZjQ => {
            let t = tk([0, 2 * n + 2, 0, 0], limits)?;
            let d = if n >= -1 {
                rz(1)
            } else {
                pw(&rz(3), n + 2).div(&two_pow(2 * n + 3))?
            };
            let inner = RatZeta::linear(1, 2).div(&z().mul(&zp1()).mul(&tzp1()))?;
            FamilyValue::Zeta(t.mul(&d).mul(&pw(&inner, n * (n + 1))))
        }
        Family::F => FamilyValue::Univariate(f_poly(n, limits)?),
    };
    Ok(FamilyResult {
        family: which,
        n,
        value,
        substitution: which.substitution(),
    })
}

/// `f_n(w)`, extracted from `t^(0,2n,0,0)`; fails unless the extraction is
/// a polynomial in `w = (2z+1)^2` of degree `n(n-1)/2`.
pub fn f_poly(n: i64, limits: &Limits) -> Result<PolyZeta, TError> {
    if n < 0 {
        return Err(TError::InvalidIndex(format!("f_{n}")));
    }
    let t = tk([0, 2 * n, 0, 0], limits)?;
    let base = z().mul(&zp1()).div(&RatZeta::linear(1, 2))?;
    let g = t.div(&pw(&base, n * (n - 1)))?;
    let g = g
        .to_polyzeta()
        .ok_or_else(|| TError::NonPolynomial(format!("f_{n}: {g}")))?;
    // z = (u - 1)/2
    let half = Rat::new(1.into(), 2.into());
    let sub = PolyZeta::from_coeffs(vec![-half.clone(), half]);
    let mut acc = PolyZeta::zero();
    for c in g.coeffs().iter().rev() {
        acc = acc.mul(&sub).add(&PolyZeta::from_coeffs(vec![c.clone()]));
    }
    let cs = acc.coeffs();
    if cs.iter().skip(1).step_by(2).any(|c| *c != Rat::from_integer(BigInt::from(0))) {
        return Err(TError::NonPolynomial(format!(
            "f_{n}: not a function of (2z+1)^2"
        )));
    }
    let f = PolyZeta::from_coeffs(cs.iter().step_by(2).cloned().collect());
    let expect = (n * (n - 1) / 2) as usize;
    if f.degree() != Some(expect) {
        return Err(TError::NonPolynomial(format!(
            "f_{n} has degree {:?}, expected {expect}",
            f.degree()
        )));
    }
    Ok(f)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn floor_half_negative() {
        assert_eq!(floor_half(-1), -1);
        assert_eq!(floor_half(3), 1);
    }

    #[test]
    fn h2_is_one() {
        assert!(h_poly(1, &Limits::default()).unwrap().is_one());
    }

    #[test]
    fn names_round_trip() {
        for f in Family::ALL {
            assert_eq!(Family::from_name(f.name()), Some(f));
        }
    }
}
