//! Canonical rational functions of one variable `z` over `Q`.

use std::fmt;
use std::hash::{Hash, Hasher};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::intpoly::IntPoly;
use crate::polyzeta::PolyZeta;
use crate::{ExactError, Rat};

/// A rational function `c * num / den`.
///
/// Canonical form: `num` and `den` are primitive integer polynomials with
/// positive leading coefficients and no common factor; all remaining scalar
/// information sits in `c`. Zero is `0 * 1 / 1`. Equality is therefore
/// structural.
#[derive(Clone, PartialEq, Eq)]
pub struct RatZeta {
    c: Rat,
    num: IntPoly,
    den: IntPoly,
}

impl Hash for RatZeta {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.c.numer().hash(state);
        self.c.denom().hash(state);
        self.num.hash(state);
        self.den.hash(state);
    }
}

impl fmt::Debug for RatZeta {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for RatZeta {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::text::format_ratzeta(self))
    }
}

impl Default for RatZeta {
    fn default() -> Self {
        RatZeta::zero()
    }
}

impl RatZeta {
    pub fn zero() -> Self {
        RatZeta {
            c: Rat::zero(),
            num: IntPoly::one(),
            den: IntPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_rat(Rat::one())
    }

    pub fn from_rat(c: Rat) -> Self {
        RatZeta {
            c,
            num: IntPoly::one(),
            den: IntPoly::one(),
        }
    }

    pub fn from_int(k: i64) -> Self {
        Self::from_rat(Rat::from_integer(BigInt::from(k)))
    }

    pub fn from_frac(a: i64, b: i64) -> Self {
        Self::from_rat(Rat::new(BigInt::from(a), BigInt::from(b)))
    }

    /// The variable `z`.
    pub fn z() -> Self {
        Self::from_int_poly(IntPoly::var())
    }

    /// `a*z + b`
    pub fn linear(a: i64, b: i64) -> Self {
        Self::from_int_poly(IntPoly::linear(a, b))
    }

    pub fn from_int_poly(p: IntPoly) -> Self {
        if p.is_zero() {
            return Self::zero();
        }
        let (g, prim) = p.primitive();
        RatZeta {
            c: Rat::from_integer(g),
            num: prim,
            den: IntPoly::one(),
        }
    }

    pub fn from_polyzeta(p: &PolyZeta) -> Self {
        let (c, ip) = p.to_int_poly();
        Self::from_int_poly(ip).scale(&c)
    }

    /// Builds `c * num / den`, bringing it into canonical form.
    pub fn from_parts(c: Rat, num: IntPoly, den: IntPoly) -> Result<Self, ExactError> {
        if den.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        if c.is_zero() || num.is_zero() {
            return Ok(Self::zero());
        }
        let (gn, num) = num.primitive();
        let (gd, den) = den.primitive();
        let c = c * Rat::new(gn, gd);
        let g = num.gcd(&den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (num.div_exact(&g).unwrap(), den.div_exact(&g).unwrap())
        };
        Ok(RatZeta { c, num, den })
    }

    /// Ratio of two integer polynomials.
    pub fn ratio(num: IntPoly, den: IntPoly) -> Result<Self, ExactError> {
        Self::from_parts(Rat::one(), num, den)
    }

    pub fn scalar(&self) -> &Rat {
        &self.c
    }

    /// Primitive numerator (positive leading coefficient).
    pub fn num_primitive(&self) -> &IntPoly {
        &self.num
    }

    /// Primitive denominator (positive leading coefficient, content 1).
    pub fn den_primitive(&self) -> &IntPoly {
        &self.den
    }

    /// Integer numerator and denominator with the scalar distributed:
    /// `numer(c) * num` and `denom(c) * den`.
    pub fn to_int_fraction(&self) -> (IntPoly, IntPoly) {
        (
            self.num.scale(self.c.numer()),
            self.den.scale(self.c.denom()),
        )
    }

    pub fn numerator(&self) -> PolyZeta {
        PolyZeta::from_int_poly(&self.num).scale(&self.c)
    }

    pub fn denominator(&self) -> PolyZeta {
        PolyZeta::from_int_poly(&self.den)
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.c.is_one() && self.num.is_one() && self.den.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// The value as a constant, if it is one.
    pub fn as_rat(&self) -> Option<&Rat> {
        self.is_constant().then_some(&self.c)
    }

    pub fn to_polyzeta(&self) -> Option<PolyZeta> {
        self.is_polynomial().then(|| self.numerator())
    }

    pub fn neg(&self) -> RatZeta {
        RatZeta {
            c: -self.c.clone(),
            num: self.num.clone(),
            den: self.den.clone(),
        }
    }

    pub fn scale(&self, k: &Rat) -> RatZeta {
        if k.is_zero() || self.is_zero() {
            return Self::zero();
        }
        RatZeta {
            c: &self.c * k,
            num: self.num.clone(),
            den: self.den.clone(),
        }
    }

    pub fn add(&self, other: &RatZeta) -> RatZeta {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.den == other.den {
            let (c, n) = lincomb(&self.c, &self.num, &other.c, &other.num);
            if c.is_zero() {
                return Self::zero();
            }
            return cancel(c, n, self.den.clone(), &self.den);
        }
        let g = self.den.gcd(&other.den);
        let (da, db) = if g.is_one() {
            (self.den.clone(), other.den.clone())
        } else {
            (
                self.den.div_exact(&g).unwrap(),
                other.den.div_exact(&g).unwrap(),
            )
        };
        let (c, n) = lincomb(&self.c, &self.num.mul(&db), &other.c, &other.num.mul(&da));
        if c.is_zero() {
            return Self::zero();
        }
        let den = da.mul(&db).mul(&g);
        cancel(c, n, den, &g)
    }

    pub fn sub(&self, other: &RatZeta) -> RatZeta {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &RatZeta) -> RatZeta {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let c = &self.c * &other.c;
        if self.den.is_one() && other.den.is_one() {
            return RatZeta {
                c,
                num: self.num.mul(&other.num),
                den: IntPoly::one(),
            };
        }
        let g1 = self.num.gcd(&other.den);
        let g2 = other.num.gcd(&self.den);
        let n1 = self.num.div_exact(&g1).unwrap();
        let d2 = other.den.div_exact(&g1).unwrap();
        let n2 = other.num.div_exact(&g2).unwrap();
        let d1 = self.den.div_exact(&g2).unwrap();
        RatZeta {
            c,
            num: n1.mul(&n2),
            den: d1.mul(&d2),
        }
    }

    pub fn inv(&self) -> Result<RatZeta, ExactError> {
        if self.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        Ok(RatZeta {
            c: self.c.recip(),
            num: self.den.clone(),
            den: self.num.clone(),
        })
    }

    pub fn div(&self, other: &RatZeta) -> Result<RatZeta, ExactError> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn pow(&self, e: i64) -> Result<RatZeta, ExactError> {
        if e < 0 {
            return self.inv()?.pow(-e);
        }
        if self.is_zero() {
            return Ok(if e == 0 { Self::one() } else { Self::zero() });
        }
        let e32 = u32::try_from(e).expect("exponent out of range");
        Ok(RatZeta {
            c: num_traits::pow::Pow::pow(&self.c, e32),
            num: self.num.pow(e32),
            den: self.den.pow(e32),
        })
    }

    /// Formal derivative in `z` (quotient rule, renormalized).
    pub fn derivative(&self) -> RatZeta {
        if self.is_zero() || self.is_constant() {
            return Self::zero();
        }
        if self.den.is_one() {
            return Self::from_int_poly(self.num.derivative()).scale(&self.c);
        }
        let n = self
            .num
            .derivative()
            .mul(&self.den)
            .sub(&self.num.mul(&self.den.derivative()));
        let d = self.den.mul(&self.den);
        RatZeta::from_parts(self.c.clone(), n, d).unwrap()
    }

    /// Value at a rational point; `None` at a pole.
    pub fn eval(&self, x: &Rat) -> Option<Rat> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return None;
        }
        Some(&self.c * self.num.eval(x) / d)
    }

    /// Order of vanishing at the rational point `x` (negative for a pole).
    pub fn valuation_at(&self, x: &Rat) -> Result<i64, ExactError> {
        if self.is_zero() {
            return Err(ExactError::ZeroFunction);
        }
        let lin = IntPoly::from_coeffs(vec![-x.numer().clone(), x.denom().clone()]);
        Ok(multiplicity(&self.num, &lin) as i64 - multiplicity(&self.den, &lin) as i64)
    }

    /// `deg(den) - deg(num)`.
    pub fn valuation_at_infinity(&self) -> Result<i64, ExactError> {
        if self.is_zero() {
            return Err(ExactError::ZeroFunction);
        }
        Ok(self.den.degree().unwrap() as i64 - self.num.degree().unwrap() as i64)
    }

    /// Substitutes `z -> (a z + b) / (c z + d)` for integer `a, b, c, d`.
    pub fn compose_mobius(&self, a: i64, b: i64, c: i64, d: i64) -> RatZeta {
        if self.is_zero() {
            return Self::zero();
        }
        let top = IntPoly::linear(a, b);
        let bot = IntPoly::linear(c, d);
        let dn = self.num.degree().unwrap();
        let dd = self.den.degree().unwrap();
        let n = self.num.homogenized_compose(dn, &top, &bot);
        let m = self.den.homogenized_compose(dd, &top, &bot);
        let (n, m) = if dn >= dd {
            (n, m.mul(&bot.pow((dn - dd) as u32)))
        } else {
            (n.mul(&bot.pow((dd - dn) as u32)), m)
        };
        RatZeta::from_parts(self.c.clone(), n, m).expect("degenerate Mobius substitution")
    }

    /// Substitutes another rational function for `z`.
    pub fn compose(&self, inner: &RatZeta) -> RatZeta {
        let eval_poly = |p: &IntPoly| -> RatZeta {
            let mut acc = RatZeta::zero();
            for c in p.coeffs().iter().rev() {
                acc = acc.mul(inner).add(&RatZeta::from_rat(Rat::from_integer(c.clone())));
            }
            acc
        };
        eval_poly(&self.num)
            .div(&eval_poly(&self.den))
            .expect("composition hits a pole")
            .scale(&self.c)
    }
}

/// `a*p + b*q` for rational `a, b` as `(content, primitive)`.
fn lincomb(a: &Rat, p: &IntPoly, b: &Rat, q: &IntPoly) -> (Rat, IntPoly) {
    let l = a.denom().lcm(b.denom());
    let ka = a.numer() * (&l / a.denom());
    let kb = b.numer() * (&l / b.denom());
    let s = p.scale(&ka).add(&q.scale(&kb));
    if s.is_zero() {
        return (Rat::zero(), IntPoly::one());
    }
    let (g, prim) = s.primitive();
    (Rat::new(g, l), prim)
}

/// Removes from `num/den` any common factor, which must divide `hint`.
fn cancel(c: Rat, num: IntPoly, den: IntPoly, hint: &IntPoly) -> RatZeta {
    if hint.is_one() {
        return RatZeta { c, num, den };
    }
    let h = num.gcd(hint);
    if h.is_one() {
        return RatZeta { c, num, den };
    }
    RatZeta {
        c,
        num: num.div_exact(&h).unwrap(),
        den: den.div_exact(&h).unwrap(),
    }
}

fn multiplicity(p: &IntPoly, lin: &IntPoly) -> usize {
    let mut k = 0;
    let mut cur = p.clone();
    while let Some(q) = cur.div_exact(lin) {
        if q.is_zero() {
            break;
        }
        cur = q;
        k += 1;
    }
    k
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z() -> RatZeta {
        RatZeta::z()
    }

    #[test]
    fn inverse_pair_cancels() {
        let a = z().div(&RatZeta::linear(1, 2)).unwrap();
        let b = RatZeta::linear(1, 2).div(&z()).unwrap();
        assert!(a.mul(&b).is_one());
    }

    #[test]
    fn additive_identity() {
        let r = z().add(&RatZeta::one()).sub(&RatZeta::one());
        assert_eq!(r, z());
    }

    #[test]
    fn division_cross_multiplication() {
        let a = RatZeta::linear(2, 1).div(&RatZeta::linear(1, 2)).unwrap();
        let q = a.div(&RatZeta::linear(2, 1)).unwrap();
        let expect = RatZeta::linear(1, 2).inv().unwrap();
        assert_eq!(q, expect);
        // cross-multiplication oracle: q * (z+2) == 1
        assert!(q.mul(&RatZeta::linear(1, 2)).is_one());
    }

    #[test]
    fn division_by_zero_is_reported() {
        assert_eq!(z().div(&RatZeta::zero()), Err(ExactError::DivisionByZero));
    }

    #[test]
    fn valuations() {
        let f = z().pow(2).unwrap().div(&RatZeta::linear(1, 2)).unwrap();
        assert_eq!(f.valuation_at(&Rat::zero()).unwrap(), 2);
        assert_eq!(f.valuation_at(&Rat::from_integer((-2).into())).unwrap(), -1);
        assert_eq!(f.valuation_at_infinity().unwrap(), -1);
        assert_eq!(RatZeta::zero().valuation_at(&Rat::zero()), Err(ExactError::ZeroFunction));
        let g = RatZeta::linear(2, 1).pow(3).unwrap();
        assert_eq!(g.valuation_at(&Rat::new((-1).into(), 2.into())).unwrap(), 3);
    }

    #[test]
    fn scalar_content_is_normalized() {
        let a = RatZeta::from_parts(
            Rat::one(),
            IntPoly::from_i64s(&[4, 6]),
            IntPoly::from_i64s(&[-2, -2]),
        )
        .unwrap();
        assert_eq!(a.scalar(), &Rat::from_integer((-1).into()));
        assert_eq!(a.num_primitive(), &IntPoly::from_i64s(&[2, 3]));
        assert_eq!(a.den_primitive(), &IntPoly::from_i64s(&[1, 1]));
    }

    #[test]
    fn derivative_quotient_rule() {
        // d/dz (1/(z+2)) = -1/(z+2)^2
        let f = RatZeta::linear(1, 2).inv().unwrap();
        let expect = RatZeta::linear(1, 2).pow(-2).unwrap().neg();
        assert_eq!(f.derivative(), expect);
    }

    #[test]
    fn mobius_substitution() {
        // f(z) = z/(z+2); f(1/z) = 1/(1+2z)
        let f = z().div(&RatZeta::linear(1, 2)).unwrap();
        assert_eq!(f.compose_mobius(0, 1, 1, 0), RatZeta::linear(2, 1).inv().unwrap());
        // f(-z-1) = (-z-1)/(1-z)
        let g = f.compose_mobius(-1, -1, 0, 1);
        assert_eq!(g, RatZeta::linear(1, 1).div(&RatZeta::linear(1, -1)).unwrap());
        assert_eq!(f.compose(&RatZeta::linear(-1, -1)), g);
    }
}
