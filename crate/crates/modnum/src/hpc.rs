//! Complex numbers over MPFR floats.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use ev_core::Rat;
use rug::float::Constant;
use rug::ops::Pow;
use rug::Float;

/// Working precision in bits for `digits` decimal digits, with guard bits.
pub fn prec_for(digits: u32) -> u32 {
    (f64::from(digits) * std::f64::consts::LOG2_10).ceil() as u32 + 64
}

#[derive(Clone, PartialEq)]
pub struct Hpc {
    pub re: Float,
    pub im: Float,
}

impl Hpc {
    pub fn new(re: Float, im: Float) -> Self {
        Hpc { re, im }
    }

    pub fn prec(&self) -> u32 {
        self.re.prec()
    }

    pub fn zero(prec: u32) -> Self {
        Hpc::new(Float::new(prec), Float::new(prec))
    }

    pub fn one(prec: u32) -> Self {
        Self::from_f64(prec, 1.0, 0.0)
    }

    pub fn i(prec: u32) -> Self {
        Self::from_f64(prec, 0.0, 1.0)
    }

    pub fn from_f64(prec: u32, re: f64, im: f64) -> Self {
        Hpc::new(Float::with_val(prec, re), Float::with_val(prec, im))
    }

    pub fn from_int(prec: u32, k: i64) -> Self {
        Hpc::new(Float::with_val(prec, k), Float::new(prec))
    }

    /// Parses decimal strings for the two parts.
    pub fn parse(prec: u32, re: &str, im: &str) -> Option<Self> {
        let p = |s: &str| Float::parse(s).ok().map(|v| Float::with_val(prec, v));
        Some(Hpc::new(p(re)?, p(im)?))
    }

    pub fn from_rat(prec: u32, r: &Rat) -> Self {
        let n = Float::with_val(prec, Float::parse(r.numer().to_string()).expect("integer"));
        let d = Float::with_val(prec, Float::parse(r.denom().to_string()).expect("integer"));
        Hpc::new(n / d, Float::new(prec))
    }

    pub fn pi(prec: u32) -> Float {
        Float::with_val(prec, Constant::Pi)
    }

    /// `e^{i pi num/den}`
    pub fn root_of_unity(prec: u32, num: i64, den: i64) -> Self {
        let a = Self::pi(prec) * Float::with_val(prec, num) / Float::with_val(prec, den);
        let (s, c) = a.sin_cos(Float::new(prec));
        Hpc::new(c, s)
    }

    pub fn real(x: Float) -> Self {
        let p = x.prec();
        Hpc::new(x, Float::new(p))
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn abs(&self) -> Float {
        Float::with_val(self.prec(), self.re.hypot_ref(&self.im))
    }

    pub fn norm_sqr(&self) -> Float {
        Float::with_val(self.prec(), self.re.square_ref()) + self.im.clone().square()
    }

    pub fn conj(&self) -> Self {
        Hpc::new(self.re.clone(), -self.im.clone())
    }

    pub fn scale(&self, k: &Float) -> Self {
        Hpc::new(Float::with_val(self.prec(), &self.re * k), Float::with_val(self.prec(), &self.im * k))
    }

    pub fn recip(&self) -> Self {
        let n = self.norm_sqr();
        Hpc::new(Float::with_val(self.prec(), &self.re / &n), -Float::with_val(self.prec(), &self.im / &n))
    }

    pub fn exp(&self) -> Self {
        let r = self.re.clone().exp();
        let (s, c) = self.im.clone().sin_cos(Float::new(self.prec()));
        Hpc::new(Float::with_val(self.prec(), &r * &c), r * s)
    }

    /// Principal logarithm.
    pub fn ln(&self) -> Self {
        let m = self.abs().ln();
        let a = Float::with_val(self.prec(), self.im.atan2_ref(&self.re));
        Hpc::new(m, a)
    }

    pub fn powi(&self, e: i64) -> Self {
        if e < 0 {
            return self.recip().powi(-e);
        }
        let mut base = self.clone();
        let mut acc = Hpc::one(self.prec());
        let mut e = e as u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// `2^{k/3}` as a real number.
    pub fn two_pow_third(prec: u32, k: i64) -> Self {
        let e = Float::with_val(prec, k) / Float::with_val(prec, 3);
        Hpc::real(Float::with_val(prec, 2).pow(e))
    }

    pub fn to_f64(&self) -> (f64, f64) {
        (self.re.to_f64(), self.im.to_f64())
    }

    /// `|self - other| / max(|other|, tiny)`
    pub fn rel_diff(&self, other: &Hpc) -> Float {
        let d = (self - other).abs();
        let s = other.abs();
        if s.is_zero() {
            d
        } else {
            d / s
        }
    }
}

impl fmt::Debug for Hpc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for Hpc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (re, im) = self.to_f64();
        write!(f, "{re:e}{:+e}i", im)
    }
}

impl Add for &Hpc {
    type Output = Hpc;
    fn add(self, o: &Hpc) -> Hpc {
        let p = self.prec();
        Hpc::new(Float::with_val(p, &self.re + &o.re), Float::with_val(p, &self.im + &o.im))
    }
}

impl Sub for &Hpc {
    type Output = Hpc;
    fn sub(self, o: &Hpc) -> Hpc {
        let p = self.prec();
        Hpc::new(Float::with_val(p, &self.re - &o.re), Float::with_val(p, &self.im - &o.im))
    }
}

impl Mul for &Hpc {
    type Output = Hpc;
    fn mul(self, o: &Hpc) -> Hpc {
        let p = self.prec();
        let ac = Float::with_val(p, &self.re * &o.re);
        let bd = Float::with_val(p, &self.im * &o.im);
        let ad = Float::with_val(p, &self.re * &o.im);
        let bc = Float::with_val(p, &self.im * &o.re);
        Hpc::new(ac - bd, ad + bc)
    }
}

impl Div for &Hpc {
    type Output = Hpc;
    fn div(self, o: &Hpc) -> Hpc {
        self * &o.recip()
    }
}

impl Neg for &Hpc {
    type Output = Hpc;
    fn neg(self) -> Hpc {
        Hpc::new(-self.re.clone(), -self.im.clone())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Hpc {
            type Output = Hpc;
            fn $m(self, o: Hpc) -> Hpc {
                (&self).$m(&o)
            }
        }
        impl $tr<&Hpc> for Hpc {
            type Output = Hpc;
            fn $m(self, o: &Hpc) -> Hpc {
                (&self).$m(o)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Neg for Hpc {
    type Output = Hpc;
    fn neg(self) -> Hpc {
        (&self).neg()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exp_log_round_trip() {
        let p = prec_for(60);
        let z = Hpc::from_f64(p, 0.3, -1.7);
        let back = z.exp().ln();
        assert!(back.rel_diff(&z) < 1e-55);
    }

    #[test]
    fn roots_of_unity() {
        let p = prec_for(50);
        let w = Hpc::root_of_unity(p, 2, 3);
        assert!(w.powi(3).rel_diff(&Hpc::one(p)) < 1e-45);
        assert!(Hpc::two_pow_third(p, 3).rel_diff(&Hpc::from_int(p, 2)) < 1e-45);
    }

    #[test]
    fn rationals() {
        let p = prec_for(40);
        let r = Hpc::from_rat(p, &Rat::new((-7).into(), 3.into()));
        let expect = Hpc::from_int(p, -7) / Hpc::from_int(p, 3);
        assert!(r.rel_diff(&expect) < 1e-40);
    }
}
