use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::intpoly::IntPoly;
use crate::Rat;

/// Dense polynomial in `z` with rational coefficients, indexed by degree.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct PolyZeta {
    coeffs: Vec<Rat>,
}

impl fmt::Debug for PolyZeta {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for PolyZeta {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::RatZeta::from_polyzeta(self).to_string())
    }
}

impl PolyZeta {
    pub fn zero() -> Self {
        PolyZeta { coeffs: Vec::new() }
    }

    pub fn from_coeffs(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        PolyZeta { coeffs }
    }

    pub fn from_i64s(cs: &[i64]) -> Self {
        Self::from_coeffs(cs.iter().map(|&c| Rat::from_integer(c.into())).collect())
    }

    pub fn from_int_poly(p: &IntPoly) -> Self {
        Self::from_coeffs(p.coeffs().iter().cloned().map(Rat::from_integer).collect())
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn scale(&self, k: &Rat) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|c| c * k).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut c = vec![Rat::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate() {
            c[i] += a;
        }
        for (i, b) in other.coeffs.iter().enumerate() {
            c[i] += b;
        }
        Self::from_coeffs(c)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut c = vec![Rat::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        Self::from_coeffs(c)
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Splits into a rational content and a primitive integer polynomial
    /// with positive leading coefficient.
    pub fn to_int_poly(&self) -> (Rat, IntPoly) {
        if self.is_zero() {
            return (Rat::zero(), IntPoly::zero());
        }
        let l = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ip = IntPoly::from_coeffs(
            self.coeffs
                .iter()
                .map(|c| c.numer() * (&l / c.denom()))
                .collect(),
        );
        let (g, prim) = ip.primitive();
        (Rat::new(g, l), prim)
    }
}
