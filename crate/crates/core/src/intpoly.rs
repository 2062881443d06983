//! Dense univariate polynomials in `z` with arbitrary-precision integer
//! coefficients. This is the workhorse behind [`crate::RatZeta`].

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::Rat;

/// Little-endian coefficient vector without trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({})", crate::text::format_int_poly(self, "z"))
    }
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The polynomial `z`.
    pub fn var() -> Self {
        Self::from_coeffs(vec![BigInt::zero(), BigInt::one()])
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64s(cs: &[i64]) -> Self {
        Self::from_coeffs(cs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// `a*z + b`
    pub fn linear(a: i64, b: i64) -> Self {
        Self::from_i64s(&[b, a])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Degree, with `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lc(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn add(&self, other: &IntPoly) -> IntPoly {
        let (long, short) = if self.coeffs.len() >= other.coeffs.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut c = long.coeffs.clone();
        for (a, b) in c.iter_mut().zip(&short.coeffs) {
            *a += b;
        }
        IntPoly::from_coeffs(c)
    }

    pub fn neg(&self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn sub(&self, other: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut c = vec![BigInt::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate() {
            c[i] += a;
        }
        for (i, b) in other.coeffs.iter().enumerate() {
            c[i] -= b;
        }
        IntPoly::from_coeffs(c)
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        if self.coeffs.len() == 1 {
            return other.scale(&self.coeffs[0]);
        }
        if other.coeffs.len() == 1 {
            return self.scale(&other.coeffs[0]);
        }
        let mut c = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        IntPoly::from_coeffs(c)
    }

    pub fn scale(&self, k: &BigInt) -> IntPoly {
        if k.is_zero() {
            return IntPoly::zero();
        }
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> IntPoly {
        let mut result = IntPoly::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        result
    }

    /// Multiply by `z^k`.
    pub fn shift(&self, k: usize) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut c = vec![BigInt::zero(); k];
        c.extend(self.coeffs.iter().cloned());
        IntPoly { coeffs: c }
    }

    /// Non-negative gcd of the coefficients (zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Splits `self = c * p` with `p` primitive and positive leading coefficient.
    pub fn primitive(&self) -> (BigInt, IntPoly) {
        if self.is_zero() {
            return (BigInt::zero(), IntPoly::zero());
        }
        let mut g = self.content();
        if self.lc().is_negative() {
            g = -g;
        }
        if g.is_one() {
            return (g, self.clone());
        }
        (g.clone(), self.div_int_exact(&g))
    }

    pub fn div_int_exact(&self, k: &BigInt) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| c / k).collect(),
        }
    }

    /// Exact division over `Z[z]`; `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &IntPoly) -> Option<IntPoly> {
        assert!(!d.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return Some(IntPoly::zero());
        }
        if d.is_one() {
            return Some(self.clone());
        }
        let dd = d.degree().unwrap();
        let ds = self.degree().unwrap();
        if ds < dd {
            return None;
        }
        let dlc = d.lc();
        let mut r = self.coeffs.clone();
        let mut q = vec![BigInt::zero(); ds - dd + 1];
        for i in (0..=ds - dd).rev() {
            let top = &r[i + dd];
            if top.is_zero() {
                continue;
            }
            let (qi, rem) = top.div_rem(&dlc);
            if !rem.is_zero() {
                return None;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                r[i + j] -= &qi * dc;
            }
            q[i] = qi;
        }
        if r.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(IntPoly::from_coeffs(q))
    }

    /// Remainder of `lc(d)^e * self` by `d` for a suitable `e`.
    pub fn pseudo_rem(&self, d: &IntPoly) -> IntPoly {
        let dd = d.degree().expect("pseudo-division by zero");
        let mut r = self.clone();
        let dlc = d.lc();
        while let Some(dr) = r.degree() {
            if dr < dd {
                break;
            }
            let rlc = r.lc();
            let t = d.scale(&rlc).shift(dr - dd);
            r = r.scale(&dlc).sub(&t);
        }
        r
    }

    pub fn max_norm(&self) -> BigInt {
        self.coeffs.iter().map(|c| c.abs()).max().unwrap_or_default()
    }

    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + Rat::from_integer(c.clone());
        }
        acc
    }

    pub fn derivative(&self) -> IntPoly {
        IntPoly::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    /// Coefficients reversed: `z^deg * p(1/z)`.
    pub fn reversed(&self) -> IntPoly {
        let mut c = self.coeffs.clone();
        c.reverse();
        IntPoly::from_coeffs(c)
    }

    /// Number of leading zero coefficients, i.e. the order of vanishing at 0.
    pub fn low_order(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_zero()).count()
    }

    /// `sum_i c_i (a z + b)^i (c z + d)^(n - i)` for `n >= deg`.
    pub fn homogenized_compose(&self, n: usize, a: &IntPoly, b: &IntPoly) -> IntPoly {
        // a, b are the numerator and denominator of the substituted value
        let mut acc = IntPoly::zero();
        let mut a_pows = vec![IntPoly::one()];
        let mut b_pows = vec![IntPoly::one()];
        for _ in 0..n {
            a_pows.push(a_pows.last().unwrap().mul(a));
            b_pows.push(b_pows.last().unwrap().mul(b));
        }
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            acc = acc.add(&a_pows[i].mul(&b_pows[n - i]).scale(c));
        }
        acc
    }

    /// Greatest common divisor, primitive with positive leading coefficient.
    /// The gcd of two zero polynomials is zero.
    pub fn gcd(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() {
            return other.primitive().1;
        }
        if other.is_zero() {
            return self.primitive().1;
        }
        let (_, a) = self.primitive();
        let (_, b) = other.primitive();
        if a.is_one() || b.is_one() {
            return IntPoly::one();
        }
        if a == b {
            return a;
        }
        if a.is_constant() || b.is_constant() {
            return IntPoly::one();
        }
        // common power of z
        let lz = a.low_order().min(b.low_order());
        let (a, b) = if lz > 0 {
            (
                IntPoly::from_coeffs(a.coeffs[lz..].to_vec()),
                IntPoly::from_coeffs(b.coeffs[lz..].to_vec()),
            )
        } else {
            (a, b)
        };
        let g = match gcd_heuristic(&a, &b) {
            Some(g) => g,
            None => gcd_prs(&a, &b),
        };
        g.shift(lz)
    }
}

/// Heuristic gcd by evaluation at a large integer and balanced
/// base-`xi` reconstruction. Correct whenever it returns `Some`.
fn gcd_heuristic(a: &IntPoly, b: &IntPoly) -> Option<IntPoly> {
    let norm = a.max_norm().min(b.max_norm());
    let mut xi: BigInt = norm * 2u32 + 29u32;
    for _ in 0..6 {
        let ha = a.eval_int(&xi);
        let hb = b.eval_int(&xi);
        if !ha.is_zero() && !hb.is_zero() {
            let h = ha.gcd(&hb);
            let cand = balanced_digits(&h, &xi);
            let (_, g) = cand.primitive();
            if !g.is_zero() && a.div_exact(&g).is_some() && b.div_exact(&g).is_some() {
                return Some(g);
            }
        }
        xi = (&xi * 73794u32) / 27011u32 + 1u32;
    }
    None
}

fn balanced_digits(h: &BigInt, xi: &BigInt) -> IntPoly {
    let mut coeffs = Vec::new();
    let mut h = h.clone();
    let half = xi / 2u32;
    while !h.is_zero() {
        let mut c = h.mod_floor(xi);
        if c > half {
            c -= xi;
        }
        h = (&h - &c) / xi;
        coeffs.push(c);
    }
    IntPoly::from_coeffs(coeffs)
}

/// Primitive polynomial remainder sequence.
fn gcd_prs(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let (mut u, mut v) = match a.degree().cmp(&b.degree()) {
        Ordering::Less => (b.clone(), a.clone()),
        _ => (a.clone(), b.clone()),
    };
    while !v.is_zero() {
        let r = u.pseudo_rem(&v);
        u = v;
        v = r.primitive().1;
    }
    u.primitive().1
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(cs: &[i64]) -> IntPoly {
        IntPoly::from_i64s(cs)
    }

    #[test]
    fn gcd_of_products() {
        let f = p(&[1, 2]); // 2z + 1
        let g = p(&[2, 1]); // z + 2
        let h = p(&[-1, 0, 1]); // z^2 - 1
        let a = f.mul(&g).mul(&g).mul(&h);
        let b = g.mul(&h).mul(&p(&[3, 0, 0, 7]));
        assert_eq!(a.gcd(&b), g.mul(&h));
        assert_eq!(gcd_prs(&a, &b), g.mul(&h));
    }

    #[test]
    fn gcd_with_powers_of_z() {
        let a = p(&[0, 0, 3, 6]);
        let b = p(&[0, 4, 8]);
        assert_eq!(a.gcd(&b), p(&[0, 1, 2]));
    }

    #[test]
    fn exact_division() {
        let a = p(&[2, 1]).mul(&p(&[-5, 3]));
        assert_eq!(a.div_exact(&p(&[2, 1])), Some(p(&[-5, 3])));
        assert_eq!(a.div_exact(&p(&[1, 1])), None);
        assert_eq!(p(&[1, 2]).div_exact(&p(&[0, 2])), None);
    }

    #[test]
    fn reversal_and_shift() {
        assert_eq!(p(&[1, 2, 3]).reversed(), p(&[3, 2, 1]));
        assert_eq!(p(&[1]).shift(2), p(&[0, 0, 1]));
        assert_eq!(p(&[0, 0, 1, 1]).low_order(), 2);
    }
}
