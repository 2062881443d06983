//! Symmetric rational functions whose denominator is a product of powers
//! of `(x_j - a)`, one factor for each variable.

use std::fmt;

use ev_core::{ExactError, MPolyX, RatZeta};

/// `num / prod_j prod_a (x_j - a)^e_a`, reduced so that no pole factor
/// divides the numerator. With no variables the poles are empty.
#[derive(Clone, PartialEq, Eq)]
pub struct XFrac {
    num: MPolyX,
    poles: Vec<(RatZeta, u32)>,
}

impl XFrac {
    pub fn poly(num: MPolyX) -> Self {
        XFrac {
            num,
            poles: Vec::new(),
        }
    }

    pub fn constant(c: RatZeta) -> Self {
        Self::poly(MPolyX::constant(0, c))
    }

    /// Builds and reduces `num / prod_j prod (x_j - a)^e`. Negative `e`
    /// multiplies the numerator.
    pub fn new(num: MPolyX, poles: Vec<(RatZeta, i64)>) -> Result<Self, ExactError> {
        let nv = num.nvars();
        let mut num = num;
        let mut merged: Vec<(RatZeta, i64)> = Vec::new();
        for (a, e) in poles {
            match merged.iter_mut().find(|(b, _)| *b == a) {
                Some(slot) => slot.1 += e,
                None => merged.push((a, e)),
            }
        }
        let mut out = Vec::new();
        for (a, mut e) in merged {
            if nv == 0 || e == 0 {
                continue;
            }
            let lin = linear_product(nv, &a);
            while e < 0 {
                num = num.mul(&lin);
                e += 1;
            }
            while e > 0 && !num.is_zero() {
                match divide_each(&num, &a) {
                    Ok(q) => {
                        num = q;
                        e -= 1;
                    }
                    Err(ExactError::InexactDivision) => break,
                    Err(err) => return Err(err),
                }
            }
            if e > 0 && !num.is_zero() {
                out.push((a, e as u32));
            }
        }
        out.sort_by_cached_key(|(a, _)| a.to_string());
        Ok(XFrac { num, poles: out })
    }

    pub fn nvars(&self) -> usize {
        self.num.nvars()
    }

    pub fn numerator(&self) -> &MPolyX {
        &self.num
    }

    pub fn poles(&self) -> &[(RatZeta, u32)] {
        &self.poles
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.poles.is_empty()
    }

    /// The value when there are no variables.
    pub fn as_ratzeta(&self) -> Option<RatZeta> {
        if self.nvars() == 0 {
            Some(self.num.as_constant().unwrap_or_else(RatZeta::zero))
        } else {
            None
        }
    }

    pub fn scale(&self, c: &RatZeta) -> Self {
        if c.is_zero() {
            return Self::poly(MPolyX::zero(self.nvars()));
        }
        XFrac {
            num: self.num.scale(c),
            poles: self.poles.clone(),
        }
    }

    fn signed_poles(&self) -> Vec<(RatZeta, i64)> {
        self.poles.iter().map(|(a, e)| (a.clone(), *e as i64)).collect()
    }

    pub fn mul(&self, other: &XFrac) -> Result<Self, ExactError> {
        let mut poles = self.signed_poles();
        poles.extend(other.signed_poles());
        Self::new(self.num.mul(&other.num), poles)
    }

    /// Multiplies by `prod_j (x_j - a)^e`.
    pub fn mul_linear_power(&self, a: &RatZeta, e: i64) -> Result<Self, ExactError> {
        let mut poles = self.signed_poles();
        poles.push((a.clone(), -e));
        Self::new(self.num.clone(), poles)
    }

    /// Applies a field map of `Q(z)` (such as `z -> 1/z`) to every
    /// coefficient and pole.
    pub fn map_zeta(&self, f: impl Fn(&RatZeta) -> RatZeta) -> Result<Self, ExactError> {
        let poles = self.poles.iter().map(|(a, e)| (f(a), *e as i64)).collect();
        Self::new(self.num.map_coeffs(&f), poles)
    }

    /// Substitutes `x_j -> alpha x_j + beta` in every variable.
    pub fn affine_subst(&self, alpha: &RatZeta, beta: &RatZeta) -> Result<Self, ExactError> {
        let nv = self.nvars();
        let mut num = self.num.clone();
        for j in 0..nv {
            let img = MPolyX::var(nv, j)
                .scale(alpha)
                .add(&MPolyX::constant(nv, beta.clone()));
            num = num.substitute(j, &img);
        }
        // alpha x + beta - a = alpha (x - (a - beta)/alpha)
        let mut c = RatZeta::one();
        let mut poles = Vec::new();
        for (a, e) in &self.poles {
            poles.push((a.sub(beta).div(alpha)?, *e as i64));
            c = c.mul(&alpha.pow(*e as i64 * nv as i64)?);
        }
        Ok(Self::new(num, poles)?.scale(&c.inv()?))
    }

    /// Substitutes `x_j -> gamma / x_j` in every variable.
    pub fn inverse_subst(&self, gamma: &RatZeta) -> Result<Self, ExactError> {
        let nv = self.nvars();
        if nv == 0 {
            return Ok(self.clone());
        }
        let d = (0..nv)
            .map(|j| self.num.degree_in(j).unwrap_or(0))
            .max()
            .unwrap_or(0);
        let num = MPolyX::from_terms(
            nv,
            self.num.terms().map(|(m, c)| {
                let mut k = c.clone();
                let mut e = Vec::with_capacity(nv);
                for &x in m.exps() {
                    k = k.mul(&gamma.pow(x as i64).unwrap());
                    e.push(d - x);
                }
                (e, k)
            }),
        );
        let mut poles = vec![(RatZeta::zero(), d as i64)];
        let mut c = RatZeta::one();
        for (a, e) in &self.poles {
            let e = *e as i64;
            if a.is_zero() {
                // (gamma/x)^e
                poles.push((RatZeta::zero(), -e));
                c = c.mul(&gamma.pow(e * nv as i64)?);
            } else {
                // gamma/x - a = -a (x - gamma/a) / x
                poles.push((gamma.div(a)?, e));
                poles.push((RatZeta::zero(), -e));
                c = c.mul(&a.neg().pow(e * nv as i64)?);
            }
        }
        Ok(Self::new(num, poles)?.scale(&c.inv()?))
    }

    /// Sets the last variable to `v`.
    pub fn specialize_last(&self, v: &RatZeta) -> Result<Self, ExactError> {
        let nv = self.nvars();
        assert!(nv > 0, "no variable to specialize");
        let mut map: Vec<Option<usize>> = (0..nv - 1).map(Some).collect();
        map.push(None);
        let num = self.num.eval_var(nv - 1, v).remap(nv - 1, &map);
        let mut c = RatZeta::one();
        for (a, e) in &self.poles {
            c = c.mul(&v.sub(a).pow(*e as i64)?);
        }
        let poles = self.signed_poles();
        Ok(Self::new(num, poles)?.scale(&c.inv()?))
    }
}

fn linear_product(nv: usize, a: &RatZeta) -> MPolyX {
    (0..nv).fold(MPolyX::one(nv), |acc, j| acc.mul(&MPolyX::var_minus(nv, j, a)))
}

fn divide_each(num: &MPolyX, a: &RatZeta) -> Result<MPolyX, ExactError> {
    let nv = num.nvars();
    let mut q = num.clone();
    for j in 0..nv {
        q = q.exact_div(&MPolyX::var_minus(nv, j, a))?;
    }
    Ok(q)
}

impl fmt::Display for XFrac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poles.is_empty() {
            return write!(f, "{}", self.num);
        }
        write!(f, "({}) / (", self.num)?;
        let mut first = true;
        for (a, e) in &self.poles {
            for j in 0..self.nvars() {
                if !first {
                    f.write_str("*")?;
                }
                first = false;
                if a.is_zero() {
                    write!(f, "x{}", j + 1)?;
                } else {
                    write!(f, "(x{} - ({a}))", j + 1)?;
                }
                if *e > 1 {
                    write!(f, "^{e}")?;
                }
            }
        }
        f.write_str(")")
    }
}

impl fmt::Debug for XFrac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(i: usize) -> MPolyX {
        MPolyX::var(2, i)
    }

    #[test]
    fn reduces_common_factors() {
        let z = RatZeta::z();
        let num = MPolyX::var_minus(2, 0, &z).mul(&MPolyX::var_minus(2, 1, &z));
        let f = XFrac::new(num, vec![(z.clone(), 2)]).unwrap();
        assert!(f.numerator().is_one());
        assert_eq!(f.poles(), &[(z, 1)]);
    }

    #[test]
    fn inverse_twice_is_identity() {
        let g = RatZeta::linear(1, 2);
        let num = x(0).add(&x(1)).add(&MPolyX::one(2));
        let f = XFrac::new(num, vec![(RatZeta::z(), 1)]).unwrap();
        let back = f.inverse_subst(&g).unwrap().inverse_subst(&g).unwrap();
        assert_eq!(back, f);
    }

    #[test]
    fn affine_round_trip() {
        let a = RatZeta::linear(1, 2);
        let b = RatZeta::z();
        let num = x(0).mul(&x(1)).add(&MPolyX::constant(2, RatZeta::from_int(3)));
        let f = XFrac::new(num, vec![(RatZeta::zero(), 3)]).unwrap();
        let ainv = a.inv().unwrap();
        let binv = b.neg().mul(&ainv);
        let back = f.affine_subst(&a, &b).unwrap().affine_subst(&ainv, &binv).unwrap();
        assert_eq!(back, f);
    }

    #[test]
    fn specialization() {
        let num = x(0).mul(&x(1));
        let f = XFrac::new(num, vec![(RatZeta::from_int(1), 1)]).unwrap();
        let g = f.specialize_last(&RatZeta::from_int(3)).unwrap();
        // x*3 / ((x - 1)(3 - 1))
        let expect = XFrac::new(
            MPolyX::var(1, 0).scale(&RatZeta::from_frac(3, 2)),
            vec![(RatZeta::from_int(1), 1)],
        )
        .unwrap();
        assert_eq!(g, expect);
    }
}
