//! Sparse multivariate polynomials in `x1..xN` with coefficients in `Q(z)`.

use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use crate::ratzeta::RatZeta;
use crate::ExactError;

/// Exponent vector, ordered graded-lexicographically (`x1 > x2 > ...`).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial(exps)
    }

    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(Monomial)
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Polynomial in a fixed number of variables; zero coefficients are never
/// stored, so equality is structural.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MPolyX {
    nvars: usize,
    terms: BTreeMap<Monomial, RatZeta>,
}

impl fmt::Display for MPolyX {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::text::format_mpoly(self))
    }
}

impl fmt::Debug for MPolyX {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

fn accumulate(map: &mut BTreeMap<Monomial, RatZeta>, m: Monomial, c: RatZeta) {
    if c.is_zero() {
        return;
    }
    match map.entry(m) {
        Entry::Vacant(v) => {
            v.insert(c);
        }
        Entry::Occupied(mut o) => {
            let s = o.get().add(&c);
            if s.is_zero() {
                o.remove();
            } else {
                *o.get_mut() = s;
            }
        }
    }
}

impl MPolyX {
    pub fn zero(nvars: usize) -> Self {
        MPolyX {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, RatZeta::one())
    }

    pub fn constant(nvars: usize, c: RatZeta) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::one(nvars), c);
        }
        MPolyX { nvars, terms }
    }

    /// The variable `x_{i+1}` (zero-based index `i`).
    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(i < nvars, "variable index out of range");
        let mut e = vec![0; nvars];
        e[i] = 1;
        let mut terms = BTreeMap::new();
        terms.insert(Monomial(e), RatZeta::one());
        MPolyX { nvars, terms }
    }

    /// `x_{i+1} - a`
    pub fn var_minus(nvars: usize, i: usize, a: &RatZeta) -> Self {
        Self::var(nvars, i).sub(&Self::constant(nvars, a.clone()))
    }

    pub fn from_terms<I>(nvars: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Vec<u32>, RatZeta)>,
    {
        let mut map = BTreeMap::new();
        for (e, c) in terms {
            assert_eq!(e.len(), nvars, "exponent vector length");
            accumulate(&mut map, Monomial(e), c);
        }
        MPolyX { nvars, terms: map }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &RatZeta)> + '_ {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_constant().is_some_and(|c| c.is_one())
    }

    /// The value if the polynomial has no `x`-dependence.
    pub fn as_constant(&self) -> Option<RatZeta> {
        match self.terms.len() {
            0 => Some(RatZeta::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                m.is_one().then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn leading(&self) -> Option<(&Monomial, &RatZeta)> {
        self.terms.iter().next_back()
    }

    pub fn coeff(&self, exps: &[u32]) -> RatZeta {
        self.terms
            .get(&Monomial(exps.to_vec()))
            .cloned()
            .unwrap_or_else(RatZeta::zero)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    pub fn degree_in(&self, var: usize) -> Option<u32> {
        self.terms.keys().map(|m| m.0[var]).max()
    }

    fn check(&self, other: &MPolyX) {
        assert_eq!(self.nvars, other.nvars, "variable count mismatch");
    }

    pub fn add(&self, other: &MPolyX) -> MPolyX {
        self.check(other);
        let (big, small) = if self.terms.len() >= other.terms.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut terms = big.terms.clone();
        for (m, c) in &small.terms {
            accumulate(&mut terms, m.clone(), c.clone());
        }
        MPolyX {
            nvars: self.nvars,
            terms,
        }
    }

    pub fn neg(&self) -> MPolyX {
        MPolyX {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c.neg())).collect(),
        }
    }

    pub fn sub(&self, other: &MPolyX) -> MPolyX {
        self.add(&other.neg())
    }

    pub fn scale(&self, k: &RatZeta) -> MPolyX {
        if k.is_zero() {
            return Self::zero(self.nvars);
        }
        MPolyX {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c.mul(k))).collect(),
        }
    }

    pub fn mul(&self, other: &MPolyX) -> MPolyX {
        self.check(other);
        let mut terms = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                accumulate(&mut terms, ma.mul(mb), ca.mul(cb));
            }
        }
        MPolyX {
            nvars: self.nvars,
            terms,
        }
    }

    /// Product with all terms of degree `> max_deg` in `var` discarded.
    pub fn mul_trunc(&self, other: &MPolyX, var: usize, max_deg: u32) -> MPolyX {
        self.check(other);
        let mut terms = BTreeMap::new();
        for (ma, ca) in &self.terms {
            if ma.0[var] > max_deg {
                continue;
            }
            for (mb, cb) in &other.terms {
                if ma.0[var] + mb.0[var] > max_deg {
                    continue;
                }
                accumulate(&mut terms, ma.mul(mb), ca.mul(cb));
            }
        }
        MPolyX {
            nvars: self.nvars,
            terms,
        }
    }

    pub fn pow(&self, e: u32) -> MPolyX {
        let mut result = Self::one(self.nvars);
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

    /// Exact quotient `self / d`; fails unless `d` divides `self`.
    pub fn exact_div(&self, d: &MPolyX) -> Result<MPolyX, ExactError> {
        self.check(d);
        let (lm, lc) = d.leading().ok_or(ExactError::DivisionByZero)?;
        let lc_inv = lc.inv()?;
        if d.terms.len() == 1 {
            let mut terms = BTreeMap::new();
            for (m, c) in &self.terms {
                let q = m.checked_div(lm).ok_or(ExactError::InexactDivision)?;
                terms.insert(q, c.mul(&lc_inv));
            }
            return Ok(MPolyX {
                nvars: self.nvars,
                terms,
            });
        }
        let mut rem = self.terms.clone();
        let mut quot = BTreeMap::new();
        while let Some((m, c)) = rem.iter().next_back().map(|(m, c)| (m.clone(), c.clone())) {
            let qm = m.checked_div(lm).ok_or(ExactError::InexactDivision)?;
            let qc = c.mul(&lc_inv);
            for (dm, dc) in &d.terms {
                accumulate(&mut rem, qm.mul(dm), qc.mul(dc).neg());
            }
            quot.insert(qm, qc);
        }
        Ok(MPolyX {
            nvars: self.nvars,
            terms: quot,
        })
    }

    /// Coefficient of `x_var^k`, as a polynomial not involving `x_var`.
    pub fn coeff_in(&self, var: usize, k: u32) -> MPolyX {
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            if m.0[var] == k {
                let mut e = m.0.clone();
                e[var] = 0;
                terms.insert(Monomial(e), c.clone());
            }
        }
        MPolyX {
            nvars: self.nvars,
            terms,
        }
    }

    /// Replaces `x_var` by `value` (which must not involve `x_var` unless
    /// that is intended).
    pub fn substitute(&self, var: usize, value: &MPolyX) -> MPolyX {
        self.check(value);
        let Some(deg) = self.degree_in(var) else {
            return self.clone();
        };
        let mut acc = self.coeff_in(var, deg);
        for k in (0..deg).rev() {
            acc = acc.mul(value).add(&self.coeff_in(var, k));
        }
        acc
    }

    pub fn eval_var(&self, var: usize, value: &RatZeta) -> MPolyX {
        self.substitute(var, &Self::constant(self.nvars, value.clone()))
    }

    /// Full evaluation at a point of `Q(z)^N`.
    pub fn eval(&self, point: &[RatZeta]) -> RatZeta {
        assert_eq!(point.len(), self.nvars);
        let mut acc = RatZeta::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, &e) in point.iter().zip(&m.0) {
                if e > 0 {
                    t = t.mul(&v.pow(e as i64).expect("nonnegative power"));
                }
            }
            acc = acc.add(&t);
        }
        acc
    }

    /// Renames variable `i` to `perm[i]`.
    pub fn permute(&self, perm: &[usize]) -> MPolyX {
        assert_eq!(perm.len(), self.nvars);
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut e = vec![0; self.nvars];
                for (i, &x) in m.0.iter().enumerate() {
                    e[perm[i]] = x;
                }
                (Monomial(e), c.clone())
            })
            .collect();
        MPolyX {
            nvars: self.nvars,
            terms,
        }
    }

    /// Re-embeds into `new_nvars` variables, variable `i` becoming
    /// `map[i]`. Variables without a target must not occur.
    pub fn remap(&self, new_nvars: usize, map: &[Option<usize>]) -> MPolyX {
        assert_eq!(map.len(), self.nvars);
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut e = vec![0; new_nvars];
                for (i, &x) in m.0.iter().enumerate() {
                    if x > 0 {
                        let j = map[i].expect("dropped variable occurs");
                        e[j] += x;
                    }
                }
                (Monomial(e), c.clone())
            })
            .collect::<Vec<_>>();
        let mut map2 = BTreeMap::new();
        for (m, c) in terms {
            accumulate(&mut map2, m, c);
        }
        MPolyX {
            nvars: new_nvars,
            terms: map2,
        }
    }

    /// Partial derivative in `x_var`.
    pub fn derivative(&self, var: usize) -> MPolyX {
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let e = m.0[var];
            if e == 0 {
                continue;
            }
            let mut ne = m.0.clone();
            ne[var] -= 1;
            accumulate(&mut terms, Monomial(ne), c.scale(&crate::rat(e as i64)));
        }
        MPolyX {
            nvars: self.nvars,
            terms,
        }
    }

    /// Coefficientwise derivative in `z`.
    pub fn derivative_z(&self) -> MPolyX {
        self.map_coeffs(|c| c.derivative())
    }

    pub fn map_coeffs(&self, f: impl Fn(&RatZeta) -> RatZeta) -> MPolyX {
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            accumulate(&mut terms, m.clone(), f(c));
        }
        MPolyX {
            nvars: self.nvars,
            terms,
        }
    }

    /// Drops all terms of degree `> max_deg` in `var`.
    pub fn truncate(&self, var: usize, max_deg: u32) -> MPolyX {
        MPolyX {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.0[var] <= max_deg)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Whether the polynomial is invariant under swapping `x_i` and `x_j`.
    pub fn is_symmetric_in(&self, i: usize, j: usize) -> bool {
        let mut perm: Vec<usize> = (0..self.nvars).collect();
        perm.swap(i, j);
        self.permute(&perm) == *self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(n: usize, i: usize) -> MPolyX {
        MPolyX::var(n, i)
    }

    #[test]
    fn difference_of_squares() {
        let a = x(2, 1).pow(2).sub(&x(2, 0).pow(2));
        let b = x(2, 1).sub(&x(2, 0));
        assert_eq!(a.exact_div(&b).unwrap(), x(2, 0).add(&x(2, 1)));
        assert_eq!(a.exact_div(&MPolyX::one(2)).unwrap(), a);
    }

    #[test]
    fn vandermonde_quotient() {
        let (x1, x2, x3) = (x(3, 0), x(3, 1), x(3, 2));
        let v = x2.sub(&x1).mul(&x3.sub(&x1)).mul(&x3.sub(&x2));
        let q = v.exact_div(&x3.sub(&x1)).unwrap();
        assert_eq!(q, x2.sub(&x1).mul(&x3.sub(&x2)));
    }

    #[test]
    fn inexact_division_is_reported() {
        let a = x(2, 0).pow(2).add(&x(2, 1));
        let b = x(2, 0).sub(&x(2, 1));
        assert_eq!(a.exact_div(&b), Err(ExactError::InexactDivision));
    }

    #[test]
    fn grlex_order() {
        let a = Monomial::new(vec![0, 2]);
        let b = Monomial::new(vec![1, 0]);
        let c = Monomial::new(vec![1, 1]);
        assert!(a > b);
        assert!(c > a);
        assert!(Monomial::new(vec![2, 0]) > a);
    }

    #[test]
    fn substitution_and_derivative() {
        let p = x(2, 0).pow(3).mul(&x(2, 1));
        let s = p.substitute(0, &x(2, 1).add(&MPolyX::one(2)));
        assert_eq!(s, x(2, 1).add(&MPolyX::one(2)).pow(3).mul(&x(2, 1)));
        assert_eq!(
            p.derivative(0),
            x(2, 0).pow(2).mul(&x(2, 1)).scale(&RatZeta::from_int(3))
        );
    }

    #[test]
    fn truncated_product() {
        let e = x(1, 0);
        let a = MPolyX::one(1).add(&e);
        let full = a.pow(4);
        let t = a.pow(2).mul_trunc(&a.pow(2), 0, 2);
        assert_eq!(t, full.truncate(0, 2));
    }
}
