//! Exact determinants over commutative rings.

use crate::mpoly::MPolyX;
use crate::ratzeta::RatZeta;
use crate::ExactError;

/// Minimal commutative-ring interface. Constants are produced from an
/// existing element so that polynomial rings can carry their variable count.
pub trait Ring: Clone {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero_elem(&self) -> bool;
    fn add_elem(&self, other: &Self) -> Self;
    fn sub_elem(&self, other: &Self) -> Self;
    fn mul_elem(&self, other: &Self) -> Self;
    fn neg_elem(&self) -> Self;
}

/// A ring in which exact quotients can be computed.
pub trait ExactDivRing: Ring {
    fn exact_div_elem(&self, other: &Self) -> Result<Self, ExactError>;
}

impl Ring for RatZeta {
    fn zero_like(&self) -> Self {
        RatZeta::zero()
    }
    fn one_like(&self) -> Self {
        RatZeta::one()
    }
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }
    fn add_elem(&self, other: &Self) -> Self {
        self.add(other)
    }
    fn sub_elem(&self, other: &Self) -> Self {
        self.sub(other)
    }
    fn mul_elem(&self, other: &Self) -> Self {
        self.mul(other)
    }
    fn neg_elem(&self) -> Self {
        self.neg()
    }
}

impl ExactDivRing for RatZeta {
    fn exact_div_elem(&self, other: &Self) -> Result<Self, ExactError> {
        self.div(other)
    }
}

impl Ring for MPolyX {
    fn zero_like(&self) -> Self {
        MPolyX::zero(self.nvars())
    }
    fn one_like(&self) -> Self {
        MPolyX::one(self.nvars())
    }
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }
    fn add_elem(&self, other: &Self) -> Self {
        self.add(other)
    }
    fn sub_elem(&self, other: &Self) -> Self {
        self.sub(other)
    }
    fn mul_elem(&self, other: &Self) -> Self {
        self.mul(other)
    }
    fn neg_elem(&self) -> Self {
        self.neg()
    }
}

impl ExactDivRing for MPolyX {
    fn exact_div_elem(&self, other: &Self) -> Result<Self, ExactError> {
        self.exact_div(other)
    }
}

fn check_square<T>(m: &[Vec<T>]) {
    assert!(m.iter().all(|r| r.len() == m.len()), "matrix is not square");
}

/// Fraction-free Gaussian elimination (Bareiss). The empty matrix has
/// determinant 1, which requires a template element, hence `unit`.
pub fn det_bareiss<T: ExactDivRing>(m: &[Vec<T>], unit: &T) -> Result<T, ExactError> {
    check_square(m);
    let n = m.len();
    if n == 0 {
        return Ok(unit.one_like());
    }
    let mut a: Vec<Vec<T>> = m.to_vec();
    let mut sign_flip = false;
    let mut prev = unit.one_like();
    for k in 0..n - 1 {
        if a[k][k].is_zero_elem() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero_elem()) {
                Some(i) => {
                    a.swap(k, i);
                    sign_flip = !sign_flip;
                }
                None => return Ok(unit.zero_like()),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = a[i][j]
                    .mul_elem(&a[k][k])
                    .sub_elem(&a[i][k].mul_elem(&a[k][j]));
                a[i][j] = t.exact_div_elem(&prev)?;
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    Ok(if sign_flip { d.neg_elem() } else { d })
}

/// Laplace expansion along the first row. Exponential; meant as an oracle
/// for small sizes.
pub fn det_cofactor<T: Ring>(m: &[Vec<T>], unit: &T) -> T {
    check_square(m);
    let n = m.len();
    if n == 0 {
        return unit.one_like();
    }
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc = unit.zero_like();
    for j in 0..n {
        if m[0][j].is_zero_elem() {
            continue;
        }
        let minor: Vec<Vec<T>> = m[1..]
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|&(c, _)| c != j)
                    .map(|(_, v)| v.clone())
                    .collect()
            })
            .collect();
        let t = m[0][j].mul_elem(&det_cofactor(&minor, unit));
        acc = if j % 2 == 0 { acc.add_elem(&t) } else { acc.sub_elem(&t) };
    }
    acc
}

/// Division-free determinant by row-wise Laplace expansion with memoized
/// column-subset minors (`O(2^n n)` products). `mul` replaces the ring
/// product, so callers can truncate power series on the fly.
pub fn det_minors<T, F>(m: &[Vec<T>], unit: &T, mul: F) -> T
where
    T: Ring,
    F: Fn(&T, &T) -> T,
{
    check_square(m);
    let n = m.len();
    assert!(n < usize::BITS as usize - 1, "matrix too large");
    if n == 0 {
        return unit.one_like();
    }
    let mut minors: Vec<Option<T>> = vec![None; 1 << n];
    minors[0] = Some(unit.one_like());
    // Row r uses subsets of size r + 1; generate them in increasing size.
    let mut by_size: Vec<Vec<usize>> = vec![Vec::new(); n + 1];
    for s in 0usize..(1 << n) {
        by_size[s.count_ones() as usize].push(s);
    }
    for r in 0..n {
        for &s in &by_size[r + 1] {
            let mut acc: Option<T> = None;
            let mut idx = 0;
            for j in 0..n {
                if s & (1 << j) == 0 {
                    continue;
                }
                let sub = minors[s & !(1 << j)].as_ref().unwrap();
                if !m[r][j].is_zero_elem() && !sub.is_zero_elem() {
                    let t = mul(&m[r][j], sub);
                    // column j is the idx-th smallest of s; expanding along
                    // the last row gives sign (-1)^(r + idx).
                    let t = if (r + idx) % 2 == 1 { t.neg_elem() } else { t };
                    acc = Some(match acc {
                        None => t,
                        Some(a) => a.add_elem(&t),
                    });
                }
                idx += 1;
            }
            minors[s] = Some(acc.unwrap_or_else(|| unit.zero_like()));
        }
        // minors of size r are no longer needed
        for &s in &by_size[r] {
            if r > 0 {
                minors[s] = None;
            }
        }
    }
    minors[(1 << n) - 1].take().unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(i: usize) -> MPolyX {
        MPolyX::var(2, i)
    }

    #[test]
    fn small_cases() {
        let one = MPolyX::one(2);
        assert_eq!(det_bareiss(&[vec![x(0)]], &one).unwrap(), x(0));
        let id: Vec<Vec<MPolyX>> = (0..3)
            .map(|i| {
                (0..3)
                    .map(|j| if i == j { one.clone() } else { MPolyX::zero(2) })
                    .collect()
            })
            .collect();
        assert_eq!(det_bareiss(&id, &one).unwrap(), one);
        let m = vec![vec![x(0), x(1)], vec![x(1), x(0)]];
        let expect = x(0).pow(2).sub(&x(1).pow(2));
        assert_eq!(det_bareiss(&m, &one).unwrap(), expect);
        assert_eq!(det_cofactor(&m, &one), expect);
        assert_eq!(det_minors(&m, &one, |a, b| a.mul(b)), expect);
    }

    #[test]
    fn pivoting_on_zero_diagonal() {
        let one = RatZeta::one();
        let z = RatZeta::z();
        let m = vec![
            vec![RatZeta::zero(), one.clone(), z.clone()],
            vec![one.clone(), RatZeta::zero(), one.clone()],
            vec![z.clone(), one.clone(), RatZeta::zero()],
        ];
        let d = det_bareiss(&m, &one).unwrap();
        assert_eq!(d, det_cofactor(&m, &one));
        assert_eq!(d, det_minors(&m, &one, |a, b| a.mul(b)));
    }
}
