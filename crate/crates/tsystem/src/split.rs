//! The symmetric polynomial `T(x_1..x_2n)` and its split determinant
//! variants, computed in numerator form and divided exactly by the block
//! Vandermonde products.

use ev_core::{det_minors, MPolyX};

use crate::weights::{weight, Weight};
use crate::{Limits, TError};

/// Optional truncation of all products at a given degree in one variable.
#[derive(Debug, Clone, Copy)]
pub struct Trunc {
    pub var: usize,
    pub max_deg: u32,
}

fn mul_t(a: &MPolyX, b: &MPolyX, t: Option<Trunc>) -> MPolyX {
    match t {
        Some(t) => a.mul_trunc(b, t.var, t.max_deg),
        None => a.mul(b),
    }
}

/// Numerator of the split determinant with row sites `rows`, column sites
/// `cols`, the first `k` rows and first `l` columns being the left block:
///
/// `cross * prod G * det(B) = det(E_ij prod_{j' != j} W_ij')`
///
/// where `W_ij = G(r_i, c_j)` times the cross factor of the pair and `E_ij`
/// is `1`, `Q(r_i, c_j)`, `Q(c_j, r_i)` or `-R(r_i, c_j)` by block.
pub fn split_numerator(
    rows: &[MPolyX],
    cols: &[MPolyX],
    k: usize,
    l: usize,
    trunc: Option<Trunc>,
) -> MPolyX {
    let n = rows.len();
    assert_eq!(cols.len(), n);
    assert!(k <= n && l <= n);
    let nv = rows
        .first()
        .map(|r| r.nvars())
        .unwrap_or_else(|| cols.first().map(|c| c.nvars()).unwrap_or(0));
    let unit = MPolyX::one(nv);
    if n == 0 {
        return unit;
    }
    let mut mat: Vec<Vec<MPolyX>> = Vec::with_capacity(n);
    for (i, r) in rows.iter().enumerate() {
        let left_row = i < k;
        let w: Vec<MPolyX> = cols
            .iter()
            .enumerate()
            .map(|(j, c)| {
                let g = weight(Weight::G, r, c);
                let left_col = j < l;
                match (left_row, left_col) {
                    (true, false) => mul_t(&g, &c.sub(r), trunc),
                    (false, true) => mul_t(&g, &r.sub(c), trunc),
                    _ => g,
                }
            })
            .collect();
        // prefix/suffix products give prod_{j' != j} W_ij'
        let mut prefix = vec![unit.clone()];
        for wj in &w {
            let next = mul_t(prefix.last().unwrap(), wj, trunc);
            prefix.push(next);
        }
        let mut suffix = vec![unit.clone(); n + 1];
        for j in (0..n).rev() {
            suffix[j] = mul_t(&w[j], &suffix[j + 1], trunc);
        }
        let row: Vec<MPolyX> = cols
            .iter()
            .enumerate()
            .map(|(j, c)| {
                let others = mul_t(&prefix[j], &suffix[j + 1], trunc);
                let left_col = j < l;
                let e = match (left_row, left_col) {
                    (true, true) => return others,
                    (true, false) => weight(Weight::Q, r, c),
                    (false, true) => weight(Weight::Q, c, r),
                    (false, false) => weight(Weight::R, r, c).neg(),
                };
                mul_t(&e, &others, trunc)
            })
            .collect();
        mat.push(row);
    }
    // Expand sparse rows first: the memoized minors of the early rows are
    // then small.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&i| mat[i].iter().map(|e| e.num_terms()).sum::<usize>());
    let sign = permutation_sign(&order);
    let permuted: Vec<Vec<MPolyX>> = order.iter().map(|&i| mat[i].clone()).collect();
    let d = det_minors(&permuted, &unit, |a, b| mul_t(a, b, trunc));
    if sign < 0 {
        d.neg()
    } else {
        d
    }
}

fn permutation_sign(p: &[usize]) -> i32 {
    let mut seen = vec![false; p.len()];
    let mut sign = 1;
    for s in 0..p.len() {
        if seen[s] {
            continue;
        }
        let mut len = 0;
        let mut i = s;
        while !seen[i] {
            seen[i] = true;
            i = p[i];
            len += 1;
        }
        if len % 2 == 0 {
            sign = -sign;
        }
    }
    sign
}

/// Divides by `prod_{p<q} (v_q - v_p)` one linear factor at a time.
pub fn divide_vandermonde(mut num: MPolyX, v: &[MPolyX]) -> Result<MPolyX, TError> {
    for q in 0..v.len() {
        for p in 0..q {
            num = num.exact_div(&v[q].sub(&v[p]))?;
        }
    }
    Ok(num)
}

fn check_size(n: usize, limits: &Limits) -> Result<(), TError> {
    if n > limits.max_symbolic_n {
        return Err(TError::SizeBound(format!(
            "n = {n} exceeds the symbolic bound {}",
            limits.max_symbolic_n
        )));
    }
    Ok(())
}

/// `T(x_1..x_k, x_{n+1}..x_{n+l}; x_{k+1}..x_n, x_{n+l+1}..x_{2n})` as a
/// polynomial in `x_1..x_2n`.
pub fn split_t(n: usize, k: usize, l: usize, limits: &Limits) -> Result<MPolyX, TError> {
    check_size(n, limits)?;
    if k > n || l > n {
        return Err(TError::InvalidIndex(format!(
            "split ({k},{l}) is not valid for n = {n}"
        )));
    }
    let nv = 2 * n;
    let rows: Vec<MPolyX> = (0..n).map(|i| MPolyX::var(nv, i)).collect();
    let cols: Vec<MPolyX> = (0..n).map(|i| MPolyX::var(nv, n + i)).collect();
    if n == 0 {
        return Ok(MPolyX::one(0));
    }
    let mut num = split_numerator(&rows, &cols, k, l, None);
    for block in [&rows[..k], &rows[k..], &cols[..l], &cols[l..]] {
        num = divide_vandermonde(num, block)?;
    }
    Ok(num)
}

/// The symmetric polynomial `T(x_1..x_2n)`.
pub fn big_t(n: usize, limits: &Limits) -> Result<MPolyX, TError> {
    split_t(n, n, n, limits)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weights::weight;

    fn lim() -> Limits {
        Limits::default()
    }

    #[test]
    fn small_cases() {
        assert!(big_t(0, &lim()).unwrap().is_one());
        assert!(big_t(1, &lim()).unwrap().is_one());
        let x = |i| MPolyX::var(2, i);
        assert_eq!(split_t(1, 1, 0, &lim()).unwrap(), weight(Weight::Q, &x(0), &x(1)));
        assert_eq!(split_t(1, 0, 1, &lim()).unwrap(), weight(Weight::Q, &x(1), &x(0)));
        assert_eq!(split_t(1, 0, 0, &lim()).unwrap(), weight(Weight::R, &x(0), &x(1)).neg());
    }

    #[test]
    fn size_bound() {
        let l = Limits {
            max_symbolic_n: 2,
            ..Limits::default()
        };
        assert!(matches!(big_t(3, &l), Err(TError::SizeBound(_))));
    }

    #[test]
    fn permutation_signs() {
        assert_eq!(permutation_sign(&[0, 1, 2]), 1);
        assert_eq!(permutation_sign(&[1, 0, 2]), -1);
        assert_eq!(permutation_sign(&[1, 2, 0]), 1);
    }
}
