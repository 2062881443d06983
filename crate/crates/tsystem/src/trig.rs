//! The limit `z -> -2` of `T_n^(k)` for `k >= 0`, compared with a product of
//! symplectic characters.

use ev_core::{det_bareiss, MPolyX, Rat, RatZeta};

use crate::tnk::tnk;
use crate::xfrac::XFrac;
use crate::{KIndex, Limits, TError};

/// `delta(n) = floor(n^2 / 4)`
pub fn delta(n: i64) -> i64 {
    n * n / 4
}

/// Chebyshev-type polynomials `U_0..U_d` in `s = t + 1/t`, with
/// `U_k = (t^{k+1} - t^{-k-1}) / (t - 1/t)`.
fn chebyshev_u(s: &MPolyX, d: usize) -> Vec<MPolyX> {
    let mut u = vec![MPolyX::one(s.nvars())];
    if d >= 1 {
        u.push(s.clone());
    }
    for k in 2..=d {
        let next = s.mul(&u[k - 1]).sub(&u[k - 2]);
        u.push(next);
    }
    u
}

/// The `sp(2N)` character with staircase highest weight
/// `floor((N-1)/2), floor((N-2)/2), ..., 1, 1, 0, 0`, as a polynomial in
/// `s_j = t_j + 1/t_j`, by the Weyl character formula.
pub fn staircase_character(nvars: usize) -> Result<MPolyX, TError> {
    let n = nvars;
    if n == 0 {
        return Ok(MPolyX::one(0));
    }
    let lambda: Vec<usize> = (1..=n).map(|i| (n - i) / 2).collect();
    let top = lambda[0] + n;
    let us: Vec<Vec<MPolyX>> = (0..n)
        .map(|j| chebyshev_u(&MPolyX::var(n, j), top))
        .collect();
    let numer: Vec<Vec<MPolyX>> = (0..n)
        .map(|i| (0..n).map(|j| us[j][lambda[i] + n - i - 1].clone()).collect())
        .collect();
    let denom: Vec<Vec<MPolyX>> = (0..n)
        .map(|i| (0..n).map(|j| us[j][n - i - 1].clone()).collect())
        .collect();
    let one = MPolyX::one(n);
    let a = det_bareiss(&numer, &one)?;
    let b = det_bareiss(&denom, &one)?;
    Ok(a.exact_div(&b)?)
}

/// Specializes the trailing variables of a polynomial to constants.
fn specialize_tail(p: &MPolyX, keep: usize, values: &[RatZeta]) -> MPolyX {
    let mut q = p.clone();
    for (i, v) in values.iter().enumerate().rev() {
        q = q.eval_var(keep + i, v);
    }
    let map: Vec<Option<usize>> = (0..p.nvars())
        .map(|j| if j < keep { Some(j) } else { None })
        .collect();
    q.remap(keep, &map)
}

/// The right-hand side of the limit formula as a polynomial in
/// `s_j = t_j + 1/t_j`, `j = 1..m`.
pub fn trig_limit_rhs(idx: &KIndex) -> Result<MPolyX, TError> {
    let [k0, k1, k2, k3] = idx.k;
    let n = idx.n;
    let m = idx.m() as usize;
    let two = RatZeta::from_int(2);
    let mtwo = RatZeta::from_int(-2);
    let spec = |a: i64, b: i64| -> Vec<RatZeta> {
        std::iter::repeat_n(two.clone(), a as usize)
            .chain(std::iter::repeat_n(mtwo.clone(), b as usize))
            .collect()
    };
    let chi1 = specialize_tail(
        &staircase_character(m + (k0 + k3) as usize)?,
        m,
        &spec(k0, k3),
    );
    let chi2 = specialize_tail(&staircase_character((k1 + k2) as usize)?, 0, &spec(k1, k2))
        .as_constant()
        .unwrap_or_else(RatZeta::zero);
    let base = Rat::from_integer(if k2 % 2 == 0 { 1 } else { -1 }.into())
        * Rat::from_integer(num_bigint::BigInt::from(2).pow(n as u32))
        / Rat::from_integer(num_bigint::BigInt::from(3).pow(k1 as u32));
    let pre = RatZeta::from_rat(base).pow(n - 1)?;
    Ok(chi1.scale(&chi2.mul(&pre)))
}

/// The limit `z -> -2` of `((z+2)/6)^e T_n^(k)` in the variables
/// `s_j = -1 - x_j`, or `None` if some coefficient has a pole there.
pub fn trig_limit_lhs(value: &XFrac, idx: &KIndex) -> Result<Option<MPolyX>, TError> {
    let [_, k1, k2, _] = idx.k;
    let e = (k1 + k2) * (idx.n - 1) - delta(k1 + k2 - 1);
    let scale = RatZeta::linear(1, 2).scale(&Rat::new(1.into(), 6.into())).pow(e)?;
    let at = Rat::from_integer((-2).into());
    let m = value.nvars();
    let mut terms = Vec::new();
    for (mono, c) in value.numerator().terms() {
        match c.mul(&scale).eval(&at) {
            Some(v) => terms.push((mono.exps().to_vec(), RatZeta::from_rat(v))),
            None => return Ok(None),
        }
    }
    let lim = XFrac::poly(MPolyX::from_terms(m, terms));
    // x = -1 - s
    let in_s = lim.affine_subst(&RatZeta::from_int(-1), &RatZeta::from_int(-1))?;
    Ok(Some(in_s.numerator().clone()))
}

/// Whether the `z -> -2` limit of `T_n^(k)` equals the character product.
pub fn trig_limit_check(idx: &KIndex, limits: &Limits) -> Result<bool, TError> {
    if idx.k.iter().any(|&k| k < 0) {
        return Err(TError::InvalidIndex(format!("{idx} has a negative entry")));
    }
    let v = tnk(idx, limits)?;
    let Some(lhs) = trig_limit_lhs(&v.value, idx)? else {
        return Ok(false);
    };
    Ok(lhs == trig_limit_rhs(idx)?)
}
