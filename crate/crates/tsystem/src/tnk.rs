//! `T_n^(k)(x_1..x_m)` for arbitrary integer `k`, by specializing the split
//! determinant at the half-periods.
//!
//! Sites in the same Vandermonde block that are specialized to the same
//! `xi_j` are placed at `xi_j + c eps` with distinct integers `c`; the
//! numerator is expanded as a truncated series in `eps` and the leading
//! coefficient is divided by the leading coefficient of the block
//! Vandermonde products.

use ev_core::{MPolyX, RatZeta};

use crate::split::{split_numerator, Trunc};
use crate::weights::{g_at_xi, weight_at, xi, Weight};
use crate::xfrac::XFrac;
use crate::{KIndex, Limits, TError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Provenance {
    Determinant,
    Recursion,
    Symmetry,
}

#[derive(Debug, Clone, PartialEq)]
pub struct TValue {
    pub index: KIndex,
    pub value: XFrac,
    pub provenance: Provenance,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Site {
    Free(usize),
    Special(usize),
}

/// A site placed in the working ring: free variable or `xi_g + c eps`.
#[derive(Debug, Clone, Copy)]
struct Placed {
    site: Site,
    offset: u32,
}

/// Distributes `sites` alternately over two blocks of the given capacities.
fn deal(sites: &[Site], cap_a: usize, cap_b: usize) -> (Vec<Site>, Vec<Site>) {
    let (mut a, mut b) = (Vec::new(), Vec::new());
    for (i, s) in sites.iter().enumerate() {
        let to_a = a.len() < cap_a && (i % 2 == 0 || b.len() >= cap_b);
        if to_a {
            a.push(*s);
        } else {
            b.push(*s);
        }
    }
    (a, b)
}

/// Assigns `eps` offsets within a block and returns the number of
/// same-group pairs it contains.
fn place(block: &[Site]) -> (Vec<Placed>, u32) {
    let mut seen = [0u32; 4];
    let mut pairs = 0;
    let placed = block
        .iter()
        .map(|&site| {
            let offset = match site {
                Site::Free(_) => 0,
                Site::Special(g) => {
                    let c = seen[g];
                    pairs += c;
                    seen[g] += 1;
                    c
                }
            };
            Placed { site, offset }
        })
        .collect();
    (placed, pairs)
}

/// Checks the size bound for an index.
pub fn check_limits(idx: &KIndex, limits: &Limits) -> Result<(), TError> {
    let un = idx.underlying_n();
    if un > limits.max_underlying_n as i64 {
        return Err(TError::SizeBound(format!(
            "{idx} needs a determinant of half-size {un} (bound {})",
            limits.max_underlying_n
        )));
    }
    Ok(())
}

/// The specialized split polynomial `T(x, xi^{k+}; xi^{k-})` in `m`
/// variables, before the normalizing prefactor.
pub fn specialized_split(idx: &KIndex, limits: &Limits) -> Result<MPolyX, TError> {
    if idx.m() < 0 {
        return Err(TError::InvalidIndex(format!("m < 0 for {idx}")));
    }
    check_limits(idx, limits)?;
    let m = idx.m() as usize;
    let big_n = idx.underlying_n() as usize;
    let mut left: Vec<Site> = (0..m).map(Site::Free).collect();
    let mut right = Vec::new();
    for (g, &kg) in idx.k.iter().enumerate() {
        for _ in 0..kg.unsigned_abs() {
            if kg > 0 {
                left.push(Site::Special(g));
            } else {
                right.push(Site::Special(g));
            }
        }
    }
    let rn = right.len();
    let right_rows = rn.div_ceil(2);
    let right_cols = rn / 2;
    let k = big_n - right_rows;
    let l = big_n - right_cols;
    let (rows_l, cols_l) = deal(&left, k, l);
    let (rows_r, cols_r) = deal(&right, right_rows, right_cols);
    debug_assert_eq!(rows_l.len() + rows_r.len(), big_n);
    debug_assert_eq!(cols_l.len() + cols_r.len(), big_n);

    let blocks: Vec<(Vec<Placed>, u32)> = [&rows_l, &rows_r, &cols_l, &cols_r]
        .iter()
        .map(|b| place(b))
        .collect();
    let order: u32 = blocks.iter().map(|(_, r)| r).sum();
    let nv = if order > 0 { m + 1 } else { m };
    let xis = xi();
    let value = |p: &Placed| -> MPolyX {
        match p.site {
            Site::Free(j) => MPolyX::var(nv, j),
            Site::Special(g) => {
                let base = MPolyX::constant(nv, xis[g].clone());
                if p.offset == 0 {
                    base
                } else {
                    base.add(&MPolyX::var(nv, m).scale(&RatZeta::from_int(p.offset as i64)))
                }
            }
        }
    };
    let rows: Vec<MPolyX> = blocks[0].0.iter().chain(&blocks[1].0).map(value).collect();
    let cols: Vec<MPolyX> = blocks[2].0.iter().chain(&blocks[3].0).map(value).collect();
    let trunc = (order > 0).then_some(Trunc {
        var: m,
        max_deg: order,
    });
    let num = split_numerator(&rows, &cols, k, l, trunc);
    let mut t = if order > 0 {
        let map: Vec<Option<usize>> = (0..m).map(Some).chain([None]).collect();
        num.coeff_in(m, order).remap(m, &map)
    } else {
        num
    };

    // leading coefficient of the block Vandermonde products
    let mut konst = RatZeta::one();
    for (block, _) in &blocks {
        for q in 0..block.len() {
            for p in 0..q {
                match (block[p].site, block[q].site) {
                    (Site::Special(a), Site::Special(b)) if a == b => {
                        let d = block[q].offset as i64 - block[p].offset as i64;
                        konst = konst.mul(&RatZeta::from_int(d));
                    }
                    (Site::Special(a), Site::Special(b)) => {
                        konst = konst.mul(&xis[b].sub(&xis[a]));
                    }
                    (sp, sq) => {
                        let at = |s: Site| match s {
                            Site::Free(j) => MPolyX::var(m, j),
                            Site::Special(g) => MPolyX::constant(m, xis[g].clone()),
                        };
                        t = t.exact_div(&at(sq).sub(&at(sp)))?;
                    }
                }
            }
        }
    }
    Ok(t.scale(&konst.inv()?))
}

/// `T_n^(k)` with the normalizing prefactor applied.
pub fn tnk(idx: &KIndex, limits: &Limits) -> Result<TValue, TError> {
    let t = specialized_split(idx, limits)?;
    let m = idx.m() as usize;
    let kp: Vec<i64> = idx.k.iter().map(|&x| x.max(0)).collect();
    let km: Vec<i64> = idx.k.iter().map(|&x| (-x).max(0)).collect();
    let r: i64 = km.iter().sum();
    let xis = xi();
    let mut den = RatZeta::from_int(2).pow(r)?;
    if (r * (r - 1) / 2) % 2 == 1 {
        den = den.neg();
    }
    for i in 0..4 {
        for j in 0..4 {
            let e = km[i] * kp[j];
            if e > 0 {
                den = den.mul(&weight_at(Weight::G, &xis[i], &xis[j]).pow(e)?);
            }
        }
    }
    let mut poles = Vec::new();
    for (i, &e) in km.iter().enumerate() {
        if e == 0 || m == 0 {
            continue;
        }
        let f = g_at_xi(i);
        den = den.mul(&f.c.pow(e * m as i64)?);
        if f.mult > 0 {
            poles.push((f.root, e * f.mult as i64));
        }
    }
    let value = XFrac::new(t.scale(&den.inv()?), poles)?;
    if value.is_zero() {
        return Err(TError::ZeroFunction(idx.to_string()));
    }
    Ok(TValue {
        index: *idx,
        value,
        provenance: Provenance::Determinant,
    })
}

/// `t^(k) = T_{|k|/2}^(k)`.
pub fn tk(k: [i64; 4], limits: &Limits) -> Result<RatZeta, TError> {
    let idx = KIndex::m_zero(k)?;
    Ok(tnk(&idx, limits)?.value.as_ratzeta().expect("m = 0"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use ev_core::parse_ratzeta;

    fn lim() -> Limits {
        Limits::default()
    }

    #[test]
    fn seeds() {
        assert!(tk([0, 0, 0, 0], &lim()).unwrap().is_one());
        assert!(tk([1, -1, 0, 0], &lim()).unwrap().is_one());
        let seed = parse_ratzeta("-2*z^2*(z - 1)*(z + 1)^2*(2*z + 1) / (z + 2)^2").unwrap();
        assert_eq!(tk([0, -1, -1, 0], &lim()).unwrap(), seed);
    }

    #[test]
    fn parity() {
        assert_eq!(tk([1, 0, 0, 0], &lim()), Err(TError::ParityError(1)));
    }

    #[test]
    fn placement_counts_pairs() {
        let b = [Site::Special(0), Site::Free(0), Site::Special(0), Site::Special(0)];
        let (p, r) = place(&b);
        assert_eq!(r, 3);
        assert_eq!(p[3].offset, 2);
    }
}
