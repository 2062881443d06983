//! The index map `l -> k`, the factorization of `q_l` into four `t^(k)`, and
//! the valuations of `q_l` at the cusps.

use ev_core::{parse_ratzeta, Rat, RatZeta};
use ev_lattice::{LatticeStore, K};

use ev_tsystem::yseq;

use crate::state::{q_lattice, LVector};
use crate::tau::{tau_lattice, tau_normalizer};
use crate::PError;

/// `k = (-l1-l2-l4, -l2, -l1-l2-l3, -l2-l3-l4)`
pub fn klr_map(l: &LVector) -> K {
    let [l1, l2, l3, l4] = l.l;
    [-l1 - l2 - l4, -l2, -l1 - l2 - l3, -l2 - l3 - l4]
}

/// Inverse of [`klr_map`] on the even sublattice.
pub fn klr_inverse(k: &K) -> Option<LVector> {
    let [k0, k1, k2, k3] = *k;
    if (k0 + k1 + k2 + k3).rem_euclid(2) != 0 {
        return None;
    }
    let l2 = -k1;
    // k0 + k2 - k3 = -2 l1 - l2, so l1 is determined once the parity works out
    let s = -(k0 + k2 - k3) + k1;
    let l1 = s / 2;
    let l4 = -k0 - l1 - l2;
    let l3 = -k2 - l1 - l2;
    let l = LVector::new([l1, l2, l3, l4]);
    (klr_map(&l) == *k).then_some(l)
}

/// The points `0, 1, -1, -2, -1/2` and their linear factors.
pub const CUSP_FACTORS: [&str; 5] = ["z", "z - 1", "z + 1", "z + 2", "2*z + 1"];

fn cusp_points() -> [Rat; 5] {
    [
        Rat::from_integer(0.into()),
        Rat::from_integer(1.into()),
        Rat::from_integer((-1).into()),
        Rat::from_integer((-2).into()),
        Rat::new((-1).into(), 2.into()),
    ]
}

/// Splits `f = c * prod cusp_factor_j^{e_j} * rest` and returns
/// `(e, c * rest)`.
pub fn cusp_split(f: &RatZeta) -> Result<([i64; 5], RatZeta), PError> {
    let mut e = [0i64; 5];
    let mut rest = f.clone();
    for (j, x) in cusp_points().iter().enumerate() {
        e[j] = f.valuation_at(x)?;
        let lin = parse_ratzeta(CUSP_FACTORS[j]).expect("linear factor");
        rest = rest.div(&lin.pow(e[j])?)?;
    }
    Ok((e, rest))
}

#[derive(Debug, Clone, PartialEq)]
pub struct TqfMatch {
    /// numerator pair, then denominator pair
    pub indices: [K; 4],
    /// `q_l t(den_1) t(den_2) / (t(num_1) t(num_2))`
    pub quotient: RatZeta,
    /// exponents of the cusp factors in the quotient
    pub exponents: [i64; 5],
    pub constant: Option<Rat>,
}

impl TqfMatch {
    pub fn holds(&self) -> bool {
        self.constant.is_some()
    }
}

/// The four indices entering the ratio for `q_l`: numerator pair, then
/// denominator pair.
pub fn tqf_indices(l: &LVector) -> [K; 4] {
    let [l1, l2, l3, l4] = l.l;
    [
        [l1, l2, l3, l4 + 1],
        [l1, l2 + 1, l3, l4 - 1],
        [l1 + 1, l2, l3, l4],
        [l1 - 1, l2 + 1, l3, l4],
    ]
    .map(|x| klr_map(&LVector::new(x)))
}

pub fn tqf_quotient(l: &LVector, q: &RatZeta, store: &LatticeStore) -> Result<TqfMatch, PError> {
    let indices = tqf_indices(l);
    let mut t = Vec::with_capacity(4);
    for k in &indices {
        t.push(
            store
                .get(k)
                .ok_or(PError::MissingDependency(*k))?
                .clone(),
        );
    }
    let quotient = q.mul(&t[2]).mul(&t[3]).div(&t[0].mul(&t[1]))?;
    let (exponents, rest) = cusp_split(&quotient)?;
    Ok(TqfMatch {
        indices,
        constant: rest.as_rat().cloned(),
        quotient,
        exponents,
    })
}

/// Whether `q_l` is, up to a constant and powers of the cusp factors, the
/// ratio of the four `t^(k)`.
pub fn factor_match_tqf(l: &LVector, store: &LatticeStore) -> Result<bool, PError> {
    let q = q_lattice(l)?;
    Ok(tqf_quotient(l, &q, store)?.holds())
}

fn chi(k: i64) -> i64 {
    k.rem_euclid(2)
}

/// Measured and predicted cusp valuations of `q_l` and `q_l - 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SccReport {
    /// valuations of `q` at `0, 1, -1, -2, -1/2`
    pub q_orders: [i64; 5],
    pub q_predicted: [i64; 5],
    /// valuations of `q - 1` at the same points
    pub q1_orders: [i64; 5],
    pub q1_predicted: [i64; 5],
    /// `deg den - deg num`; `q` grows like `z^{1 + |l0| [l1 = 0]}`
    pub at_infinity: i64,
    pub at_infinity_predicted: i64,
}

impl SccReport {
    pub fn holds(&self) -> bool {
        self.q_orders == self.q_predicted
            && self.q1_orders == self.q1_predicted
            && self.at_infinity == self.at_infinity_predicted
    }
}

pub fn scc_report(l: &LVector, q: &RatZeta) -> Result<SccReport, PError> {
    let [l0, l1, _, l3, l4] = l.full();
    let d = |b: bool| i64::from(b);
    let pole = -(1 + chi(l3 + l4));
    let q_predicted = [
        1 + l0.abs() * d(l4 == 0),
        0,
        0,
        1 + chi(l1 + l3),
        pole,
    ];
    let q1_predicted = [
        0,
        1 + chi(l1 + l4),
        1 + l0.abs() * d(l3 == 0),
        0,
        pole,
    ];
    let pts = cusp_points();
    let q1 = q.sub(&RatZeta::one());
    let mut q_orders = [0; 5];
    let mut q1_orders = [0; 5];
    for j in 0..5 {
        q_orders[j] = q.valuation_at(&pts[j])?;
        q1_orders[j] = q1.valuation_at(&pts[j])?;
    }
    Ok(SccReport {
        q_orders,
        q_predicted,
        q1_orders,
        q1_predicted,
        at_infinity: q.valuation_at_infinity()?,
        at_infinity_predicted: -(1 + l0.abs() * d(l1 == 0)),
    })
}

/// Cusp behaviour of `q_l`.
pub fn scc_exponents(l: &LVector) -> Result<SccReport, PError> {
    scc_report(l, &q_lattice(l)?)
}

/// `tau_l / phi_l` against `Y_{k0} Y_{k1} Y_{k2} Y_{k3} t^(k)` for `k = klr(l)`:
/// the tau monomials must cancel and the remaining constant and function
/// of `z` must agree exactly.
pub fn tau_factor_check(l: &LVector, store: &LatticeStore) -> Result<bool, PError> {
    let k = klr_map(l);
    let t = store.get(&k).ok_or(PError::MissingDependency(k))?;
    let ratio = tau_lattice(l)?.div(&tau_normalizer(l))?;
    if !ratio.is_scalar() {
        return Ok(false);
    }
    let y: Rat = k.iter().map(|&x| yseq(x)).product();
    let expect = t.mul(&RatZeta::from_rat(y));
    Ok(match ratio.root24 {
        0 => ratio.coeff == expect,
        12 => ratio.coeff == expect.neg(),
        _ => false,
    })
}
