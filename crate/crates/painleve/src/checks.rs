//! Exact residuals of Painleve VI, the Hamiltonian system and the `E_VI`
//! equation on states, with `d/dt` expressed through `d/dz`.

use ev_core::{parse_ratzeta, Rat, RatZeta};

use crate::state::{t_of_z, PVIState};
use crate::PError;

fn c(a: &Rat) -> RatZeta {
    RatZeta::from_rat(a.clone())
}

/// `d/dt` of a function of `z`.
pub fn d_dt(f: &RatZeta) -> RatZeta {
    f.derivative()
        .div(&t_of_z().derivative())
        .expect("t is not constant")
}

/// `delta = t (t-1) d/dt` written in `z`.
pub fn delta_z(f: &RatZeta) -> RatZeta {
    parse_ratzeta("z*(z + 1)*(z - 1)*(z + 2) / (2*(2*z + 1)^2)")
        .expect("constant")
        .mul(&f.derivative())
}

/// `q^4 - 4 t q^3 + 6 t q^2 - 4 t q + t^2`
pub fn pa_residual(s: &PVIState) -> RatZeta {
    let (q, t) = (&s.q, &s.t);
    let q2 = q.mul(q);
    let q3 = q2.mul(q);
    q2.mul(&q2)
        .sub(&RatZeta::from_int(4).mul(t).mul(&q3))
        .add(&RatZeta::from_int(6).mul(t).mul(&q2))
        .sub(&RatZeta::from_int(4).mul(t).mul(q))
        .add(&t.mul(t))
}

/// Left minus right side of Painleve VI for `q(t)` with the constants
/// `(alpha, beta, gamma, delta)` read off the state parameters.
pub fn py_residual(s: &PVIState) -> Result<RatZeta, PError> {
    let (q, t) = (&s.q, &s.t);
    let one = RatZeta::one();
    let half = Rat::new(1.into(), 2.into());
    let sq = |a: &Rat| RatZeta::from_rat(a * a * &half);
    let alpha = sq(&s.alpha[1]);
    let beta = sq(&s.alpha[4]).neg();
    let gamma = sq(&s.alpha[3]);
    let delta = RatZeta::from_rat(half.clone()).sub(&sq(&s.alpha[0]));
    let q1 = d_dt(q);
    let q2 = d_dt(&q1);
    let qm1 = q.sub(&one);
    let qmt = q.sub(t);
    let tm1 = t.sub(&one);
    let rhs = RatZeta::from_rat(half)
        .mul(&q.inv()?.add(&qm1.inv()?).add(&qmt.inv()?))
        .mul(&q1.mul(&q1))
        .sub(&t.inv()?.add(&tm1.inv()?).add(&qmt.inv()?).mul(&q1))
        .add(
            &q.mul(&qm1)
                .mul(&qmt)
                .div(&t.mul(t).mul(&tm1).mul(&tm1))?
                .mul(
                    &alpha
                        .add(&beta.mul(t).div(&q.mul(q))?)
                        .add(&gamma.mul(&tm1).div(&qm1.mul(&qm1))?)
                        .add(&delta.mul(t).mul(&tm1).div(&qmt.mul(&qmt))?),
                ),
        );
    Ok(q2.sub(&rhs))
}

/// `H` and its partial derivatives in `q` and `p`.
fn hamiltonian(s: &PVIState) -> (RatZeta, RatZeta, RatZeta) {
    let [a0, _a1, a2, a3, a4] = &s.alpha;
    let a1 = &s.alpha[1];
    let (q, p, t) = (&s.q, &s.p, &s.t);
    let one = RatZeta::one();
    let qm1 = q.sub(&one);
    let qmt = q.sub(t);
    let a0m = c(a0).sub(&one);
    let braces = a0m
        .mul(q)
        .mul(&qm1)
        .add(&c(a3).mul(q).mul(&qmt))
        .add(&c(a4).mul(&qm1).mul(&qmt));
    let k = c(&(a2 * (a1 + a2)));
    let cubic = q.mul(&qm1).mul(&qmt);
    let h = cubic.mul(p).mul(p).sub(&braces.mul(p)).add(&k.mul(&qmt));
    // d/dq of q(q-1)(q-t) = 3q^2 - 2(1+t)q + t
    let dcubic = RatZeta::from_int(3)
        .mul(q)
        .mul(q)
        .sub(&RatZeta::from_int(2).mul(&one.add(t)).mul(q))
        .add(t);
    let dbraces = a0m
        .mul(&RatZeta::from_int(2).mul(q).sub(&one))
        .add(&c(a3).mul(&RatZeta::from_int(2).mul(q).sub(t)))
        .add(&c(a4).mul(&RatZeta::from_int(2).mul(q).sub(&one).sub(t)));
    let hq = dcubic.mul(p).mul(p).sub(&dbraces.mul(p)).add(&k);
    let hp = RatZeta::from_int(2).mul(&cubic).mul(p).sub(&braces);
    (h, hq, hp)
}

/// Residuals of `t(t-1) q' = H_p` and `t(t-1) p' = -H_q`.
pub fn ph_residual(s: &PVIState) -> (RatZeta, RatZeta) {
    let (_, hq, hp) = hamiltonian(s);
    (delta_z(&s.q).sub(&hp), delta_z(&s.p).add(&hq))
}

/// The modified Hamiltonian `h_0 = H + k_1 t + k_2 (t - 1)`.
pub fn modified_hamiltonian(s: &PVIState) -> RatZeta {
    let [a0, a1, _, a3, a4] = &s.alpha;
    let t = &s.t;
    let one = Rat::from_integer(1.into());
    let a0m = a0 - &one;
    let twelfth = Rat::new(1.into(), 12.into());
    let two = Rat::from_integer(2.into());
    let six = Rat::from_integer(6.into());
    let k1 = &twelfth
        * (&two * &a0m * &a0m - a1 * a1 + &two * a3 * a3 - a4 * a4 + &six * &a0m * a3);
    let k2 = &twelfth
        * (&two * &a0m * &a0m - a1 * a1 - a3 * a3 + &two * a4 * a4 + &six * &a0m * a4);
    let (h, _, _) = hamiltonian(s);
    let tm1 = t.sub(&RatZeta::one());
    h.add(&c(&k1).mul(t)).add(&c(&k2).mul(&tm1))
}

/// Left minus right side of the `E_VI` equation for
/// `h = h_0 - C (2t - 1) / 24`.
pub fn evi_residual(s: &PVIState) -> Result<RatZeta, PError> {
    let [a0, a1, _, a3, a4] = &s.alpha;
    let t = &s.t;
    let one = Rat::from_integer(1.into());
    let a0m = a0 - &one;
    let tm1 = t.sub(&RatZeta::one());
    let h0 = modified_hamiltonian(s);
    let cc = &a0m * &a0m + a1 * a1 + a3 * a3 + a4 * a4;
    let hh = h0.sub(
        &c(&(cc / Rat::from_integer(24.into())))
            .mul(&RatZeta::from_int(2).mul(t).sub(&RatZeta::one())),
    );
    let half = Rat::new(1.into(), 2.into());
    let b = [
        (a3 + a4) * &half,
        (a4 - a3) * &half,
        (a0 + a1 - &one) * &half,
        (a0 - a1 - &one) * &half,
    ];
    let h1 = d_dt(&hh);
    let h2 = d_dt(&h1);
    let bprod = c(&(&b[0] * &b[1] * &b[2] * &b[3]));
    let x = t.mul(&tm1).mul(&h2);
    let y = h1
        .mul(&RatZeta::from_int(2).mul(&hh).sub(&RatZeta::from_int(2).mul(t).sub(&RatZeta::one()).mul(&h1)))
        .add(&bprod);
    let lhs = h1.mul(&x).mul(&x).add(&y.mul(&y));
    let rhs = b
        .iter()
        .fold(RatZeta::one(), |acc, bk| acc.mul(&h1.add(&c(&(bk * bk)))));
    Ok(lhs.sub(&rhs))
}
