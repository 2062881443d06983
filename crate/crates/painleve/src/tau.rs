//! Monomials `c(z) * e^{pi i r/12} * 2^{s/3} * u^a v^b tau_0^{e_0}..tau_4^{e_4}`
//! and their transport along Backlund transformations.

use std::fmt;

use ev_core::{parse_ratzeta, Rat, RatZeta};

use crate::state::{t_of_z, Gen, LVector, PVIState};
use crate::PError;

#[derive(Debug, Clone, PartialEq)]
pub struct TauExponent {
    pub coeff: RatZeta,
    /// power of `e^{pi i / 12}`, kept in `0..24`
    pub root24: i64,
    /// power of `2^{1/3}`
    pub pow2third: i64,
    pub pow_u: i64,
    pub pow_v: i64,
    pub pow_tau: [i64; 5],
}

impl TauExponent {
    pub fn one() -> Self {
        TauExponent {
            coeff: RatZeta::one(),
            root24: 0,
            pow2third: 0,
            pow_u: 0,
            pow_v: 0,
            pow_tau: [0; 5],
        }
    }

    pub fn constant(c: RatZeta) -> Self {
        TauExponent {
            coeff: c,
            ..Self::one()
        }
    }

    pub fn u() -> Self {
        TauExponent { pow_u: 1, ..Self::one() }
    }

    pub fn v() -> Self {
        TauExponent { pow_v: 1, ..Self::one() }
    }

    pub fn tau(j: usize) -> Self {
        let mut t = Self::one();
        t.pow_tau[j] = 1;
        t
    }

    /// `i^k`
    pub fn i_pow(k: i64) -> Self {
        TauExponent {
            root24: (6 * k).rem_euclid(24),
            ..Self::one()
        }
    }

    /// Brings the `u, v` exponents to `0 <= a < 2`, `0 <= b < 6` using
    /// `u^2 v^{-2} = (1-t)/t` and `v^6 = t^2/(1-t)`, then moves the sign of
    /// the coefficient into `root24`.
    fn reduce(mut self) -> Self {
        let t = t_of_z();
        let omt = RatZeta::one().sub(&t);
        let k = self.pow_u.div_euclid(2);
        if k != 0 {
            let f = omt.div(&t).expect("t != 0").pow(k).expect("nonzero");
            self.coeff = self.coeff.mul(&f);
            self.pow_u -= 2 * k;
            self.pow_v += 2 * k;
        }
        let k = self.pow_v.div_euclid(6);
        if k != 0 {
            let f = t.mul(&t).div(&omt).expect("t != 1").pow(k).expect("nonzero");
            self.coeff = self.coeff.mul(&f);
            self.pow_v -= 6 * k;
        }
        if self.coeff.scalar() < &Rat::from_integer(0.into()) {
            self.coeff = self.coeff.neg();
            self.root24 = (self.root24 + 12).rem_euclid(24);
        }
        self
    }

    pub fn mul(&self, o: &TauExponent) -> TauExponent {
        let mut pow_tau = self.pow_tau;
        for (a, b) in pow_tau.iter_mut().zip(o.pow_tau) {
            *a += b;
        }
        TauExponent {
            coeff: self.coeff.mul(&o.coeff),
            root24: (self.root24 + o.root24).rem_euclid(24),
            pow2third: self.pow2third + o.pow2third,
            pow_u: self.pow_u + o.pow_u,
            pow_v: self.pow_v + o.pow_v,
            pow_tau,
        }
        .reduce()
    }

    pub fn inv(&self) -> Result<TauExponent, PError> {
        Ok(TauExponent {
            coeff: self.coeff.inv()?,
            root24: (-self.root24).rem_euclid(24),
            pow2third: -self.pow2third,
            pow_u: -self.pow_u,
            pow_v: -self.pow_v,
            pow_tau: self.pow_tau.map(|e| -e),
        }
        .reduce())
    }

    pub fn div(&self, o: &TauExponent) -> Result<TauExponent, PError> {
        Ok(self.mul(&o.inv()?))
    }

    pub fn pow(&self, e: i64) -> Result<TauExponent, PError> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        Ok((0..e.abs()).fold(TauExponent::one(), |acc, _| acc.mul(&base)))
    }

    pub fn scale(&self, c: &RatZeta) -> TauExponent {
        TauExponent {
            coeff: self.coeff.mul(c),
            ..self.clone()
        }
        .reduce()
    }

    /// Whether only the coefficient is nontrivial.
    pub fn is_scalar(&self) -> bool {
        self.pow2third == 0 && self.pow_u == 0 && self.pow_v == 0 && self.pow_tau == [0; 5]
    }
}

impl fmt::Display for TauExponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}) * e^(pi i {}/12) * 2^({}/3) * u^{} v^{} tau^{:?}",
            self.coeff, self.root24, self.pow2third, self.pow_u, self.pow_v, self.pow_tau
        )
    }
}

/// Images of `u`, `v`, `tau_0..tau_4`.
#[derive(Debug, Clone, PartialEq)]
pub struct TauState {
    pub u: TauExponent,
    pub v: TauExponent,
    pub tau: [TauExponent; 5],
}

impl TauState {
    pub fn generic() -> Self {
        TauState {
            u: TauExponent::u(),
            v: TauExponent::v(),
            tau: std::array::from_fn(TauExponent::tau),
        }
    }

    /// The image under `g`, reading `q`, `p`, `t` from the state before the
    /// transformation.
    pub fn apply(&self, g: Gen, st: &PVIState) -> Result<TauState, PError> {
        let (q, p, t) = (&st.q, &st.p, &st.t);
        let (u, v, tau) = (&self.u, &self.v, &self.tau);
        let k = TauExponent::constant;
        let mut s = self.clone();
        match g {
            Gen::S0 => {
                s.tau[0] = TauExponent::i_pow(1)
                    .mul(&k(t.sub(q)))
                    .mul(&tau[2])
                    .div(&u.pow(2)?.mul(&v.pow(2)?).mul(&tau[0]))?;
            }
            Gen::S1 => {
                s.tau[1] = TauExponent::i_pow(1).mul(u).mul(v).mul(&tau[2]).div(&tau[1])?;
            }
            Gen::S2 => {
                s.tau[2] = k(p.clone())
                    .mul(&tau[0])
                    .mul(&tau[1])
                    .mul(&tau[3])
                    .mul(&tau[4])
                    .div(&tau[2])?;
            }
            Gen::S3 => {
                s.tau[3] = k(RatZeta::one().sub(q)).mul(&tau[2]).div(&u.mul(&tau[3]))?;
            }
            Gen::S4 => {
                s.tau[4] = k(q.clone()).mul(&tau[2]).div(&v.mul(&tau[4]))?;
            }
            Gen::R1 => {
                s.v = v.scale(&RatZeta::from_int(-1));
                s.tau = [
                    tau[1].clone(),
                    tau[0].clone(),
                    k(q.sub(t)).mul(&tau[2]).div(&u.pow(3)?.mul(&v.pow(3)?))?,
                    tau[4].clone(),
                    tau[3].clone(),
                ];
            }
            Gen::R3 => {
                s.u = u.scale(&RatZeta::from_int(-1));
                s.tau = [
                    tau[3].clone(),
                    tau[4].clone(),
                    TauExponent::i_pow(1)
                        .mul(&k(q.clone()))
                        .mul(&tau[2])
                        .div(&u.mul(&v.pow(2)?))?,
                    tau[0].clone(),
                    tau[1].clone(),
                ];
            }
            Gen::R4 => unreachable!("r4 is applied as r1 then r3"),
        }
        Ok(s)
    }
}

/// `tau_{l_1 l_2 l_3 l_4}`, the image of `tau_0` under the lattice element.
pub fn tau_lattice(l: &LVector) -> Result<TauExponent, PError> {
    Ok(crate::state::state_at(l)?.tau.tau[0].clone())
}

fn binom2(n: i64) -> i64 {
    n * (n - 1) / 2
}

fn binom3(n: i64) -> i64 {
    n * (n - 1) * (n - 2) / 6
}

/// The normalizing monomial `phi_{l_1 l_2 l_3 l_4}`.
pub fn tau_normalizer(l: &LVector) -> TauExponent {
    let [l0, l1, l2, l3, l4] = l.full();
    let sign = binom3(l1 + 1) + binom3(l3 + 1) + binom3(l4 + 1) + (binom2(l3 + 1) + l1 * l3 + l2) * l4;
    let ipow = binom2(l3 + 1) + binom2(l4 + 1) - l1 * l1 * l3 + l1 * l4 * l4 + l2 + l3 + l4;
    let two = -(l0 * (l0 - 1) + l1 * l1 + l3 * l3 + l4 * l4);
    let factors = [
        ("z", l4 * l4 - l0 * (l0 - 1) - (l0 + l2) * (l2 + l4)),
        ("z + 1", l3 * l3 - l0 * (l0 - 1) - (l0 + l2) * (l2 + l3)),
        ("z - 1", (l0 + l2) * (l1 + l4) - (l2 + l3) * (l2 + l3) - l3),
        ("z + 2", -3 * l2 * (l0 + l2 + l4) - (l0 + l4) * (l4 + 1)),
        ("2*z + 1", -l0 * l0 - l1 * (l0 + l1 + 3 * l2 + 1) - l2),
    ];
    let mut coeff = RatZeta::from_rat(Rat::from_integer(2.into()).pow(two as i32));
    for (f, e) in factors {
        let base = parse_ratzeta(f).expect("linear factor");
        coeff = coeff.mul(&base.pow(e).expect("nonzero"));
    }
    // the u, v exponents are halves of even integers
    let hu = (l1 - l3) * (l1 + l3 + 2 * l4 - 1);
    let hv = (l1 - l4) * (l1 + l4 + 2 * l3 - 1);
    debug_assert!(hu % 2 == 0 && hv % 2 == 0);
    let extra = 2 * l2 * (l0 + l2);
    TauExponent {
        coeff,
        root24: (12 * sign + 6 * ipow).rem_euclid(24),
        pow2third: 0,
        pow_u: hu / 2 + extra,
        pow_v: hv / 2 + extra,
        pow_tau: [l0 + 1, l1, l2, l3, l4],
    }
    .reduce()
}
