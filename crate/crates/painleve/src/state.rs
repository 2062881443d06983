//! States `(alpha, q, p, t)` as images under the Picard realization, and the
//! Backlund generators acting on them.

use ev_core::{parse_ratzeta, Rat, RatZeta};

use crate::tau::TauState;
use crate::PError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Gen {
    S0,
    S1,
    S2,
    S3,
    S4,
    R1,
    R3,
    R4,
}

impl Gen {
    pub fn name(self) -> &'static str {
        match self {
            Gen::S0 => "s0",
            Gen::S1 => "s1",
            Gen::S2 => "s2",
            Gen::S3 => "s3",
            Gen::S4 => "s4",
            Gen::R1 => "r1",
            Gen::R3 => "r3",
            Gen::R4 => "r4",
        }
    }
}

/// Parameters `alpha_0..alpha_4` and the images of `q`, `p`, `t`, together
/// with the images of `u`, `v` and the tau functions.
#[derive(Debug, Clone, PartialEq)]
pub struct PVIState {
    pub alpha: [Rat; 5],
    pub q: RatZeta,
    pub p: RatZeta,
    pub t: RatZeta,
    pub tau: TauState,
}

/// `l_1..l_4` with `l_0 = -l_1 - 2 l_2 - l_3 - l_4`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LVector {
    pub l: [i64; 4],
}

impl LVector {
    pub fn new(l: [i64; 4]) -> Self {
        LVector { l }
    }

    pub fn l0(&self) -> i64 {
        let [l1, l2, l3, l4] = self.l;
        -l1 - 2 * l2 - l3 - l4
    }

    /// `(l_0, l_1, l_2, l_3, l_4)`
    pub fn full(&self) -> [i64; 5] {
        let [l1, l2, l3, l4] = self.l;
        [self.l0(), l1, l2, l3, l4]
    }

    pub fn shifted(&self, j: usize, by: i64) -> Self {
        let mut l = self.l;
        l[j] += by;
        LVector { l }
    }
}

/// `t = z (z+2)^3 / (2z+1)^3`
pub fn t_of_z() -> RatZeta {
    parse_ratzeta("z*(z + 2)^3 / (2*z + 1)^3").expect("constant")
}

/// The Picard solution with `alpha = (0, 0, 1/2, 0, 0)`.
pub fn picard_seed() -> PVIState {
    let zero = Rat::from_integer(0.into());
    PVIState {
        alpha: [
            zero.clone(),
            zero.clone(),
            Rat::new(1.into(), 2.into()),
            zero.clone(),
            zero,
        ],
        q: parse_ratzeta("z*(z + 2) / (2*z + 1)").expect("constant"),
        p: parse_ratzeta("(2*z + 1) / (2*(1 - z)*(z + 2))").expect("constant"),
        t: t_of_z(),
        tau: TauState::generic(),
    }
}

fn nonzero(x: RatZeta, what: &str, g: Gen) -> Result<RatZeta, PError> {
    if x.is_zero() {
        Err(PError::DegenerateState(format!("{what} vanishes under {}", g.name())))
    } else {
        Ok(x)
    }
}

fn c(a: &Rat) -> RatZeta {
    RatZeta::from_rat(a.clone())
}

/// The image of `state` under one generator.
pub fn backlund_apply(g: Gen, state: &PVIState) -> Result<PVIState, PError> {
    if g == Gen::R4 {
        return backlund_apply(Gen::R3, &backlund_apply(Gen::R1, state)?);
    }
    let [a0, a1, a2, a3, a4] = state.alpha.clone();
    let (q, p, t) = (&state.q, &state.p, &state.t);
    let one = RatZeta::one();
    let mut s = state.clone();
    match g {
        Gen::S0 => {
            let qt = nonzero(q.sub(t), "q - t", g)?;
            s.alpha = [-a0.clone(), a1, a2 + &a0, a3, a4];
            s.p = p.sub(&c(&a0).div(&qt)?);
        }
        Gen::S1 => {
            s.alpha = [a0, -a1.clone(), a2 + &a1, a3, a4];
        }
        Gen::S2 => {
            let pp = nonzero(p.clone(), "p", g)?;
            s.alpha = [&a0 + &a2, &a1 + &a2, -a2.clone(), &a3 + &a2, &a4 + &a2];
            s.q = q.add(&c(&a2).div(&pp)?);
        }
        Gen::S3 => {
            let q1 = nonzero(q.sub(&one), "q - 1", g)?;
            s.alpha = [a0, a1, a2 + &a3, -a3.clone(), a4];
            s.p = p.sub(&c(&a3).div(&q1)?);
        }
        Gen::S4 => {
            let qq = nonzero(q.clone(), "q", g)?;
            s.alpha = [a0, a1, a2 + &a4, a3, -a4.clone()];
            s.p = p.sub(&c(&a4).div(&qq)?);
        }
        Gen::R1 => {
            let qt = nonzero(q.sub(t), "q - t", g)?;
            let tt1 = nonzero(t.mul(&t.sub(&one)), "t (t - 1)", g)?;
            s.alpha = [a1, a0, a2.clone(), a4, a3];
            s.q = t.mul(&q.sub(&one)).div(&qt)?;
            s.p = t
                .sub(q)
                .mul(&qt.mul(p).add(&c(&a2)))
                .div(&tt1)?;
        }
        Gen::R3 => {
            nonzero(q.clone(), "q", g)?;
            nonzero(t.clone(), "t", g)?;
            s.alpha = [a3, a4, a2.clone(), a0, a1];
            s.q = t.div(q)?;
            s.p = q.mul(&p.mul(q).add(&c(&a2))).div(t)?.neg();
        }
        Gen::R4 => unreachable!(),
    }
    s.tau = state.tau.apply(g, state)?;
    Ok(s)
}

/// The defining word of `T_i`, applied left to right.
pub fn ti_word(i: usize) -> Vec<Gen> {
    use Gen::*;
    match i {
        1 => vec![R1, S1, S2, S3, S4, S2, S1],
        2 => vec![S0, S2, S1, S3, S4, S2, S1, S3, S4, S2],
        3 => vec![R3, S3, S2, S1, S4, S2, S3],
        4 => vec![R4, S4, S2, S1, S3, S2, S4],
        _ => panic!("T_{i} is not defined"),
    }
}

pub fn apply_word(word: &[Gen], state: &PVIState) -> Result<PVIState, PError> {
    word.iter().try_fold(state.clone(), |s, &g| backlund_apply(g, &s))
}

/// `T_i^e` for any integer `e`; the inverse runs the word backwards.
pub fn apply_ti(i: usize, e: i64, state: &PVIState) -> Result<PVIState, PError> {
    let mut w = ti_word(i);
    if e < 0 {
        w.reverse();
    }
    (0..e.abs()).try_fold(state.clone(), |s, _| apply_word(&w, &s))
}

/// The image of the seed under `T_1^{l_1} T_2^{l_2} T_3^{l_3} T_4^{l_4}`.
pub fn state_at(l: &LVector) -> Result<PVIState, PError> {
    (0..4).try_fold(picard_seed(), |s, i| apply_ti(i + 1, l.l[i], &s))
}

/// `q_{l_1 l_2 l_3 l_4}`
pub fn q_lattice(l: &LVector) -> Result<RatZeta, PError> {
    Ok(state_at(l)?.q)
}
