use ev_core::{parse_ratzeta, Rat, RatZeta};
use ev_lattice::{build, LatticeBox};
use ev_painleve::checks::{delta_z, d_dt};
use ev_painleve::state::{apply_ti, apply_word, t_of_z};
use ev_painleve::*;

fn rz(s: &str) -> RatZeta {
    parse_ratzeta(s).unwrap()
}

fn r(a: i64, b: i64) -> Rat {
    Rat::new(a.into(), b.into())
}

fn same_point(a: &PVIState, b: &PVIState) -> bool {
    a.alpha == b.alpha && a.q == b.q && a.p == b.p && a.t == b.t
}

#[test]
fn seed_is_algebraic() {
    let s = picard_seed();
    assert!(pa_residual(&s).is_zero());
    assert_eq!(s.alpha.iter().sum::<Rat>(), r(1, 1) - &s.alpha[2]);
    assert_eq!(s.t, rz("z*(z + 2)^3 / (2*z + 1)^3"));
    assert_eq!(q_lattice(&LVector::new([0; 4])).unwrap(), rz("z*(z + 2) / (2*z + 1)"));
}

#[test]
fn chain_rule_matches_delta() {
    let t = t_of_z();
    let f = rz("(z^2 + 3) / (z - 5)");
    let lhs = t.mul(&t.sub(&RatZeta::one())).mul(&d_dt(&f));
    assert_eq!(lhs, delta_z(&f));
}

#[test]
fn generators_are_involutions() {
    let seed = apply_ti(1, 1, &picard_seed()).unwrap();
    for g in [Gen::S0, Gen::S1, Gen::S2, Gen::S3, Gen::S4, Gen::R1, Gen::R3, Gen::R4] {
        let twice = apply_word(&[g, g], &seed).unwrap();
        assert!(same_point(&twice, &seed), "{}", g.name());
    }
    // s1 leaves q, p, t alone
    let s = backlund_apply(Gen::S1, &seed).unwrap();
    assert_eq!((&s.q, &s.p), (&seed.q, &seed.p));
    assert_eq!(s.alpha[1], -seed.alpha[1].clone());
}

#[test]
fn r4_composites_agree() {
    let seed = picard_seed();
    let a = backlund_apply(Gen::R4, &seed).unwrap();
    let b = apply_word(&[Gen::R3, Gen::R1], &seed).unwrap();
    assert!(same_point(&a, &b));
}

#[test]
fn word_lengths() {
    assert_eq!(ti_word(1).len(), 7);
    assert_eq!(ti_word(2).len(), 10);
    assert_eq!(ti_word(3).len(), 7);
    assert_eq!(ti_word(4).len(), 7);
}

#[test]
fn translations_commute_and_invert() {
    let seed = picard_seed();
    let a = apply_ti(3, 1, &apply_ti(1, 1, &seed).unwrap()).unwrap();
    let b = apply_ti(1, 1, &apply_ti(3, 1, &seed).unwrap()).unwrap();
    assert!(same_point(&a, &b));
    for i in 1..=4 {
        let back = apply_ti(i, -1, &apply_ti(i, 1, &seed).unwrap()).unwrap();
        assert_eq!(back, seed, "T_{i}");
    }
}

#[test]
fn parameters_shift_along_translations() {
    let l = LVector::new([1, -1, 2, 0]);
    let s = state_at(&l).unwrap();
    let [l0, l1, l2, l3, l4] = l.full();
    let expect = [r(-l0, 1), r(-l1, 1), r(1, 2) - r(l2, 1), r(-l3, 1), r(-l4, 1)];
    assert_eq!(s.alpha, expect);
}

#[test]
fn printed_solution() {
    let q = q_lattice(&LVector::new([-1, -2, 3, -1])).unwrap();
    assert_eq!(
        q,
        rz("z*(z + 2)*(z^3 + 3*z^2 + 3*z + 5)*(5*z^3 + 15*z^2 + 7*z + 1) / \
            ((2*z + 1)*(5*z^3 + 3*z^2 + 3*z + 1)*(z^3 + 7*z^2 + 15*z + 5))")
    );
}

#[test]
fn painleve_residuals() {
    for l in [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 1], [-1, 0, 1, 0]] {
        let s = state_at(&LVector::new(l)).unwrap();
        assert!(py_residual(&s).unwrap().is_zero(), "{l:?}");
        let (a, b) = ph_residual(&s);
        assert!(a.is_zero() && b.is_zero(), "{l:?}");
        assert!(evi_residual(&s).unwrap().is_zero(), "{l:?}");
    }
}

#[test]
fn evi_on_seed() {
    let s = picard_seed();
    assert!(evi_residual(&s).unwrap().is_zero());
    let s = apply_ti(4, 1, &apply_ti(3, 1, &s).unwrap()).unwrap();
    assert!(evi_residual(&s).unwrap().is_zero());
}

#[test]
fn normalizer_examples() {
    let phi = tau_normalizer(&LVector::new([0; 4]));
    assert!(phi.coeff.is_one());
    assert_eq!(phi.pow_tau, [1, 0, 0, 0, 0]);
    assert_eq!((phi.pow_u, phi.pow_v, phi.root24), (0, 0, 0));
    let phi = tau_normalizer(&LVector::new([1, 0, 0, 0]));
    assert_eq!(phi.pow_tau, [0, 1, 0, 0, 0]);
}

#[test]
fn tau_at_origin_is_tau0() {
    let t = tau_lattice(&LVector::new([0; 4])).unwrap();
    assert_eq!(t, TauExponent::tau(0));
}

#[test]
fn klr_examples() {
    assert_eq!(klr_map(&LVector::new([0; 4])), [0; 4]);
    assert_eq!(klr_map(&LVector::new([-1, -2, 3, 0])), [3, 2, 0, -1]);
    assert_eq!(klr_map(&LVector::new([-1, -1, 3, -2])), [4, 1, -1, 0]);
    let k = [3, 2, 0, -1];
    assert_eq!(klr_map(&klr_inverse(&k).unwrap()), k);
    assert!(klr_inverse(&[1, 0, 0, 0]).is_none());
}

#[test]
fn factorization_of_printed_solution() {
    let l = LVector::new([-1, -2, 3, -1]);
    let idx = tqf_indices(&l);
    assert_eq!(idx, [[3, 2, 0, -1], [4, 1, -1, 0], [3, 2, -1, 0], [4, 1, 0, -1]]);
    let store = build(LatticeBox { lo: [-1; 4], hi: [4, 2, 1, 1] }).unwrap();
    let m = tqf_quotient(&l, &q_lattice(&l).unwrap(), &store).unwrap();
    assert!(m.holds(), "{}", m.quotient);
}

#[test]
fn factorization_small() {
    let store = build(LatticeBox::cube(2)).unwrap();
    for l in [[0, 0, 0, 0], [1, 0, 0, 0]] {
        assert!(factor_match_tqf(&LVector::new(l), &store).unwrap(), "{l:?}");
    }
}

#[test]
fn cusp_orders() {
    let rep = scc_exponents(&LVector::new([-1, -2, 3, -1])).unwrap();
    assert_eq!([rep.q_orders[0], rep.q_orders[3], -rep.q_orders[4]], [1, 1, 1]);
    assert!(rep.holds(), "{rep:?}");
    let rep = scc_exponents(&LVector::new([0; 4])).unwrap();
    assert_eq!([rep.q1_orders[1], rep.q1_orders[2], -rep.q1_orders[4]], [1, 1, 1]);
    assert!(rep.holds(), "{rep:?}");
    let rep = scc_exponents(&LVector::new([1, 0, 0, 0])).unwrap();
    assert_eq!(rep.q_orders[0], 2);
    assert!(rep.holds(), "{rep:?}");
}

#[test]
fn normalized_tau_is_t() {
    let store = build(LatticeBox::cube(2)).unwrap();
    for l in [[0, 0, 0, 0], [1, 0, 0, 0], [-1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, -1], [1, -1, 0, 1]] {
        assert!(tau_factor_check(&LVector::new(l), &store).unwrap(), "{l:?}");
    }
}

#[test]
fn factorization_probe_runs() {
    let lim = ev_tsystem::Limits::default();
    let p0 = spp_probe(0, &lim).unwrap();
    assert!(p0.s.as_ref().unwrap().coeffs().len() == 1);
    let p1 = spp_probe(1, &lim).unwrap();
    let ints = |v: &[i64]| ev_core::PolyZeta::from_i64s(v);
    assert_eq!(p1.s, Some(ints(&[1, 3, 4])));
    assert_eq!(p1.p, Some(ints(&[1, 1, 2])));
    println!("probe n=0: {}, n=1: {}", p0.holds, p1.holds);
}
