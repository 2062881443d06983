use ev_lattice::{build, LatticeBox};
use ev_modnum::span::sample_points;
use ev_modnum::tep::{act, modular_t1_t3, reduce_to_upper, x_values};
use ev_modnum::theta::theta;
use ev_modnum::*;
use ev_painleve::LVector;
use ev_tsystem::Limits;

fn point(re: &str, im: &str, digits: u32) -> ModularPoint {
    ModularPoint::parse(re, im, digits).unwrap()
}

#[test]
fn theta_zeros() {
    let mp = point("0.1", "0.8", 60);
    let prec = mp.prec();
    assert!(theta(&Hpc::one(prec), &mp.p).unwrap().is_zero());
    assert!(theta(&mp.p, &mp.p).unwrap().abs() < 1e-40);
}

#[test]
fn zeta_and_t_reference_values() {
    // independent evaluation of the product formulas in another
    // arbitrary-precision system
    let mp = point("0", "1.1", 60);
    let s = modular_suite(&mp).unwrap();
    let prec = mp.prec();
    let zeta = Hpc::parse(prec, "-1.8273145780421751273019457071714923", "0").unwrap();
    let t = Hpc::parse(prec, "0.00050300090610353626346557118012158883", "0").unwrap();
    assert!(s.zeta.rel_diff(&zeta) < 1e-33);
    assert!(s.t.rel_diff(&t) < 1e-33);
}

#[test]
fn t_matches_rational_expression_in_zeta() {
    for (re, im) in [("0", "1.1"), ("0.3", "0.9")] {
        let s = modular_suite(&point(re, im, 60)).unwrap();
        assert!(s.tz_residual < 1e-45, "{re}+{im}i: {}", s.tz_residual);
    }
}

#[test]
fn x_at_half_periods() {
    let mp = point("0.3", "0.9", 60);
    let prec = mp.prec();
    let zeta = mp.zeta().unwrap();
    let x0 = mp.x(&Hpc::zero(prec)).unwrap();
    let expect = &(&zeta * &Hpc::from_int(prec, 2)) + &Hpc::one(prec);
    assert!(x0.rel_diff(&expect) < 1e-50);
    let x3 = mp.x(&Hpc::from_f64(prec, 0.5, 0.0)).unwrap();
    assert!(x3.rel_diff(&Hpc::one(prec)) < 1e-50);
}

#[test]
fn span_ratios_are_constant() {
    let mp = point("0", "1.1", 60);
    let lim = Limits::default();
    let r1 = span_check(1, &mp, &sample_points(2, 5, 0, mp.prec()), &lim).unwrap();
    assert!(r1.deviation < 1e-30, "{}", r1.deviation);
    let alt_over_eik: Vec<Hpc> = r1
        .alt_over_tut
        .iter()
        .zip(&r1.eik_over_tut)
        .map(|(a, e)| a / e)
        .collect();
    assert!(ev_modnum::span::spread(&alt_over_eik) < 1e-30);
    let r2 = span_check(2, &mp, &sample_points(4, 3, 1, mp.prec()), &lim).unwrap();
    assert!(r2.deviation < 1e-30, "{}", r2.deviation);
}

#[test]
fn schrodinger_constant() {
    let mp = point("0", "1.1", 60);
    let lim = Limits::default();
    for (n, k, m) in [(1, [0, 1, 1, -1], 1usize), (1, [0, 0, 0, 0], 2)] {
        let samples = sample_points(m, 5, 2, mp.prec());
        let r = schrodinger_check(n, k, m, &mp, &samples, &lim).unwrap();
        assert!(r.deviation < 1e-15, "{k:?}: {}", r.deviation);
    }
}

#[test]
fn schrodinger_rejects_wrong_m() {
    let mp = point("0", "1.1", 50);
    let samples = sample_points(2, 1, 0, mp.prec());
    let r = schrodinger_check(1, [0, 1, 1, -1], 2, &mp, &samples, &Limits::default());
    assert!(matches!(r, Err(ModError::DomainError(_))));
}

#[test]
fn tau_derivatives_match_hamiltonians() {
    let mp = point("0", "1.2", 40);
    let r = tep_check(&mp).unwrap();
    assert!(r.delta_residuals[0] < 1e-20, "{:?}", r);
    assert!(r.residual < 1e-20, "{:?}", r);
}

#[test]
fn t3_acts_as_one_minus_t() {
    let mp = point("0.3", "0.9", 60);
    let (_, m3) = modular_t1_t3();
    let h = reduce_to_upper(&m3, &mp.tau);
    let moved = mp.at(act(&h, &mp.tau)).unwrap();
    let t = mp.t_theta().unwrap();
    let lhs = moved.t_theta().unwrap();
    let rhs = &Hpc::one(mp.prec()) - &t;
    assert!(lhs.rel_diff(&rhs) < 1e-40);
}

#[test]
fn tau0_is_finite_and_nonzero() {
    let mp = point("0", "1.5", 50);
    let xv = x_values(&mp).unwrap();
    let a = xv.tau[0].abs();
    assert!(a > 1e-10 && a < 1e10);
}

#[test]
fn tau_lattice_identity_cell() {
    let mp = point("0", "1.1", 60);
    let store = build(LatticeBox::cube(1)).unwrap();
    let r = trt_qd_check(&LVector::new([0, 0, 0, 0]), &mp, &store).unwrap();
    assert!(r.trt_residual < 1e-20 && r.qd_residual < 1e-20, "{r:?}");
}

#[test]
fn tau_lattice_four_factor_point() {
    let mp = point("0.3", "0.9", 60);
    let store = build(LatticeBox::cube(4)).unwrap();
    let r = trt_qd_check(&LVector::new([-1, -2, 3, -1]), &mp, &store).unwrap();
    assert!(r.trt_residual < 1e-20 && r.qd_residual < 1e-20, "{r:?}");
}

#[test]
fn missing_lattice_value() {
    let mp = point("0", "1.1", 50);
    let store = build(LatticeBox::cube(1)).unwrap();
    let r = trt_qd_check(&LVector::new([-1, -2, 3, -1]), &mp, &store);
    assert!(matches!(r, Err(ModError::MissingDependency(_))));
}
