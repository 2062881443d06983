use ev_core::{parse_mpoly, parse_ratzeta, MPolyX, Rat, RatZeta};
use ev_tsystem::cusp::{cusp_order, predicted_order_at_zero, Cusp};
use ev_tsystem::families::{f_poly, h_poly, phi_affine, s_poly};
use ev_tsystem::symmetry::{apply_symmetry, Symmetry};
use ev_tsystem::trig::trig_limit_check;
use ev_tsystem::weights::{weight, weight_at, xi, Weight};
use ev_tsystem::xfrac::XFrac;
use ev_tsystem::{big_t, pdet_ad, split_t, tk, tnk, yseq, KIndex, Limits, TError};

fn lim() -> Limits {
    Limits::default()
}

fn rz(s: &str) -> RatZeta {
    parse_ratzeta(s).unwrap()
}

fn vars(n: usize) -> Vec<MPolyX> {
    (0..n).map(|i| MPolyX::var(n, i)).collect()
}

#[test]
fn weight_examples() {
    let zero = RatZeta::zero();
    assert!(weight_at(Weight::G, &zero, &zero).is_zero());
    let x = vars(2);
    assert_eq!(weight(Weight::G, &x[0], &x[1]), weight(Weight::G, &x[1], &x[0]));

    // oracle: the defining formula evaluated with field operations
    let [a, b, _, _] = xi();
    let z = RatZeta::z();
    let int = RatZeta::from_int;
    let direct = RatZeta::linear(1, 2)
        .mul(&a)
        .mul(&b)
        .mul(&a.add(&b))
        .sub(&z.mul(&a.mul(&a).add(&b.mul(&b))))
        .sub(
            &int(2)
                .mul(&z.mul(&z).add(&z.mul(&int(3))).add(&int(1)))
                .mul(&a)
                .mul(&b),
        )
        .add(&z.mul(&RatZeta::linear(2, 1)).mul(&a.add(&b)));
    assert_eq!(weight_at(Weight::G, &a, &b), direct);
    assert_eq!(direct, rz("2*z^2*(z + 1)^2 / (z + 2)^2"));
}

#[test]
fn big_t_examples() {
    assert!(big_t(0, &lim()).unwrap().is_one());
    assert!(big_t(1, &lim()).unwrap().is_one());
}

/// The first displayed four-variable formula (left block `x1, x2`).
fn display_left_two() -> MPolyX {
    let x = vars(4);
    let g = |i: usize, j: usize| weight(Weight::G, &x[i], &x[j]);
    let q = |i: usize, j: usize| weight(Weight::Q, &x[i], &x[j]);
    let d = |i: usize, j: usize| x[i].sub(&x[j]);
    let t1 = d(3, 0).mul(&d(2, 1)).mul(&g(0, 3)).mul(&g(1, 2)).mul(&q(0, 2)).mul(&q(1, 3));
    let t2 = d(2, 0).mul(&d(3, 1)).mul(&g(0, 2)).mul(&g(1, 3)).mul(&q(0, 3)).mul(&q(1, 2));
    t1.sub(&t2)
        .exact_div(&d(1, 0).mul(&d(3, 2)))
        .unwrap()
}

/// The second displayed formula, with the right/right weight entering as
/// `-R` (the printed sign makes it disagree with the first display).
fn display_one_one() -> MPolyX {
    let x = vars(4);
    let g = |i: usize, j: usize| weight(Weight::G, &x[i], &x[j]);
    let q = |i: usize, j: usize| weight(Weight::Q, &x[i], &x[j]);
    let d = |i: usize, j: usize| x[i].sub(&x[j]);
    let r34 = weight(Weight::R, &x[2], &x[3]).neg();
    d(3, 0)
        .mul(&d(2, 1))
        .mul(&g(0, 3))
        .mul(&g(1, 2))
        .mul(&r34)
        .sub(&g(0, 1).mul(&g(2, 3)).mul(&q(0, 3)).mul(&q(1, 2)))
}

#[test]
fn split_t_four_variables() {
    let a = split_t(2, 2, 0, &lim()).unwrap();
    assert_eq!(a, display_left_two());
    // split (1,1) has left variables x1, x3; relabel them to x1, x2
    let b = split_t(2, 1, 1, &lim()).unwrap().permute(&[0, 2, 1, 3]);
    assert_eq!(b, display_one_one());
    assert_eq!(a, b);
}

#[test]
fn split_t_two_variables() {
    let x = vars(2);
    let q = weight(Weight::Q, &x[0], &x[1]);
    assert_eq!(split_t(1, 1, 0, &lim()).unwrap(), q);
    // the other split with one left variable: left is x2
    assert_eq!(split_t(1, 0, 1, &lim()).unwrap().permute(&[1, 0]), q);
}

#[test]
fn tnk_printed_example() {
    let idx = KIndex::new([-2, 1, 0, 0], 0).unwrap();
    let v = tnk(&idx, &lim()).unwrap().value;
    let num = parse_mpoly(
        "(2*z + 1)^2*(z + 2)/z^2*((z^2 + z + 1)*x1*(2*z + 1 - x1) + z*(2*z + 1)^2)",
        Some(1),
    )
    .unwrap();
    let expect = XFrac::new(num, vec![(RatZeta::zero(), 3)]).unwrap();
    assert_eq!(v, expect);
    assert_eq!(
        v.to_string(),
        "(((-4*z^5 - 16*z^4 - 25*z^3 - 23*z^2 - 11*z - 2) / (z^2))*x1^2 \
         + ((8*z^6 + 36*z^5 + 66*z^4 + 71*z^3 + 45*z^2 + 15*z + 2) / (z^2))*x1 \
         + ((16*z^5 + 64*z^4 + 88*z^3 + 56*z^2 + 17*z + 2) / (z))) / (x1^3)"
    );
}

#[test]
fn tnk_small_examples() {
    let idx = KIndex::with_m([1, 0, 0, 0], 1).unwrap();
    let v = tnk(&idx, &lim()).unwrap().value;
    assert!(v.is_polynomial() && v.numerator().is_one());

    // T_1^(0,0,0,-1)(x1,x2,x3) = (1 - z) S_1 / (2 prod (x_j - z))
    let idx = KIndex::new([0, 0, 0, -1], 1).unwrap();
    let t = tnk(&idx, &lim()).unwrap().value;
    let s = s_poly(1, &lim()).unwrap();
    let z = RatZeta::z();
    let rhs = XFrac::new(
        s.scale(&RatZeta::linear(-1, 1).div(&RatZeta::from_int(2)).unwrap()),
        vec![(z, 1)],
    )
    .unwrap();
    assert_eq!(t, rhs);
}

#[test]
fn tk_examples() {
    assert!(tk([0, 0, 0, 0], &lim()).unwrap().is_one());
    assert!(tk([1, -1, 0, 0], &lim()).unwrap().is_one());
    assert_eq!(
        tk([0, -1, -1, 0], &lim()).unwrap(),
        rz("-2*z^2*(z - 1)*(z + 1)^2*(2*z + 1) / (z + 2)^2")
    );
    assert_eq!(tk([1, 0, 0, 0], &lim()), Err(TError::ParityError(1)));
}

/// Determinant values of the four factors of a Painleve VI solution; they
/// carry the printed cubic factors.
#[test]
fn large_index_values() {
    let cases = [
        ([4, 1, -1, 0], "-4*(z - 1)*(2*z + 1)*(z^3 + 3*z^2 + 3*z + 5) / (z + 1)"),
        (
            [3, 2, 0, -1],
            "4*z^2*(z - 1)*(2*z + 1)*(5*z^3 + 15*z^2 + 7*z + 1) / ((z + 1)*(z + 2)^2)",
        ),
        (
            [4, 1, 0, -1],
            "4*z^2*(z - 1)*(2*z + 1)^2*(5*z^3 + 3*z^2 + 3*z + 1) / ((z + 1)*(z + 2))",
        ),
        (
            [3, 2, -1, 0],
            "-4*z^2*(z - 1)*(z^3 + 7*z^2 + 15*z + 5) / ((z + 1)*(z + 2))",
        ),
    ];
    for (k, expect) in cases {
        assert_eq!(tk(k, &lim()).unwrap(), rz(expect), "{k:?}");
    }
}

#[test]
fn yseq_examples() {
    let r = |k: i64| Rat::from_integer(k.into());
    assert_eq!(yseq(0), r(1));
    assert_eq!(yseq(1), r(1));
    assert_eq!(yseq(2), r(6));
    assert_eq!(yseq(-1), r(2));
}

#[test]
fn symmetry_examples() {
    let idx = KIndex::with_m([0, 0, 0, 0], 2).unwrap();
    let img = apply_symmetry(Symmetry::Swap01Invert, &idx, &lim()).unwrap();
    assert!(img.value.numerator().is_one());

    let t0 = KIndex::m_zero([0, 0, 0, 0]).unwrap();
    let img = apply_symmetry(Symmetry::ComplementZscc, &t0, &lim()).unwrap();
    assert!(img.value.as_ratzeta().unwrap().is_one());

    let idx = KIndex::m_zero([3, 2, 0, -1]).unwrap();
    let img = apply_symmetry(Symmetry::ComplementEsp, &idx, &lim()).unwrap();
    assert_eq!(img.value, tnk(&idx, &lim()).unwrap().value);
}

#[test]
fn cusp_examples() {
    let seed = KIndex::m_zero([0, -1, -1, 0]).unwrap();
    assert_eq!(predicted_order_at_zero(&seed), 2);
    assert_eq!(cusp_order(&seed, Cusp::Zero, &lim()).unwrap(), (2, 2));
    let one = KIndex::new([0, 0, 0, 0], 1).unwrap();
    assert_eq!(cusp_order(&one, Cusp::Zero, &lim()).unwrap(), (0, 0));
    let idx = KIndex::m_zero([0, 2, 0, 0]).unwrap();
    let (measured, predicted) = cusp_order(&idx, Cusp::Zero, &lim()).unwrap();
    assert_eq!(measured, predicted);
}

#[test]
fn trig_examples() {
    for (k, n) in [([0, 0, 0, 0], 1), ([2, 2, 0, 0], 2), ([1, 1, 1, 1], 2)] {
        let idx = KIndex::new(k, n).unwrap();
        assert!(trig_limit_check(&idx, &lim()).unwrap(), "{idx}");
    }
}

#[test]
fn family_examples() {
    // H_2 = 1 and T_1 = 1, so both sides of the phi relation are 1
    assert!(h_poly(1, &lim()).unwrap().is_one());
    let _ = phi_affine();

    let f1 = f_poly(1, &lim()).unwrap();
    assert_eq!(f1.degree(), Some(0));

    // S_1 = 2 prod (x_j - z) / (1 - z) T_1^(0,0,0,-1)
    let s1 = s_poly(1, &lim()).unwrap();
    let t = tnk(&KIndex::new([0, 0, 0, -1], 1).unwrap(), &lim()).unwrap().value;
    let lhs = t
        .scale(&RatZeta::from_int(2).div(&RatZeta::linear(-1, 1)).unwrap())
        .mul_linear_power(&RatZeta::z(), 1)
        .unwrap();
    assert!(lhs.is_polynomial());
    assert_eq!(lhs.numerator(), &s1);
}

#[test]
fn pdet_examples() {
    let (a, d) = pdet_ad();
    let xs = xi();
    assert!(a.eval(&[xs[0].clone()]).is_zero());
    assert!(a.eval(&[xs[3].clone()]).is_zero());
    assert!(a.eval(&[xs[1].clone()]).is_zero());
    assert_eq!(
        RatZeta::from_polyzeta(&d),
        rz("2*z*(z - 1)*(z + 1)*(z + 2)*(2*z + 1)")
    );
}
