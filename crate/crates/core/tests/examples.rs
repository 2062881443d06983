use ev_core::{det_bareiss, parse_ratzeta, ExactError, MPolyX, Rat, RatZeta};
use num_traits::Zero;

fn z() -> RatZeta {
    RatZeta::z()
}

#[test]
fn arithmetic_examples() {
    let a = z().div(&RatZeta::linear(1, 2)).unwrap();
    let b = RatZeta::linear(1, 2).div(&z()).unwrap();
    assert!(a.mul(&b).is_one());

    let c = z().add(&RatZeta::one()).sub(&RatZeta::one());
    assert_eq!(c, z());

    // (2z+1)/(z+2) / (2z+1): the oracle is cross-multiplication q * (2z+1) = lhs.
    let lhs = RatZeta::linear(2, 1).div(&RatZeta::linear(1, 2)).unwrap();
    let q = lhs.div(&RatZeta::linear(2, 1)).unwrap();
    assert_eq!(q.mul(&RatZeta::linear(2, 1)), lhs);
    assert_eq!(q, RatZeta::one().div(&RatZeta::linear(1, 2)).unwrap());

    assert_eq!(z().div(&RatZeta::zero()), Err(ExactError::DivisionByZero));
}

#[test]
fn division_examples() {
    let x = |i| MPolyX::var(3, i);
    let v = x(1)
        .sub(&x(0))
        .mul(&x(2).sub(&x(0)))
        .mul(&x(2).sub(&x(1)));
    let q = v.exact_div(&x(2).sub(&x(0))).unwrap();
    // re-multiply oracle
    assert_eq!(q.mul(&x(2).sub(&x(0))), v);
    assert_eq!(q, x(1).sub(&x(0)).mul(&x(2).sub(&x(1))));
}

#[test]
fn determinant_examples() {
    let one = MPolyX::one(2);
    let x = |i| MPolyX::var(2, i);
    let m = vec![vec![x(0), x(1)], vec![x(1), x(0)]];
    // cofactor oracle: x1*x1 - x2*x2
    let oracle = x(0).mul(&x(0)).sub(&x(1).mul(&x(1)));
    assert_eq!(det_bareiss(&m, &one).unwrap(), oracle);
}

#[test]
fn valuation_examples() {
    let f = z().pow(2).unwrap().div(&RatZeta::linear(1, 2)).unwrap();
    assert_eq!(f.valuation_at(&Rat::zero()).unwrap(), 2);
    assert_eq!(f.valuation_at_infinity().unwrap(), -1);
    let seed = parse_ratzeta("-2*z^2*(z - 1)*(z + 1)^2*(2*z + 1) / (z + 2)^2").unwrap();
    assert_eq!(seed.valuation_at(&Rat::zero()).unwrap(), 2);
    assert_eq!(RatZeta::zero().valuation_at(&Rat::zero()), Err(ExactError::ZeroFunction));
}
