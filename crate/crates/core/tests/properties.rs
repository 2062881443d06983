use ev_core::{
    det_bareiss, det_cofactor, det_minors, frac, parse_mpoly, parse_ratzeta, IntPoly, MPolyX,
    Rat, RatZeta,
};
use proptest::prelude::*;

fn int_poly() -> impl Strategy<Value = IntPoly> {
    prop::collection::vec(-6i64..=6, 1..4).prop_map(|c| IntPoly::from_i64s(&c))
}

fn ratzeta() -> impl Strategy<Value = RatZeta> {
    (int_poly(), int_poly(), -5i64..=5, 1i64..=4).prop_map(|(n, d, a, b)| {
        let d = if d.is_zero() { IntPoly::one() } else { d };
        RatZeta::ratio(n, d).unwrap().scale(&frac(a, b))
    })
}

fn nonzero_ratzeta() -> impl Strategy<Value = RatZeta> {
    ratzeta().prop_filter("nonzero", |f| !f.is_zero())
}

fn mpoly(nvars: usize) -> impl Strategy<Value = MPolyX> {
    let term = (
        prop::collection::vec(0u32..=2, nvars),
        prop_oneof![
            (-4i64..=4).prop_map(RatZeta::from_int),
            (-2i64..=2, -2i64..=2).prop_map(|(a, b)| RatZeta::linear(a, b)),
        ],
    );
    prop::collection::vec(term, 0..4).prop_map(move |ts| MPolyX::from_terms(nvars, ts))
}

fn square(n: usize) -> impl Strategy<Value = Vec<Vec<MPolyX>>> {
    prop::collection::vec(prop::collection::vec(mpoly(2), n), n)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn ratzeta_round_trips_through_fraction(f in ratzeta()) {
        let back = RatZeta::from_polyzeta(&f.numerator())
            .div(&RatZeta::from_polyzeta(&f.denominator()))
            .unwrap();
        prop_assert_eq!(&back, &f);
        prop_assert_eq!(parse_ratzeta(&f.to_string()).unwrap(), f);
    }

    #[test]
    fn field_laws(a in ratzeta(), b in ratzeta(), c in nonzero_ratzeta()) {
        prop_assert_eq!(a.add(&b).sub(&b), a.clone());
        prop_assert_eq!(a.mul(&c).div(&c).unwrap(), a.clone());
        prop_assert_eq!(a.add(&b).mul(&c), a.mul(&c).add(&b.mul(&c)));
    }

    #[test]
    fn valuation_is_additive(f in nonzero_ratzeta(), g in nonzero_ratzeta(), p in -2i64..=2) {
        let pt = Rat::from_integer(p.into());
        let fg = f.mul(&g);
        prop_assert_eq!(
            fg.valuation_at(&pt).unwrap(),
            f.valuation_at(&pt).unwrap() + g.valuation_at(&pt).unwrap()
        );
        prop_assert_eq!(
            fg.valuation_at_infinity().unwrap(),
            f.valuation_at_infinity().unwrap() + g.valuation_at_infinity().unwrap()
        );
    }

    #[test]
    fn exact_division_recovers_quotient(q in mpoly(3), b in mpoly(3)) {
        prop_assume!(!b.is_zero());
        prop_assert_eq!(q.mul(&b).exact_div(&b).unwrap(), q);
    }

    #[test]
    fn mpoly_text_round_trip(p in mpoly(3)) {
        prop_assert_eq!(parse_mpoly(&p.to_string(), Some(3)).unwrap(), p);
    }

    #[test]
    fn determinants_agree(m in (0usize..=4).prop_flat_map(square)) {
        let one = MPolyX::one(2);
        let cof = det_cofactor(&m, &one);
        prop_assert_eq!(det_bareiss(&m, &one).unwrap(), cof.clone());
        prop_assert_eq!(det_minors(&m, &one, |a, b| a.mul(b)), cof);
    }
}
