use ev_lattice::{build, LatticeBox, LatticeStore};
use ev_painleve::state::apply_ti;
use ev_painleve::*;
use proptest::prelude::*;
use std::sync::OnceLock;

fn store() -> &'static LatticeStore {
    static S: OnceLock<LatticeStore> = OnceLock::new();
    S.get_or_init(|| build(LatticeBox::cube(4)).unwrap())
}

fn small_l() -> impl Strategy<Value = [i64; 4]> {
    prop::array::uniform4(-2i64..=2)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn solutions_satisfy_painleve(l in prop::array::uniform4(-1i64..=1)) {
        let s = state_at(&LVector::new(l)).unwrap();
        prop_assert!(py_residual(&s).unwrap().is_zero());
        prop_assert!(evi_residual(&s).unwrap().is_zero());
    }

    #[test]
    fn translations_commute(i in 1usize..=4, j in 1usize..=4, l in prop::array::uniform4(-1i64..=1)) {
        let s = state_at(&LVector::new(l)).unwrap();
        let a = apply_ti(j, 1, &apply_ti(i, 1, &s).unwrap()).unwrap();
        let b = apply_ti(i, 1, &apply_ti(j, 1, &s).unwrap()).unwrap();
        prop_assert_eq!((a.alpha, a.q, a.p), (b.alpha, b.q, b.p));
    }

    #[test]
    fn cusp_behaviour(l in small_l()) {
        let rep = scc_exponents(&LVector::new(l)).unwrap();
        prop_assert!(rep.holds(), "{:?}", rep);
    }

    #[test]
    fn factorization_holds(l in small_l()) {
        let l = LVector::new(l);
        let mut needed = tqf_indices(&l).to_vec();
        needed.push(klr_map(&l));
        prop_assume!(needed.iter().all(|k| store().get(k).is_some()));
        prop_assert!(factor_match_tqf(&l, store()).unwrap());
        prop_assert!(tau_factor_check(&l, store()).unwrap());
    }

    #[test]
    fn klr_is_invertible(l in prop::array::uniform4(-20i64..=20)) {
        let l = LVector::new(l);
        let k = klr_map(&l);
        prop_assert_eq!(k.iter().sum::<i64>().rem_euclid(2), 0);
        prop_assert_eq!(klr_inverse(&k), Some(l));
    }
}

#[test]
fn normalizer_exponents_integral() {
    for a in -3i64..=3 {
        for b in -3..=3 {
            for c in -3..=3 {
                for d in -3..=3 {
                    let [l1, l3, l4] = [a, c, d];
                    assert_eq!(((l1 - l3) * (l1 + l3 + 2 * l4 - 1)).rem_euclid(2), 0);
                    assert_eq!(((l1 - l4) * (l1 + l4 + 2 * l3 - 1)).rem_euclid(2), 0);
                    let _ = tau_normalizer(&LVector::new([a, b, c, d]));
                }
            }
        }
    }
}
