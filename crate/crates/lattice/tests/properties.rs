use std::sync::OnceLock;

use ev_lattice::persist::{from_json, to_json};
use ev_lattice::{build, build_with_order, toda_step, LatticeBox, LatticeStore, Order, Provenance};
use ev_tsystem::symmetry::{transform, Symmetry};
use ev_tsystem::xfrac::XFrac;
use ev_tsystem::{tk, KIndex, Limits};

fn box2() -> &'static LatticeStore {
    static S: OnceLock<LatticeStore> = OnceLock::new();
    S.get_or_init(|| build(LatticeBox::cube(2)).unwrap())
}

#[test]
fn box_two_matches_determinants() {
    let s = box2();
    assert_eq!(s.len(), LatticeBox::cube(2).cells().len());
    let mut recursion = 0;
    for (k, e) in &s.entries {
        assert_eq!(e.value, tk(*k, &Limits::default()).unwrap(), "{k:?}");
        recursion += (e.provenance == Provenance::Recursion) as usize;
    }
    assert!(recursion > 0);
}

#[test]
fn traversal_order_does_not_matter() {
    let other = build_with_order(LatticeBox::cube(2), Order::ReverseSymmetryFirst).unwrap();
    for (k, e) in &box2().entries {
        assert_eq!(other.get(k), Some(&e.value), "{k:?}");
    }
}

#[test]
fn complement_closure() {
    let s = box2();
    for (k, e) in &s.entries {
        let idx = KIndex::m_zero(*k).unwrap();
        for sym in [Symmetry::ComplementZscc, Symmetry::ComplementEsp] {
            let src = sym.source_index(&idx).unwrap();
            if let Some(v) = s.get(&src.k) {
                let img = transform(sym, &idx, &XFrac::constant(v.clone())).unwrap();
                assert_eq!(img.as_ratzeta().as_ref(), Some(&e.value), "{k:?} {}", sym.name());
            }
        }
    }
}

#[test]
fn box_two_round_trip() {
    let s = box2();
    assert_eq!(&from_json(&to_json(s)).unwrap(), s);
}

#[test]
fn toda_coefficients_are_low_degree() {
    let mut s = LatticeStore::new(LatticeBox::cube(6));
    for k in [[0, 0, 0, 0], [0, 0, 1, -1], [1, 0, 0, -1]] {
        for m in 0..=3 {
            let kk = [k[0] + m, k[1] + m, k[2], k[3]];
            s.insert(kk, tk(kk, &Limits::default()).unwrap(), Provenance::Determinant)
                .unwrap();
        }
        for n in 1..=2 {
            let (_, cn) = toda_step(k, n, &s).unwrap();
            let deg = cn.to_polyzeta().unwrap().degree().unwrap_or(0);
            assert!(deg <= 4, "{k:?} n={n}: {cn}");
        }
    }
}

proptest::proptest! {
    #![proptest_config(proptest::prelude::ProptestConfig::with_cases(64))]

    #[test]
    fn recursions_hold_in_box(k in proptest::array::uniform4(-2i64..=2), b in proptest::bool::ANY) {
        let dir = if b { ev_lattice::Direction::Kma } else { ev_lattice::Direction::Kmb };
        match ev_lattice::rec_residual(dir, k, box2()) {
            Ok(r) => proptest::prop_assert!(r.is_zero(), "{:?} {:?}", k, dir),
            Err(ev_lattice::LatticeError::MissingDependency(_)) => {}
            Err(e) => panic!("{e}"),
        }
    }
}
