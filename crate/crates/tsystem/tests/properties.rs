use ev_tsystem::families::f_poly;
use ev_tsystem::symmetry::{transform, Symmetry};
use ev_tsystem::weights::xi;
use ev_tsystem::{big_t, split_t, tnk, KIndex, Limits};
use proptest::prelude::*;

fn lim() -> Limits {
    Limits::default()
}

#[test]
fn big_t_is_symmetric() {
    for n in 0..=2 {
        let t = big_t(n, &lim()).unwrap();
        for i in 0..2 * n {
            for j in i + 1..2 * n {
                assert!(t.is_symmetric_in(i, j), "n={n} ({i} {j})");
            }
        }
    }
}

#[test]
fn big_t_three_transpositions() {
    let t = big_t(3, &lim()).unwrap();
    for (i, j) in [(0, 1), (0, 5), (2, 3), (1, 4), (4, 5)] {
        assert!(t.is_symmetric_in(i, j), "({i} {j})");
    }
}

/// With the left variables relabelled to come first, the split
/// determinant depends only on the number of left variables.
#[test]
fn split_depends_only_on_left_size() {
    for n in 1..=2usize {
        for size in 0..=2 * n {
            let mut seen = None;
            for k in 0..=n {
                if size < k || size - k > n {
                    continue;
                }
                let l = size - k;
                let order: Vec<usize> = (0..k)
                    .chain(n..n + l)
                    .chain(k..n)
                    .chain(n + l..2 * n)
                    .collect();
                let mut perm = vec![0; 2 * n];
                for (p, &old) in order.iter().enumerate() {
                    perm[old] = p;
                }
                let t = split_t(n, k, l, &lim()).unwrap().permute(&perm);
                match &seen {
                    None => seen = Some(t),
                    Some(s) => assert_eq!(&t, s, "n={n} k={k} l={l}"),
                }
            }
        }
    }
}

/// Indices with entries in `-1..=1` and `m` in `1..=2`.
fn small_index() -> impl Strategy<Value = (KIndex, usize)> {
    (prop::array::uniform4(-1i64..=1), 1usize..=2, 0usize..4)
        .prop_filter_map("m >= 1", |(k, m, j)| {
            KIndex::with_m(k, m).ok().map(|idx| (idx, j))
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    /// Fixing the last variable at a half period adds one to that entry.
    #[test]
    fn specialization_consistency((idx, j) in small_index()) {
        let v = tnk(&idx, &lim()).unwrap().value;
        let mut k = idx.k;
        k[j] += 1;
        let up = KIndex::new(k, idx.n).unwrap();
        let direct = tnk(&up, &lim()).unwrap().value;
        prop_assert_eq!(v.specialize_last(&xi()[j]).unwrap(), direct);
    }

    #[test]
    fn values_never_vanish(k in prop::array::uniform4(-2i64..=2), m in 0usize..=2) {
        if let Ok(idx) = KIndex::with_m(k, m) {
            prop_assert!(!tnk(&idx, &lim()).unwrap().value.is_zero());
        }
    }

    #[test]
    fn swap01_invert_is_involution(k in prop::array::uniform4(-1i64..=1), m in 0usize..=2) {
        if let Ok(idx) = KIndex::with_m(k, m) {
            let v = tnk(&idx, &lim()).unwrap().value;
            let s = Symmetry::Swap01Invert;
            let once = transform(s, &s.source_index(&idx).unwrap(), &v).unwrap();
            prop_assert_eq!(transform(s, &idx, &once).unwrap(), v);
        }
    }
}

#[test]
fn f_degrees() {
    for n in 1..=3 {
        let f = f_poly(n, &lim()).unwrap();
        assert_eq!(f.degree(), Some((n * (n - 1) / 2) as usize));
    }
}
