use ev_core::{parse_ratzeta, RatZeta};
use ev_tsystem::symmetry::{transform, Symmetry};
use ev_tsystem::xfrac::XFrac;
use ev_tsystem::KIndex;

use crate::recursion::{rec_solve, Corner, Direction, RecStep};
use crate::store::{LatticeBox, LatticeStore, Provenance};
use crate::{LatticeError, K};

/// `t^(0,0,0,0) = t^(1,-1,0,0) = 1` and the value at `(0,-1,-1,0)`.
pub fn seeds() -> Vec<(K, RatZeta)> {
    vec![
        ([0, 0, 0, 0], RatZeta::one()),
        ([1, -1, 0, 0], RatZeta::one()),
        (
            [0, -1, -1, 0],
            parse_ratzeta("-2*z^2*(z - 1)*(z + 1)^2*(2*z + 1) / (z + 2)^2").expect("seed"),
        ),
    ]
}

/// Traversal order of the cells within one sweep.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Order {
    /// Shells of increasing `max |k_j|`, lexicographic inside a shell,
    /// recursion before symmetry.
    #[default]
    Shells,
    /// Reverse order inside each shell, symmetry before recursion.
    ReverseSymmetryFirst,
}

const SYMMETRIES: [Symmetry; 4] = [
    Symmetry::Swap01Invert,
    Symmetry::Swap02Mobius,
    Symmetry::Swap01Swap23Reflect,
    Symmetry::ComplementZscc,
];

const STEPS: [(Direction, Corner); 4] = [
    (Direction::Kma, Corner::High),
    (Direction::Kmb, Corner::High),
    (Direction::Kma, Corner::Low),
    (Direction::Kmb, Corner::Low),
];

fn by_recursion(store: &LatticeStore, k: K) -> Result<Option<RatZeta>, LatticeError> {
    for (dir, corner) in STEPS {
        let step = RecStep::solving(dir, corner, k);
        match rec_solve(&step, store) {
            Ok(v) => return Ok(Some(v)),
            Err(LatticeError::MissingDependency(_)) => continue,
            Err(e) => return Err(e),
        }
    }
    Ok(None)
}

fn by_symmetry(store: &LatticeStore, k: K) -> Result<Option<RatZeta>, LatticeError> {
    let idx = KIndex::m_zero(k)?;
    for s in SYMMETRIES {
        let src = s.source_index(&idx)?;
        if let Some(v) = store.get(&src.k) {
            let img = transform(s, &idx, &XFrac::constant(v.clone()))?;
            return Ok(img.as_ratzeta());
        }
    }
    Ok(None)
}

fn sweep(store: &mut LatticeStore, cells: &[K], order: Order) -> Result<bool, LatticeError> {
    let mut progress = false;
    for &k in cells {
        if store.get(&k).is_some() {
            continue;
        }
        let found = match order {
            Order::Shells => match by_recursion(store, k)? {
                Some(v) => Some((v, Provenance::Recursion)),
                None => by_symmetry(store, k)?.map(|v| (v, Provenance::Symmetry)),
            },
            Order::ReverseSymmetryFirst => match by_symmetry(store, k)? {
                Some(v) => Some((v, Provenance::Symmetry)),
                None => by_recursion(store, k)?.map(|v| (v, Provenance::Recursion)),
            },
        };
        if let Some((v, p)) = found {
            store.insert(k, v, p)?;
            progress = true;
        }
    }
    Ok(progress)
}

fn attempt(work: LatticeBox, order: Order) -> Result<LatticeStore, LatticeError> {
    let mut store = LatticeStore::new(work);
    for (k, v) in seeds() {
        store.insert(k, v, Provenance::Seed)?;
    }
    let mut cells = work.cells();
    if order == Order::ReverseSymmetryFirst {
        cells.sort_by_key(|k| (crate::store::shell(k), std::cmp::Reverse(*k)));
    }
    while sweep(&mut store, &cells, order)? {}
    Ok(store)
}

/// Populates every even-sum cell of `bounds`.
pub fn build(bounds: LatticeBox) -> Result<LatticeStore, LatticeError> {
    build_with_order(bounds, Order::Shells)
}

/// As [`build`], with an explicit traversal order. If some cell is not
/// reached, the box is enlarged by one and the build retried once.
pub fn build_with_order(bounds: LatticeBox, order: Order) -> Result<LatticeStore, LatticeError> {
    let mut work = bounds;
    for retry in 0..2 {
        let full = attempt(work, order)?;
        let missing: Vec<K> = bounds
            .cells()
            .into_iter()
            .filter(|k| full.get(k).is_none())
            .collect();
        if missing.is_empty() {
            let mut store = LatticeStore::new(bounds);
            store.entries = full
                .entries
                .into_iter()
                .filter(|(k, _)| bounds.contains(k))
                .collect();
            return Ok(store);
        }
        if retry == 1 {
            return Err(LatticeError::Unreachable(missing.len(), missing[0]));
        }
        work = work.enlarge(1);
    }
    unreachable!()
}
