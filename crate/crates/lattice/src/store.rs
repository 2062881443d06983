use std::collections::BTreeMap;

use ev_core::RatZeta;
use serde::{Deserialize, Serialize};

use ev_tsystem::TError;

use crate::{LatticeError, K};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Provenance {
    Seed,
    Recursion,
    Symmetry,
    Determinant,
}

/// Per-coordinate bounds `lo[j] <= k_j <= hi[j]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct LatticeBox {
    pub lo: K,
    pub hi: K,
}

impl LatticeBox {
    /// `|k_j| <= r` for all `j`.
    pub fn cube(r: i64) -> Self {
        LatticeBox { lo: [-r; 4], hi: [r; 4] }
    }

    pub fn contains(&self, k: &K) -> bool {
        (0..4).all(|j| self.lo[j] <= k[j] && k[j] <= self.hi[j])
    }

    pub fn enlarge(&self, by: i64) -> Self {
        LatticeBox {
            lo: self.lo.map(|x| x - by),
            hi: self.hi.map(|x| x + by),
        }
    }

    /// Every even-sum index in the box, by shells of increasing `max |k_j|`
    /// and lexicographically within a shell.
    pub fn cells(&self) -> Vec<K> {
        let mut out = Vec::new();
        for a in self.lo[0]..=self.hi[0] {
            for b in self.lo[1]..=self.hi[1] {
                for c in self.lo[2]..=self.hi[2] {
                    for d in self.lo[3]..=self.hi[3] {
                        if (a + b + c + d).rem_euclid(2) == 0 {
                            out.push([a, b, c, d]);
                        }
                    }
                }
            }
        }
        out.sort_by_key(|k| (shell(k), *k));
        out
    }
}

pub fn shell(k: &K) -> i64 {
    k.iter().map(|x| x.abs()).max().unwrap_or(0)
}

#[derive(Debug, Clone, PartialEq)]
pub struct Entry {
    pub value: RatZeta,
    pub provenance: Provenance,
}

/// Append-only map from indices to nonzero values of `t^(k)`.
#[derive(Debug, Clone, PartialEq)]
pub struct LatticeStore {
    pub entries: BTreeMap<K, Entry>,
    pub bounds: LatticeBox,
}

impl LatticeStore {
    pub fn new(bounds: LatticeBox) -> Self {
        LatticeStore {
            entries: BTreeMap::new(),
            bounds,
        }
    }

    pub fn get(&self, k: &K) -> Option<&RatZeta> {
        self.entries.get(k).map(|e| &e.value)
    }

    pub fn provenance(&self, k: &K) -> Option<Provenance> {
        self.entries.get(k).map(|e| e.provenance)
    }

    pub fn require(&self, k: &K) -> Result<&RatZeta, LatticeError> {
        self.get(k).ok_or(LatticeError::MissingDependency(*k))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Inserts a value; a second write for the same index must agree.
    pub fn insert(&mut self, k: K, value: RatZeta, provenance: Provenance) -> Result<(), LatticeError> {
        if k.iter().sum::<i64>().rem_euclid(2) != 0 {
            return Err(LatticeError::OddIndex(k));
        }
        if value.is_zero() {
            return Err(TError::ZeroFunction(format!("t^{k:?}")).into());
        }
        if let Some(old) = self.entries.get(&k) {
            return if old.value == value {
                Ok(())
            } else {
                Err(LatticeError::Conflict(k))
            };
        }
        self.entries.insert(k, Entry { value, provenance });
        Ok(())
    }
}
