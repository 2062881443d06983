//! Versioned JSON files for a [`LatticeStore`].

use std::path::Path;

use ev_core::{IntPoly, RatZeta};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::store::{Entry, LatticeBox, LatticeStore, Provenance};
use crate::{LatticeError, K};

pub const FORMAT_VERSION: &str = "ev-lattice/1";

#[derive(Serialize, Deserialize)]
struct FileEntry {
    k: K,
    num: Vec<String>,
    den: Vec<String>,
    provenance: Provenance,
}

#[derive(Serialize, Deserialize)]
struct File {
    version: String,
    bounds: LatticeBox,
    entries: Vec<FileEntry>,
}

fn coeffs(p: &IntPoly) -> Vec<String> {
    p.coeffs().iter().map(|c| c.to_string()).collect()
}

fn parse_coeffs(cs: &[String]) -> Result<IntPoly, LatticeError> {
    let v = cs
        .iter()
        .map(|s| {
            s.parse::<BigInt>()
                .map_err(|e| LatticeError::Format(format!("bad coefficient {s:?}: {e}")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(IntPoly::from_coeffs(v))
}

pub fn to_json(store: &LatticeStore) -> String {
    let file = File {
        version: FORMAT_VERSION.into(),
        bounds: store.bounds,
        entries: store
            .entries
            .iter()
            .map(|(k, e)| {
                let (num, den) = e.value.to_int_fraction();
                FileEntry {
                    k: *k,
                    num: coeffs(&num),
                    den: coeffs(&den),
                    provenance: e.provenance,
                }
            })
            .collect(),
    };
    serde_json::to_string_pretty(&file).expect("serializable")
}

pub fn from_json(text: &str) -> Result<LatticeStore, LatticeError> {
    let file: File =
        serde_json::from_str(text).map_err(|e| LatticeError::Format(e.to_string()))?;
    if file.version != FORMAT_VERSION {
        return Err(LatticeError::Format(format!(
            "version {:?}, expected {FORMAT_VERSION:?}",
            file.version
        )));
    }
    let mut store = LatticeStore::new(file.bounds);
    for e in file.entries {
        let value = RatZeta::ratio(parse_coeffs(&e.num)?, parse_coeffs(&e.den)?)
            .map_err(|err| LatticeError::Format(format!("entry {:?}: {err}", e.k)))?;
        if store.entries.contains_key(&e.k) {
            return Err(LatticeError::Format(format!("duplicate entry {:?}", e.k)));
        }
        store.entries.insert(
            e.k,
            Entry {
                value,
                provenance: e.provenance,
            },
        );
    }
    Ok(store)
}

pub fn persist(store: &LatticeStore, path: &Path) -> Result<(), LatticeError> {
    std::fs::write(path, to_json(store)).map_err(|e| LatticeError::Io(e.to_string()))
}

pub fn load(path: &Path) -> Result<LatticeStore, LatticeError> {
    let text = std::fs::read_to_string(path).map_err(|e| LatticeError::Io(e.to_string()))?;
    from_json(&text)
}
