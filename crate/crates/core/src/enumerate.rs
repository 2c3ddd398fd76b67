//! Breadth-first enumeration of the monomial basis by length.

use std::collections::HashSet;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::BasisElement;
use crate::cells::{is_involution, labels, CellLabels};
use crate::coxeter::{GroupConfig, Word};
use crate::diagram::AffineDiagram;
use crate::error::{Error, Result};

pub const DEFAULT_MAX_ELEMENTS: usize = 10_000_000;
pub const MAX_ELEMENTS_ENV: &str = "AFFTL_MAX_ELEMENTS";

/// Element cap, overridable through `AFFTL_MAX_ELEMENTS`.
pub fn max_elements() -> usize {
    std::env::var(MAX_ELEMENTS_ENV)
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_MAX_ELEMENTS)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerationRecord {
    pub word: Word,
    pub key: String,
    pub length: usize,
    pub labels: CellLabels,
    #[serde(rename = "isInvolution")]
    pub is_involution: bool,
}

pub fn hex(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}

fn with_pool<T: Send>(workers: usize, f: impl FnOnce() -> T + Send) -> Result<T> {
    if workers == 0 {
        return Ok(f());
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| Error::Internal(e.to_string()))?;
    Ok(pool.install(f))
}

/// Basis elements of length `<= max_len`, grouped by length, each level
/// sorted by diagram key. `workers == 0` uses the global thread pool.
pub fn enumerate_levels(
    cfg: &GroupConfig,
    max_len: usize,
    cap: usize,
    workers: usize,
) -> Result<Vec<Vec<BasisElement>>> {
    with_pool(workers, || levels(cfg, max_len, cap))?
}

fn levels(cfg: &GroupConfig, max_len: usize, cap: usize) -> Result<Vec<Vec<BasisElement>>> {
    let n = cfg.n();
    let gens: Vec<AffineDiagram> = cfg
        .generators()
        .map(|s| AffineDiagram::generator(n, s as usize))
        .collect::<Result<_>>()?;
    let mut out = vec![vec![BasisElement::identity(n)?]];
    let mut total = 1usize;
    let mut seen: HashSet<Vec<u8>> = HashSet::new();
    for len in 0..max_len {
        let found: Vec<(Vec<u8>, AffineDiagram)> = out[len]
            .par_iter()
            .map(|b| -> Result<Vec<_>> {
                let mut v = Vec::new();
                for g in &gens {
                    let r = b.diagram().multiply(g)?;
                    if r.contractible_loops == 0 && r.diagram.length()? == len + 1 {
                        v.push((r.diagram.canonical_key(), r.diagram));
                    }
                }
                Ok(v)
            })
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .flatten()
            .collect();
        let mut fresh: Vec<(Vec<u8>, AffineDiagram)> = found
            .into_iter()
            .filter(|(k, _)| seen.insert(k.clone()))
            .collect();
        fresh.sort_by(|a, b| a.0.cmp(&b.0));
        total += fresh.len();
        if total > cap {
            return Err(Error::CapExceeded(cap));
        }
        let next = fresh
            .into_par_iter()
            .map(|(_, d)| BasisElement::from_diagram(d))
            .collect::<Result<Vec<_>>>()?;
        out.push(next);
    }
    Ok(out)
}

pub fn enumerate(cfg: &GroupConfig, max_len: usize, workers: usize) -> Result<Vec<BasisElement>> {
    Ok(enumerate_levels(cfg, max_len, max_elements(), workers)?
        .into_iter()
        .flatten()
        .collect())
}

pub fn records(
    cfg: &GroupConfig,
    elements: &[BasisElement],
    workers: usize,
) -> Result<Vec<EnumerationRecord>> {
    with_pool(workers, || {
        elements
            .par_iter()
            .map(|b| {
                Ok(EnumerationRecord {
                    word: b.word().clone(),
                    key: hex(&b.key()),
                    length: b.length(),
                    labels: labels(cfg, b)?,
                    is_involution: is_involution(cfg, b),
                })
            })
            .collect()
    })?
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::fc_counts_by_permutation;

    #[test]
    fn counts_match_permutation_oracle() {
        for n in 3..=6 {
            let cfg = GroupConfig::new(n).unwrap();
            let lv = enumerate_levels(&cfg, 6, DEFAULT_MAX_ELEMENTS, 0).unwrap();
            let counts: Vec<usize> = lv.iter().map(|l| l.len()).collect();
            assert_eq!(counts, fc_counts_by_permutation(&cfg, 6), "n = {n}");
        }
    }

    #[test]
    fn worker_count_does_not_change_output() {
        let cfg = GroupConfig::new(5).unwrap();
        let a = enumerate_levels(&cfg, 5, DEFAULT_MAX_ELEMENTS, 1).unwrap();
        let b = enumerate_levels(&cfg, 5, DEFAULT_MAX_ELEMENTS, 3).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn cap_is_enforced() {
        let cfg = GroupConfig::new(5).unwrap();
        assert!(matches!(
            enumerate_levels(&cfg, 6, 20, 0),
            Err(Error::CapExceeded(20))
        ));
    }
}
