use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use super::{CellLabels, TwoSidedLabel};
use crate::coxeter::GroupConfig;
use crate::diagram::Arc;
use crate::enumerate::{enumerate_levels, max_elements, records};
use crate::error::Result;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusRow {
    pub two_sided: TwoSidedLabel,
    pub left_cells: usize,
    pub right_cells: usize,
    pub elements_seen: usize,
}

fn rows<'a>(labels: impl Iterator<Item = &'a CellLabels>) -> Vec<CensusRow> {
    type Acc = (BTreeSet<BTreeSet<Arc>>, BTreeSet<BTreeSet<Arc>>, usize);
    let mut by: BTreeMap<TwoSidedLabel, Acc> = BTreeMap::new();
    for l in labels {
        let e = by.entry(l.two_sided).or_default();
        e.0.insert(l.left_pattern.clone());
        e.1.insert(l.right_pattern.clone());
        e.2 += 1;
    }
    by.into_iter()
        .map(|(two_sided, (l, r, c))| CensusRow {
            two_sided,
            left_cells: l.len(),
            right_cells: r.len(),
            elements_seen: c,
        })
        .collect()
}

/// Cells met among elements of length `<= max_len`.
pub fn census(cfg: &GroupConfig, max_len: usize, workers: usize) -> Result<Vec<CensusRow>> {
    Ok(census_by_horizon(cfg, &[max_len], workers)?.remove(0).1)
}

/// One census per horizon, sharing a single enumeration.
pub fn census_by_horizon(
    cfg: &GroupConfig,
    horizons: &[usize],
    workers: usize,
) -> Result<Vec<(usize, Vec<CensusRow>)>> {
    let top = horizons.iter().copied().max().unwrap_or(0);
    let elements: Vec<_> = enumerate_levels(cfg, top, max_elements(), workers)?
        .into_iter()
        .flatten()
        .collect();
    let recs = records(cfg, &elements, workers)?;
    Ok(horizons
        .iter()
        .map(|&h| {
            (
                h,
                rows(recs.iter().filter(|r| r.length <= h).map(|r| &r.labels)),
            )
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn census_small_rank() {
        let cfg = GroupConfig::new(4).unwrap();
        let rows = census(&cfg, 4, 0).unwrap();
        let row = |t: TwoSidedLabel| rows.iter().find(|r| r.two_sided == t).unwrap().clone();
        assert_eq!(row(TwoSidedLabel::Small(0)).elements_seen, 1);
        let one = row(TwoSidedLabel::Small(1));
        assert_eq!((one.left_cells, one.right_cells), (4, 4));
    }
}
