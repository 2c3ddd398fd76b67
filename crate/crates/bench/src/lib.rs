//! Fixtures shared by the benchmarks.

use afftl_core::{enumerate::enumerate_levels, BasisElement, GroupConfig};

/// Every basis element of length exactly `len`.
pub fn level(n: usize, len: usize) -> Vec<BasisElement> {
    let cfg = GroupConfig::new(n).expect("valid rank");
    enumerate_levels(&cfg, len, usize::MAX, 1)
        .expect("enumeration within cap")
        .pop()
        .unwrap_or_default()
}
