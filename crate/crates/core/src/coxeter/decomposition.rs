use serde::{Deserialize, Serialize};

use super::{GenSet, Generator, GroupConfig, Word};

/// Subgraph of the Coxeter graph induced on a set of nodes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InducedSubgraph {
    pub nodes: GenSet,
    pub edges: Vec<(Generator, Generator)>,
}

impl InducedSubgraph {
    pub fn new(cfg: &GroupConfig, nodes: GenSet) -> Self {
        let mut edges = Vec::new();
        for &a in &nodes {
            for &b in &nodes {
                if a < b && cfg.is_adjacent(a, b) {
                    edges.push((a, b));
                }
            }
        }
        Self { nodes, edges }
    }
}

/// `w = ι(G_1)···ι(G_m)` with each `G_k` the left descent set of what
/// remains (or the right descent set, read from the right, for the right
/// decomposition). `graphs[k]` is induced on `G_k ∪ G_{k+1}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decomposition {
    pub groups: Vec<GenSet>,
    pub graphs: Vec<InducedSubgraph>,
}

impl Decomposition {
    /// Concatenation `ι(G_1)···ι(G_m)`.
    pub fn word(&self) -> Word {
        self.groups
            .iter()
            .fold(Word::empty(), |acc, g| acc.concat(&Word::iota(g)))
    }

    fn with_graphs(cfg: &GroupConfig, groups: Vec<GenSet>) -> Self {
        let graphs = groups
            .windows(2)
            .map(|pair| InducedSubgraph::new(cfg, pair[0].union(&pair[1]).copied().collect()))
            .collect();
        Self { groups, graphs }
    }
}

impl GroupConfig {
    /// Left decomposition of a reduced fully commutative word.
    pub fn left_decomposition(&self, w: &Word) -> Decomposition {
        let mut rest = w.clone();
        let mut groups = Vec::new();
        while !rest.is_empty() {
            let g = self.left_descents(&rest);
            for &s in &g {
                rest = self.strip_front(&rest, s).expect("descent is movable");
            }
            groups.push(g);
        }
        Decomposition::with_graphs(self, groups)
    }

    /// Right decomposition, groups listed left to right so that
    /// `word()` still reads `w`; the last group is the right descent set.
    pub fn right_decomposition(&self, w: &Word) -> Decomposition {
        let mut rest = w.clone();
        let mut groups = Vec::new();
        while !rest.is_empty() {
            let g = self.right_descents(&rest);
            for &s in &g {
                rest = self.strip_back(&rest, s).expect("descent is movable");
            }
            groups.push(g);
        }
        groups.reverse();
        Decomposition::with_graphs(self, groups)
    }
}
