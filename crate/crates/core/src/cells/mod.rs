//! Cell structure of the monomial basis: the a-function, cancellable
//! descents, the set `Q` of cell representatives, and the labels that
//! identify two-sided, left and right cells.

mod census;
mod involution;

pub use census::{census, census_by_horizon, CensusRow};
pub use involution::{
    involution_decompose, involution_decompose_with, is_involution, right_cell_involution,
    InvolutionDecomposition, RightCellInvolution,
};

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::{fc_evaluate, BasisElement};
use crate::coxeter::{GenSet, Generator, GroupConfig, Word};
use crate::diagram::{AffineDiagram, Arc};
use crate::error::{Error, Result};
use crate::straighten::End;

/// Default length bound for [`a_bruteforce`].
pub const BRUTEFORCE_BOUND: usize = 12;

/// One of the two maximal elements of `P` (n even): odd or even nodes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum MSet {
    M1,
    M2,
}

impl MSet {
    pub fn other(self) -> Self {
        match self {
            MSet::M1 => MSet::M2,
            MSet::M2 => MSet::M1,
        }
    }

    pub fn nodes(self, cfg: &GroupConfig) -> Option<GenSet> {
        let (m1, m2) = cfg.maximal_alternating()?;
        Some(match self {
            MSet::M1 => m1,
            MSet::M2 => m2,
        })
    }
}

/// Name of a two-sided cell: `Small(k)` is the class of all `ι(T)` with
/// `#T = k < n/2`; `MElem` is a single alternating product of `ι(M1)`,
/// `ι(M2)` with `factors` factors, starting with `start`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum TwoSidedLabel {
    Small(usize),
    MElem { start: MSet, factors: usize },
}

impl fmt::Display for TwoSidedLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TwoSidedLabel::Small(k) => write!(f, "Small({k})"),
            TwoSidedLabel::MElem { start, factors } => write!(f, "MElem({start:?},{factors})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CellLabels {
    pub two_sided: TwoSidedLabel,
    /// Short arcs on the bottom row; fixed along a left cell.
    #[serde(rename = "leftPattern")]
    pub left_pattern: BTreeSet<Arc>,
    /// Short arcs on the top row; fixed along a right cell.
    #[serde(rename = "rightPattern")]
    pub right_pattern: BTreeSet<Arc>,
    pub loops: u32,
    pub a_value: usize,
}

impl CellLabels {
    pub fn left_cell(&self) -> (TwoSidedLabel, &BTreeSet<Arc>) {
        (self.two_sided, &self.left_pattern)
    }

    pub fn right_cell(&self) -> (TwoSidedLabel, &BTreeSet<Arc>) {
        (self.two_sided, &self.right_pattern)
    }
}

/// Number of short horizontal edges on the top row of the diagram.
pub fn a_value(b: &BasisElement) -> usize {
    b.diagram().short_edge_count()
}

/// How `ι(U)` must occur in a reduced word to count.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum FactorReading {
    /// As consecutive letters.
    #[default]
    Contiguous,
    /// As a not necessarily consecutive subsequence.
    Subword,
}

/// The a-function by definition: the largest `#U`, `U ∈ P`, such that `ι(U)`
/// occurs in some word of the commutation class of `w`.
pub fn a_bruteforce(
    cfg: &GroupConfig,
    w: &Word,
    bound: usize,
    reading: FactorReading,
) -> Result<usize> {
    if w.len() > bound {
        return Err(Error::BoundExceeded {
            len: w.len(),
            bound,
        });
    }
    if reading == FactorReading::Subword {
        let supp = w.support();
        return Ok(cfg
            .independent_sets()
            .iter()
            .filter(|u| u.is_subset(&supp))
            .map(|u| u.len())
            .max()
            .unwrap_or(0));
    }
    let mut best = 0;
    for word in cfg.commutation_class(w) {
        let l = word.letters();
        for start in 0..l.len() {
            let mut block: Vec<Generator> = Vec::new();
            for &g in &l[start..] {
                if block.iter().any(|&h| !cfg.commute(h, g)) {
                    break;
                }
                block.push(g);
            }
            best = best.max(block.len());
        }
    }
    Ok(best)
}

fn shorten(cfg: &GroupConfig, b: &BasisElement, s: Generator, end: End) -> Option<Word> {
    match end {
        End::Left => cfg.strip_front(b.word(), s),
        End::Right => cfg.strip_back(b.word(), s),
    }
}

/// If `s` is a descent of `w` on the given side, the first neighbour `t`
/// of `s` with `E_t·E_w = E_{sw}` (left) or `E_w·E_t = E_{ws}` (right).
pub fn cancellable(
    cfg: &GroupConfig,
    b: &BasisElement,
    s: Generator,
    end: End,
) -> Result<Option<Generator>> {
    cfg.check(s as usize)?;
    let short = shorten(cfg, b, s, end).ok_or_else(|| {
        Error::Precondition(format!("s{s} is not a {end:?} descent of {}", b.word()))
    })?;
    let target = fc_evaluate(cfg, &short)?.element;
    for t in cfg.neighbours(s) {
        let gen = AffineDiagram::generator(cfg.n(), t as usize)?;
        let r = match end {
            End::Left => gen.multiply(b.diagram())?,
            End::Right => b.diagram().multiply(&gen)?,
        };
        if r.contractible_loops == 0 && r.diagram == *target.diagram() {
            return Ok(Some(t));
        }
    }
    Ok(None)
}

/// One recorded cancellation: `s` removed from `end`, cancelled by `t`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cancellation {
    pub s: Generator,
    pub t: Generator,
    pub end: End,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reduction {
    pub q: BasisElement,
    pub trace: Vec<Cancellation>,
}

/// All cancellable descents of `b`, left side first, increasing `s`.
pub fn cancellable_descents(cfg: &GroupConfig, b: &BasisElement) -> Result<Vec<Cancellation>> {
    let mut out = Vec::new();
    for (end, descents) in [
        (End::Left, cfg.left_descents(b.word())),
        (End::Right, cfg.right_descents(b.word())),
    ] {
        for s in descents {
            if let Some(t) = cancellable(cfg, b, s, end)? {
                out.push(Cancellation { s, t, end });
            }
        }
    }
    Ok(out)
}

fn apply(cfg: &GroupConfig, b: &BasisElement, c: &Cancellation) -> Result<BasisElement> {
    let short = shorten(cfg, b, c.s, c.end).expect("cancellation of a descent");
    Ok(fc_evaluate(cfg, &short)?.element)
}

/// Cancels descents until none is cancellable, always taking the first
/// option in [`cancellable_descents`] order.
pub fn reduce_to_q(cfg: &GroupConfig, b: &BasisElement) -> Result<Reduction> {
    reduce_to_q_with(cfg, b, |_| 0)
}

/// [`reduce_to_q`] with a caller-supplied choice among the available
/// cancellations (the closure returns an index into the options).
pub fn reduce_to_q_with(
    cfg: &GroupConfig,
    b: &BasisElement,
    mut choose: impl FnMut(&[Cancellation]) -> usize,
) -> Result<Reduction> {
    let mut cur = b.clone();
    let mut trace = Vec::new();
    loop {
        let options = cancellable_descents(cfg, &cur)?;
        if options.is_empty() {
            return Ok(Reduction { q: cur, trace });
        }
        let c = options[choose(&options).min(options.len() - 1)];
        cur = apply(cfg, &cur, &c)?;
        trace.push(c);
    }
}

/// No descent on either side is cancellable.
pub fn q_membership(cfg: &GroupConfig, b: &BasisElement) -> Result<bool> {
    Ok(cancellable_descents(cfg, b)?.is_empty())
}

/// Label of `b` if it has one of the shapes `ι(T)` or an alternating
/// `ι(M_a)ι(M_b)···` product; `None` otherwise. Does not test membership
/// in `Q`.
pub fn q_shape(cfg: &GroupConfig, b: &BasisElement) -> Option<TwoSidedLabel> {
    let n = cfg.n();
    let supp = b.word().support();
    let m = cfg.maximal_alternating();
    let which = |set: &GenSet| -> Option<MSet> {
        let (m1, m2) = m.as_ref()?;
        if set == m1 {
            Some(MSet::M1)
        } else if set == m2 {
            Some(MSet::M2)
        } else {
            None
        }
    };
    if cfg.is_independent(&supp) && b.length() == supp.len() {
        if 2 * supp.len() < n {
            return Some(TwoSidedLabel::Small(supp.len()));
        }
        return which(&supp).map(|start| TwoSidedLabel::MElem { start, factors: 1 });
    }
    m.as_ref()?;
    let groups = cfg.left_decomposition(b.word()).groups;
    let start = which(groups.first()?)?;
    let alternating = groups.iter().enumerate().all(|(i, g)| {
        let want = if i % 2 == 0 { start } else { start.other() };
        which(g) == Some(want)
    });
    alternating.then_some(TwoSidedLabel::MElem {
        start,
        factors: groups.len(),
    })
}

/// Two-sided label of an element of `Q`.
pub fn classify_q(cfg: &GroupConfig, q: &BasisElement) -> Result<TwoSidedLabel> {
    if !q_membership(cfg, q)? {
        return Err(Error::Precondition(format!("{} is not in Q", q.word())));
    }
    q_shape(cfg, q).ok_or_else(|| {
        Error::Internal(format!(
            "{} is in Q but has neither ι(T) nor M shape",
            q.word()
        ))
    })
}

/// `(ι(M_start) ι(M_other))···` with `factors` factors.
pub fn m_element(cfg: &GroupConfig, start: MSet, factors: usize) -> Result<BasisElement> {
    let mut word = Word::empty();
    let mut cur = start;
    for _ in 0..factors {
        let nodes = cur.nodes(cfg).ok_or_else(|| {
            Error::Precondition("M elements need an even number of generators".into())
        })?;
        word = word.concat(&Word::iota(&nodes));
        cur = cur.other();
    }
    BasisElement::from_reduced_word(cfg, &word)
}

/// Every element of `Q` of length at most `max_len`: all `ι(T)`, `T ∈ P`,
/// and (n even) the M elements.
pub fn q_elements(cfg: &GroupConfig, max_len: usize) -> Result<Vec<BasisElement>> {
    let mut out = Vec::new();
    for t in cfg.independent_sets() {
        if t.len() <= max_len && 2 * t.len() < cfg.n() {
            out.push(BasisElement::from_reduced_word(cfg, &Word::iota(&t))?);
        }
    }
    if cfg.n().is_multiple_of(2) {
        let half = cfg.n() / 2;
        for factors in 1..=(max_len / half) {
            for start in [MSet::M1, MSet::M2] {
                out.push(m_element(cfg, start, factors)?);
            }
        }
    }
    Ok(out)
}

/// All `(s, q')` with `q' ∈ Q` and `E_q = E_s E_{q'} E_s`.
pub fn neighbours(cfg: &GroupConfig, q: &BasisElement) -> Result<Vec<(Generator, BasisElement)>> {
    if !q_membership(cfg, q)? {
        return Err(Error::Precondition(format!("{} is not in Q", q.word())));
    }
    let mut out = Vec::new();
    // Each factor E_s moves the length by at most one without a loop.
    for cand in q_elements(cfg, q.length() + 2)? {
        for s in cfg.generators() {
            let gen = AffineDiagram::generator(cfg.n(), s as usize)?;
            let left = gen.multiply(cand.diagram())?;
            let both = left.diagram.multiply(&gen)?;
            if left.contractible_loops + both.contractible_loops == 0
                && both.diagram == *q.diagram()
            {
                out.push((s, cand.clone()));
            }
        }
    }
    Ok(out)
}

pub fn labels(cfg: &GroupConfig, b: &BasisElement) -> Result<CellLabels> {
    let q = reduce_to_q(cfg, b)?.q;
    let two_sided = classify_q(cfg, &q)?;
    let d = b.diagram();
    Ok(CellLabels {
        two_sided,
        left_pattern: d.bottom_arcs(),
        right_pattern: d.top_arcs(),
        loops: d.loops(),
        a_value: a_value(b),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::GenSet;

    fn cfg(n: usize) -> GroupConfig {
        GroupConfig::new(n).unwrap()
    }

    fn b(n: usize, w: &[Generator]) -> BasisElement {
        BasisElement::from_reduced_word(&cfg(n), &Word::new(w.to_vec())).unwrap()
    }

    fn arcs(v: &[(i64, i64)]) -> BTreeSet<Arc> {
        v.iter().map(|&(left, right)| Arc { left, right }).collect()
    }

    #[test]
    fn a_value_examples() {
        let c = cfg(5);
        for (w, a) in [
            (vec![1, 3], 2),
            (vec![], 0),
            (vec![1, 3, 2, 4], 2),
            (vec![2], 1),
        ] {
            let word = Word::new(w);
            assert_eq!(a_value(&b(5, word.letters())), a);
            assert_eq!(
                a_bruteforce(&c, &word, BRUTEFORCE_BOUND, FactorReading::Contiguous).unwrap(),
                a
            );
        }
        let long = Word::new(vec![1; 13]);
        assert!(a_bruteforce(&c, &long, BRUTEFORCE_BOUND, FactorReading::Contiguous).is_err());
    }

    #[test]
    fn subword_reading_can_exceed_factor_reading() {
        // s2·s1·s3·s2 at n = 4: contiguous blocks have size <= 2, and {1,3}
        // is the only independent pair in the support either way.
        let c = cfg(4);
        let w = Word::from([2, 1, 3, 2]);
        assert_eq!(
            a_bruteforce(&c, &w, 12, FactorReading::Contiguous).unwrap(),
            2
        );
        assert_eq!(a_bruteforce(&c, &w, 12, FactorReading::Subword).unwrap(), 2);
        // s1·s2·s3 at n = 5: {1,3} ⊆ support but never adjacent in a reduced word.
        let c = cfg(5);
        let w = Word::from([1, 2, 3]);
        assert_eq!(
            a_bruteforce(&c, &w, 12, FactorReading::Contiguous).unwrap(),
            1
        );
        assert_eq!(a_bruteforce(&c, &w, 12, FactorReading::Subword).unwrap(), 2);
    }

    #[test]
    fn cancellability_examples() {
        let c = cfg(5);
        let w = b(5, &[1, 3, 2, 4]);
        assert_eq!(cancellable(&c, &w, 3, End::Left).unwrap(), Some(4));
        assert_eq!(cancellable(&c, &w, 2, End::Right).unwrap(), Some(1));
        assert_eq!(cancellable(&c, &b(5, &[1]), 1, End::Left).unwrap(), None);
        assert!(cancellable(&c, &w, 2, End::Left).is_err());
    }

    #[test]
    fn reduce_examples() {
        let c = cfg(4);
        assert_eq!(reduce_to_q(&c, &b(4, &[1, 2])).unwrap().q, b(4, &[2]));
        let r = reduce_to_q(&c, &b(4, &[1, 3])).unwrap();
        assert!(r.trace.is_empty());
        let r = reduce_to_q(&c, &b(4, &[2, 1, 3, 2])).unwrap();
        assert_eq!(a_value(&r.q), 2);
    }

    #[test]
    fn classify_examples() {
        assert_eq!(
            classify_q(&cfg(5), &b(5, &[1, 3])).unwrap(),
            TwoSidedLabel::Small(2)
        );
        assert_eq!(
            classify_q(&cfg(4), &b(4, &[1, 3])).unwrap(),
            TwoSidedLabel::MElem {
                start: MSet::M1,
                factors: 1
            }
        );
        assert_eq!(
            classify_q(&cfg(4), &b(4, &[1, 3, 2, 4])).unwrap(),
            TwoSidedLabel::MElem {
                start: MSet::M1,
                factors: 2
            }
        );
        assert!(classify_q(&cfg(4), &b(4, &[1, 2])).is_err());
    }

    #[test]
    fn neighbour_examples() {
        let c = cfg(5);
        let q = b(5, &[1, 3]);
        let found = neighbours(&c, &q).unwrap();
        assert!(
            found.iter().any(|(_, q2)| *q2 == b(5, &[1, 4])),
            "{found:?}"
        );
        for (s, q2) in &found {
            let back = neighbours(&c, q2).unwrap();
            assert!(
                back.iter().any(|(_, q3)| q3 == &q),
                "no way back from {} via s{s}",
                q2.word()
            );
        }
        let c4 = cfg(4);
        assert!(neighbours(&c4, &b(4, &[1, 3])).unwrap().is_empty());
        assert!(neighbours(&c4, &b(4, &[1, 3, 2, 4])).unwrap().is_empty());
        assert!(neighbours(&c4, &b(4, &[])).unwrap().is_empty());
    }

    #[test]
    fn label_examples() {
        let l = labels(&cfg(5), &b(5, &[1, 3])).unwrap();
        assert_eq!(l.two_sided, TwoSidedLabel::Small(2));
        assert_eq!(l.left_pattern, arcs(&[(1, 2), (3, 4)]));
        assert_eq!(l.right_pattern, l.left_pattern);
        assert_eq!(l.loops, 0);

        let l = labels(&cfg(5), &b(5, &[1, 2])).unwrap();
        assert_eq!(l.two_sided, TwoSidedLabel::Small(1));
        assert_eq!(l.right_pattern, arcs(&[(1, 2)]));
        assert_eq!(l.left_pattern, arcs(&[(2, 3)]));

        let l = labels(&cfg(4), &b(4, &[1, 3, 2, 4])).unwrap();
        assert_eq!(l.loops, 1);
        assert_eq!(
            l.two_sided,
            TwoSidedLabel::MElem {
                start: MSet::M1,
                factors: 2
            }
        );
    }

    #[test]
    fn q_list_for_small_rank() {
        let c = cfg(4);
        let qs = q_elements(&c, 4).unwrap();
        // ∅, four singletons, then ι(M1), ι(M2), and the two length-4 products.
        assert_eq!(qs.len(), 5 + 2 + 2);
        for q in &qs {
            assert!(q_membership(&c, q).unwrap(), "{}", q.word());
        }
        let _ = GenSet::new();
    }
}
