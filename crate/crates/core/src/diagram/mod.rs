//! Affine n-diagrams: periodic non-crossing matchings of two rows of nodes
//! on a cylinder, plus a count of non-contractible loops.
//!
//! Nodes live on the universal cover (integer positions). A diagram stores
//! the partner of each node in the window `1..=n` on both rows; the rest
//! follows by periodicity, `partner(x + n) = partner(x) + n`.

mod product;
pub mod render;

pub use product::ProductResult;

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::coxeter::{GenSet, Generator, GroupConfig};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Side {
    #[serde(rename = "T")]
    Top,
    #[serde(rename = "B")]
    Bottom,
}

impl Side {
    pub fn flip(self) -> Self {
        match self {
            Side::Top => Side::Bottom,
            Side::Bottom => Side::Top,
        }
    }
}

/// A node on the universal cover.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct NodeRef {
    pub side: Side,
    pub pos: i64,
}

impl NodeRef {
    pub fn top(pos: i64) -> Self {
        Self {
            side: Side::Top,
            pos,
        }
    }

    pub fn bottom(pos: i64) -> Self {
        Self {
            side: Side::Bottom,
            pos,
        }
    }

    pub fn shift(self, by: i64) -> Self {
        Self {
            side: self.side,
            pos: self.pos + by,
        }
    }

    /// Residue class in `1..=n`.
    pub fn class(self, n: usize) -> usize {
        ((self.pos - 1).rem_euclid(n as i64) + 1) as usize
    }

    /// Position along the boundary of the strip: the top row read left to
    /// right, then the bottom row read right to left. Two chords of the strip
    /// cross iff their endpoints interleave in this order.
    fn boundary_key(self) -> (u8, i64) {
        match self.side {
            Side::Top => (0, self.pos),
            Side::Bottom => (1, -self.pos),
        }
    }
}

impl fmt::Display for NodeRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self.side {
            Side::Top => 'T',
            Side::Bottom => 'B',
        };
        write!(f, "{s}{}", self.pos)
    }
}

/// One representative of a translation orbit of edges.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub a: NodeRef,
    pub b: NodeRef,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EdgeKind {
    ShortTop,
    ShortBottom,
    Vertical,
}

impl Edge {
    fn normalized(x: NodeRef, y: NodeRef, n: usize) -> Self {
        let (mut a, mut b) = if x < y { (x, y) } else { (y, x) };
        let low = a.pos.min(b.pos);
        let shift = (low - 1).rem_euclid(n as i64) + 1 - low;
        a = a.shift(shift);
        b = b.shift(shift);
        Self { a, b }
    }

    pub fn kind(&self) -> EdgeKind {
        match (self.a.side, self.b.side) {
            (Side::Top, Side::Top) => EdgeKind::ShortTop,
            (Side::Bottom, Side::Bottom) => EdgeKind::ShortBottom,
            _ => EdgeKind::Vertical,
        }
    }

    pub fn span(&self) -> i64 {
        (self.a.pos - self.b.pos).abs()
    }

    pub fn shift(self, by: i64) -> Self {
        Self {
            a: self.a.shift(by),
            b: self.b.shift(by),
        }
    }

    fn crosses(&self, other: &Edge) -> bool {
        let (x1, y1) = ordered(self.a.boundary_key(), self.b.boundary_key());
        let (x2, y2) = ordered(other.a.boundary_key(), other.b.boundary_key());
        (x1 < x2 && x2 < y1 && y1 < y2) || (x2 < x1 && x1 < y2 && y2 < y1)
    }
}

fn ordered<T: Ord>(a: T, b: T) -> (T, T) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

/// A short horizontal edge `(left, right)` with `left` in `1..=n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Arc {
    pub left: i64,
    pub right: i64,
}

/// A violated condition found by [`AffineDiagram::validate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    RankTooSmall(usize),
    WindowLength {
        side: Side,
        len: usize,
    },
    FixedPoint(NodeRef),
    NotInvolution {
        node: NodeRef,
        partner: NodeRef,
        back: NodeRef,
    },
    Crossing {
        first: (NodeRef, NodeRef),
        second: (NodeRef, NodeRef),
    },
    LoopsWithVertical,
    UnbalancedArcs {
        top: usize,
        bottom: usize,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::RankTooSmall(n) => write!(f, "n = {n} is below 3"),
            Violation::WindowLength { side, len } => {
                write!(f, "{side:?} window has {len} entries")
            }
            Violation::FixedPoint(x) => write!(f, "node {x} is its own partner"),
            Violation::NotInvolution {
                node,
                partner,
                back,
            } => {
                write!(f, "partner of {node} is {partner}, whose partner is {back}")
            }
            Violation::Crossing { first, second } => write!(
                f,
                "edges {}-{} and {}-{} cross",
                first.0, first.1, second.0, second.1
            ),
            Violation::LoopsWithVertical => {
                write!(f, "non-contractible loops coexist with vertical edges")
            }
            Violation::UnbalancedArcs { top, bottom } => {
                write!(f, "{top} top arcs but {bottom} bottom arcs")
            }
        }
    }
}

/// An affine n-diagram.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawDiagram")]
pub struct AffineDiagram {
    n: usize,
    top: Vec<NodeRef>,
    bottom: Vec<NodeRef>,
    loops: u32,
}

#[derive(Deserialize)]
struct RawDiagram {
    n: usize,
    top: Vec<NodeRef>,
    bottom: Vec<NodeRef>,
    loops: u32,
}

impl TryFrom<RawDiagram> for AffineDiagram {
    type Error = Error;
    fn try_from(raw: RawDiagram) -> Result<Self> {
        Self::from_parts(raw.n, raw.top, raw.bottom, raw.loops)
    }
}

impl AffineDiagram {
    /// Builds a diagram and rejects it unless [`validate`](Self::validate)
    /// comes back clean.
    pub fn from_parts(
        n: usize,
        top: Vec<NodeRef>,
        bottom: Vec<NodeRef>,
        loops: u32,
    ) -> Result<Self> {
        if n < 3 {
            return Err(Error::TooFewGenerators(n));
        }
        let d = Self {
            n,
            top,
            bottom,
            loops,
        };
        let violations = d.validate();
        if violations.is_empty() {
            Ok(d)
        } else {
            let msg: Vec<String> = violations.iter().map(ToString::to_string).collect();
            Err(Error::InvalidDiagram(msg.join("; ")))
        }
    }

    /// No checks at all; pair with [`validate`](Self::validate).
    pub fn from_parts_unchecked(
        n: usize,
        top: Vec<NodeRef>,
        bottom: Vec<NodeRef>,
        loops: u32,
    ) -> Self {
        Self {
            n,
            top,
            bottom,
            loops,
        }
    }

    pub fn identity(n: usize) -> Result<Self> {
        GroupConfig::new(n)?;
        Ok(Self {
            n,
            top: (1..=n as i64).map(NodeRef::bottom).collect(),
            bottom: (1..=n as i64).map(NodeRef::top).collect(),
            loops: 0,
        })
    }

    /// `E'_{s_i}`: nodes `i` and `i+1` joined in both rows, everything else
    /// straight down.
    pub fn generator(n: usize, i: usize) -> Result<Self> {
        let cfg = GroupConfig::new(n)?;
        cfg.check(i)?;
        let mut d = Self::identity(n)?;
        let i = i as i64;
        for (row, side) in [(&mut d.top, Side::Top), (&mut d.bottom, Side::Bottom)] {
            row[(i - 1) as usize] = NodeRef { side, pos: i + 1 };
            if i < n as i64 {
                row[i as usize] = NodeRef { side, pos: i };
            } else {
                row[0] = NodeRef { side, pos: 0 };
            }
        }
        Ok(d)
    }

    /// `E'_{ι(S)}` for a set of pairwise non-adjacent generators.
    pub fn straight(n: usize, set: &GenSet) -> Result<Self> {
        let cfg = GroupConfig::new(n)?;
        if !cfg.is_independent(set) {
            return Err(Error::Precondition(format!(
                "{set:?} has adjacent generators"
            )));
        }
        let mut d = Self::identity(n)?;
        for &s in set {
            d = d.multiply(&Self::generator(n, s as usize)?)?.diagram;
        }
        Ok(d)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn loops(&self) -> u32 {
        self.loops
    }

    pub fn top_window(&self) -> &[NodeRef] {
        &self.top
    }

    pub fn bottom_window(&self) -> &[NodeRef] {
        &self.bottom
    }

    /// Partner of an arbitrary node.
    #[inline]
    pub fn partner(&self, x: NodeRef) -> NodeRef {
        let n = self.n as i64;
        let r = (x.pos - 1).rem_euclid(n) + 1;
        let row = match x.side {
            Side::Top => &self.top,
            Side::Bottom => &self.bottom,
        };
        row[(r - 1) as usize].shift(x.pos - r)
    }

    /// One representative edge per translation orbit.
    pub fn edges(&self) -> Vec<Edge> {
        let mut seen = BTreeSet::new();
        for side in [Side::Top, Side::Bottom] {
            for p in 1..=self.n as i64 {
                let x = NodeRef { side, pos: p };
                seen.insert(Edge::normalized(x, self.partner(x), self.n));
            }
        }
        seen.into_iter().collect()
    }

    /// Every violated condition; empty iff the diagram is a valid
    /// affine n-diagram.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        if self.n < 3 {
            out.push(Violation::RankTooSmall(self.n));
        }
        for (side, row) in [(Side::Top, &self.top), (Side::Bottom, &self.bottom)] {
            if row.len() != self.n {
                out.push(Violation::WindowLength {
                    side,
                    len: row.len(),
                });
            }
        }
        if self.n == 0 || !out.iter().all(|v| matches!(v, Violation::RankTooSmall(_))) {
            return out;
        }

        let mut involution_ok = true;
        for side in [Side::Top, Side::Bottom] {
            for p in 1..=self.n as i64 {
                let x = NodeRef { side, pos: p };
                let y = self.partner(x);
                if y == x {
                    out.push(Violation::FixedPoint(x));
                    involution_ok = false;
                    continue;
                }
                let back = self.partner(y);
                if back != x {
                    out.push(Violation::NotInvolution {
                        node: x,
                        partner: y,
                        back,
                    });
                    involution_ok = false;
                }
            }
        }
        if !involution_ok {
            return out;
        }

        let edges = self.edges();
        let n = self.n as i64;
        let max_span = edges.iter().map(Edge::span).max().unwrap_or(0);
        let reach = (max_span + n - 1) / n + 1;
        let mut reported = HashSet::new();
        for (i, e) in edges.iter().enumerate() {
            for f in &edges[i..] {
                for m in -reach..=reach {
                    let g = f.shift(m * n);
                    if e.crosses(&g) && reported.insert((*e, *f)) {
                        out.push(Violation::Crossing {
                            first: (e.a, e.b),
                            second: (g.a, g.b),
                        });
                    }
                }
            }
        }

        let verticals = edges
            .iter()
            .filter(|e| e.kind() == EdgeKind::Vertical)
            .count();
        if self.loops > 0 && verticals > 0 {
            out.push(Violation::LoopsWithVertical);
        }
        let top = edges
            .iter()
            .filter(|e| e.kind() == EdgeKind::ShortTop)
            .count();
        let bottom = edges
            .iter()
            .filter(|e| e.kind() == EdgeKind::ShortBottom)
            .count();
        if top != bottom {
            out.push(Violation::UnbalancedArcs { top, bottom });
        }
        out
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_empty()
    }

    fn arcs(&self, side: Side) -> BTreeSet<Arc> {
        self.edges()
            .into_iter()
            .filter(|e| e.a.side == side && e.b.side == side)
            .map(|e| Arc {
                left: e.a.pos.min(e.b.pos),
                right: e.a.pos.max(e.b.pos),
            })
            .collect()
    }

    /// Short horizontal edges on the top row, one per orbit.
    pub fn top_arcs(&self) -> BTreeSet<Arc> {
        self.arcs(Side::Top)
    }

    pub fn bottom_arcs(&self) -> BTreeSet<Arc> {
        self.arcs(Side::Bottom)
    }

    pub fn vertical_count(&self) -> usize {
        self.edges()
            .iter()
            .filter(|e| e.kind() == EdgeKind::Vertical)
            .count()
    }

    /// Number of short horizontal edges on the top row (per period).
    pub fn short_edge_count(&self) -> usize {
        self.top_arcs().len()
    }

    pub fn has_horizontal(&self) -> bool {
        self.loops > 0 || self.vertical_count() < self.n
    }

    pub fn is_identity(&self) -> bool {
        self.loops == 0
            && self
                .top
                .iter()
                .enumerate()
                .all(|(i, x)| *x == NodeRef::bottom(i as i64 + 1))
    }

    /// Crossings with the vertical line `k + 1/2`, drawing each edge as a
    /// geodesic; each non-contractible loop contributes one.
    pub fn nu(&self, k: usize) -> Result<u64> {
        if k == 0 || k > self.n {
            return Err(Error::GeneratorOutOfRange {
                index: k,
                n: self.n,
            });
        }
        Ok(self.nu_unchecked(k))
    }

    fn nu_unchecked(&self, k: usize) -> u64 {
        let n = self.n as i64;
        let k = k as i64;
        let count = |lo: i64, hi: i64| -> i64 {
            // t in [lo, hi] with t ≡ k (mod n)
            if hi < lo {
                0
            } else {
                (hi - k).div_euclid(n) - (lo - 1 - k).div_euclid(n)
            }
        };
        let edges: u64 = self
            .edges()
            .iter()
            .map(|e| {
                let lo = e.a.pos.min(e.b.pos);
                let hi = e.a.pos.max(e.b.pos);
                count(lo, hi - 1) as u64
            })
            .sum();
        edges + self.loops as u64
    }

    /// `(ν_1, …, ν_n)`.
    pub fn nu_vector(&self) -> Vec<u64> {
        (1..=self.n).map(|k| self.nu_unchecked(k)).collect()
    }

    pub fn is_admissible(&self) -> bool {
        if self.is_identity() {
            return true;
        }
        self.has_horizontal() && self.nu_vector().iter().all(|v| v % 2 == 0)
    }

    /// Half the total crossing number.
    pub fn length(&self) -> Result<usize> {
        if !self.is_admissible() {
            return Err(Error::Inadmissible);
        }
        Ok((self.nu_vector().iter().sum::<u64>() / 2) as usize)
    }

    /// Classes `i` whose nodes `i`, `i+1` on `side` are joined by an arc
    /// of length one.
    pub fn descent_arcs(&self, side: Side) -> BTreeSet<Generator> {
        (1..=self.n as i64)
            .filter(|&i| self.partner(NodeRef { side, pos: i }) == NodeRef { side, pos: i + 1 })
            .map(|i| i as Generator)
            .collect()
    }

    /// Upside-down reflection: swaps the rows. `mirror(A·B) = mirror(B)·mirror(A)`.
    pub fn mirror(&self) -> Self {
        let flip = |x: &NodeRef| NodeRef {
            side: x.side.flip(),
            pos: x.pos,
        };
        Self {
            n: self.n,
            top: self.bottom.iter().map(flip).collect(),
            bottom: self.top.iter().map(flip).collect(),
            loops: self.loops,
        }
    }

    /// Injective byte encoding: `n`, both windows, loop count.
    pub fn canonical_key(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(8 + 18 * self.n + 4);
        out.extend_from_slice(&(self.n as u64).to_le_bytes());
        for x in self.top.iter().chain(&self.bottom) {
            out.push(match x.side {
                Side::Top => 0,
                Side::Bottom => 1,
            });
            out.extend_from_slice(&x.pos.to_le_bytes());
        }
        out.extend_from_slice(&self.loops.to_le_bytes());
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("diagram serialization is infallible")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }

    // Direct window mutation for the straightening surgery.
    pub(crate) fn set_partner(&mut self, x: NodeRef, y: NodeRef) {
        let n = self.n as i64;
        let r = (x.pos - 1).rem_euclid(n) + 1;
        let row = match x.side {
            Side::Top => &mut self.top,
            Side::Bottom => &mut self.bottom,
        };
        row[(r - 1) as usize] = y.shift(r - x.pos);
    }

    pub(crate) fn join(&mut self, x: NodeRef, y: NodeRef) {
        self.set_partner(x, y);
        self.set_partner(y, x);
    }

    pub(crate) fn set_loops(&mut self, loops: u32) {
        self.loops = loops;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: usize, i: usize) -> AffineDiagram {
        AffineDiagram::generator(n, i).unwrap()
    }

    #[test]
    fn identity_shape() {
        let id = AffineDiagram::identity(4).unwrap();
        for i in 1..=4 {
            assert_eq!(id.partner(NodeRef::top(i)), NodeRef::bottom(i));
        }
        assert_eq!(id.loops(), 0);
        assert_eq!(id.length().unwrap(), 0);
        assert!(id.validate().is_empty());
        assert!(AffineDiagram::identity(2).is_err());
    }

    #[test]
    fn generator_shape() {
        let e1 = g(4, 1);
        assert_eq!(e1.partner(NodeRef::top(1)), NodeRef::top(2));
        assert_eq!(e1.partner(NodeRef::bottom(2)), NodeRef::bottom(1));
        assert_eq!(e1.partner(NodeRef::top(3)), NodeRef::bottom(3));
        let e4 = g(4, 4);
        assert_eq!(e4.partner(NodeRef::top(4)), NodeRef::top(5));
        assert_eq!(e4.partner(NodeRef::top(1)), NodeRef::top(0));
        assert!(e4.validate().is_empty());
        for i in 1..=4 {
            assert_eq!(g(4, i).length().unwrap(), 1);
        }
        assert!(AffineDiagram::generator(4, 5).is_err());
        assert!(AffineDiagram::generator(4, 0).is_err());
    }

    #[test]
    fn validate_reports_fixed_point() {
        let mut top: Vec<NodeRef> = (1..=4).map(NodeRef::bottom).collect();
        top[0] = NodeRef::top(1);
        let bottom = (1..=4).map(NodeRef::top).collect();
        let d = AffineDiagram::from_parts_unchecked(4, top, bottom, 0);
        let v = d.validate();
        assert!(v.contains(&Violation::FixedPoint(NodeRef::top(1))), "{v:?}");
    }

    #[test]
    fn validate_reports_crossing() {
        let mut top: Vec<NodeRef> = (1..=4).map(NodeRef::bottom).collect();
        let mut bottom: Vec<NodeRef> = (1..=4).map(NodeRef::top).collect();
        top[0] = NodeRef::bottom(2);
        top[1] = NodeRef::bottom(1);
        bottom[0] = NodeRef::top(2);
        bottom[1] = NodeRef::top(1);
        let d = AffineDiagram::from_parts_unchecked(4, top, bottom, 0);
        let v = d.validate();
        assert!(
            v.iter().any(|x| matches!(x, Violation::Crossing { .. })),
            "{v:?}"
        );
    }

    #[test]
    fn validate_reports_broken_involution_and_loops() {
        let mut top: Vec<NodeRef> = (1..=4).map(NodeRef::bottom).collect();
        top[0] = NodeRef::bottom(2);
        let bottom = (1..=4).map(NodeRef::top).collect();
        let d = AffineDiagram::from_parts_unchecked(4, top, bottom, 0);
        assert!(d
            .validate()
            .iter()
            .any(|x| matches!(x, Violation::NotInvolution { .. })));

        let id = AffineDiagram::identity(4).unwrap();
        let looped = AffineDiagram::from_parts_unchecked(
            4,
            id.top_window().to_vec(),
            id.bottom_window().to_vec(),
            1,
        );
        assert_eq!(looped.validate(), vec![Violation::LoopsWithVertical]);
    }

    #[test]
    fn crossing_across_the_period_boundary() {
        // Top arcs (1,3) and (2,4)+translates interleave.
        let top = vec![
            NodeRef::top(3),
            NodeRef::top(4),
            NodeRef::top(1),
            NodeRef::top(2),
        ];
        let bottom = vec![
            NodeRef::bottom(2),
            NodeRef::bottom(1),
            NodeRef::bottom(4),
            NodeRef::bottom(3),
        ];
        let d = AffineDiagram::from_parts_unchecked(4, top, bottom, 0);
        assert!(d
            .validate()
            .iter()
            .any(|x| matches!(x, Violation::Crossing { .. })));
    }

    #[test]
    fn nu_of_generator() {
        let e2 = g(4, 2);
        assert_eq!(e2.nu(2).unwrap(), 2);
        assert_eq!(e2.nu(3).unwrap(), 0);
        assert_eq!(e2.nu_vector(), vec![0, 2, 0, 0]);
        assert_eq!(g(4, 4).nu_vector(), vec![0, 0, 0, 2]);
        assert!(e2.nu(0).is_err());
    }

    #[test]
    fn rotation_is_not_admissible() {
        let top = (1..=4).map(|i| NodeRef::bottom(i + 1)).collect();
        let bottom = (1..=4).map(|i| NodeRef::top(i - 1)).collect();
        let rot = AffineDiagram::from_parts(4, top, bottom, 0).unwrap();
        assert_eq!(rot.nu_vector(), vec![1, 1, 1, 1]);
        assert!(!rot.is_admissible());
        assert_eq!(rot.length(), Err(Error::Inadmissible));
    }

    #[test]
    fn admissibility_examples() {
        assert!(AffineDiagram::identity(4).unwrap().is_admissible());
        assert!(g(4, 2).is_admissible());
    }

    #[test]
    fn descent_arcs_of_generators() {
        assert_eq!(g(5, 3).descent_arcs(Side::Top), [3].into_iter().collect());
        assert_eq!(
            g(5, 5).descent_arcs(Side::Bottom),
            [5].into_iter().collect()
        );
        assert!(AffineDiagram::identity(4)
            .unwrap()
            .descent_arcs(Side::Top)
            .is_empty());
    }

    #[test]
    fn keys_distinguish_generators() {
        let id = AffineDiagram::identity(4).unwrap();
        assert_eq!(
            id.canonical_key(),
            AffineDiagram::identity(4).unwrap().canonical_key()
        );
        assert_ne!(g(4, 1).canonical_key(), g(4, 2).canonical_key());
        assert_ne!(
            id.canonical_key(),
            AffineDiagram::identity(5).unwrap().canonical_key()
        );
    }

    #[test]
    fn json_round_trip_and_schema() {
        let d = g(4, 4);
        let j = d.to_json();
        assert!(
            j.starts_with(r#"{"n":4,"top":[{"side":"T","pos":0}"#),
            "{j}"
        );
        assert_eq!(AffineDiagram::from_json(&j).unwrap(), d);
        let bad = r#"{"n":4,"top":[{"side":"T","pos":1},{"side":"B","pos":2},{"side":"B","pos":3},{"side":"B","pos":4}],"bottom":[{"side":"T","pos":1},{"side":"T","pos":2},{"side":"T","pos":3},{"side":"T","pos":4}],"loops":0}"#;
        assert!(AffineDiagram::from_json(bad).is_err());
    }

    #[test]
    fn mirror_swaps_rows() {
        let d = g(4, 1).multiply(&g(4, 2)).unwrap().diagram;
        let m = d.mirror();
        assert_eq!(m, g(4, 2).multiply(&g(4, 1)).unwrap().diagram);
        assert_eq!(m.mirror(), d);
    }
}
