//! Conversion between words and diagrams.
//!
//! [`stack`] turns a word into its diagram; [`straighten`] goes back,
//! repeatedly splitting a generator off the top or bottom of a non-straight
//! admissible diagram until only a product of commuting generators is left.

use serde::{Deserialize, Serialize};

use crate::coxeter::{GenSet, Generator, GroupConfig, Word};
use crate::diagram::{AffineDiagram, Arc, NodeRef, ProductResult, Side};
use crate::error::{Error, Result};

/// Product of the generator diagrams of `w`, first letter on top.
pub fn stack(cfg: &GroupConfig, w: &Word) -> Result<ProductResult> {
    cfg.check_word(w)?;
    let n = cfg.n();
    let mut acc = ProductResult {
        diagram: AffineDiagram::identity(n)?,
        contractible_loops: 0,
    };
    for &g in w.letters() {
        let r = acc
            .diagram
            .multiply(&AffineDiagram::generator(n, g as usize)?)?;
        acc.diagram = r.diagram;
        acc.contractible_loops += r.contractible_loops;
    }
    Ok(acc)
}

/// `Some(S)` when `d` is the diagram of `ι(S)`, `S` pairwise commuting.
pub fn is_straight(d: &AffineDiagram) -> Option<GenSet> {
    if d.loops() > 0 {
        return None;
    }
    let set = d.descent_arcs(Side::Top);
    let mut expected = AffineDiagram::identity(d.n()).ok()?;
    for &s in &set {
        let s = s as i64;
        expected.join(NodeRef::top(s), NodeRef::top(s + 1));
        expected.join(NodeRef::bottom(s), NodeRef::bottom(s + 1));
    }
    (expected == *d).then_some(set)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum CongruenceKind {
    T1,
    B1,
    T2,
    B2,
}

/// What sits above the minimal arc of a type 1 congruence.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Cover {
    /// Innermost arc enclosing the minimal arc.
    Arc(Arc),
    /// No enclosing arc, but a non-contractible loop.
    Loop,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CongruenceFinding {
    pub class: Generator,
    pub kind: CongruenceKind,
    pub cover: Option<Cover>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum End {
    Left,
    Right,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Peel {
    pub letter: Generator,
    pub end: End,
    pub rest: AffineDiagram,
}

/// Innermost arc on `side` strictly enclosing the minimal arc `(k, k+1)`.
fn innermost_cover(d: &AffineDiagram, side: Side, k: i64) -> Option<Arc> {
    let floor = k + 2 - d.n() as i64;
    let mut p = k - 1;
    while p >= floor {
        let y = d.partner(NodeRef { side, pos: p });
        if y.side != side {
            return None;
        }
        if y.pos > p {
            return Some(Arc {
                left: p,
                right: y.pos,
            });
        }
        p = y.pos - 1;
    }
    None
}

fn has_minimal_arc(d: &AffineDiagram, side: Side, k: i64) -> bool {
    d.partner(NodeRef { side, pos: k }) == NodeRef { side, pos: k + 1 }
}

fn type_one_at(d: &AffineDiagram, side: Side, k: i64) -> Option<Cover> {
    if !has_minimal_arc(d, side, k) {
        return None;
    }
    match innermost_cover(d, side, k) {
        Some(arc) => Some(Cover::Arc(arc)),
        None if d.loops() > 0 => Some(Cover::Loop),
        None => None,
    }
}

fn type_two_at(d: &AffineDiagram, side: Side, i: i64) -> bool {
    let k = i + 1;
    if !has_minimal_arc(d, side, k) {
        return false;
    }
    // The strand from node k-1 must land at k+1 or further right; a
    // landing at k would be a minimal vertical, which no admissible
    // diagram has.
    let y = d.partner(NodeRef { side, pos: i });
    y.side != side && y.pos > k
}

fn type_one(d: &AffineDiagram, side: Side) -> Option<(Generator, Cover)> {
    (1..=d.n() as i64).find_map(|k| type_one_at(d, side, k).map(|c| (k as Generator, c)))
}

fn type_two(d: &AffineDiagram, side: Side) -> Option<Generator> {
    (1..=d.n() as i64)
        .find(|&i| type_two_at(d, side, i))
        .map(|i| i as Generator)
}

/// Every type the congruence class `class` has in `d`.
pub fn congruence_kinds(d: &AffineDiagram, class: Generator) -> Vec<CongruenceKind> {
    let k = class as i64;
    let mut out = Vec::new();
    for (side, one, two) in [
        (Side::Top, CongruenceKind::T1, CongruenceKind::T2),
        (Side::Bottom, CongruenceKind::B1, CongruenceKind::B2),
    ] {
        if type_one_at(d, side, k).is_some() {
            out.push(one);
        }
        if type_two_at(d, side, k) {
            out.push(two);
        }
    }
    out.sort();
    out
}

/// Highest-priority congruence class (1T, then 1B, 2T, 2B); the smallest
/// class wins within a type.
pub fn find_distinguished(d: &AffineDiagram) -> Result<CongruenceFinding> {
    if !d.is_admissible() {
        return Err(Error::Inadmissible);
    }
    if is_straight(d).is_some() {
        return Err(Error::AlreadyStraight);
    }
    if let Some((class, cover)) = type_one(d, Side::Top) {
        return Ok(CongruenceFinding {
            class,
            kind: CongruenceKind::T1,
            cover: Some(cover),
        });
    }
    if let Some((class, cover)) = type_one(d, Side::Bottom) {
        return Ok(CongruenceFinding {
            class,
            kind: CongruenceKind::B1,
            cover: Some(cover),
        });
    }
    if let Some(class) = type_two(d, Side::Top) {
        return Ok(CongruenceFinding {
            class,
            kind: CongruenceKind::T2,
            cover: None,
        });
    }
    if let Some(class) = type_two(d, Side::Bottom) {
        return Ok(CongruenceFinding {
            class,
            kind: CongruenceKind::B2,
            cover: None,
        });
    }
    Err(Error::Internal(
        "admissible non-straight diagram without a congruence class".into(),
    ))
}

fn surgery(d: &AffineDiagram, side: Side, k: i64, cover: Cover) -> Result<AffineDiagram> {
    let mut rest = d.clone();
    let node = |pos| NodeRef { side, pos };
    match cover {
        Cover::Arc(arc) => {
            rest.join(node(arc.left), node(k));
            rest.join(node(k + 1), node(arc.right));
        }
        Cover::Loop => {
            if d.loops() == 0 {
                return Err(Error::Internal("loop cover on a loop-free diagram".into()));
            }
            rest.join(node(k + 1), node(k + d.n() as i64));
            rest.set_loops(d.loops() - 1);
        }
    }
    Ok(rest)
}

/// Splits one generator off `d` according to the distinguished congruence
/// `f`. The result is re-stacked and compared against `d`.
pub fn peel(d: &AffineDiagram, f: &CongruenceFinding) -> Result<Peel> {
    let n = d.n();
    let cfg = GroupConfig::new(n)?;
    let k = f.class as i64;
    let (letter, end, rest) = match f.kind {
        CongruenceKind::T1 | CongruenceKind::B1 => {
            let cover = f
                .cover
                .ok_or_else(|| Error::Precondition("type 1 finding without a cover".into()))?;
            let (side, end) = if f.kind == CongruenceKind::T1 {
                (Side::Top, End::Left)
            } else {
                (Side::Bottom, End::Right)
            };
            (f.class, end, surgery(d, side, k, cover)?)
        }
        CongruenceKind::T2 => {
            let r = AffineDiagram::generator(n, f.class as usize)?.multiply(d)?;
            if r.contractible_loops != 0 {
                return Err(Error::Internal("type 2T peel produced a loop".into()));
            }
            (cfg.next(f.class), End::Left, r.diagram)
        }
        CongruenceKind::B2 => {
            let r = d.multiply(&AffineDiagram::generator(n, f.class as usize)?)?;
            if r.contractible_loops != 0 {
                return Err(Error::Internal("type 2B peel produced a loop".into()));
            }
            (cfg.next(f.class), End::Right, r.diagram)
        }
    };

    let gen = AffineDiagram::generator(n, letter as usize)?;
    let back = match end {
        End::Left => gen.multiply(&rest)?,
        End::Right => rest.multiply(&gen)?,
    };
    if back.contractible_loops != 0 || back.diagram != *d {
        return Err(Error::Internal(format!(
            "peel {f:?} does not reconstruct the diagram"
        )));
    }
    if !rest.is_admissible() || rest.length()? + 1 != d.length()? {
        return Err(Error::Internal(format!(
            "peel {f:?} does not shorten the diagram by one"
        )));
    }
    if rest.short_edge_count() != d.short_edge_count() {
        return Err(Error::Internal(format!(
            "peel {f:?} changed the short edge count"
        )));
    }
    Ok(Peel { letter, end, rest })
}

/// A reduced word for an admissible diagram.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StraightWord {
    pub word: Word,
    pub straight_core: GenSet,
}

/// Peels until straight and assembles `left peels · ι(S) · right peels`.
pub fn straighten(d: &AffineDiagram) -> Result<StraightWord> {
    straighten_traced(d).map(|(w, _)| w)
}

/// [`straighten`] together with the sequence of peels performed.
pub fn straighten_traced(
    d: &AffineDiagram,
) -> Result<(StraightWord, Vec<(CongruenceFinding, Peel)>)> {
    if !d.is_admissible() {
        return Err(Error::Inadmissible);
    }
    let mut left = Vec::new();
    let mut right = Vec::new();
    let mut trace = Vec::new();
    let mut cur = d.clone();
    let core = loop {
        if let Some(set) = is_straight(&cur) {
            break set;
        }
        let f = find_distinguished(&cur)?;
        let p = peel(&cur, &f)?;
        match p.end {
            End::Left => left.push(p.letter),
            End::Right => right.push(p.letter),
        }
        cur = p.rest.clone();
        trace.push((f, p));
    };
    let mut letters = left;
    letters.extend(core.iter().copied());
    letters.extend(right.iter().rev().copied());
    Ok((
        StraightWord {
            word: Word::new(letters),
            straight_core: core,
        },
        trace,
    ))
}
