//! Words in the affine Coxeter group of type Ã_{n-1}.
//!
//! Generators are numbered `1..=n` and arranged on a cycle: `s_i` and `s_j`
//! fail to commute exactly when `i` and `j` are consecutive modulo `n`.
//! Everything here works on words and commutation classes only, so it is
//! independent of the diagram engine and can be used to cross-check it.

mod affine_perm;
mod decomposition;

pub use affine_perm::{fc_counts_by_permutation, AffinePermutation};
pub use decomposition::{Decomposition, InducedSubgraph};

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Index of a simple generator, `1..=n`.
pub type Generator = u8;

/// A set of generators, used for supports, descent sets and elements of `P`.
pub type GenSet = BTreeSet<Generator>;

/// Largest supported number of generators.
pub const MAX_RANK: usize = Generator::MAX as usize;

/// The rank of the group: `n` generators on a cycle, `n >= 3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GroupConfig {
    n: usize,
}

impl GroupConfig {
    pub fn new(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::TooFewGenerators(n));
        }
        if n > MAX_RANK {
            return Err(Error::TooManyGenerators {
                got: n,
                max: MAX_RANK,
            });
        }
        Ok(Self { n })
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> impl Iterator<Item = Generator> + Clone {
        1..=self.n as Generator
    }

    pub fn check(&self, g: usize) -> Result<Generator> {
        if g == 0 || g > self.n {
            Err(Error::GeneratorOutOfRange {
                index: g,
                n: self.n,
            })
        } else {
            Ok(g as Generator)
        }
    }

    pub fn check_word(&self, w: &Word) -> Result<()> {
        for &g in w.letters() {
            self.check(g as usize)?;
        }
        Ok(())
    }

    /// `s_i` and `s_j` are joined in the Coxeter graph.
    pub fn adjacent(&self, i: usize, j: usize) -> Result<bool> {
        let i = self.check(i)?;
        let j = self.check(j)?;
        Ok(self.is_adjacent(i, j))
    }

    #[inline]
    pub(crate) fn is_adjacent(&self, i: Generator, j: Generator) -> bool {
        i != j && (self.next(i) == j || self.prev(i) == j)
    }

    /// Distinct and not adjacent, i.e. the two letters may be swapped.
    #[inline]
    pub fn commute(&self, i: Generator, j: Generator) -> bool {
        i != j && !self.is_adjacent(i, j)
    }

    #[inline]
    pub fn next(&self, s: Generator) -> Generator {
        if s as usize == self.n {
            1
        } else {
            s + 1
        }
    }

    #[inline]
    pub fn prev(&self, s: Generator) -> Generator {
        if s == 1 {
            self.n as Generator
        } else {
            s - 1
        }
    }

    /// The two generators adjacent to `s`, smaller index first.
    pub fn neighbours(&self, s: Generator) -> [Generator; 2] {
        let (a, b) = (self.prev(s), self.next(s));
        if a < b {
            [a, b]
        } else {
            [b, a]
        }
    }

    /// Membership in `P`: pairwise non-adjacent generators.
    pub fn is_independent(&self, set: &GenSet) -> bool {
        set.iter()
            .all(|&a| set.iter().all(|&b| !self.is_adjacent(a, b)))
    }

    /// All elements of `P`, ordered by size and then lexicographically.
    pub fn independent_sets(&self) -> Vec<GenSet> {
        assert!(
            self.n <= 24,
            "independent set enumeration is exponential in n"
        );
        let mut out: Vec<GenSet> = (0u32..(1 << self.n))
            .filter(|mask| {
                let rot = (mask >> 1) | ((mask & 1) << (self.n - 1));
                mask & rot == 0
            })
            .map(|mask| {
                (0..self.n)
                    .filter(|b| mask & (1 << b) != 0)
                    .map(|b| (b + 1) as Generator)
                    .collect()
            })
            .collect();
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        out
    }

    /// The two maximal elements of `P` when `n` is even: odd and even nodes.
    pub fn maximal_alternating(&self) -> Option<(GenSet, GenSet)> {
        if !self.n.is_multiple_of(2) {
            return None;
        }
        let m1 = self.generators().filter(|g| g % 2 == 1).collect();
        let m2 = self.generators().filter(|g| g % 2 == 0).collect();
        Some((m1, m2))
    }

    /// Move the first occurrence of `s` to the front if only commuting
    /// letters precede it. For a reduced fully commutative word this
    /// succeeds exactly when `s` is a left descent.
    pub fn greedy_front(&self, w: &Word, s: Generator) -> Option<Word> {
        let pos = self.front_position(w.letters(), s)?;
        let mut letters = w.0.clone();
        let g = letters.remove(pos);
        letters.insert(0, g);
        Some(Word(letters))
    }

    /// Mirror of [`greedy_front`](Self::greedy_front).
    pub fn greedy_back(&self, w: &Word, s: Generator) -> Option<Word> {
        let pos = self.back_position(w.letters(), s)?;
        let mut letters = w.0.clone();
        let g = letters.remove(pos);
        letters.push(g);
        Some(Word(letters))
    }

    fn front_position(&self, letters: &[Generator], s: Generator) -> Option<usize> {
        for (i, &g) in letters.iter().enumerate() {
            if g == s {
                return Some(i);
            }
            if !self.commute(g, s) {
                return None;
            }
        }
        None
    }

    fn back_position(&self, letters: &[Generator], s: Generator) -> Option<usize> {
        for (i, &g) in letters.iter().enumerate().rev() {
            if g == s {
                return Some(i);
            }
            if !self.commute(g, s) {
                return None;
            }
        }
        None
    }

    /// `w` with the leftmost movable `s` deleted, i.e. a word for `s·w`.
    pub fn strip_front(&self, w: &Word, s: Generator) -> Option<Word> {
        let pos = self.front_position(w.letters(), s)?;
        let mut letters = w.0.clone();
        letters.remove(pos);
        Some(Word(letters))
    }

    /// `w` with the rightmost movable `s` deleted, i.e. a word for `w·s`.
    pub fn strip_back(&self, w: &Word, s: Generator) -> Option<Word> {
        let pos = self.back_position(w.letters(), s)?;
        let mut letters = w.0.clone();
        letters.remove(pos);
        Some(Word(letters))
    }

    pub fn left_descents(&self, w: &Word) -> GenSet {
        self.generators()
            .filter(|&s| self.front_position(w.letters(), s).is_some())
            .collect()
    }

    pub fn right_descents(&self, w: &Word) -> GenSet {
        self.generators()
            .filter(|&s| self.back_position(w.letters(), s).is_some())
            .collect()
    }

    /// Lexicographically least word in the commutation class of `w`.
    ///
    /// Two words represent the same element of the trace monoid iff their
    /// normal forms agree; for reduced fully commutative words this is
    /// equality in the group.
    pub fn normal_form(&self, w: &Word) -> Word {
        let mut rest = w.0.clone();
        let mut out = Vec::with_capacity(rest.len());
        while !rest.is_empty() {
            let (pos, g) = rest
                .iter()
                .enumerate()
                .filter(|&(i, &g)| rest[..i].iter().all(|&h| self.commute(h, g)))
                .min_by_key(|&(_, &g)| g)
                .map(|(i, &g)| (i, g))
                .expect("first letter is always movable");
            rest.remove(pos);
            out.push(g);
        }
        Word(out)
    }

    pub fn same_commutation_class(&self, a: &Word, b: &Word) -> bool {
        a.len() == b.len() && self.normal_form(a) == self.normal_form(b)
    }

    /// Every word obtainable from `w` by swapping adjacent commuting letters,
    /// in breadth-first order starting from `w`.
    pub fn commutation_class(&self, w: &Word) -> Vec<Word> {
        let mut seen: HashSet<Vec<Generator>> = HashSet::new();
        let mut order = Vec::new();
        let mut queue = VecDeque::new();
        seen.insert(w.0.clone());
        queue.push_back(w.0.clone());
        while let Some(cur) = queue.pop_front() {
            for i in 0..cur.len().saturating_sub(1) {
                if self.commute(cur[i], cur[i + 1]) {
                    let mut next = cur.clone();
                    next.swap(i, i + 1);
                    if seen.insert(next.clone()) {
                        queue.push_back(next);
                    }
                }
            }
            order.push(Word(cur));
        }
        order
    }

    /// Word-level test: `w` is a reduced word of a fully commutative element
    /// iff no word in its commutation class has a factor `ss` or `sts` with
    /// `s`, `t` adjacent.
    pub fn is_reduced_fc(&self, w: &Word) -> bool {
        self.commutation_class(w).iter().all(|word| {
            let l = word.letters();
            let no_square = l.windows(2).all(|p| p[0] != p[1]);
            let no_braid = l
                .windows(3)
                .all(|p| !(p[0] == p[2] && self.is_adjacent(p[0], p[1])));
            no_square && no_braid
        })
    }

    /// Property R: for `w` fully commutative with `w·t` not fully commutative,
    /// find `w = w1·t·s·w2` (reduced) with `s` adjacent to `t` and `t`
    /// commuting with every letter of `w2`.
    pub fn property_r_witness(&self, w: &Word, t: Generator) -> Result<PropertyR> {
        self.check(t as usize)?;
        for word in self.commutation_class(w) {
            let l = word.letters();
            for p in 0..l.len().saturating_sub(1) {
                if l[p] == t
                    && self.is_adjacent(t, l[p + 1])
                    && l[p + 2..].iter().all(|&u| self.commute(u, t))
                {
                    return Ok(PropertyR {
                        w1: Word(l[..p].to_vec()),
                        s: l[p + 1],
                        w2: Word(l[p + 2..].to_vec()),
                    });
                }
            }
        }
        Err(Error::Precondition(format!(
            "w·s_{t} is fully commutative for w = {w}; no Property R decomposition"
        )))
    }

    /// The mirrored statement: for `t·w` not fully commutative, find
    /// `w = w2·s·t·w1` with `t` commuting with every letter of `w2`.
    /// Returned fields keep the mirrored roles: `w1` is the right factor.
    pub fn property_r_witness_dual(&self, t: Generator, w: &Word) -> Result<PropertyR> {
        let mirrored = self.property_r_witness(&w.reversed(), t)?;
        Ok(PropertyR {
            w1: mirrored.w1.reversed(),
            s: mirrored.s,
            w2: mirrored.w2.reversed(),
        })
    }

    /// All words in the commutation class of `w` that admit a Property R
    /// decomposition for `t`; used to confirm the uniqueness of `s`.
    pub fn property_r_witnesses(&self, w: &Word, t: Generator) -> Vec<PropertyR> {
        let mut out = Vec::new();
        for word in self.commutation_class(w) {
            let l = word.letters();
            for p in 0..l.len().saturating_sub(1) {
                if l[p] == t
                    && self.is_adjacent(t, l[p + 1])
                    && l[p + 2..].iter().all(|&u| self.commute(u, t))
                {
                    out.push(PropertyR {
                        w1: Word(l[..p].to_vec()),
                        s: l[p + 1],
                        w2: Word(l[p + 2..].to_vec()),
                    });
                }
            }
        }
        out
    }
}

/// Result of [`GroupConfig::property_r_witness`]: `w = w1·t·s·w2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PropertyR {
    pub w1: Word,
    pub s: Generator,
    pub w2: Word,
}

/// A word in the generators. May be empty (the identity).
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Word(Vec<Generator>);

impl Word {
    pub fn new(letters: Vec<Generator>) -> Self {
        Self(letters)
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    /// `ι(U)`: the product of the generators in `U`, in increasing order.
    pub fn iota(set: &GenSet) -> Self {
        Self(set.iter().copied().collect())
    }

    pub fn letters(&self) -> &[Generator] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<Generator> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Distinct letters.
    pub fn support(&self) -> GenSet {
        self.0.iter().copied().collect()
    }

    pub fn count(&self, s: Generator) -> usize {
        self.0.iter().filter(|&&g| g == s).count()
    }

    pub fn reversed(&self) -> Self {
        Self(self.0.iter().rev().copied().collect())
    }

    pub fn concat(&self, other: &Word) -> Self {
        let mut letters = self.0.clone();
        letters.extend_from_slice(&other.0);
        Self(letters)
    }

    pub fn push(&mut self, g: Generator) {
        self.0.push(g);
    }

    pub fn prepend(&mut self, g: Generator) {
        self.0.insert(0, g);
    }

    /// Parses `"1 3 2 4"`, `"1,3,2,4"` or `"[1,3,2,4]"`.
    pub fn parse(text: &str) -> Result<Self> {
        let trimmed = text.trim().trim_start_matches('[').trim_end_matches(']');
        trimmed
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|tok| !tok.is_empty())
            .map(|tok| {
                tok.parse::<Generator>()
                    .map_err(|e| Error::Parse(format!("bad letter {tok:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()
            .map(Self)
    }
}

impl From<Vec<Generator>> for Word {
    fn from(letters: Vec<Generator>) -> Self {
        Self(letters)
    }
}

impl<const N: usize> From<[Generator; N]> for Word {
    fn from(letters: [Generator; N]) -> Self {
        Self(letters.to_vec())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (i, g) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, "·")?;
            }
            write!(f, "s{g}")?;
        }
        Ok(())
    }
}
