use std::collections::HashSet;

use super::{Generator, GroupConfig, Word};

/// Affine permutation in window notation: `window[i-1] = σ(i)` for
/// `i = 1..=n`, extended by `σ(i + n) = σ(i) + n`.
///
/// This is the independent model of the group used to check the diagram
/// engine; it never feeds back into it.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffinePermutation {
    window: Vec<i64>,
}

impl AffinePermutation {
    pub fn identity(n: usize) -> Self {
        Self {
            window: (1..=n as i64).collect(),
        }
    }

    /// Builds from an explicit window, checking the defining conditions.
    pub fn from_window(window: Vec<i64>) -> Option<Self> {
        let n = window.len() as i64;
        if n == 0 {
            return None;
        }
        let shift: i64 = window
            .iter()
            .enumerate()
            .map(|(i, &v)| v - (i as i64 + 1))
            .sum();
        let classes: HashSet<i64> = window.iter().map(|v| v.rem_euclid(n)).collect();
        (shift == 0 && classes.len() == window.len()).then_some(Self { window })
    }

    pub fn from_word(cfg: &GroupConfig, w: &Word) -> Self {
        let mut p = Self::identity(cfg.n());
        for &g in w.letters() {
            p.right_multiply(g);
        }
        p
    }

    pub fn window(&self) -> &[i64] {
        &self.window
    }

    pub fn n(&self) -> usize {
        self.window.len()
    }

    /// σ(i) for any integer i.
    pub fn eval(&self, i: i64) -> i64 {
        let n = self.n() as i64;
        let r = (i - 1).rem_euclid(n) + 1;
        self.window[(r - 1) as usize] + (i - r)
    }

    /// `self ← self · s_i`: swap the values at positions i and i+1 in
    /// every period.
    pub fn right_multiply(&mut self, s: Generator) {
        let n = self.n();
        let i = s as usize;
        if i < n {
            self.window.swap(i - 1, i);
        } else {
            let first = self.window[0];
            let last = self.window[n - 1];
            self.window[0] = last - n as i64;
            self.window[n - 1] = first + n as i64;
        }
    }

    /// `(self · other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.n(), other.n());
        Self {
            window: other.window.iter().map(|&v| self.eval(v)).collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let n = self.n() as i64;
        let mut window = vec![0; self.n()];
        for (i, &v) in self.window.iter().enumerate() {
            let r = (v - 1).rem_euclid(n) + 1;
            window[(r - 1) as usize] = (i as i64 + 1) - (v - r);
        }
        Self { window }
    }

    pub fn is_identity(&self) -> bool {
        self.window
            .iter()
            .enumerate()
            .all(|(i, &v)| v == i as i64 + 1)
    }

    pub fn is_involution(&self) -> bool {
        self.compose(self).is_identity()
    }

    fn max_displacement(&self) -> i64 {
        self.window
            .iter()
            .enumerate()
            .map(|(i, &v)| (v - (i as i64 + 1)).abs())
            .max()
            .unwrap_or(0)
    }

    /// Coxeter length: inversions `(i, j)` with `1 <= i <= n`, `i < j`,
    /// `σ(i) > σ(j)`.
    pub fn length(&self) -> usize {
        let n = self.n() as i64;
        let reach = 2 * self.max_displacement() + 1;
        let mut count = 0;
        for i in 1..=n {
            let si = self.eval(i);
            for j in (i + 1)..=(i + reach) {
                if si > self.eval(j) {
                    count += 1;
                }
            }
        }
        count
    }

    /// Ascent at position `i`: right multiplication by `s_i` increases length.
    pub fn has_right_ascent(&self, s: Generator) -> bool {
        let i = s as i64;
        self.eval(i) < self.eval(i + 1)
    }

    /// No `i < j < k` with `σ(i) > σ(j) > σ(k)`. In affine type A this is
    /// the same as full commutativity.
    pub fn is_321_avoiding(&self) -> bool {
        let n = self.n() as i64;
        let reach = 2 * self.max_displacement() + 1;
        for j in 1..=n {
            let sj = self.eval(j);
            let left_bigger = ((j - reach)..j).any(|i| self.eval(i) > sj);
            if !left_bigger {
                continue;
            }
            if ((j + 1)..=(j + reach)).any(|k| self.eval(k) < sj) {
                return false;
            }
        }
        true
    }
}

/// Number of fully commutative elements of each length `0..=max_len`,
/// computed purely from affine permutations: breadth-first over right
/// ascents, filtered by 321-avoidance (the set is closed under prefixes).
pub fn fc_counts_by_permutation(cfg: &GroupConfig, max_len: usize) -> Vec<usize> {
    let mut level: HashSet<AffinePermutation> = HashSet::new();
    level.insert(AffinePermutation::identity(cfg.n()));
    let mut counts = vec![1];
    for _ in 0..max_len {
        let mut next = HashSet::new();
        for p in &level {
            for s in cfg.generators() {
                if p.has_right_ascent(s) {
                    let mut q = p.clone();
                    q.right_multiply(s);
                    if q.is_321_avoiding() {
                        next.insert(q);
                    }
                }
            }
        }
        counts.push(next.len());
        level = next;
    }
    counts
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(n: usize) -> GroupConfig {
        GroupConfig::new(n).unwrap()
    }

    #[test]
    fn window_examples() {
        let c = cfg(4);
        assert_eq!(
            AffinePermutation::from_word(&c, &Word::empty()).window(),
            &[1, 2, 3, 4]
        );
        assert_eq!(
            AffinePermutation::from_word(&c, &Word::from([1])).window(),
            &[2, 1, 3, 4]
        );
        let p = AffinePermutation::from_word(&c, &Word::from([4]));
        assert_eq!(p.window(), &[0, 2, 3, 5]);
        assert_eq!(p.eval(8), p.eval(4) + 4);
        assert!(AffinePermutation::from_window(p.window().to_vec()).is_some());
    }

    #[test]
    fn from_window_rejects_bad_input() {
        assert!(AffinePermutation::from_window(vec![1, 1, 4]).is_none());
        assert!(AffinePermutation::from_window(vec![2, 3, 4]).is_none());
    }

    #[test]
    fn lengths_of_small_words() {
        let c = cfg(4);
        for (w, l) in [
            (vec![], 0),
            (vec![1], 1),
            (vec![4], 1),
            (vec![1, 2, 1], 3),
            (vec![1, 1], 0),
            (vec![1, 3, 2, 4], 4),
        ] {
            let p = AffinePermutation::from_word(&c, &Word::new(w.clone()));
            assert_eq!(p.length(), l, "{w:?}");
        }
    }

    #[test]
    fn braid_and_commutation_relations() {
        let c = cfg(5);
        let f = |w: &[Generator]| AffinePermutation::from_word(&c, &Word::new(w.to_vec()));
        assert_eq!(f(&[1, 2, 1]), f(&[2, 1, 2]));
        assert_eq!(f(&[5, 1, 5]), f(&[1, 5, 1]));
        assert_eq!(f(&[1, 3]), f(&[3, 1]));
        assert!(f(&[2, 2]).is_identity());
    }

    #[test]
    fn inverse_and_involutions() {
        let c = cfg(4);
        let p = AffinePermutation::from_word(&c, &Word::from([2, 1, 3, 4]));
        assert!(p.compose(&p.inverse()).is_identity());
        let d = AffinePermutation::from_word(&c, &Word::from([2, 1, 3, 2]));
        assert!(d.is_involution());
        assert!(!AffinePermutation::from_word(&c, &Word::from([1, 2])).is_involution());
    }

    #[test]
    fn fc_counts_small() {
        assert_eq!(fc_counts_by_permutation(&cfg(3), 1), vec![1, 3]);
        assert_eq!(fc_counts_by_permutation(&cfg(4), 2)[2], 10);
    }
}
