//! Property suites shared by the `verify` command and the acceptance tests.
//! Each suite returns a [`Check`] instead of panicking so callers can
//! report every outcome.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{fc_evaluate, rewrite_mul_words, BasisElement};
use crate::cells::{
    a_bruteforce, a_value, cancellable, classify_q, involution_decompose,
    involution_decompose_with, is_involution, labels, neighbours, q_elements, q_membership,
    q_shape, reduce_to_q, reduce_to_q_with, right_cell_involution, CellLabels, FactorReading,
    RightCellInvolution, TwoSidedLabel,
};
use crate::coxeter::{fc_counts_by_permutation, GroupConfig, Word};
use crate::diagram::AffineDiagram;
use crate::enumerate::{enumerate_levels, max_elements};
use crate::error::Result;
use crate::straighten::{stack, straighten_traced, End};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn new(name: &str, failures: &[String], checked: usize) -> Self {
        let detail = match failures.first() {
            None => format!("{checked} checked"),
            Some(f) => format!("{} of {checked} failed; first: {f}", failures.len()),
        };
        Check {
            name: name.to_string(),
            passed: failures.is_empty(),
            detail,
        }
    }
}

/// Labels of a fixed set of elements, computed once and shared by suites.
pub struct Corpus {
    pub cfg: GroupConfig,
    pub levels: Vec<Vec<BasisElement>>,
    pub labels: Vec<CellLabels>,
}

impl Corpus {
    pub fn build(cfg: &GroupConfig, max_len: usize) -> Result<Self> {
        let levels = enumerate_levels(cfg, max_len, max_elements(), 0)?;
        let all: Vec<&BasisElement> = levels.iter().flatten().collect();
        let labels = all
            .par_iter()
            .map(|b| labels(cfg, b))
            .collect::<Result<Vec<_>>>()?;
        Ok(Corpus {
            cfg: *cfg,
            levels,
            labels,
        })
    }

    pub fn elements(&self) -> impl Iterator<Item = &BasisElement> {
        self.levels.iter().flatten()
    }

    pub fn max_len(&self) -> usize {
        self.levels.len() - 1
    }

    fn pairs(&self) -> impl Iterator<Item = (&BasisElement, &CellLabels)> {
        self.elements().zip(self.labels.iter())
    }
}

/// Defining relations on generator diagrams.
pub fn presentation(n: usize) -> Result<Check> {
    let cfg = GroupConfig::new(n)?;
    let g: Vec<AffineDiagram> = cfg
        .generators()
        .map(|s| AffineDiagram::generator(n, s as usize))
        .collect::<Result<_>>()?;
    let mut fails = Vec::new();
    let mut checked = 0;
    for s in cfg.generators() {
        let es = &g[s as usize - 1];
        let sq = es.multiply(es)?;
        checked += 1;
        if sq.contractible_loops != 1 || sq.diagram != *es {
            fails.push(format!("E{s}^2"));
        }
        for t in cfg.generators().filter(|&t| t != s) {
            let et = &g[t as usize - 1];
            checked += 1;
            if cfg.commute(s, t) {
                let a = es.multiply(et)?;
                let b = et.multiply(es)?;
                if a != b || a.contractible_loops != 0 {
                    fails.push(format!("E{s}E{t} = E{t}E{s}"));
                }
            } else {
                let a = es.multiply(et)?;
                let b = a.diagram.multiply(es)?;
                if a.contractible_loops + b.contractible_loops != 0 || b.diagram != *es {
                    fails.push(format!("E{s}E{t}E{s} = E{s}"));
                }
            }
        }
    }
    Ok(Check::new(&format!("presentation n={n}"), &fails, checked))
}

/// Diagram multiplication against the word-rewriting engine, on all pairs
/// of elements of length `<= max_len`.
pub fn engine_equivalence(cfg: &GroupConfig, max_len: usize) -> Result<Check> {
    let elements: Vec<BasisElement> = enumerate_levels(cfg, max_len, max_elements(), 0)?
        .into_iter()
        .flatten()
        .collect();
    let fails: Vec<String> = elements
        .par_iter()
        .map(|x| -> Result<Vec<String>> {
            let mut out = Vec::new();
            for y in &elements {
                let (exp, prod) = x.multiply(y)?;
                let rw = rewrite_mul_words(cfg, x.word(), y.word())?;
                if rw.exponent != exp || cfg.normal_form(&rw.word) != cfg.normal_form(prod.word()) {
                    out.push(format!(
                        "{} * {}: diagram [2]^{exp} {}, words [2]^{} {}",
                        x.word(),
                        y.word(),
                        prod.word(),
                        rw.exponent,
                        rw.word
                    ));
                }
            }
            Ok(out)
        })
        .collect::<Result<Vec<_>>>()?
        .concat();
    let name = format!("engine equivalence n={} len<={max_len}", cfg.n());
    Ok(Check::new(&name, &fails, elements.len() * elements.len()))
}

/// No key collisions, and per-length counts equal the affine-permutation
/// count of 321-avoiding elements.
pub fn faithfulness(corpus: &Corpus) -> Check {
    let mut fails = Vec::new();
    let mut keys = HashSet::new();
    let mut words = HashSet::new();
    for b in corpus.elements() {
        if !keys.insert(b.key()) {
            fails.push(format!("duplicate key for {}", b.word()));
        }
        if !words.insert(corpus.cfg.normal_form(b.word())) {
            fails.push(format!("two diagrams share the word {}", b.word()));
        }
    }
    let counts: Vec<usize> = corpus.levels.iter().map(Vec::len).collect();
    let oracle = fc_counts_by_permutation(&corpus.cfg, corpus.max_len());
    if counts != oracle {
        fails.push(format!("counts {counts:?} vs oracle {oracle:?}"));
    }
    Check::new(
        &format!(
            "faithfulness n={} len<={}",
            corpus.cfg.n(),
            corpus.max_len()
        ),
        &fails,
        keys.len(),
    )
}

/// `stack(straighten(d)) = (d, 0)` and every peel drops the length by one
/// and keeps the number of short arcs.
pub fn straighten_round_trip(corpus: &Corpus) -> Result<Check> {
    let cfg = &corpus.cfg;
    let all: Vec<&BasisElement> = corpus.elements().collect();
    let fails: Vec<String> = all
        .par_iter()
        .map(|b| -> Result<Option<String>> {
            let d = b.diagram();
            let (sw, trace) = straighten_traced(d)?;
            let back = stack(cfg, &sw.word)?;
            if back.contractible_loops != 0 || back.diagram != *d {
                return Ok(Some(format!("{} does not restack", sw.word)));
            }
            let mut len = d.length()?;
            for (_, peel) in &trace {
                let l = peel.rest.length()?;
                if l + 1 != len || peel.rest.short_edge_count() != d.short_edge_count() {
                    return Ok(Some(format!("bad peel in {}", sw.word)));
                }
                len = l;
            }
            Ok(None)
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    Ok(Check::new(
        &format!("straightening n={}", cfg.n()),
        &fails,
        all.len(),
    ))
}

/// `ν_k(E'_w) = 2 · #{occurrences of s_k in w}`.
pub fn nu_statistics(corpus: &Corpus) -> Result<Check> {
    let mut fails = Vec::new();
    let mut checked = 0;
    for b in corpus.elements() {
        for k in corpus.cfg.generators() {
            checked += 1;
            let nu = b.diagram().nu(k as usize)?;
            if nu != 2 * b.word().count(k) as u64 {
                fails.push(format!("nu_{k}({}) = {nu}", b.word()));
            }
        }
    }
    Ok(Check::new(
        &format!("nu statistics n={}", corpus.cfg.n()),
        &fails,
        checked,
    ))
}

/// Diagram a-value against the definition, and `a(ι(U)) = #U`.
pub fn a_function(corpus: &Corpus, bound: usize) -> Result<Check> {
    let cfg = &corpus.cfg;
    let all: Vec<&BasisElement> = corpus.elements().filter(|b| b.length() <= bound).collect();
    let mut fails: Vec<String> = all
        .par_iter()
        .map(|b| -> Result<Option<String>> {
            let brute = a_bruteforce(cfg, b.word(), bound, FactorReading::Contiguous)?;
            Ok((brute != a_value(b))
                .then(|| format!("{}: diagram {} brute {brute}", b.word(), a_value(b))))
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    let sets = cfg.independent_sets();
    for u in &sets {
        let b = BasisElement::from_reduced_word(cfg, &Word::iota(u))?;
        if a_value(&b) != u.len() {
            fails.push(format!("a(ι({u:?})) = {}", a_value(&b)));
        }
    }
    Ok(Check::new(
        &format!("a-function n={} len<={bound}", cfg.n()),
        &fails,
        all.len() + sets.len(),
    ))
}

/// `E_w E_s = c E_{w'}` implies `a(w') >= a(w)`, on random `(w, s)`.
pub fn a_monotone(corpus: &Corpus, samples: usize, seed: u64) -> Result<Check> {
    let cfg = &corpus.cfg;
    let all: Vec<&BasisElement> = corpus.elements().collect();
    let mut rng = StdRng::seed_from_u64(seed);
    let mut fails = Vec::new();
    for _ in 0..samples {
        let w = all[rng.gen_range(0..all.len())];
        let s = rng.gen_range(1..=cfg.n());
        let (_, w2) = w.multiply(&BasisElement::generator(cfg.n(), s)?)?;
        if a_value(&w2) < a_value(w) {
            fails.push(format!("a({}·s{s}) < a({})", w.word(), w.word()));
        }
    }
    Ok(Check::new(
        &format!("a monotone n={}", cfg.n()),
        &fails,
        samples,
    ))
}

/// Membership in `Q` by scanning descents agrees with the explicit list.
pub fn q_scan(corpus: &Corpus) -> Result<Check> {
    let cfg = &corpus.cfg;
    let all: Vec<&BasisElement> = corpus.elements().collect();
    let fails: Vec<String> = all
        .par_iter()
        .map(|b| -> Result<Option<String>> {
            let scan = q_membership(cfg, b)?;
            let listed = q_shape(cfg, b).is_some();
            Ok((scan != listed).then(|| format!("{}: scan {scan}, list {listed}", b.word())))
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    Ok(Check::new(
        &format!("Q scan n={}", cfg.n()),
        &fails,
        all.len(),
    ))
}

/// The neighbour relation is symmetric and its classes are
/// `{ι(T) : #T = k}` for `k < n/2` and singletons in `M`.
pub fn neighbour_classes(cfg: &GroupConfig, max_len: usize) -> Result<Check> {
    let qs = q_elements(cfg, max_len)?;
    let index: HashMap<Vec<u8>, usize> = qs.iter().enumerate().map(|(i, q)| (q.key(), i)).collect();
    let mut parent: Vec<usize> = (0..qs.len()).collect();
    fn find(p: &mut [usize], mut i: usize) -> usize {
        while p[i] != i {
            p[i] = p[p[i]];
            i = p[i];
        }
        i
    }
    let mut fails = Vec::new();
    let mut adj: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); qs.len()];
    for (i, q) in qs.iter().enumerate() {
        for (_, q2) in neighbours(cfg, q)? {
            if let Some(&j) = index.get(&q2.key()) {
                adj[i].insert(j);
            }
        }
    }
    for i in 0..qs.len() {
        for &j in &adj[i] {
            if !adj[j].contains(&i) {
                fails.push(format!(
                    "{} -> {} is not symmetric",
                    qs[i].word(),
                    qs[j].word()
                ));
            }
            let (a, b) = (find(&mut parent, i), find(&mut parent, j));
            parent[a] = b;
        }
    }
    let mut expected: BTreeMap<TwoSidedLabel, BTreeSet<usize>> = BTreeMap::new();
    let mut found: BTreeMap<usize, BTreeSet<usize>> = BTreeMap::new();
    for (i, q) in qs.iter().enumerate() {
        expected.entry(classify_q(cfg, q)?).or_default().insert(i);
        let r = find(&mut parent, i);
        found.entry(r).or_default().insert(i);
    }
    let a: BTreeSet<&BTreeSet<usize>> = expected.values().collect();
    let b: BTreeSet<&BTreeSet<usize>> = found.values().collect();
    if a != b {
        fails.push(format!("{} classes found, {} expected", b.len(), a.len()));
    }
    Ok(Check::new(
        &format!("neighbour classes n={}", cfg.n()),
        &fails,
        qs.len(),
    ))
}

/// Randomized cancellation orders end in the same two-sided label.
pub fn reduce_order_independence(corpus: &Corpus, runs: usize, seed: u64) -> Result<Check> {
    let cfg = &corpus.cfg;
    let all: Vec<(&BasisElement, &CellLabels)> = corpus.pairs().collect();
    let fails: Vec<String> = (0..runs)
        .into_par_iter()
        .map(|i| -> Result<Option<String>> {
            let mut rng = StdRng::seed_from_u64(seed.wrapping_add(i as u64));
            let (b, lab) = all[rng.gen_range(0..all.len())];
            let r = reduce_to_q_with(cfg, b, |opts| rng.gen_range(0..opts.len()))?;
            let got = classify_q(cfg, &r.q)?;
            Ok((got != lab.two_sided).then(|| format!("{}: {got} vs {}", b.word(), lab.two_sided)))
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    Ok(Check::new(
        &format!("reduce order n={}", cfg.n()),
        &fails,
        runs,
    ))
}

/// `a` is constant on two-sided labels and equals both short-arc counts.
pub fn a_constant(corpus: &Corpus) -> Check {
    let mut by: BTreeMap<TwoSidedLabel, BTreeSet<usize>> = BTreeMap::new();
    let mut fails = Vec::new();
    for (b, l) in corpus.pairs() {
        by.entry(l.two_sided).or_default().insert(l.a_value);
        if l.left_pattern.len() != l.a_value || l.right_pattern.len() != l.a_value {
            fails.push(format!("{}: unbalanced short arcs", b.word()));
        }
    }
    for (t, vals) in &by {
        if vals.len() != 1 {
            fails.push(format!("{t} has a-values {vals:?}"));
        }
    }
    Check::new(
        &format!("a constant on cells n={}", corpus.cfg.n()),
        &fails,
        corpus.labels.len(),
    )
}

/// Pairs of two-sided labels sharing `(a, loops)`: the alternative labeling
/// by these two statistics cannot tell them apart.
pub fn a_loops_collisions(corpus: &Corpus) -> Vec<((usize, u32), BTreeSet<TwoSidedLabel>)> {
    let mut by: BTreeMap<(usize, u32), BTreeSet<TwoSidedLabel>> = BTreeMap::new();
    for l in &corpus.labels {
        by.entry((l.a_value, l.loops))
            .or_default()
            .insert(l.two_sided);
    }
    by.into_iter().filter(|(_, v)| v.len() > 1).collect()
}

/// Canonical decompositions of involutions: order independence,
/// `a(d) = #T`, `d ~_R x·ι(T)`, no right-cancellable descent of `x·ι(T)`,
/// and (n odd) no involution of full support.
pub fn involutions(corpus: &Corpus, runs_per_element: usize, seed: u64) -> Result<Check> {
    let cfg = &corpus.cfg;
    let n = cfg.n();
    let invs: Vec<(&BasisElement, &CellLabels)> = corpus
        .pairs()
        .filter(|(b, _)| is_involution(cfg, b))
        .collect();
    let fails: Vec<String> = invs
        .par_iter()
        .enumerate()
        .map(|(i, (d, lab))| -> Result<Vec<String>> {
            let mut out = Vec::new();
            let dec = involution_decompose(cfg, d)?;
            let mut rng = StdRng::seed_from_u64(seed.wrapping_add(i as u64));
            for _ in 0..runs_per_element {
                let other = involution_decompose_with(cfg, d, |o| rng.gen_range(0..o.len()))?;
                if other != dec {
                    out.push(format!("{}: two decompositions", d.word()));
                }
            }
            if a_value(d) != dec.t.len() {
                out.push(format!(
                    "{}: a = {} but #T = {}",
                    d.word(),
                    a_value(d),
                    dec.t.len()
                ));
            }
            let xt = BasisElement::from_reduced_word(cfg, &dec.x.concat(&Word::iota(&dec.t)))?;
            let full = d.word().support().len() == n;
            if !full && labels(cfg, &xt)?.right_cell() != lab.right_cell() {
                out.push(format!("{} not right equivalent to x·ι(T)", d.word()));
            }
            for s in cfg.right_descents(xt.word()) {
                if cancellable(cfg, &xt, s, End::Right)?.is_some() {
                    out.push(format!("{}: s{s} right cancellable in x·ι(T)", d.word()));
                }
            }
            if n % 2 == 1 && full {
                out.push(format!("{} has full support", d.word()));
            }
            Ok(out)
        })
        .collect::<Result<Vec<_>>>()?
        .concat();
    Ok(Check::new(
        &format!("involutions n={n}"),
        &fails,
        invs.len(),
    ))
}

/// Each right cell met at the horizon holds exactly one involution, except
/// the cells of non-involution M elements, which hold none.
pub fn right_cells(corpus: &Corpus) -> Result<Check> {
    let cfg = &corpus.cfg;
    let mut fails = Vec::new();
    let mut by_cell: HashMap<(TwoSidedLabel, Vec<_>), Vec<&BasisElement>> = HashMap::new();
    for (b, l) in corpus.pairs() {
        if is_involution(cfg, b) {
            by_cell
                .entry((l.two_sided, l.right_pattern.iter().copied().collect()))
                .or_default()
                .push(b);
        }
    }
    for ((t, _), ds) in &by_cell {
        if ds.len() > 1 {
            fails.push(format!("{t}: {} involutions in one right cell", ds.len()));
        }
    }
    let all: Vec<(&BasisElement, &CellLabels)> = corpus.pairs().collect();
    let results = all
        .par_iter()
        .map(|(b, _)| right_cell_involution(cfg, b))
        .collect::<Result<Vec<_>>>()?;
    for ((b, l), r) in all.iter().zip(results) {
        let key = (
            l.two_sided,
            l.right_pattern.iter().copied().collect::<Vec<_>>(),
        );
        match (r, l.two_sided) {
            (RightCellInvolution::NoInvolution, TwoSidedLabel::MElem { factors, .. })
                if factors % 2 == 0 =>
            {
                if by_cell.contains_key(&key) {
                    fails.push(format!("{}: involution in an M cell without one", b.word()));
                }
            }
            (RightCellInvolution::NoInvolution, t) => {
                fails.push(format!("{}: no involution in {t}", b.word()))
            }
            (RightCellInvolution::Involution(d), _) => {
                if d.len() <= corpus.max_len() {
                    let present = by_cell
                        .get(&key)
                        .is_some_and(|v| v.iter().any(|e| e.word() == &d));
                    if !present {
                        fails.push(format!(
                            "{}: involution {d} not found at the horizon",
                            b.word()
                        ));
                    }
                }
                if is_involution(cfg, b) && &d != b.word() {
                    fails.push(format!("involution {} maps to {d}", b.word()));
                }
            }
        }
    }
    Ok(Check::new(
        &format!("right cells n={}", cfg.n()),
        &fails,
        all.len(),
    ))
}

/// Round trip of the canonical word through the diagram.
pub fn word_round_trip(corpus: &Corpus) -> Result<Check> {
    let mut fails = Vec::new();
    for b in corpus.elements() {
        let e = fc_evaluate(&corpus.cfg, b.word())?;
        if e.exponent != 0 || e.element != *b {
            fails.push(b.word().to_string());
        }
    }
    Ok(Check::new(
        &format!("word round trip n={}", corpus.cfg.n()),
        &fails,
        corpus.labels.len(),
    ))
}

/// Two-sided labels are those of `reduce_to_q` endpoints.
pub fn labels_consistent(corpus: &Corpus) -> Result<Check> {
    let mut fails = Vec::new();
    for (b, l) in corpus.pairs() {
        let q = reduce_to_q(&corpus.cfg, b)?.q;
        if a_value(&q) != l.a_value {
            fails.push(format!("{}: a differs from its Q endpoint", b.word()));
        }
    }
    Ok(Check::new(
        &format!("label consistency n={}", corpus.cfg.n()),
        &fails,
        corpus.labels.len(),
    ))
}

/// Everything at once, for the command line.
pub fn run_all(n: usize, max_len: usize, seed: u64) -> Result<Vec<Check>> {
    let cfg = GroupConfig::new(n)?;
    let corpus = Corpus::build(&cfg, max_len)?;
    Ok(vec![
        presentation(n)?,
        engine_equivalence(&cfg, max_len.min(4))?,
        faithfulness(&corpus),
        word_round_trip(&corpus)?,
        straighten_round_trip(&corpus)?,
        nu_statistics(&corpus)?,
        a_function(&corpus, max_len.min(10))?,
        a_monotone(&corpus, 1000, seed)?,
        q_scan(&corpus)?,
        neighbour_classes(&cfg, max_len)?,
        reduce_order_independence(&corpus, 1000, seed)?,
        a_constant(&corpus),
        labels_consistent(&corpus)?,
        involutions(&corpus, 3, seed)?,
        right_cells(&corpus)?,
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_rank_passes() {
        for n in 3..=5 {
            for c in run_all(n, 6, 7).unwrap() {
                assert!(c.passed, "{}: {}", c.name, c.detail);
            }
        }
    }

    #[test]
    fn failure_detail_names_first_case() {
        let c = Check::new("x", &["a".into(), "b".into()], 5);
        assert!(!c.passed);
        assert_eq!(c.detail, "2 of 5 failed; first: a");
    }
}
