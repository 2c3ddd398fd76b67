use std::collections::{BTreeSet, HashMap};

use afftl_core::cells::{
    a_bruteforce, a_value, census, classify_q, involution_decompose, is_involution, labels,
    q_membership, q_shape, reduce_to_q, right_cell_involution, FactorReading, RightCellInvolution,
    TwoSidedLabel,
};
use afftl_core::coxeter::{AffinePermutation, GroupConfig, Word};
use afftl_core::enumerate::enumerate_levels;
use afftl_core::{fc_evaluate, BasisElement, Generator};
use proptest::prelude::*;

fn fc_element(n: usize, raw: &[usize]) -> BasisElement {
    let cfg = GroupConfig::new(n).unwrap();
    let mut w = Word::empty();
    let mut perm = AffinePermutation::identity(n);
    for &r in raw {
        let s = (r % n + 1) as Generator;
        let mut next = perm.clone();
        next.right_multiply(s);
        if next.length() == perm.length() + 1 && next.is_321_avoiding() {
            perm = next;
            w.push(s);
        }
    }
    BasisElement::from_reduced_word(&cfg, &w).unwrap()
}

fn elements(n: usize, max_len: usize) -> Vec<BasisElement> {
    let cfg = GroupConfig::new(n).unwrap();
    enumerate_levels(&cfg, max_len, usize::MAX, 0)
        .unwrap()
        .into_iter()
        .flatten()
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn a_value_matches_definition(n in 3usize..=6, raw in prop::collection::vec(0usize..64, 0..12)) {
        let cfg = GroupConfig::new(n).unwrap();
        let b = fc_element(n, &raw);
        let brute = a_bruteforce(&cfg, b.word(), 12, FactorReading::Contiguous).unwrap();
        prop_assert_eq!(a_value(&b), brute);
        prop_assert!(brute <= a_bruteforce(&cfg, b.word(), 12, FactorReading::Subword).unwrap());
    }

    #[test]
    fn reduction_lands_in_q_with_the_same_a(n in 3usize..=6, raw in prop::collection::vec(0usize..64, 0..12)) {
        let cfg = GroupConfig::new(n).unwrap();
        let b = fc_element(n, &raw);
        let r = reduce_to_q(&cfg, &b).unwrap();
        prop_assert!(q_membership(&cfg, &r.q).unwrap());
        prop_assert_eq!(a_value(&r.q), a_value(&b));
        prop_assert_eq!(r.q.length() + r.trace.len(), b.length());
        let l = labels(&cfg, &b).unwrap();
        prop_assert_eq!(l.right_pattern.len(), l.a_value);
        prop_assert_eq!(l.left_pattern.len(), l.a_value);
        let json = serde_json::to_string(&l).unwrap();
        prop_assert_eq!(serde_json::from_str::<afftl_core::CellLabels>(&json).unwrap(), l);
    }

    #[test]
    fn involution_decomposition_restacks(n in 3usize..=6, raw in prop::collection::vec(0usize..64, 0..8)) {
        let cfg = GroupConfig::new(n).unwrap();
        let x = fc_element(n, &raw);
        // x·x⁻¹ collapses; x·s·x⁻¹ is an involution whenever it is reduced and FC.
        for s in cfg.generators() {
            let w = x.word().concat(&Word::new(vec![s])).concat(&x.word().reversed());
            let e = fc_evaluate(&cfg, &w).unwrap();
            if !e.is_reduced_fc(w.len()) {
                continue;
            }
            prop_assert!(is_involution(&cfg, &e.element));
            let d = involution_decompose(&cfg, &e.element).unwrap();
            prop_assert_eq!(a_value(&e.element), d.t.len());
            prop_assert!(cfg.same_commutation_class(&d.word(), e.element.word()));
        }
    }
}

#[test]
fn q_scan_matches_the_list() {
    for n in 3..=6 {
        let cfg = GroupConfig::new(n).unwrap();
        for b in elements(n, 8) {
            assert_eq!(
                q_membership(&cfg, &b).unwrap(),
                q_shape(&cfg, &b).is_some(),
                "{}",
                b.word()
            );
        }
    }
}

#[test]
fn a_is_constant_on_two_sided_labels() {
    for n in 3..=6 {
        let cfg = GroupConfig::new(n).unwrap();
        let mut by: HashMap<TwoSidedLabel, BTreeSet<usize>> = HashMap::new();
        for b in elements(n, 8) {
            let l = labels(&cfg, &b).unwrap();
            by.entry(l.two_sided).or_default().insert(l.a_value);
        }
        assert!(by.values().all(|v| v.len() == 1), "{by:?}");
    }
}

/// Right-multiplication by single generators, restricted to a finite set,
/// connects only elements with equal right labels.
#[test]
fn multiplication_witnesses_respect_right_labels() {
    for n in [4, 5] {
        let cfg = GroupConfig::new(n).unwrap();
        let all = elements(n, 7);
        let index: HashMap<Vec<u8>, usize> =
            all.iter().enumerate().map(|(i, b)| (b.key(), i)).collect();
        let gens: Vec<BasisElement> = (1..=n)
            .map(|s| BasisElement::generator(n, s).unwrap())
            .collect();
        let mut reach: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); all.len()];
        for (i, b) in all.iter().enumerate() {
            for g in &gens {
                let (_, w) = b.multiply(g).unwrap();
                if let Some(&j) = index.get(&w.key()) {
                    reach[i].insert(j);
                }
            }
        }
        // Closure by repeated expansion; the sets are small.
        loop {
            let mut changed = false;
            for i in 0..all.len() {
                let extra: BTreeSet<usize> = reach[i]
                    .iter()
                    .flat_map(|&j| reach[j].iter().copied())
                    .collect();
                let before = reach[i].len();
                reach[i].extend(extra);
                changed |= reach[i].len() != before;
            }
            if !changed {
                break;
            }
        }
        let labs: Vec<_> = all.iter().map(|b| labels(&cfg, b).unwrap()).collect();
        let mut mutual = 0;
        for i in 0..all.len() {
            for &j in &reach[i] {
                if i != j && reach[j].contains(&i) {
                    mutual += 1;
                    assert_eq!(
                        labs[i].right_cell(),
                        labs[j].right_cell(),
                        "{} ~ {}",
                        all[i].word(),
                        all[j].word()
                    );
                }
            }
        }
        assert!(mutual > 0);
    }
}

#[test]
fn census_matches_binomials_at_small_rank() {
    let rows = census(&GroupConfig::new(5).unwrap(), 10, 0).unwrap();
    let get = |k| {
        rows.iter()
            .find(|r| r.two_sided == TwoSidedLabel::Small(k))
            .unwrap()
    };
    assert_eq!((get(1).left_cells, get(1).right_cells), (5, 5));
    assert_eq!((get(2).left_cells, get(2).right_cells), (10, 10));
}

#[test]
fn every_right_cell_has_its_involution() {
    for n in [4, 5] {
        let cfg = GroupConfig::new(n).unwrap();
        for b in elements(n, 7) {
            let l = labels(&cfg, &b).unwrap();
            match right_cell_involution(&cfg, &b).unwrap() {
                RightCellInvolution::Involution(d) => {
                    let d = BasisElement::from_reduced_word(&cfg, &d).unwrap();
                    assert!(is_involution(&cfg, &d));
                    assert_eq!(labels(&cfg, &d).unwrap().right_cell(), l.right_cell());
                }
                RightCellInvolution::NoInvolution => {
                    assert!(
                        matches!(l.two_sided, TwoSidedLabel::MElem { factors, .. } if factors % 2 == 0)
                    );
                }
            }
        }
    }
}

#[test]
fn odd_rank_involutions_miss_a_generator() {
    for n in [3, 5] {
        let cfg = GroupConfig::new(n).unwrap();
        for b in elements(n, 10) {
            if is_involution(&cfg, &b) {
                assert!(b.word().support().len() < n, "{}", b.word());
            }
        }
    }
}

#[test]
fn classify_rejects_elements_outside_q() {
    let cfg = GroupConfig::new(5).unwrap();
    let b = BasisElement::from_reduced_word(&cfg, &Word::from([1, 2])).unwrap();
    assert!(classify_q(&cfg, &b).is_err());
}
