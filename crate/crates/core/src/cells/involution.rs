use serde::{Deserialize, Serialize};

use super::{cancellable, labels, TwoSidedLabel};
use crate::algebra::{fc_evaluate, BasisElement};
use crate::coxeter::{AffinePermutation, GenSet, Generator, GroupConfig, Word};
use crate::error::{Error, Result};
use crate::straighten::End;

pub fn is_involution(cfg: &GroupConfig, b: &BasisElement) -> bool {
    AffinePermutation::from_word(cfg, b.word()).is_involution()
}

/// `d = x · ι(T) · x⁻¹` with lengths adding up.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvolutionDecomposition {
    pub x: Word,
    pub t: GenSet,
}

impl InvolutionDecomposition {
    pub fn word(&self) -> Word {
        self.x
            .concat(&Word::iota(&self.t))
            .concat(&self.x.reversed())
    }
}

pub fn involution_decompose(
    cfg: &GroupConfig,
    b: &BasisElement,
) -> Result<InvolutionDecomposition> {
    involution_decompose_with(cfg, b, |_| 0)
}

/// Peels `s … s` off both ends while `s ∈ L(w)` and `s ∈ R(sw)`; `choose`
/// picks among the admissible `s` (index into the ascending list).
pub fn involution_decompose_with(
    cfg: &GroupConfig,
    b: &BasisElement,
    mut choose: impl FnMut(&[Generator]) -> usize,
) -> Result<InvolutionDecomposition> {
    if !is_involution(cfg, b) {
        return Err(Error::Precondition(format!(
            "{} is not an involution",
            b.word()
        )));
    }
    let mut w = b.word().clone();
    let mut x = Word::empty();
    while !cfg.is_independent(&w.support()) {
        let options: Vec<(Generator, Word)> = cfg
            .left_descents(&w)
            .into_iter()
            .filter_map(|s| {
                let sw = cfg.strip_front(&w, s)?;
                cfg.strip_back(&sw, s).map(|inner| (s, inner))
            })
            .collect();
        if options.is_empty() {
            return Err(Error::Internal(format!(
                "involution core {w} cannot be peeled"
            )));
        }
        let letters: Vec<Generator> = options.iter().map(|o| o.0).collect();
        let (s, inner) = options[choose(&letters).min(options.len() - 1)].clone();
        x.push(s);
        w = inner;
    }
    let out = InvolutionDecomposition {
        x: cfg.normal_form(&x),
        t: w.support(),
    };
    let check = fc_evaluate(cfg, &out.word())?;
    if !check.is_reduced_fc(b.length()) || check.element != *b {
        return Err(Error::Internal(format!(
            "decomposition of {} does not restack",
            b.word()
        )));
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum RightCellInvolution {
    Involution(Word),
    /// Cells `{ι(M_a)ι(M_b)···}` with an even number of factors contain no
    /// involution.
    NoInvolution,
}

/// The involution lying in the right cell of `b`.
pub fn right_cell_involution(cfg: &GroupConfig, b: &BasisElement) -> Result<RightCellInvolution> {
    let lab = labels(cfg, b)?;
    let k = match lab.two_sided {
        TwoSidedLabel::MElem { factors, .. } if factors % 2 == 0 => {
            return Ok(RightCellInvolution::NoInvolution)
        }
        TwoSidedLabel::MElem { factors, .. } => factors,
        TwoSidedLabel::Small(_) => 1,
    };
    let mut x = b.clone();
    'outer: loop {
        for s in cfg.right_descents(x.word()) {
            if cancellable(cfg, &x, s, End::Right)?.is_some() {
                let short = cfg.strip_back(x.word(), s).expect("descent");
                x = fc_evaluate(cfg, &short)?.element;
                continue 'outer;
            }
        }
        break;
    }
    let groups = cfg.right_decomposition(x.word()).groups;
    let split = groups.len().saturating_sub(k);
    let word_of = |gs: &[GenSet]| {
        gs.iter()
            .fold(Word::empty(), |acc, g| acc.concat(&Word::iota(g)))
    };
    let y = word_of(&groups[..split]);
    let core = word_of(&groups[split..]);
    let d = y.concat(&core).concat(&y.reversed());
    let e = fc_evaluate(cfg, &d)?;
    if !e.is_reduced_fc(d.len()) || !is_involution(cfg, &e.element) {
        return Err(Error::Internal(format!("{d} is not a reduced involution")));
    }
    let dl = labels(cfg, &e.element)?;
    if dl.right_cell() != lab.right_cell() {
        return Err(Error::Internal(format!(
            "{d} left the right cell of {}",
            b.word()
        )));
    }
    Ok(RightCellInvolution::Involution(e.element.word().clone()))
}
