//! Exact arithmetic over the monomial basis `{E_w : w ∈ W_c}`.
//!
//! Products are computed with diagrams. [`rewrite_mul_basis`] is a second,
//! purely word-level multiplication built from the defining relations and
//! Property R; it never touches a diagram and exists to cross-check the
//! first.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::coxeter::{Generator, GroupConfig, Word};
use crate::diagram::AffineDiagram;
use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::straighten::{stack, straighten};

/// A basis monomial `E_w`: its diagram together with the canonical word
/// produced by straightening.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BasisElement {
    diagram: AffineDiagram,
    word: Word,
}

impl BasisElement {
    pub fn from_diagram(diagram: AffineDiagram) -> Result<Self> {
        let word = straighten(&diagram)?.word;
        Ok(Self { diagram, word })
    }

    pub fn identity(n: usize) -> Result<Self> {
        Ok(Self {
            diagram: AffineDiagram::identity(n)?,
            word: Word::empty(),
        })
    }

    pub fn generator(n: usize, i: usize) -> Result<Self> {
        let diagram = AffineDiagram::generator(n, i)?;
        Ok(Self {
            diagram,
            word: Word::new(vec![i as Generator]),
        })
    }

    /// Basis element of a word already known to be reduced and fully
    /// commutative.
    pub fn from_reduced_word(cfg: &GroupConfig, w: &Word) -> Result<Self> {
        let e = fc_evaluate(cfg, w)?;
        if e.exponent != 0 || e.element.length() != w.len() {
            return Err(Error::Precondition(format!(
                "{w} is not a reduced fully commutative word"
            )));
        }
        Ok(e.element)
    }

    pub fn diagram(&self) -> &AffineDiagram {
        &self.diagram
    }

    pub fn word(&self) -> &Word {
        &self.word
    }

    pub fn n(&self) -> usize {
        self.diagram.n()
    }

    pub fn length(&self) -> usize {
        self.word.len()
    }

    pub fn key(&self) -> Vec<u8> {
        self.diagram.canonical_key()
    }

    /// `E_self · E_other = [2]^x E_result`.
    pub fn multiply(&self, other: &BasisElement) -> Result<(u32, BasisElement)> {
        let r = self.diagram.multiply(&other.diagram)?;
        Ok((r.contractible_loops, BasisElement::from_diagram(r.diagram)?))
    }
}

impl fmt::Display for BasisElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "E[{}]", self.word)
    }
}

/// `E_{word} = [2]^exponent · E_element`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Evaluation {
    pub exponent: u32,
    pub element: BasisElement,
}

impl Evaluation {
    /// True iff the evaluated word was a reduced word of a fully
    /// commutative element.
    pub fn is_reduced_fc(&self, word_len: usize) -> bool {
        self.exponent == 0 && self.element.length() == word_len
    }
}

/// Evaluates the monomial `E_{w_1}···E_{w_k}` by stacking diagrams.
pub fn fc_evaluate(cfg: &GroupConfig, w: &Word) -> Result<Evaluation> {
    let r = stack(cfg, w)?;
    Ok(Evaluation {
        exponent: r.contractible_loops,
        element: BasisElement::from_diagram(r.diagram)?,
    })
}

/// Word-engine result: `E_w · E_s = [2]^exponent E_word`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Rewrite {
    pub exponent: u32,
    pub word: Word,
}

/// `E_w · E_s` from the relations alone, for `w` a reduced word of a fully
/// commutative element:
///
/// 1. `s` a right descent of `w`: `[2]·E_w`;
/// 2. `w·s` reduced and fully commutative: `E_{ws}`;
/// 3. otherwise `w = w1·s·t·w2` by Property R, and
///    `E_{w1}E_sE_tE_{w2}E_s = E_{w1}E_sE_{w2}` is evaluated recursively.
pub fn rewrite_mul_basis(cfg: &GroupConfig, w: &Word, s: Generator) -> Result<Rewrite> {
    cfg.check(s as usize)?;
    if cfg.greedy_back(w, s).is_some() {
        return Ok(Rewrite {
            exponent: 1,
            word: w.clone(),
        });
    }
    match cfg.property_r_witness(w, s) {
        Err(Error::Precondition(_)) => {
            let mut word = w.clone();
            word.push(s);
            Ok(Rewrite { exponent: 0, word })
        }
        Err(e) => Err(e),
        Ok(r) => {
            let mut acc = rewrite_mul_basis(cfg, &r.w1, s)?;
            for &g in r.w2.letters() {
                let next = rewrite_mul_basis(cfg, &acc.word, g)?;
                acc = Rewrite {
                    exponent: acc.exponent + next.exponent,
                    word: next.word,
                };
            }
            Ok(acc)
        }
    }
}

/// Folds [`rewrite_mul_basis`] over the letters of `y`, starting from `x`.
pub fn rewrite_mul_words(cfg: &GroupConfig, x: &Word, y: &Word) -> Result<Rewrite> {
    let mut acc = Rewrite {
        exponent: 0,
        word: x.clone(),
    };
    for &g in y.letters() {
        let next = rewrite_mul_basis(cfg, &acc.word, g)?;
        acc = Rewrite {
            exponent: acc.exponent + next.exponent,
            word: next.word,
        };
    }
    Ok(acc)
}

/// A finite `ℤ[v, v⁻¹]`-linear combination of basis monomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraElement {
    n: usize,
    terms: BTreeMap<Vec<u8>, (BasisElement, LaurentPoly)>,
}

impl AlgebraElement {
    pub fn zero(n: usize) -> Result<Self> {
        GroupConfig::new(n)?;
        Ok(Self {
            n,
            terms: BTreeMap::new(),
        })
    }

    pub fn one(n: usize) -> Result<Self> {
        Ok(Self::basis(BasisElement::identity(n)?))
    }

    pub fn basis(b: BasisElement) -> Self {
        let mut e = Self {
            n: b.n(),
            terms: BTreeMap::new(),
        };
        e.add_term(b, LaurentPoly::one());
        e
    }

    /// The monomial `E_{w_1}···E_{w_k}` for an arbitrary word.
    pub fn from_word(cfg: &GroupConfig, w: &Word) -> Result<Self> {
        let e = fc_evaluate(cfg, w)?;
        let mut out = Self::zero(cfg.n())?;
        out.add_term(e.element, LaurentPoly::power_of_delta(e.exponent));
        Ok(out)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&BasisElement, &LaurentPoly)> {
        self.terms.values().map(|(b, c)| (b, c))
    }

    pub fn coefficient(&self, b: &BasisElement) -> LaurentPoly {
        self.terms
            .get(&b.key())
            .map(|(_, c)| c.clone())
            .unwrap_or_default()
    }

    pub fn add_term(&mut self, b: BasisElement, c: LaurentPoly) {
        assert_eq!(b.n(), self.n, "basis element of the wrong rank");
        let key = b.key();
        let entry = self
            .terms
            .entry(key.clone())
            .or_insert_with(|| (b, LaurentPoly::zero()));
        entry.1 += &c;
        if entry.1.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn add(&self, other: &AlgebraElement) -> Result<Self> {
        self.same_rank(other)?;
        let mut out = self.clone();
        for (b, c) in other.terms() {
            out.add_term(b.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, c: &LaurentPoly) -> Self {
        let mut out = Self {
            n: self.n,
            terms: BTreeMap::new(),
        };
        for (b, k) in self.terms() {
            out.add_term(b.clone(), k * c);
        }
        out
    }

    /// Bilinear extension of the diagram product.
    pub fn mul(&self, other: &AlgebraElement) -> Result<Self> {
        self.same_rank(other)?;
        let mut out = Self {
            n: self.n,
            terms: BTreeMap::new(),
        };
        for (a, ca) in self.terms() {
            for (b, cb) in other.terms() {
                let (x, prod) = a.multiply(b)?;
                let coeff = &(ca * cb) * &LaurentPoly::power_of_delta(x);
                out.add_term(prod, coeff);
            }
        }
        Ok(out)
    }

    fn same_rank(&self, other: &AlgebraElement) -> Result<()> {
        if self.n != other.n {
            return Err(Error::MismatchedRank {
                left: self.n,
                right: other.n,
            });
        }
        Ok(())
    }

    pub fn to_json_value(&self) -> ElementJson {
        ElementJson {
            n: self.n,
            terms: self
                .terms()
                .map(|(b, c)| TermJson {
                    coeff: c.clone(),
                    word: b.word().clone(),
                })
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_json_value()).expect("element serialization is infallible")
    }

    /// Loads an element, re-evaluating every word so that non-canonical or
    /// non-reduced input is normalized (picking up powers of `[2]`).
    pub fn from_json_value(json: &ElementJson) -> Result<Self> {
        let cfg = GroupConfig::new(json.n)?;
        let mut out = Self::zero(json.n)?;
        for t in &json.terms {
            let e = fc_evaluate(&cfg, &t.word)?;
            out.add_term(
                e.element,
                &t.coeff * &LaurentPoly::power_of_delta(e.exponent),
            );
        }
        Ok(out)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let json: ElementJson =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        Self::from_json_value(&json)
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (b, c)) in self.terms().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})·{b}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ElementJson {
    pub n: usize,
    pub terms: Vec<TermJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub coeff: LaurentPoly,
    pub word: Word,
}
