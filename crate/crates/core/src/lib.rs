//! Exact computation engine for the affine Temperley–Lieb algebra of type Ã_{n-1}.

pub mod algebra;
pub mod cells;
pub mod coxeter;
pub mod diagram;
pub mod enumerate;
pub mod error;
pub mod laurent;
pub mod straighten;
pub mod verify;

pub use algebra::{
    fc_evaluate, rewrite_mul_basis, rewrite_mul_words, AlgebraElement, BasisElement, Evaluation,
    Rewrite,
};
pub use cells::{CellLabels, MSet, TwoSidedLabel};
pub use coxeter::{AffinePermutation, GenSet, Generator, GroupConfig, Word};
pub use diagram::{AffineDiagram, Arc, NodeRef, ProductResult, Side, Violation};
pub use error::{Error, Result};
pub use laurent::LaurentPoly;
