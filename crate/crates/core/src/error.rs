use thiserror::Error;

/// Errors raised by the engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("number of generators must be at least 3 (got {0})")]
    TooFewGenerators(usize),

    #[error("number of generators must be at most {max} (got {got})")]
    TooManyGenerators { got: usize, max: usize },

    #[error("generator index {index} out of range 1..={n}")]
    GeneratorOutOfRange { index: usize, n: usize },

    #[error("mismatched number of generators: {left} vs {right}")]
    MismatchedRank { left: usize, right: usize },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("invalid diagram: {0}")]
    InvalidDiagram(String),

    #[error("diagram is not admissible")]
    Inadmissible,

    #[error("diagram is already straight")]
    AlreadyStraight,

    #[error("internal consistency check failed: {0}")]
    Internal(String),

    #[error("length {len} exceeds the brute-force bound {bound}")]
    BoundExceeded { len: usize, bound: usize },

    #[error("enumeration exceeded the element cap of {0}")]
    CapExceeded(usize),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    /// Stable machine-readable name of the variant.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::TooFewGenerators(_) => "too_few_generators",
            Error::TooManyGenerators { .. } => "too_many_generators",
            Error::GeneratorOutOfRange { .. } => "generator_out_of_range",
            Error::MismatchedRank { .. } => "mismatched_rank",
            Error::Precondition(_) => "precondition",
            Error::InvalidDiagram(_) => "invalid_diagram",
            Error::Inadmissible => "inadmissible",
            Error::AlreadyStraight => "already_straight",
            Error::Internal(_) => "internal",
            Error::BoundExceeded { .. } => "bound_exceeded",
            Error::CapExceeded(_) => "cap_exceeded",
            Error::Parse(_) => "parse",
        }
    }
}
