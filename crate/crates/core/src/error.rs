use thiserror::Error;

/// Errors raised by constructors and checked operations. Verification
/// *failures* are not errors — checks return reports — so an `Error` always
/// means the input was malformed for the requested operation.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("basis index {index} out of range 1..={dim}")]
    IndexOutOfRange { index: usize, dim: usize },

    #[error("tensor slot {slot} out of range 1..={arity}")]
    SlotOutOfRange { slot: usize, arity: usize },

    #[error("structure constants must be keyed by strictly increasing triples, got {0:?}")]
    NonCanonicalTriple([usize; 3]),

    #[error("r-matrix is not skew-symmetric at entry ({i},{j})")]
    NotSkewSymmetric { i: usize, j: usize },

    #[error("coproduct component {component} is not fully antisymmetric")]
    NotAntisymmetric { component: usize },

    #[error("dual bracket table fails the fundamental identity at tuple {tuple:?}")]
    DualNotThreeLie { tuple: [usize; 5] },

    #[error("unknown catalog id `{0}`")]
    UnknownCatalogId(String),

    #[error("invalid input: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
