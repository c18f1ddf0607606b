use thiserror::Error;

/// Everything that can go wrong in the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("malformed word: {0}")]
    MalformedWord(String),
    #[error("not a reduced word of the longest element: {0}")]
    NotLongest(String),
    #[error("move not applicable at position {pos}")]
    MoveNotApplicable { pos: usize },
    #[error("value out of range: {0}")]
    OutOfRange(String),
    #[error("words are not 2-move equivalent")]
    ClassMismatch,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("malformed weight: {0}")]
    MalformedWeight(String),
    #[error("polyhedron is empty")]
    Infeasible,
    #[error("polyhedron is unbounded")]
    Unbounded,
    #[error("polyhedron is not full-dimensional")]
    NotFullDimensional,
    #[error("lattice enumeration exceeded {0} candidates")]
    TooManyPoints(u64),
    #[error("time budget exceeded")]
    BudgetExceeded,
    #[error("word is not built by extensions at zero")]
    NotExtensionBuilt,
    #[error("invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;
