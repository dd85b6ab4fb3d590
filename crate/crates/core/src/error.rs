//! Error type shared by every module.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("variable count mismatch: {0} vs {1}")]
    NvarsMismatch(usize, usize),

    #[error("size mismatch between {0} and {1}")]
    SizeMismatch(String, String),

    #[error("invalid index: {0}")]
    InvalidIndex(String),

    #[error("index length {len} exceeds variable count {nvars}")]
    LengthExceedsVars { len: usize, nvars: usize },

    #[error("matrix is not unitriangular: diagonal entry at {0} is {1}")]
    NotUnitriangular(String, String),

    #[error("matrix has a zero diagonal entry at {0}")]
    SingularDiagonal(String),

    #[error("entry ({0}, {1}) violates the declared triangularity")]
    TriangularityViolation(String, String),

    #[error("{0} is not below {1} in this order")]
    Incomparable(String, String),

    #[error("element {0} is not in the poset ground set")]
    NotInPoset(String),

    #[error("chain length {0} exceeds the interval height")]
    BadChainLength(usize),

    #[error("degenerate parameter: {0}")]
    DegenerateParameter(String),

    #[error("normalization vanishes at t = {0} for index {1}")]
    NormalizationVanishes(String, String),

    #[error("input is not symmetric: exponents {0} and {1} carry different coefficients")]
    NotSymmetric(String, String),

    #[error("resource bound exceeded: {0}")]
    ResourceBound(String),

    #[error("basis elimination stalled at leading term {0}")]
    EliminationStalled(String),

    #[error("unknown suite: {0}")]
    UnknownSuite(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
