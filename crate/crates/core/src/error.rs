use thiserror::Error;

#[derive(Debug, Error)]
pub enum MatroidError {
    #[error("unknown element: {0}")]
    UnknownElement(String),
    #[error("label collision: {0}")]
    LabelCollision(String),
    #[error("contract and delete sets overlap")]
    OverlappingSets,
    #[error("not a basis")]
    NotABasis,
    #[error("not disjoint bases")]
    NotDisjointBases,
    #[error("pair is not upper-triangular")]
    NotUpperTriangular,
    #[error("not a spanning clique: {0}")]
    NotASpanningClique(String),
    #[error("bad parameters: {0}")]
    BadParameters(String),
    #[error("{0} is not a prime power")]
    NotAPrimePower(u32),
    #[error("dimension mismatch")]
    DimensionMismatch,
    #[error("ground sets differ")]
    GroundSetMismatch,
    #[error("ground set too large: {0} elements (max {max})", max = crate::mask::MAX_GROUND)]
    GroundSetTooLarge(usize),
    #[error("size limit exceeded: {size} > cap {cap}")]
    SizeLimitExceeded { size: usize, cap: usize },
    #[error("cap exceeded: {0}")]
    CapExceeded(String),
    #[error("precondition violated: {0}")]
    PreconditionViolation(String),
    #[error("hypothesis violated: {0}")]
    HypothesisViolation(String),
    #[error("invalid shift: {0}")]
    InvalidShift(String),
    #[error("not found within cap; residual elements: {0:?}")]
    NotFoundWithinCap(Vec<String>),
    #[error("schema error: {0}")]
    Schema(String),
}

pub type Result<T> = std::result::Result<T, MatroidError>;
