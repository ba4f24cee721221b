use thiserror::Error;

/// Everything that can go wrong in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cover relations contain a directed cycle")]
    CycleDetected,
    #[error("index {index} out of range for a poset on {n} elements")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("rank {rank} exceeds the configured cap {cap}")]
    RankTooLarge { rank: usize, cap: usize },
    #[error("{size} elements exceeds the size cap {cap}")]
    SizeCapExceeded { size: usize, cap: usize },
    #[error("elements {0} and {1} are not comparable")]
    NotComparable(usize, usize),
    #[error("relation is not a partial order: {0}")]
    InvalidRelation(String),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("matrix is {rows}x{cols}, expected square")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is not unipotent upper triangular")]
    NotUnipotentUpperTriangular,
    #[error("incidence functions live on different posets")]
    PosetMismatch,
    #[error("incidence function has a non-integer value at ({0}, {1})")]
    NonIntegerValues(usize, usize),
    #[error("invalid cycle lengths: {0}")]
    InvalidLengths(String),
    #[error("invalid cycle type: {0}")]
    InvalidCycleType(String),
    #[error("inexact division in the polynomial ring")]
    InexactDivision,
    #[error("internal mismatch between independent routes: {0}")]
    InternalMismatch(String),
    #[error("factorization mismatch at rank {0}")]
    FactorizationMismatch(usize),
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
