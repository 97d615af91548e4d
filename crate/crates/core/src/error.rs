use thiserror::Error;

/// Errors shared across the whole crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("argument {0} is outside the function domain")]
    OutOfDomain(String),
    #[error("cannot decide ordering of surds with radicals sqrt({0}) and sqrt({1})")]
    UnsupportedRadicalPair(u64, u64),
    #[error("hypersurface degree must be >= 1, got {0}")]
    InvalidDegree(i64),
    #[error("lattice rank {expected} does not match vector length {got}")]
    RankMismatch { expected: usize, got: usize },
    #[error("expected a character on a surface (dim 2), got dim {0}")]
    WrongDimension(usize),
    #[error("operation requires a character on P^3")]
    WrongVariety,
    #[error("character has rank zero")]
    RankZero,
    #[error("wall endpoints do not straddle beta = 0")]
    StraddleViolation,
    #[error("{0}")]
    DomainError(String),
    #[error("parse error: {0}")]
    ParseError(String),
}

pub type Result<T> = std::result::Result<T, Error>;
