use thiserror::Error;

/// Errors surfaced by the library. Identity failures are not errors; they are
/// reported through [`crate::report::CheckReport`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero coefficient")]
    DivisionByZero,
    #[error("{what} index {index} out of range 1..={max}")]
    IndexOutOfRange {
        what: &'static str,
        index: usize,
        max: usize,
    },
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("rank {0} is not supported (1..=7)")]
    UnsupportedRank(usize),
    #[error("relation system is singular: {0}")]
    Singular(String),
    #[error("rewrite rule does not decrease the order: {0}")]
    OrderViolation(String),
    #[error("configuration mismatch: {0}")]
    ConfigMismatch(String),
    #[error("term budget of {limit} exceeded while normal ordering")]
    TermBudget { limit: usize },
    #[error("invalid argument: {0}")]
    Invalid(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
