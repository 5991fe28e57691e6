use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RadoError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("too many columns for the columns-condition search: {k} > limit {limit}")]
    TooManyColumns { k: usize, limit: usize },

    #[error("malformed partition: {0}")]
    MalformedPartition(String),

    #[error("system parse error: {0}")]
    Parse(String),

    #[error("enumeration budget exceeded: {projected} candidates > budget {budget}")]
    BudgetExceeded { projected: u128, budget: u128 },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("invalid generators{}: element c*g_{i} + sum lambda_j g_j with lambda = {lambda:?} equals {value} <= 0", coordinate.map(|c| format!(" in coordinate {c}")).unwrap_or_default())]
    InvalidGenerators {
        coordinate: Option<usize>,
        /// 1-based generator index.
        i: usize,
        /// Coefficients of the generators after `i`.
        lambda: Vec<i64>,
        value: i64,
    },

    #[error("arithmetic overflow: {0}")]
    Overflow(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, RadoError>;
