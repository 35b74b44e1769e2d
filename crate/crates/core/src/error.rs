use thiserror::Error;

/// Errors produced by matrix parsing, linear algebra and the counting routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {reason}")]
    Format { line: usize, reason: String },

    #[error("matrix has rank {found}, expected full row rank {expected}")]
    Rank { found: usize, expected: usize },

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("invalid column index set: {0}")]
    Index(String),

    #[error("invalid argument: {0}")]
    Argument(String),

    #[error("inconsistent weight enumerator: {0}")]
    Consistency(String),

    #[error("internal invariant violated: {0}")]
    Invariant(String),

    #[error("code contains only the zero codeword; minimum distance is undefined")]
    UndefinedDistance,

    #[error("condition 3d*/2 > max(k, n-k) not met: {0}")]
    Condition(String),

    #[error("{what} needs {needed} steps, over the budget of {budget}")]
    Budget {
        what: &'static str,
        needed: String,
        budget: u64,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
