use thiserror::Error;

/// Errors produced by the carrymap library.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum Error {
    /// Matrix dimensions incompatible with the requested operation.
    #[error("shape mismatch: left is {lhs_rows}x{lhs_cols}, right is {rhs_rows}x{rhs_cols}")]
    ShapeMismatch {
        lhs_rows: usize,
        lhs_cols: usize,
        rhs_rows: usize,
        rhs_cols: usize,
    },

    /// A square matrix was required.
    #[error("matrix is {rows}x{cols}, but a square matrix is required")]
    NotSquare { rows: usize, cols: usize },

    /// An argument lies outside the mathematical domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A value that should be provably zero came out nonzero. This signals
    /// a bug in the library, never bad input.
    #[error("internal consistency failure: {0}")]
    Consistency(String),

    /// Malformed textual input ("p/q" scalars, coefficient lists, JSON).
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
