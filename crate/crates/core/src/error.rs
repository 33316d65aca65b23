//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Malformed or out-of-contract input (bad CSV cell, invalid bounds,
    /// probabilities outside (0,1), unknown variable names, ...).
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// Ingestion failure with file coordinates (1-based row, column name or index).
    #[error("ingestion error at row {row}, column {column}: {message}")]
    Ingestion {
        row: usize,
        column: String,
        message: String,
    },

    /// Numerical failure (singular matrix, non-finite intermediate, ...).
    #[error("numerical error: {0}")]
    Numerical(String),

    /// Draw-archive format violation.
    #[error("archive error: {0}")]
    Archive(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    pub fn numerical(msg: impl Into<String>) -> Self {
        Error::Numerical(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
