//! Crate-wide error type.

use std::path::PathBuf;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// A precondition on an argument failed (e.g. too few levels).
    #[error("invalid parameter: {0}")]
    InvalidParam(String),

    /// Shapes of two values that must agree do not.
    #[error("dimension mismatch: {0}")]
    DimMismatch(String),

    /// Code file: first line is not "N M".
    #[error("{path}: malformed header: {detail}")]
    CodeHeader { path: PathBuf, detail: String },

    /// Code file: a data row contains a character other than '0' or '1'.
    #[error("{path}: row {row}: invalid character {found:?}, rows must consist of '0' and '1'")]
    CodeBadBit { path: PathBuf, row: usize, found: char },

    /// Code file: a data row has the wrong number of bits.
    #[error("{path}: row {row}: expected {expected} bits, found {found}")]
    CodeRowLength {
        path: PathBuf,
        row: usize,
        expected: usize,
        found: usize,
    },

    /// Code file: fewer or more lines than the header declares.
    #[error("{path}: expected {expected} code rows, {detail}")]
    CodeRowCount {
        path: PathBuf,
        expected: usize,
        detail: String,
    },

    /// Training produced a NaN or infinite loss.
    #[error("non-finite loss ({context})")]
    NonFiniteLoss { context: String },

    /// Config file parse or validation failure; the message names the key.
    #[error("config: {0}")]
    Config(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidParam(msg.into())
    }

    pub fn dim(msg: impl Into<String>) -> Self {
        Error::DimMismatch(msg.into())
    }

    pub fn config(msg: impl Into<String>) -> Self {
        Error::Config(msg.into())
    }
}
