use std::path::PathBuf;

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong between reading input and producing statistics.
///
/// The variants split into two families: input errors (files that cannot be
/// read or parsed) and validation errors (well-formed data that violates a
/// domain invariant). [`Error::is_input_error`] tells them apart.
#[derive(Debug, Error)]
pub enum Error {
    #[error("at least 2 spatial units are required, got {0}")]
    TooFewUnits(usize),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("distance matrix diagonal must be zero, found d[{index}][{index}] = {value}")]
    NonZeroDiagonal { index: usize, value: f64 },

    #[error("distance matrix is not symmetric: d[{i}][{j}] = {dij} but d[{j}][{i}] = {dji}")]
    Asymmetric { i: usize, j: usize, dij: f64, dji: f64 },

    #[error("off-diagonal distance must be positive, found d[{i}][{j}] = {value}")]
    NonPositiveOffDiagonal { i: usize, j: usize, value: f64 },

    #[error("non-finite value at position {0}")]
    NonFinite(usize),

    #[error("row {index} of the contiguity matrix sums to zero")]
    EmptyRow { index: usize },

    #[error("invalid kernel: {0}")]
    InvalidKernel(String),

    #[error("attribute has zero variance; standardization is undefined")]
    ZeroVariance,

    #[error("attribute has zero range; range normalization is undefined")]
    ZeroRange,

    #[error("attribute sums to zero; global normalization is undefined")]
    ZeroSum,

    #[error("label mismatch at position {index}: expected `{expected}`, found `{found}`")]
    LabelMismatch {
        index: usize,
        expected: String,
        found: String,
    },

    #[error("{path}:{line}: {message}")]
    Parse {
        path: PathBuf,
        line: u64,
        message: String,
    },

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    /// True for errors caused by unreadable or malformed input files.
    pub fn is_input_error(&self) -> bool {
        matches!(self, Error::Parse { .. } | Error::Io { .. })
    }
}
