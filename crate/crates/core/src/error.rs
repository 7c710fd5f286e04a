use thiserror::Error;

/// Errors raised by the coorbit library.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    Dimension { expected: usize, found: usize },

    #[error("shape mismatch: expected {expected_rows}x{expected_cols}, found {rows}x{cols}")]
    Shape {
        expected_rows: usize,
        expected_cols: usize,
        rows: usize,
        cols: usize,
    },

    #[error("index out of range: {0}")]
    Index(String),

    #[error("weight family {family} cannot be evaluated on a {lattice} lattice point")]
    WeightMismatch {
        family: &'static str,
        lattice: &'static str,
    },

    #[error("lattice mismatch: {0}")]
    LatticeMismatch(String),

    #[error("invalid exponent p = {0}; expected 1 <= p <= inf")]
    InvalidExponent(f64),

    #[error("signal contains non-finite values")]
    NonFinite,

    #[error("signal must have positive length")]
    EmptySignal,

    #[error("invalid lattice: {0}")]
    InvalidLattice(String),

    #[error("invalid filter pair: {0}")]
    InvalidFilter(String),

    #[error(
        "frame is not tight (frame operator deviates from a scalar multiple of the identity by {deviation:e}); use the canonical dual window instead"
    )]
    NotTight { deviation: f64 },

    #[error("not a frame: smallest eigenvalue of the frame operator is {min_eigenvalue:e}")]
    NotAFrame { min_eigenvalue: f64 },

    #[error("frame is not Parseval (frame operator deviates from the identity by {deviation:e})")]
    NotParseval { deviation: f64 },

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("io error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(err: std::io::Error) -> Self {
        Error::Io(err.to_string())
    }
}
