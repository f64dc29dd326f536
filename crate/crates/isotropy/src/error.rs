use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("matrix is singular: {0}")]
    Singular(String),
    #[error("invalid shape: {0}")]
    Shape(String),
    #[error("parity violation: {0}")]
    Parity(String),
    #[error("structure violation: {0}")]
    Structure(String),
    #[error("size limit exceeded: n = {n} > {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal identity failed: {0}")]
    Identity(String),
}

pub type Result<T> = std::result::Result<T, Error>;
