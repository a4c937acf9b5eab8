use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("linear map is not invertible")]
    NotInvertible,

    #[error("index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },

    #[error("invalid basis: {0}")]
    InvalidBasis(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("generator mismatch between polynomials")]
    GeneratorMismatch,

    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),

    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),

    #[error("unknown catalog entry `{0}`")]
    UnknownCatalogEntry(String),

    #[error("invalid parameter `{name}`: {reason}")]
    InvalidParameter { name: String, reason: String },

    #[error("spec file error at {location}: {reason}")]
    SpecFile { location: String, reason: String },

    #[error("cannot access {path}: {reason}")]
    Io { path: String, reason: String },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn ensure_dim(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}
