use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("Yn requires n >= 3, got {0}")]
    InvalidDimension(usize),
    #[error("unknown class name `{0}`")]
    UnknownName(String),
    #[error("class `{name}` is not defined on {space}")]
    BasisMismatch { name: String, space: String },
    #[error("cannot parse `{0}`")]
    Parse(String),
    #[error("input is not half-integral")]
    NotHalfIntegral,
    #[error("matrix is singular")]
    Singular,
    #[error("dimension mismatch: {0}")]
    Shape(String),
}

pub type Result<T> = std::result::Result<T, Error>;
