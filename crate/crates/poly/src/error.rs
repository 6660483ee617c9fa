use thiserror::Error;

#[derive(Debug, Error)]
pub enum PolyError {
    #[error("points are collinear")]
    Collinear,
    #[error("degenerate configuration: {0}")]
    Degenerate(String),
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("normalization has no solution: {0}")]
    Normalization(String),
    #[error("point lies in the indeterminacy locus")]
    Indeterminate,
    #[error("all {0} samples landed on common zeros")]
    Resample(usize),
    #[error("expansion would exceed {cap} terms (estimated {estimate})")]
    ExpansionCap { cap: usize, estimate: usize },
    #[error("no projective equivalence: {0}")]
    NoEquivalence(String),
    #[error("unexpected residual: {0}")]
    Residual(String),
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),
    #[error(transparent)]
    Core(#[from] cremona_core::Error),
}

pub type Result<T> = std::result::Result<T, PolyError>;
