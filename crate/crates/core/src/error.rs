use thiserror::Error;

/// Errors raised by series arithmetic and the generating-function builders.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("series must have at least one variable")]
    ZeroDimension,
    #[error("dimension mismatch: expected {expected} variables, got {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("truncation caps differ: {left:?} vs {right:?}")]
    CapMismatch { left: Vec<u32>, right: Vec<u32> },
    #[error("exponent {exponent:?} lies outside the truncation cap {cap:?}")]
    OutOfCap { exponent: Vec<u32>, cap: Vec<u32> },
    #[error("constant term is not a unit; series is not invertible")]
    NotInvertible,
    #[error("substitution target exponent must be nonzero")]
    ZeroSubstitution,
    #[error("substitution source must be univariate, got {0} variables")]
    NotUnivariate(usize),
    #[error("source series is truncated at {available} but degree {needed} is required")]
    SourceCapTooSmall { available: u32, needed: u32 },
    #[error("argument term has zero monomial; exponential is defined on the augmentation ideal only")]
    Augmentation,
    #[error("invalid parameter: {0}")]
    Parameter(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
