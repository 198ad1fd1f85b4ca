use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("negative power of non-N variable `{0}`")]
    NegativeExponent(String),

    #[error("operation undefined on the zero polynomial")]
    ZeroPolynomial,

    #[error("polynomial contains the symbol N")]
    ContainsN,

    #[error("series argument has a nonzero constant term")]
    ConstantTerm,

    #[error("samples are inconsistent with a polynomial of total degree <= {0}")]
    InconsistentSamples(usize),

    #[error("sample grid does not determine a polynomial of total degree <= {0}")]
    Underdetermined(usize),

    #[error("polynomial is not divisible by {0}")]
    NotDivisible(String),

    #[error("singular matrix")]
    Singular,

    #[error("no such constellation exists: {0}")]
    NoSuchConstellation(String),

    #[error("partition sums to {sum}, expected {expected}")]
    SizeMismatch { sum: usize, expected: usize },

    #[error("invalid marking: {0}")]
    InvalidMarking(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
