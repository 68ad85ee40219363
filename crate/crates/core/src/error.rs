use crate::coeff::CoeffError;
use crate::expr::ParseError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Coeff(#[from] CoeffError),
    #[error("unsupported word: {0}")]
    UnsupportedWord(String),
    #[error("division by a non-scalar expression at position {0}")]
    NonScalarDivisor(usize),
    #[error("negative power of a non-scalar expression at position {0}")]
    NegativePower(usize),
    #[error("index out of range: S_{{{n},{k}}}")]
    IndexOutOfRange { n: i64, k: i64 },
    #[error("alpha has no inverse")]
    AlphaNotInvertible,
    #[error("linear system is singular")]
    Singular,
    #[error("unsupported format `{0}`")]
    UnsupportedFormat(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
