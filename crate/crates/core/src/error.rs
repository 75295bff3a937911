use num_bigint::BigInt;
use thiserror::Error;

/// Failures raised by the algebra kernel and the procedures built on it.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ZeroDivisor: {0} satisfies H = 0 and has no inverse")]
    ZeroDivisor(String),
    #[error("IrrationalCoefficient: {0} has a coefficient outside the rationals")]
    IrrationalCoefficient(String),
    #[error("RadicandMismatch: cannot combine sqrt({left}) with sqrt({right})")]
    RadicandMismatch { left: BigInt, right: BigInt },
    #[error("NegativeRadicand: square root of the negative number {0}")]
    NegativeRadicand(String),
    #[error("DivisionByZero")]
    DivisionByZero,
    #[error("NotSimilar: {0} and {1} are not similar")]
    NotSimilar(String, String),
    #[error("NotPseudosimilar: {0} and {1} are not pseudosimilar")]
    NotPseudosimilar(String, String),
    #[error("InternalConsistency: {0}")]
    InternalConsistency(String),
}

impl Error {
    /// Stable identifier used on the CLI diagnostic stream.
    pub fn name(&self) -> &'static str {
        match self {
            Error::ZeroDivisor(_) => "ZeroDivisor",
            Error::IrrationalCoefficient(_) => "IrrationalCoefficient",
            Error::RadicandMismatch { .. } => "RadicandMismatch",
            Error::NegativeRadicand(_) => "NegativeRadicand",
            Error::DivisionByZero => "DivisionByZero",
            Error::NotSimilar(..) => "NotSimilar",
            Error::NotPseudosimilar(..) => "NotPseudosimilar",
            Error::InternalConsistency(_) => "InternalConsistency",
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
