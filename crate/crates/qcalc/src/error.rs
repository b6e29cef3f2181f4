use thiserror::Error;

/// Errors raised by the exact kernel and the p-adic layer.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum QError {
    #[error("inexact polynomial division (nonzero remainder)")]
    InexactDivision,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("pole at the evaluation point")]
    PoleAtPoint,
    #[error("series constant term is not invertible")]
    NonInvertibleSeries,
    #[error("wrong number of sample values: need {need}, got {got}")]
    ArityError { need: usize, got: usize },
    #[error("index out of range: {0}")]
    IndexError(String),
    #[error("integrand has a q^(-x) term; the moment at -1 is logarithmic")]
    LogarithmicMoment,
    #[error("integrand is not a Laurent polynomial in q^x")]
    NotIntegrable,
    #[error("p-adic inverse of a non-unit")]
    NonUnit,
    #[error("p-adic precision exhausted")]
    PrecisionExhausted,
    #[error("tail valuation rate below 1; the series does not converge")]
    DivergentTail,
    #[error("unknown identity label: {0}")]
    UnknownIdentity(String),
    #[error("the given tuple does not falsify the identity")]
    NotACounterexample,
    #[error("inadmissible p-adic context: {0}")]
    Inadmissible(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, QError>;
