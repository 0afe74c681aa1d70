use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("cannot factor zero")]
    ZeroInput,
    #[error("factorization incomplete: effort budget exhausted on {0}")]
    FactorizationIncomplete(String),
    #[error("oracle incomplete: {0}")]
    OracleIncomplete(String),
    #[error("polynomial must be nonzero")]
    ZeroPolynomial,
    #[error("polynomial must have degree at least 1")]
    ConstantPolynomial,
    #[error("threshold not met: m = {m} but m >= {required} is required")]
    ThresholdNotMet { m: String, required: String },
    #[error("{d} is not a unitary divisor of {value}")]
    NotUnitaryDivisor { d: String, value: String },
    #[error("cofactor |f(m)|/d = {0} must exceed 1")]
    TrivialCofactor(String),
    #[error("|f(m)|/d = {0} is not a prime power")]
    NotPrimePower(String),
    #[error("prime {p} divides d = {d}")]
    PrimeDividesD { p: String, d: String },
    #[error("hypothesis unsatisfiable: {0}")]
    HypothesisUnsatisfiable(String),
    #[error("{0} is not prime")]
    NotPrime(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("certificate rejected: {0}")]
    CertificateMismatch(String),
}

impl Error {
    /// True for failures caused by an exhausted effort budget rather than bad input.
    pub fn is_effort_exhausted(&self) -> bool {
        matches!(
            self,
            Error::FactorizationIncomplete(_) | Error::OracleIncomplete(_)
        )
    }
}
