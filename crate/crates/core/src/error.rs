use crate::special::PoleError;
use thiserror::Error;

/// Everything that can go wrong in this crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error(transparent)]
    Pole(#[from] PoleError),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("no convergence: {0}")]
    NoConvergence(String),
    #[error("divergent series: {0}")]
    DivergentSeries(String),
    #[error("cannot combine circular and hyperbolic spectral forms")]
    FamilyMismatch,
    #[error("unknown catalog entry `{0}`")]
    UnknownEntry(String),
    #[error("integrand domain error: {0}")]
    IntegrandDomain(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("non-finite value: {0}")]
    NonFinite(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
