use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("{name} out of domain: {reason}")]
    Domain { name: &'static str, reason: String },

    /// A matrix failed a structural check (Hermiticity, positivity, trace).
    #[error("invalid state: {0}")]
    Validation(String),

    /// Integration produced a non-finite value.
    #[error("numerical failure at t = {t}: {what}")]
    Numerical { t: f64, what: String },
}

impl Error {
    pub(crate) fn domain(name: &'static str, reason: impl Into<String>) -> Self {
        Error::Domain {
            name,
            reason: reason.into(),
        }
    }
}
