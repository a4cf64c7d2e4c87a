use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Input outside the domain of the formula or kernel.
    #[error("domain error: {0}")]
    Domain(String),
    /// Request beyond what the implementation supports (e.g. degree too large).
    #[error("capability error: {0}")]
    Capability(String),
    /// A series did not reach the requested tolerance within its term budget.
    #[error("series truncated after {terms} terms; last term magnitude {last_term:e}")]
    Truncation { terms: usize, last_term: f64 },
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
