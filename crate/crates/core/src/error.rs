use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed partition or tuple text. `position` is a byte offset into the input.
    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("domain error: {0}")]
    Domain(String),

    /// An enumeration would exceed the configured term cap.
    #[error("enumeration cap exceeded: {terms} terms required, cap is {cap}")]
    CapExceeded { terms: String, cap: u64 },
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn parse(position: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            position,
            message: msg.into(),
        }
    }
}
