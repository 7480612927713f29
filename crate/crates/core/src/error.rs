use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension error: {0}")]
    Dimension(String),

    #[error("parse error: {0}")]
    Parse(String),

    /// The complement search was asked for an ambient space too large to scan.
    #[error("refusing to search F2^{n}: dimension exceeds the limit of {limit}")]
    SearchRefused { n: u32, limit: u32 },

    #[error("usage error: {0}")]
    Usage(String),
}

impl Error {
    pub(crate) fn dimension(msg: impl Into<String>) -> Self {
        Error::Dimension(msg.into())
    }

    pub(crate) fn parse(msg: impl Into<String>) -> Self {
        Error::Parse(msg.into())
    }
}
