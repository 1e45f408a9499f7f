use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("invalid quasi-pseudometric space:\n{0}")]
    InvalidSpace(String),

    #[error("invalid topology: {0}")]
    InvalidTopology(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("{what} is {actual}, above the cap of {cap}")]
    CapExceeded {
        what: &'static str,
        cap: usize,
        actual: usize,
    },

    #[error("arithmetic overflow: {0}")]
    Overflow(String),
}

impl Error {
    /// True for errors caused by a search or enumeration cap rather than bad input.
    pub fn is_resource(&self) -> bool {
        matches!(self, Error::CapExceeded { .. } | Error::Overflow(_))
    }
}
