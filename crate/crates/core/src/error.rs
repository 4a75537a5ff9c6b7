use alloc::string::String;

/// Errors raised by the algorithms in this crate.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// An argument is outside the operation's domain.
    #[error("invalid parameter: {0}")]
    Parameter(String),
    /// An exhaustive search or rejection loop ran out of budget.
    #[error("budget exhausted after {spent} units ({what})")]
    Budget { what: String, spent: u64 },
    /// A numeric function was evaluated where it is undefined.
    #[error("domain error: {0}")]
    Domain(String),
    /// The graph has loops or repeated edges but a simple graph is required.
    #[error("graph is not simple")]
    NotSimple,
}

pub type Result<T> = core::result::Result<T, Error>;

pub(crate) fn param(msg: impl Into<String>) -> Error {
    Error::Parameter(msg.into())
}
