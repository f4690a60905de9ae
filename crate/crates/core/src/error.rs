//! Error and result types shared by every module of the engine.
//!
//! Three failure categories exist, mirroring the three non-success exit
//! paths of the command-line front end:
//!
//! * [`Error::InvalidInput`] — the caller asked for something malformed or
//!   out of the supported parameter range (bad shape, non-injective map,
//!   unsupported family, …).
//! * [`Error::ResourceLimit`] — the request is well-formed but exceeds a
//!   configured enumeration or state cap (see [`crate::Limits`]).
//! * [`Error::Verification`] — a cross-check that is supposed to hold
//!   mathematically failed.  This is always reported as a hard error, never
//!   a warning.
//!
//! Internal consistency violations (e.g. an exact interpolation producing a
//! non-integer coefficient) are bugs, not user errors, and panic instead.

use std::fmt;

/// Failure category for every fallible operation in the crate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Malformed or out-of-range input.
    InvalidInput(String),
    /// A configured cap on enumeration size or DP state count was exceeded.
    ResourceLimit(String),
    /// A mathematical identity that was being checked did not hold.
    Verification(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidInput(msg) => write!(f, "invalid input: {msg}"),
            Error::ResourceLimit(msg) => write!(f, "resource limit exceeded: {msg}"),
            Error::Verification(msg) => write!(f, "verification failed: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Convenience constructor for [`Error::InvalidInput`].
pub fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidInput(msg.into())
}

/// Convenience constructor for [`Error::ResourceLimit`].
pub fn limit(msg: impl Into<String>) -> Error {
    Error::ResourceLimit(msg.into())
}

/// Convenience constructor for [`Error::Verification`].
pub fn verification(msg: impl Into<String>) -> Error {
    Error::Verification(msg.into())
}
