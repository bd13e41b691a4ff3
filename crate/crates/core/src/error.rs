use alloc::string::String;

/// Errors raised by the counting, geometry and bijection routines.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),
    /// Two computations that must agree did not. Points at a bug or a non-lattice input.
    #[error("integrity error: {0}")]
    Integrity(String),
    /// A documented precondition (e.g. genericity of a point) does not hold.
    #[error("precondition failed: {0}")]
    Precondition(String),
}

pub type Result<T, E = Error> = core::result::Result<T, E>;

macro_rules! domain {
    ($($arg:tt)*) => {
        $crate::error::Error::Domain(alloc::format!($($arg)*))
    };
}

macro_rules! integrity {
    ($($arg:tt)*) => {
        $crate::error::Error::Integrity(alloc::format!($($arg)*))
    };
}

pub(crate) use {domain, integrity};
