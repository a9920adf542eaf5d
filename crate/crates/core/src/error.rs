use thiserror::Error;

/// Failures that prevent an operation from producing an answer.
///
/// Law violations are not errors; they come back as [`crate::Outcome::Fail`]
/// with a witness.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed or inconsistent input: mismatched arities, out-of-range
    /// indices, violated preconditions.
    #[error("input error: {0}")]
    Input(String),

    /// A bounded search ran past its configured limit.
    #[error("capacity error: {what} exceeded the cap of {cap} (reached {reached})")]
    Capacity {
        what: &'static str,
        cap: usize,
        reached: usize,
    },

    /// An internal consistency assertion failed. Indicates a defect, not bad input.
    #[error("inconsistency: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn input<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Input(msg.into()))
}
