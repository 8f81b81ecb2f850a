use thiserror::Error;

/// Errors raised by path, tableau and verification operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid character {ch:?} at index {index}")]
    InvalidCharacter { ch: char, index: usize },

    /// The step word dips below the axis or does not end at height zero.
    /// `index` is the 1-based step at which the violation is detected.
    #[error("not a Motzkin path: height invariant violated at step {index}")]
    NotAPath { index: usize },

    #[error("the all-level path has no cyclic descent set")]
    AllLevelPath,

    #[error("integer overflow computing {0}")]
    Overflow(&'static str),

    #[error("unknown step order {0:?}; expected one of UDL, ULD, LUD")]
    InvalidOrder(String),

    #[error("malformed path drawing: {0}")]
    MalformedDrawing(String),

    #[error("invalid descent set: {0}")]
    InvalidDescentSet(String),

    #[error("invalid skew shape: {0}")]
    InvalidShape(String),

    #[error("invalid tableau: {0}")]
    InvalidTableau(String),

    #[error("tableau shape {0} is not a three-row strip shape")]
    WrongShape(String),

    #[error("cell ({row},{col}) is not an inner corner")]
    NotAnInnerCorner { row: usize, col: usize },

    #[error("verification domain is empty")]
    DomainEmpty,

    #[error("shift left the family at {0}")]
    NonClosure(String),

    #[error("unknown suite {0:?}")]
    UnknownSuite(String),

    #[error("malformed report: {0}")]
    MalformedReport(String),
}

pub type Result<T> = std::result::Result<T, Error>;
