use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OracleError {
    /// The level window is too small for the requested construction.
    Window(String),
    /// A walk is not a valid string, or a composition is undefined.
    UndefinedComposition(String),
    /// Two strings cannot be compared in the end-pointed order.
    NotComparable(String),
    /// A cross-check between the combinatorics and the engine failed.
    Calibration(String),
}

impl fmt::Display for OracleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OracleError::Window(s) => write!(f, "window escape: {s}"),
            OracleError::UndefinedComposition(s) => write!(f, "undefined composition: {s}"),
            OracleError::NotComparable(s) => write!(f, "not comparable: {s}"),
            OracleError::Calibration(s) => write!(f, "calibration failure: {s}"),
        }
    }
}

impl std::error::Error for OracleError {}

pub type Result<T> = std::result::Result<T, OracleError>;
