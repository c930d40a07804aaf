use std::fmt;

/// Errors surfaced by the coordinate and silting layers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// The triple (r, n, m) is outside the admissible range.
    InvalidParams(String),
    /// A coordinate triple does not name an object (bad component index or
    /// a height constraint violation).
    InvalidCoord(String),
    /// The operation is only defined for X/Y components (heights, mouths).
    NotApplicable(String),
    /// A mesh move would step outside a ZA-infinity component.
    OffComponent,
    /// The operation needs an object of a Z component.
    NotZComponent(String),
    /// `lift` was applied to an object that is not right-orthogonal to the
    /// chosen Z object.
    NotOrthogonal(String),
    /// An internal cross-check of a derived closed form failed; the
    /// configuration cannot be trusted.
    Calibration(String),
    /// Malformed textual input.
    Parse(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidParams(s) => write!(f, "invalid parameters: {s}"),
            Error::InvalidCoord(s) => write!(f, "invalid coordinate: {s}"),
            Error::NotApplicable(s) => write!(f, "not applicable: {s}"),
            Error::OffComponent => write!(f, "mesh move leaves the component"),
            Error::NotZComponent(s) => write!(f, "expected a Z-component object: {s}"),
            Error::NotOrthogonal(s) => write!(f, "object is not orthogonal: {s}"),
            Error::Calibration(s) => write!(f, "calibration failure: {s}"),
            Error::Parse(s) => write!(f, "parse error: {s}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
