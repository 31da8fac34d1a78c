use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid marking: {0}")]
    InvalidMarking(String),

    #[error("point {0} is not an in-point of the marking")]
    NotInPoint(usize),

    #[error("point {point} is out of range for a marking with {len} points")]
    PointOutOfRange { point: usize, len: usize },

    #[error("crossing query needs two distinct in-points, got {0} twice")]
    SamePoint(usize),

    #[error("chords at in-points {0} and {1} do not cross")]
    NotInterleaved(usize, usize),

    #[error("invalid matching: {0}")]
    InvalidMatching(String),

    #[error("marking {0} does not alternate")]
    NotAlternating(String),

    #[error("total turning of the matching is not an integer multiple of pi")]
    NonIntegralTurning,

    #[error("points {0} and {1} are not adjacent with equal signs")]
    BadSwitch(usize, usize),

    #[error("invalid site: {0}")]
    BadSite(String),

    #[error("euler class {euler} has the wrong parity for this marking")]
    EulerParity { euler: i64 },

    #[error("invalid inf element: {0}")]
    InvalidElement(String),

    #[error("dimension mismatch: expected {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("vector is not a cycle")]
    NotACycle,

    #[error("operation requires {0}")]
    Unsupported(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
