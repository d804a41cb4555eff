use thiserror::Error;

/// Errors raised by the lattice, metric and closed-form layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeometryError {
    #[error("value {value} is outside the coordinate bound ±{bound}")]
    OutOfBound { value: String, bound: String },

    #[error("radius must be nonnegative, got {0}")]
    NegativeRadius(String),

    #[error("(u, v) = ({u}, {v}) is not a pixel: u and v must have the same parity")]
    Parity { u: String, v: String },

    #[error("radius {radius} exceeds the enumeration cap {cap}")]
    EnumerationCap { radius: String, cap: u64 },

    #[error("{0}")]
    Domain(&'static str),

    #[error("overlap rectangle contains no pixel")]
    DegenerateOverlap,

    #[error("regime precondition violated: {0}")]
    Regime(String),

    #[error("arithmetic overflow in exact evaluation")]
    Overflow,
}
