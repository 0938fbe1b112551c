use alloc::string::String;

/// Errors raised by the engine.
///
/// Every variant names what was violated so that callers (the CLI in
/// particular) can print a one-line diagnostic without extra context.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("coordinate count mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("frame index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },

    #[error("cannot parse {0:?} as a rational")]
    ParseRational(String),

    #[error("cannot parse ring expression {input:?}: {reason}")]
    ParseRing { input: String, reason: String },

    #[error("invalid manifold: {0}")]
    InvalidSpec(String),

    #[error("metric is singular")]
    SingularMetric,

    #[error("frame of {0:?} has no coordinate realization; only constant components can be differentiated")]
    NoRealization(String),

    #[error("connection was not computed from this manifold")]
    MismatchedConnection,

    #[error("manifold {0:?} is not Kenmotsu")]
    NotKenmotsu(String),

    #[error("tensor is not symmetric at ({0}, {1})")]
    NotSymmetric(usize, usize),

    #[error("torse-forming analysis requires a non-vanishing field")]
    VanishingField,

    #[error("no constant solution: {0}")]
    NonConstantSolution(String),

    #[error("{0}")]
    ParamsMismatch(&'static str),

    #[error("field {name:?} has {found} components, manifold dimension is {dim}")]
    FieldShape { name: String, found: usize, dim: usize },
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
