use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    /// The divisor does not divide the dividend in the Laurent ring. Every
    /// division performed by this crate is expected to be exact, so this
    /// error means an identity under test is false for the given input.
    #[error("non-exact division: ({num}) / ({den})")]
    NonExactDivision { num: String, den: String },

    #[error("two independent routes disagree for {what}: {left} vs {right}")]
    RouteMismatch {
        what: String,
        left: String,
        right: String,
    },

    #[error("precondition violated: {0}")]
    PreconditionViolation(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("unknown suite `{0}`")]
    UnknownSuite(String),

    #[error("bound exceeds hard ceiling: {0} (pass --unsafe-bounds to override)")]
    BoundExceeded(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
