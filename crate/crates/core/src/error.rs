use crate::report::LawReport;

/// Errors surfaced by operations, law suites, and constructions.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// An input (or an intermediate value) fell outside the domain an
    /// operation is defined on — division by zero, a point outside a
    /// transform's half-line, a non-member handed to a checked entry point.
    #[error("domain: {0}")]
    Domain(String),

    /// Invalid configuration: unknown instance, zero dimension, a sampler
    /// that produced non-members, incompatible backend, malformed input.
    #[error("config: {0}")]
    Config(String),

    /// A time-augmented velocity with zero time component but a nonzero
    /// spatial component; no reparametrisation can represent it.
    #[error("singular velocity: zero time component with nonzero spatial component")]
    SingularVelocity,

    /// Numerical integration left the field's domain before reaching the
    /// requested parameter.
    #[error("flow escaped the field domain near parameter {exit}")]
    FlowEscape { exit: f64 },

    /// The boundary-value solver did not reach the residual tolerance.
    #[error("shooting failed to converge after {iterations} iterations (residual {residual:e})")]
    ShootingFailure { iterations: usize, residual: f64 },

    /// A construction that is only sound when certain laws hold refused to
    /// proceed; the failing report is attached.
    #[error("construction refused: `{law}` fails on {instance}")]
    LawFailure {
        instance: String,
        law: String,
        report: Box<LawReport>,
    },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    /// Shorthand used by instance formulas and front ends.
    pub fn domain(msg: impl Into<String>) -> Error {
        Error::Domain(msg.into())
    }

    pub fn config(msg: impl Into<String>) -> Error {
        Error::Config(msg.into())
    }
}
