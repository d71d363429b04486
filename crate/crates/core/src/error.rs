use thiserror::Error;

pub type Result<T> = std::result::Result<T, DyckError>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DyckError {
    #[error("{name} must be at least 1")]
    NotPositive { name: &'static str },

    #[error("gcd({m}, {n}) = {gcd}, but the inputs must be coprime")]
    NotCoprime { m: u64, n: u64, gcd: u64 },

    #[error("({m}, {n}) does not fit the {method} method: {reason}")]
    MethodNotApplicable {
        m: u64,
        n: u64,
        method: &'static str,
        reason: &'static str,
    },

    #[error("index {index} is out of range: {reason}")]
    OutOfRange { index: u64, reason: String },

    #[error("path {0} is not a Dyck path")]
    NotDyck(String),

    #[error("invalid step {0:?}, expected 'x' or 'y'")]
    InvalidStep(char),

    #[error("a path word needs at least one step")]
    EmptyPath,

    #[error("{steps} steps exceeds the exhaustive-enumeration limit of {limit}")]
    EnumerationLimit { steps: u64, limit: u64 },

    #[error("expected {expected} values, got {got}")]
    Arity { expected: usize, got: usize },

    #[error("{what}: expected an integer, got {value}")]
    NonIntegral { what: String, value: String },

    #[error("cross-check failed for {what}: {left} != {right}")]
    Mismatch {
        what: String,
        left: String,
        right: String,
    },
}

impl DyckError {
    /// True for failures that mean the implementation disagrees with itself,
    /// as opposed to a caller handing in unsupported arguments.
    pub fn is_consistency_failure(&self) -> bool {
        matches!(self, DyckError::NonIntegral { .. } | DyckError::Mismatch { .. })
    }
}
