//! Error taxonomy shared by every module of the crate.

/// Failure categories for graph construction, growth and analysis.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// A precondition on an argument was violated.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// A growth step named a triangle that is not currently choosable.
    #[error("invalid choice: {0}")]
    InvalidChoice(String),

    /// The input graph is outside the operation's domain (e.g. disconnected).
    #[error("domain error: {0}")]
    Domain(String),

    /// An exponential operation was asked to run above its size cap.
    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),

    /// An iterative numerical routine did not converge; carries the residual.
    #[error("numerical error: off-diagonal residual {residual:e} after {sweeps} sweeps")]
    Numerical { residual: f64, sweeps: usize },

    /// Malformed input text (edge list, DOT, state JSON).
    #[error("format error: {0}")]
    Format(String),
}

pub type Result<T> = std::result::Result<T, Error>;
