use thiserror::Error;

/// Errors from the simulation backend.
#[derive(Debug, Error)]
pub enum QsimError {
    /// A Hamiltonian parameter violates its domain constraint.
    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    /// An observable or region refers to sites outside the register.
    #[error("site index out of range: {0}")]
    SiteOutOfRange(String),

    /// Hilbert-space dimension exceeds the desk-scale guard.
    #[error("dimension {dim} exceeds the supported maximum {max}")]
    DimensionTooLarge { dim: usize, max: usize },

    /// Dimension of a state does not match the operator or basis.
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    /// The iterative eigensolver failed to converge.
    #[error("eigensolver did not converge after {iterations} iterations (residual {residual:.3e})")]
    NonConvergence { iterations: usize, residual: f64 },

    /// A state failed a normalization or orthogonality check.
    #[error("state validation failed: {0}")]
    InvalidState(String),
}
