use thiserror::Error;

/// Failure modes shared by every computation in the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A Gamma argument or Pochhammer factor sits on a pole.
    #[error("pole: {0}")]
    Pole(String),
    #[error("zero divisor: {0}")]
    ZeroDivisor(String),
    /// Inputs outside the operation's domain (strip, k < alpha + 1, ...).
    #[error("precondition violated: {0}")]
    Domain(String),
    #[error("mode mismatch: {0}")]
    ModeMismatch(String),
    #[error("series diverges: {0}")]
    Divergence(String),
    #[error("no convergence: {0}")]
    NonConvergence(String),
    #[error("tolerance not met: achieved error bound {achieved:e}, required {required:e}")]
    Tolerance { achieved: f64, required: f64 },
    #[error("enumeration cap exceeded: {0}")]
    CapExceeded(String),
}

impl Error {
    /// True for failures of the numerics rather than of the inputs.
    pub fn is_numerical(&self) -> bool {
        matches!(self, Error::NonConvergence(_) | Error::Tolerance { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;
