use thiserror::Error;

/// Errors raised by the evaluation, sampling and verification routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// The argument lies outside the mathematical domain of the function.
    #[error("domain error: {0}")]
    Domain(String),

    /// A parameter violates the documented constraints.
    #[error("invalid parameter: {0}")]
    Parameter(String),

    /// The power series would lose too many digits to cancellation at this
    /// argument. The quadrature oracles cover this region.
    #[error(
        "argument outside the validated series domain (cancellation estimate {condition:.3e} \
         exceeds {limit:.1e}); evaluate with the quadrature oracle instead"
    )]
    Cancellation { condition: f64, limit: f64 },

    /// An iterative method stopped before reaching its tolerance.
    #[error("no convergence after {terms} terms ({reason}); partial value {partial}")]
    Convergence {
        partial: f64,
        terms: usize,
        reason: String,
    },

    /// A numerical configuration (grid, tolerance) cannot resolve the problem.
    #[error("configuration error: {0}")]
    Configuration(String),
}

impl Error {
    pub(crate) fn param(msg: impl Into<String>) -> Self {
        Error::Parameter(msg.into())
    }

    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;

/// Rejects NaN and infinities with a parameter error naming the argument.
pub(crate) fn require_finite(name: &str, value: f64) -> Result<()> {
    if value.is_finite() {
        Ok(())
    } else {
        Err(Error::param(format!("{name} must be finite, got {value}")))
    }
}
