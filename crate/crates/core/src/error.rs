use thiserror::Error;

/// Errors shared across the polynomial, extremum, root-finding and
/// verification layers.
#[derive(Debug, Error)]
pub enum Error {
    /// A scalar argument or coefficient was NaN/Inf or otherwise outside
    /// its documented domain.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// An operation that requires a nonzero (or non-constant) polynomial
    /// was handed a degenerate one.
    #[error("degenerate polynomial: {0}")]
    DegeneratePolynomial(String),

    /// The simultaneous root iteration hit its iteration cap. The best
    /// iterate is carried so callers can inspect how close it got.
    #[error("root finding did not converge after {iterations} iterations (worst residual {worst_residual:.3e})")]
    NonConvergence {
        iterations: usize,
        worst_residual: f64,
        best: crate::zeros::RootSet,
    },

    /// A bound was evaluated outside the hypotheses under which it is
    /// stated (for example `|a_n| - m/k^n` negative beyond tolerance).
    #[error("hypothesis violation: {0}")]
    Hypothesis(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("parse error: {0}")]
    Parse(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
