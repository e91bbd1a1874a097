use thiserror::Error;

/// Errors raised by the numerical engines.
///
/// Non-convergence is deliberately not an error: quadrature and series
/// results carry a `converged` flag alongside their best estimate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{function}: argument {value} outside domain ({reason})")]
    Domain {
        function: &'static str,
        value: f64,
        reason: &'static str,
    },

    #[error("{function}: result overflows for argument {value}")]
    Overflow { function: &'static str, value: f64 },

    #[error("integrand returned non-finite value at interior node x = {x}")]
    Evaluation { x: f64 },

    #[error("invalid interval [{lower}, {upper}]: {reason}")]
    InvalidInterval {
        lower: f64,
        upper: f64,
        reason: &'static str,
    },

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(function: &'static str, value: f64, reason: &'static str) -> Error {
    Error::Domain {
        function,
        value,
        reason,
    }
}
