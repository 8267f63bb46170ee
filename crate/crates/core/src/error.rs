use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// The integrand produced a NaN or infinity at a quadrature node.
    #[error("non-finite integrand value {value} at node (z = {z}, t = {t})")]
    NonFinite { z: f64, t: f64, value: f64 },

    /// Two quadrature estimates of successive order disagree.
    #[error("quadrature did not converge: estimates {coarse:e} and {fine:e} differ by more than {tolerance:e}")]
    Accuracy { coarse: f64, fine: f64, tolerance: f64 },

    /// A fixed series truncation leaves too much probability in the tail.
    #[error("truncation at {terms} terms leaves tail mass bound {tail_bound:e}")]
    Truncation { terms: usize, tail_bound: f64 },

    /// A scan configuration field is invalid.
    #[error("invalid configuration `{field}`: {reason}")]
    Config { field: &'static str, reason: String },
}

pub type Result<T> = std::result::Result<T, Error>;
