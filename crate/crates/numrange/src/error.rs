use thiserror::Error;

/// Errors produced by validating constructors and the sampling oracle.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A scalar argument was NaN or infinite.
    #[error("{what} must be finite")]
    NonFinite { what: &'static str },

    /// A vector failed the unit-norm check; nothing is renormalized silently.
    #[error("squared norm deviates from 1 by {deviation:.3e} (tolerance {tolerance:.0e})")]
    NotUnit { deviation: f64, tolerance: f64 },

    /// A matrix failed the unitarity check `U U* = I`.
    #[error("matrix is not unitary: max deviation of U U* from identity is {deviation:.3e} (tolerance {tolerance:.0e})")]
    NotUnitary { deviation: f64, tolerance: f64 },

    /// The sampling oracle was asked to run with zero samples.
    #[error("sample count must be at least 1")]
    EmptySample,
}
