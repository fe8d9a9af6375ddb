use thiserror::Error;

/// Errors raised by the valuation, classical and schedule routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum ValuationError {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// The replacement perpetuity does not converge when the cost of capital is zero.
    #[error("perpetuity diverges at a zero cost of capital")]
    ZeroRateDivergence,

    #[error("age {age} outside [0, {lifetime}]")]
    AgeOutOfRange { age: f64, lifetime: f64 },

    #[error("end age {end} precedes start age {start}")]
    AgeOrderViolation { start: f64, end: f64 },

    #[error("{what} must be a whole number of periods, got {value}")]
    NonIntegerPeriod { what: &'static str, value: f64 },

    #[error("the intrinsic method requires a cost of capital")]
    MissingRate,
}

impl ValuationError {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        ValuationError::InvalidInput(msg.into())
    }
}

pub type Result<T, E = ValuationError> = std::result::Result<T, E>;
