use thiserror::Error;

/// Errors raised anywhere in the engine.
#[derive(Debug, Error)]
pub enum Error {
    #[error("size limit exceeded: {what} = {value} (cap {cap})")]
    SizeLimit {
        what: &'static str,
        value: String,
        cap: String,
    },

    #[error("weight mismatch: partition of {partition} against cycle type of {cycle_type}")]
    WeightMismatch { partition: usize, cycle_type: usize },

    #[error("length mismatch: expected {expected} values, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("validation failed: {0}")]
    Validation(String),

    #[error("non-integral multiplicity {value} (residual {residual:e}) in {context}")]
    NonIntegral {
        value: String,
        residual: f64,
        context: String,
    },

    #[error("negative coefficient {value} in {context}")]
    NegativeCoefficient { value: String, context: String },

    #[error("hypothesis violated: {0}")]
    Hypothesis(String),

    #[error("invalid argument: {0}")]
    Invalid(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn size_limit(what: &'static str, value: impl ToString, cap: impl ToString) -> Self {
        Error::SizeLimit {
            what,
            value: value.to_string(),
            cap: cap.to_string(),
        }
    }

    /// True for failures caused by bad table data or numerical integrality.
    pub fn is_validation(&self) -> bool {
        matches!(
            self,
            Error::Validation(_)
                | Error::NonIntegral { .. }
                | Error::NegativeCoefficient { .. }
                | Error::Parse(_)
        )
    }
}
