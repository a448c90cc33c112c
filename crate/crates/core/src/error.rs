use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Family/rank pair that names no simple Lie algebra.
    #[error("{0}")]
    InvalidType(String),

    #[error("index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },

    #[error("weight has {got} coordinates, expected {expected}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("{operation} is not applicable to {subject}")]
    NotApplicable { operation: &'static str, subject: String },

    #[error("weight {0} is not dominant")]
    NotDominant(String),

    #[error("{what} budget exceeded: needs {needed}, limit is {limit}{}", hint_suffix(.hint))]
    BudgetExceeded {
        what: &'static str,
        needed: u128,
        limit: u128,
        hint: Option<String>,
    },

    #[error("orbit guard of {guard} elements exceeded after enumerating {partial}")]
    OrbitGuard { guard: usize, partial: usize },

    #[error("integer overflow in {0}")]
    Overflow(&'static str),

    #[error("internal consistency failure: {0}")]
    Inconsistent(String),
}

fn hint_suffix(hint: &Option<String>) -> String {
    match hint {
        Some(h) => format!(" ({h})"),
        None => String::new(),
    }
}

impl Error {
    /// Errors caused by malformed input rather than by resource limits.
    pub fn is_validation(&self) -> bool {
        matches!(
            self,
            Error::InvalidType(_)
                | Error::IndexOutOfRange { .. }
                | Error::DimensionMismatch { .. }
                | Error::NotApplicable { .. }
                | Error::NotDominant(_)
        )
    }
}
