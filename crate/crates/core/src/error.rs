use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("shape mismatch in {op}: {left:?} vs {right:?}")]
    Shape {
        op: &'static str,
        left: (usize, usize),
        right: (usize, usize),
    },

    #[error("matrix is singular over GF(2)")]
    Singular,

    #[error("m = {m} exceeds the configured maximum of {max}")]
    SizeLimit { m: usize, max: usize },

    #[error("index {index} out of range [0, {bound})")]
    IndexOutOfRange { index: usize, bound: usize },

    #[error("invalid input: {0}")]
    Validation(String),

    #[error("monomial set is not decreasing: {0}")]
    NotDecreasing(String),

    #[error("outside the scope of the closed-form dual: {0}")]
    TheoremScope(String),

    #[error("enumeration needs {required} candidates, budget is {budget}")]
    BudgetExceeded { required: u128, budget: u128 },

    #[error("cross-check failed: {0}")]
    Verification(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
