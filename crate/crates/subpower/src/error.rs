use thiserror::Error;

/// Errors produced by the toolkit.
#[derive(Debug, Error)]
pub enum Error {
    /// Malformed or out-of-contract input (bad indices, violated preconditions,
    /// unparseable formulas, invalid tables).
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// The closure search hit its state budget before reaching a definite
    /// answer. Distinct from a negative membership result.
    #[error("state budget exceeded: explored {explored} states with budget {budget}")]
    BudgetExceeded { explored: usize, budget: usize },

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
