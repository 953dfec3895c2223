use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },

    #[error("invalid argument: {0}")]
    Argument(String),

    /// The requested search exceeds the size this method is allowed to attempt.
    #[error("refused by cost guard: {method} search supports n <= {limit}, got n = {n}")]
    CostGuard {
        method: &'static str,
        limit: usize,
        n: usize,
    },

    /// A greedy selection step of the path lemma found no candidate. On an
    /// instance that passed validation this indicates a bug.
    #[error("lemma construction failed while choosing connector a{step}")]
    ConstructionFailure { step: usize },

    #[error("hypothesis not satisfied: {0}")]
    Hypothesis(String),
}

impl Error {
    pub(crate) fn arg(msg: impl Into<String>) -> Self {
        Error::Argument(msg.into())
    }
}
