//! Error type shared across the crate.

/// Errors raised by instance construction, solvers, and I/O.
///
/// The CLI maps these to exit codes: [`Error::TooLarge`] and
/// [`Error::Inapplicable`] are guards (exit 2); everything else is an
/// input error (exit 1).
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// An instance invariant is violated; `field` names the offending field.
    #[error("{field}: {message}")]
    InvalidInstance { field: String, message: String },

    /// A vertex name or id does not belong to the graph.
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),

    /// A solver was handed the wrong number of agents.
    #[error("expected {expected}, found {found} agent(s)")]
    AgentCount { expected: &'static str, found: usize },

    /// Budget mappings with different budget bounds cannot be merged.
    #[error("budget mappings disagree on the budget bound ({0} vs {1})")]
    BudgetMismatch(usize, usize),

    /// Path reconstruction was asked for an unreachable routing pair.
    #[error("no path reaches the requested routing pair")]
    NoPath,

    /// An exhaustive enumeration would exceed its size guard.
    #[error("{0}")]
    TooLarge(String),

    /// The operation's precondition does not hold for this instance.
    #[error("{0}")]
    Inapplicable(String),

    /// A rational literal could not be parsed.
    #[error("invalid number `{text}`: {reason}")]
    Number { text: String, reason: String },

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),

    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn invalid(field: impl Into<String>, message: impl Into<String>) -> Self {
        Error::InvalidInstance { field: field.into(), message: message.into() }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
