use thiserror::Error;

/// Errors produced by the solvers, evaluators and instance loaders.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("task list is empty")]
    EmptyTasks,

    #[error("tasks[{index}]: value {value} must be finite and strictly positive")]
    NonPositiveTask { index: usize, value: f64 },

    #[error("p: failure probability {0} is outside [0, 1]")]
    InvalidProbability(f64),

    #[error("p: failure probability {0} must lie strictly between 0 and 1 here")]
    ProbabilityNotInterior(f64),

    #[error("alpha: failure limit {alpha} exceeds the agent count {agents}")]
    AlphaExceedsAgents { alpha: usize, agents: usize },

    #[error("length mismatch: expected {expected} entries, found {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("assignment uses {used} agents but only {agents} are available")]
    BudgetExceeded { used: usize, agents: usize },

    #[error("removals[{task}]: removes {removed} agents but only {assigned} are assigned")]
    OverRemoval {
        task: usize,
        removed: usize,
        assigned: usize,
    },

    #[error("even split needs at least one agent per sampled task (c = {0})")]
    EmptyEvenSplit(usize),

    #[error("model: expected a {expected} instance")]
    WrongModel { expected: &'static str },

    #[error("agents: at least one agent is required")]
    NoAgents,

    #[error("trial config cannot be satisfied: {0}")]
    UnsatisfiableConfig(String),

    #[error("nothing to summarize")]
    EmptyRecords,

    #[error("{field}: {message}")]
    Schema { field: String, message: String },
}

impl Error {
    /// True for errors caused by a well-formed but infeasible or degenerate
    /// request, as opposed to malformed input.
    pub fn is_infeasible(&self) -> bool {
        matches!(
            self,
            Error::AlphaExceedsAgents { .. }
                | Error::NoAgents
                | Error::UnsatisfiableConfig(_)
                | Error::EmptyRecords
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
