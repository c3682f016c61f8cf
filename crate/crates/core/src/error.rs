use thiserror::Error;

pub type Result<T, E = ShiftError> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ShiftError {
    #[error("specification error: {0}")]
    Spec(String),

    #[error("budget exceeded: {what} (limit {limit}, progress {progress})")]
    Budget {
        what: &'static str,
        limit: u64,
        progress: u64,
    },

    #[error("consistency error: {0}")]
    Consistency(String),

    #[error("unsupported dimension {0}: only two-dimensional graphs are analysed")]
    UnsupportedDimension(usize),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("construction failed: {0}")]
    Construction(String),

    #[error("input too short: {0}")]
    InputTooShort(String),

    #[error("{line}:{column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

impl ShiftError {
    pub(crate) fn spec(msg: impl Into<String>) -> Self {
        ShiftError::Spec(msg.into())
    }

    pub fn is_budget(&self) -> bool {
        matches!(self, ShiftError::Budget { .. })
    }
}
