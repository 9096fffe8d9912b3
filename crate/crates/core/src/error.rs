use thiserror::Error;

/// Every fallible operation in the crate returns this error.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("enumeration cap exceeded: {what} grew past {cap}")]
    CapExceeded { what: &'static str, cap: usize },

    #[error("element does not belong to the group")]
    ForeignElement,

    #[error("subgroup does not belong to the group")]
    ForeignSubgroup,

    #[error("subgroup is not normal")]
    NotNormal,

    #[error("invalid action: {0}")]
    InvalidAction(String),

    #[error("group of order {order} is not a p-group")]
    NotPGroup { order: usize },

    #[error("operation requires a nontrivial group")]
    TrivialGroup,

    #[error("construction invalid: {0}")]
    ConstructionInvalid(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("validation failed: {0}")]
    Validation(String),

    #[error("internal invariant violated: {0}")]
    Invariant(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl GroupError {
    pub fn is_cap_exceeded(&self) -> bool {
        matches!(self, GroupError::CapExceeded { .. })
    }
}

impl From<std::io::Error> for GroupError {
    fn from(err: std::io::Error) -> Self {
        GroupError::Io(err.to_string())
    }
}

pub type Result<T, E = GroupError> = std::result::Result<T, E>;
