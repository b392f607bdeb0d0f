use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("invalid session JSON: {0}")]
    Json(String),
    #[error("{field}: {source}")]
    Field { field: String, source: matdet::Error },
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Engine(#[from] matdet::Error),
}

impl CliError {
    pub fn field(field: impl Into<String>, source: matdet::Error) -> CliError {
        CliError::Field {
            field: field.into(),
            source,
        }
    }

    fn engine(&self) -> Option<&matdet::Error> {
        match self {
            CliError::Field { source, .. } => Some(source),
            CliError::Engine(e) => Some(e),
            _ => None,
        }
    }

    pub fn is_budget(&self) -> bool {
        matches!(self.engine(), Some(matdet::Error::BudgetExceeded { .. }))
    }

    pub fn kind(&self) -> &'static str {
        match self.engine() {
            Some(matdet::Error::BudgetExceeded { .. }) => "budget",
            Some(matdet::Error::Parse { .. }) => "parse",
            Some(matdet::Error::InvalidMatrix(_)) | Some(matdet::Error::InvalidRing(_)) => "structure",
            Some(_) => "engine",
            None => match self {
                CliError::Json(_) => "json",
                _ => "usage",
            },
        }
    }

    /// 3 for an exhausted S-pair budget, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.is_budget() {
            3
        } else {
            1
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;
