use std::process::ExitCode;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] albanese_core::Error),
    #[error("{0}")]
    Usage(String),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

pub type CliResult<T> = std::result::Result<T, CliError>;

/// Process exit status: 0 success, 1 invalid input, 2 verification failure,
/// 3 capacity exceeded.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Ok = 0,
    Invalid = 1,
    Failed = 2,
    Capacity = 3,
}

impl Status {
    pub fn code(self) -> u8 {
        self as u8
    }
}

impl From<Status> for ExitCode {
    fn from(s: Status) -> Self {
        ExitCode::from(s.code())
    }
}

impl CliError {
    pub fn status(&self) -> Status {
        use albanese_core::Error as E;
        match self {
            CliError::Core(E::InvalidInput(_)) | CliError::Usage(_) | CliError::Io(_) => Status::Invalid,
            CliError::Core(E::Capacity(_)) => Status::Capacity,
            // an internal inconsistency is a failed check, not bad input
            CliError::Core(E::Internal(_)) | CliError::Core(E::Cancelled) => Status::Failed,
        }
    }
}
