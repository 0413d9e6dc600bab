//! CLI error type with a fixed exit-code taxonomy so CI can discriminate
//! failure classes: 2 bad arguments, 3 I/O, 4 singular angle, 5 grid
//! mismatch, 1 failed verification gates.

use std::fmt;

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Io(String),
    SingularAngle(String),
    GridMismatch(String),
    VerifyFailed(usize),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::VerifyFailed(_) => 1,
            CliError::Usage(_) => 2,
            CliError::Io(_) => 3,
            CliError::SingularAngle(_) => 4,
            CliError::GridMismatch(_) => 5,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) => write!(f, "{msg}"),
            CliError::Io(msg) => write!(f, "{msg}"),
            CliError::SingularAngle(msg) => write!(f, "{msg}"),
            CliError::GridMismatch(msg) => write!(f, "{msg}"),
            CliError::VerifyFailed(n) => write!(f, "{n} verification check(s) failed"),
        }
    }
}

impl From<rofrft::Error> for CliError {
    fn from(err: rofrft::Error) -> Self {
        match err {
            rofrft::Error::SingularAngle { .. } | rofrft::Error::FamilySingularAngle { .. } => {
                CliError::SingularAngle(err.to_string())
            }
            rofrft::Error::GridMismatch { .. } | rofrft::Error::AngleMismatch(..) => {
                CliError::GridMismatch(err.to_string())
            }
            _ => CliError::Usage(err.to_string()),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(err: std::io::Error) -> Self {
        CliError::Io(err.to_string())
    }
}

pub type CliResult<T> = Result<T, CliError>;
