use ads2_extensions::ExtError;
use ads2_fock::FockError;
use ads2_modes::ModeError;
use ads2_quad::QuadError;
use ads2_reps::RepsError;
use thiserror::Error;

/// Errors carry their process exit code.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("invalid input: {0}")]
    Validation(String),
    #[error("numerical failure: {0}")]
    Numerical(String),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("{0} verification check(s) out of tolerance")]
    ChecksFailed(usize),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Validation(_) | CliError::Io(_) => 2,
            CliError::Numerical(_) => 3,
            CliError::ChecksFailed(_) => 1,
        }
    }
}

impl From<QuadError> for CliError {
    fn from(e: QuadError) -> Self {
        match e {
            QuadError::InvalidSpec(_) => CliError::Validation(e.to_string()),
            _ => CliError::Numerical(e.to_string()),
        }
    }
}

impl From<ModeError> for CliError {
    fn from(e: ModeError) -> Self {
        match e {
            ModeError::Quadrature(q) => q.into(),
            ModeError::Special(_) => CliError::Numerical(e.to_string()),
            _ => CliError::Validation(e.to_string()),
        }
    }
}

impl From<ExtError> for CliError {
    fn from(e: ExtError) -> Self {
        match e {
            ExtError::Modes(m) => m.into(),
            ExtError::Quadrature(q) => q.into(),
            ExtError::Special(_) => CliError::Numerical(e.to_string()),
            _ => CliError::Validation(e.to_string()),
        }
    }
}

impl From<RepsError> for CliError {
    fn from(e: RepsError) -> Self {
        match e {
            RepsError::Modes(m) => m.into(),
            RepsError::Quadrature(q) => q.into(),
            _ => CliError::Numerical(e.to_string()),
        }
    }
}

impl From<FockError> for CliError {
    fn from(e: FockError) -> Self {
        CliError::Validation(e.to_string())
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Io(e.into())
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError::Io(std::io::Error::other(e.to_string()))
    }
}

pub type Result<T> = std::result::Result<T, CliError>;
