use ads2_quad::QuadError;
use ads2_specfun::SpecError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ModeError {
    #[error("mass {m} is not valid for {what}")]
    Regime { m: f64, what: String },
    #[error("family {family} is not defined at mass {m}")]
    Incompatible { family: String, m: f64 },
    #[error("index {index} is outside the range of family {family}")]
    IndexOutOfRange { family: String, index: i64 },
    #[error(transparent)]
    Special(#[from] SpecError),
    #[error(transparent)]
    Quadrature(#[from] QuadError),
}

pub type Result<T> = std::result::Result<T, ModeError>;
