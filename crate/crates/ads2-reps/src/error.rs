use ads2_modes::ModeError;
use ads2_quad::QuadError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum RepsError {
    #[error("L{sign} on {family} level {index}: projection residual {residual:e} exceeds tolerance")]
    Projection { family: String, index: i64, sign: char, residual: f64 },
    #[error("Casimir value varies by {spread:e} across the modes of {family}")]
    NonConstantCasimir { family: String, spread: f64 },
    #[error("no representation matches {family} at M = {m} (q = {q})")]
    Unclassified { family: String, m: f64, q: f64 },
    #[error(transparent)]
    Modes(#[from] ModeError),
    #[error(transparent)]
    Quadrature(#[from] QuadError),
}

pub type Result<T> = std::result::Result<T, RepsError>;
