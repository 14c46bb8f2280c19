use ads2_modes::ModeError;
use ads2_quad::QuadError;
use ads2_specfun::SpecError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ExtError {
    #[error("matrix is not unitary (defect {0:.3e})")]
    NotUnitary(f64),
    #[error("boundary condition {bc} is not admissible at M = {m}: {reason}")]
    Inadmissible { bc: String, m: f64, reason: String },
    #[error("invalid frequency window ({0}, {1})")]
    Window(f64, f64),
    #[error(transparent)]
    Modes(#[from] ModeError),
    #[error(transparent)]
    Special(#[from] SpecError),
    #[error(transparent)]
    Quadrature(#[from] QuadError),
}

pub type Result<T> = std::result::Result<T, ExtError>;
