use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum FockError {
    #[error("cutoff {0} outside the supported range 3..=6")]
    Cutoff(usize),
    #[error("{family} has an invariant vacuum or no zero-mode realization here (M = {m})")]
    Unsupported { family: String, m: f64 },
    #[error("mass {0} outside [0, 1/2)")]
    Mass(f64),
}

pub type Result<T> = std::result::Result<T, FockError>;
