use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum QuadError {
    #[error("quadrature did not converge after {levels} levels (last change {change:e}, diverging: {diverging})")]
    NonConvergence { levels: usize, change: f64, diverging: bool },
    #[error("integrand is not finite at rho = {rho}")]
    NonFinite { rho: f64 },
    #[error("endpoint fit is ill-conditioned: {0}")]
    IllConditioned(String),
    #[error("invalid quadrature specification: {0}")]
    InvalidSpec(String),
}

pub type Result<T> = std::result::Result<T, QuadError>;
