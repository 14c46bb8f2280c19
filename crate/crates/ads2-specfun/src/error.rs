use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpecError {
    #[error("argument {x} outside the domain {domain}")]
    Domain { x: f64, domain: &'static str },
    #[error("series did not converge after {terms} terms")]
    NonConvergence { terms: usize },
    #[error("c - a - b = {gap} is an integer; use the Ferrers path")]
    IntegerGap { gap: f64 },
    #[error("pole at {x}")]
    Pole { x: f64 },
    #[error("parameters make the limit formula singular: {0}")]
    Singular(String),
}

pub type Result<T> = std::result::Result<T, SpecError>;
