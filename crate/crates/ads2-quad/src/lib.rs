//! Quadrature for spinor inner products on (−π/2, π/2) whose integrands
//! carry integrable power-law and logarithmic endpoint singularities, plus
//! the probes used to decide square-integrability.

pub mod error;
pub mod fit;
pub mod gauss;
pub mod point;
pub mod probe;
pub mod rule;

pub use error::{QuadError, Result};
pub use fit::{default_grid, endpoint_exponent_fit, geometric_grid, ExponentFit};
pub use gauss::{composite, gauss_legendre};
pub use point::{Endpoint, Point};
pub use probe::{tail_sequence, DivergenceReport, SHELL_CUTOFFS};
pub use rule::{
    gram_matrix, identity_deviation, inner_product, integrate, integrate_many, norm_squared, QuadResult, QuadratureSpec,
    Scheme, Spinor, DEFAULT_TOLERANCE,
};
