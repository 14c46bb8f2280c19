//! Spatial solutions of the Dirac equation on two-dimensional anti-de Sitter
//! space: general solutions for any (M, ω), their weighted endpoint data,
//! and the explicit mode families of each boundary condition.

pub mod error;
pub mod family;
pub mod general;
pub mod regime;
pub mod residual;

pub use error::{ModeError, Result};
pub use family::{mode, mode_with, modes, Family, Shape, SpinorMode};
pub use general::{
    boundary_data, boundary_data_numerical, general_solution, general_solution_in, trans_coeffs, weighted_components,
    BoundaryData, GeneralSolution, SolutionForm, TransCoeffs, WeightedComponents,
};
pub use regime::{half_integer_order, MassRegime};
pub use residual::{chebyshev_points, dirac_residual, max_residual, residual_grid};
