//! Self-adjoint extensions of the spatial Dirac operator on AdS2: deficiency
//! indices, unitary boundary conditions, their invariance under the
//! isometry algebra, spectra, and endpoint asymptotics.

pub mod asymptotics;
pub mod bc;
pub mod deficiency;
pub mod error;
pub mod invariance;
pub mod operator;
pub mod spectrum;

pub use asymptotics::{asymptotic_verifier, AsymptoticEntry, AsymptoticReport, Quantity, ASYMPTOTIC_EPS, ASYMPTOTIC_TOL};
pub use bc::{boundary_form, boundary_residual, BcTag, BoundaryCondition, UNITARITY_TOL};
pub use deficiency::{deficiency_indices, DeficiencyReport, IntegrabilityVerdict};
pub use error::{ExtError, Result};
pub use invariance::{invariance_test, InvarianceCertificate, InvarianceFailure, INVARIANCE_TOL, PROBE_OMEGAS};
pub use operator::dirac_apply;
pub use spectrum::{condition_matrix, eigen_solution, infer_tag, spectrum, spectrum_by_roots, SpectralLine, Spectrum, SCAN_STEP};
