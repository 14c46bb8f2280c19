//! Truncated fermionic Fock spaces for the Dirac field on AdS₂ with a
//! non-invariant vacuum: quantum charges, their algebra and the vacuum
//! sector as a lowest-weight module.

pub mod checks;
pub mod error;
pub mod space;
pub mod sparse;

pub use checks::{commutator_check, hermiticity_defect, vacuum_sector, weight_lattice_defect, CommutatorReport, VacuumSector};
pub use error::{FockError, Result};
pub use space::{build_fock, ChargeOperators, FockMode, FockModel, Species, TruncatedFock};
pub use sparse::SparseOp;
