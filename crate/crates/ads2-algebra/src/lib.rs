//! Fixed 2×2 spinor algebra for the Dirac field on AdS₂ and the spinorial
//! Lie derivatives along its Killing fields.

pub mod killing;
pub mod matrix;
pub mod symmetry;

pub use killing::{commutator_jet, lie_derivative, lie_derivative_jet, FirstJet, KillingField, LieCoefficients, SecondJet};
pub use matrix::{gamma0, gamma1, charge_conjugation_matrix, identity, sigma01, Spinor, SpinorMatrix};
pub use symmetry::{charge_conjugate, chiral_rotation, ladder_action, ladder_action_sc, mass_flip, parity, parity_at, rotation, AlgebraError};
