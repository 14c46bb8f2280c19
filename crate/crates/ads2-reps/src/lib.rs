//! Ladder actions, Casimir values and representation labels for the mode
//! families of the Dirac field on AdS₂.

pub mod classify;
pub mod error;
pub mod ladder;

pub use classify::{
    casimir_check, classify, default_levels, invariant_frequency_splitting, reduce_mu, CasimirReport, Classification,
    Series, UirLabel, CASIMIR_TOL,
};
pub use error::{RepsError, Result};
pub use ladder::{apply_ladder, ladder_image, ladder_table, neighbor_level, Ladder, LadderAction, LadderTable, LADDER_TOL};
