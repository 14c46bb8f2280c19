//! Invariance of a boundary condition under the infinitesimal isometries.
//! At the endpoints δ₋ scales the weighted components,
//!   Φ̃¹(±π/2) ↦ −[M ± (1/2 − ω)] Φ̃¹(±π/2),
//!   Φ̃²(±π/2) ↦ [M ∓ (1/2 − ω)] Φ̃²(±π/2),
//! and δ₊ follows from ω ↦ −ω. The condition is invariant when every
//! transformed basis vector of its boundary-data space satisfies it again.

use ads2_modes::BoundaryData;

use crate::bc::{boundary_residual, BoundaryCondition};

pub const PROBE_OMEGAS: [f64; 3] = [0.3, 0.7, 1.1];
pub const INVARIANCE_TOL: f64 = 1e-10;

#[derive(Debug, Clone, PartialEq)]
pub struct InvarianceFailure {
    /// "delta-" or "delta+"
    pub generator: &'static str,
    pub omega: f64,
    pub basis_vector: usize,
    pub residual: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct InvarianceCertificate {
    pub invariant: bool,
    pub max_residual: f64,
    pub failures: Vec<InvarianceFailure>,
}

fn transform(d: &BoundaryData, m: f64, omega: f64) -> BoundaryData {
    let h = 0.5 - omega;
    let v = d.values;
    BoundaryData { values: [-(m + h) * v[0], (m - h) * v[1], -(m - h) * v[2], (m + h) * v[3]] }
}

fn norm(d: &BoundaryData) -> f64 {
    d.values.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

pub fn invariance_test(bc: &BoundaryCondition, m: f64) -> InvarianceCertificate {
    let basis = bc.data_basis();
    let mut failures = Vec::new();
    let mut worst = 0.0_f64;
    for &w in &PROBE_OMEGAS {
        for (generator, omega) in [("delta-", w), ("delta+", -w)] {
            for (j, d) in basis.iter().enumerate() {
                let t = transform(d, m, omega);
                let r = boundary_residual(bc, &t);
                let rel = (r[0].norm_sqr() + r[1].norm_sqr()).sqrt() / norm(&t).max(f64::MIN_POSITIVE);
                let rel = if norm(&t) == 0.0 { 0.0 } else { rel };
                worst = worst.max(rel);
                if rel > INVARIANCE_TOL {
                    failures.push(InvarianceFailure { generator, omega, basis_vector: j, residual: rel });
                }
            }
        }
    }
    InvarianceCertificate { invariant: failures.is_empty(), max_residual: worst, failures }
}
