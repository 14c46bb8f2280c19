//! Identities of the charge algebra on the truncated space, and the vacuum
//! sector as a lowest-weight module.

use ads2_reps::{reduce_mu, Series, UirLabel};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::sparse::SparseOp;
use crate::space::{ChargeOperators, TruncatedFock};

const WEIGHT_TOL: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct CommutatorReport {
    /// max ‖([L̂₊,L̂₋] − 2L̂₀)|s⟩‖ over the checked admissible basis states.
    pub max_deviation: f64,
    pub checked: usize,
    /// Same quantity over the truncation-edge states; reported, not asserted.
    pub edge_deviation: f64,
}

fn column_norm(op: &SparseOp, j: usize) -> f64 {
    op.column(j).iter().map(|e| e.1.norm_sqr()).sum::<f64>().sqrt()
}

/// Commutator defect on the given basis states; `None` checks every admissible state.
pub fn commutator_check(fock: &TruncatedFock, ops: &ChargeOperators, states: Option<&[usize]>) -> CommutatorReport {
    let d = &ops.raise.commutator(&ops.lower) - &ops.l0.scale(Complex64::new(2.0, 0.0));
    let all = fock.admissible_states();
    let chosen = states.map_or(all, |s| s.iter().copied().filter(|&s| fock.is_admissible(s)).collect());
    let max_deviation = chosen.iter().map(|&j| column_norm(&d, j)).fold(0.0, f64::max);
    let edge_deviation = (0..fock.dim()).filter(|&s| !fock.is_admissible(s)).map(|j| column_norm(&d, j)).fold(0.0, f64::max);
    CommutatorReport { max_deviation, checked: chosen.len(), edge_deviation }
}

/// (defect of L̂₊† = −L̂₋ on admissible columns, defect on edge columns).
pub fn hermiticity_defect(fock: &TruncatedFock, ops: &ChargeOperators) -> (f64, f64) {
    let d = &ops.raise.adjoint() + &ops.lower;
    let (mut inner, mut edge) = (0.0f64, 0.0f64);
    for j in 0..fock.dim() {
        let v = d.column_max_abs(j);
        if fock.is_admissible(j) {
            inner = inner.max(v);
        } else {
            edge = edge.max(v);
        }
    }
    (inner, edge)
}

/// Largest distance of an L̂₀ eigenvalue from λ + ℕ on the admissible
/// charge-neutral states.
pub fn weight_lattice_defect(fock: &TruncatedFock, ops: &ChargeOperators) -> f64 {
    fock.admissible_states()
        .into_iter()
        .filter(|&s| fock.charge(s) == 0)
        .map(|s| {
            let x = ops.l0.get(s, s).re - ops.lambda;
            if x < -WEIGHT_TOL {
                f64::INFINITY
            } else {
                (x - x.round()).abs()
            }
        })
        .fold(0.0, f64::max)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct VacuumSector {
    pub weight: f64,
    pub degeneracy: usize,
    /// Basis of the annihilated lowest-weight states, not orthonormalized.
    pub states: Vec<Vec<(usize, Complex64)>>,
    pub label: UirLabel,
}

/// Null space of the matrix whose columns are the images of `cols`.
fn kernel(op: &SparseOp, cols: &[usize]) -> Vec<Vec<(usize, Complex64)>> {
    let mut rows: Vec<usize> = cols.iter().flat_map(|&j| op.column(j).iter().map(|e| e.0)).collect();
    rows.sort_unstable();
    rows.dedup();
    let mut a: Vec<Vec<Complex64>> =
        rows.iter().map(|&r| cols.iter().map(|&j| op.get(r, j)).collect()).collect();
    let n = cols.len();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..n {
        let Some(p) = (row..a.len()).max_by(|&x, &y| a[x][col].norm().total_cmp(&a[y][col].norm())) else { break };
        if a[p][col].norm() <= 1e-12 {
            continue;
        }
        a.swap(row, p);
        let inv = a[row][col].inv();
        a[row].iter_mut().for_each(|z| *z *= inv);
        for r in 0..a.len() {
            if r != row && a[r][col].norm() > 0.0 {
                let f = a[r][col];
                for k in 0..n {
                    let t = a[row][k];
                    a[r][k] -= f * t;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    (0..n)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![(cols[free], Complex64::new(1.0, 0.0))];
            for (r, &pc) in pivots.iter().enumerate() {
                let z = -a[r][free];
                if z.norm() > 0.0 {
                    v.push((cols[pc], z));
                }
            }
            v
        })
        .collect()
}

/// Lowest L̂₀ eigenvalue on the admissible subspace that carries states
/// annihilated by L̂₋, with those states.
pub fn vacuum_sector(fock: &TruncatedFock, ops: &ChargeOperators) -> VacuumSector {
    let mut states = fock.admissible_states();
    let w = |s: usize| ops.l0.get(s, s).re;
    states.sort_by(|&x, &y| w(x).total_cmp(&w(y)));
    let mut i = 0;
    while i < states.len() {
        let level = w(states[i]);
        let end = states[i..].iter().position(|&s| w(s) - level > WEIGHT_TOL).map_or(states.len(), |k| i + k);
        let ker = kernel(&ops.lower, &states[i..end]);
        if !ker.is_empty() {
            return VacuumSector {
                weight: level,
                degeneracy: ker.len(),
                states: ker,
                label: UirLabel { series: Series::DiscretePlus, weight: level, mu: reduce_mu(level) },
            };
        }
        i = end;
    }
    unreachable!("L̂₋ lowers the weight, so the lowest level is always annihilated")
}
