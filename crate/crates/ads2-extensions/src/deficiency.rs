//! Deficiency indices from square-integrability of the solutions at ω = ±i.
//! An endpoint is limit-circle when both basis solutions are square
//! integrable near it; each limit-circle endpoint adds one to n±.

use ads2_modes::general_solution;
use ads2_quad::{default_grid, endpoint_exponent_fit, tail_sequence, Endpoint};
use num_complex::Complex64;

use crate::error::Result;

#[derive(Debug, Clone, PartialEq)]
pub struct IntegrabilityVerdict {
    pub omega: Complex64,
    /// (C₁, C₂) of the basis solution.
    pub basis: [f64; 2],
    pub endpoint: Endpoint,
    /// The shell sequence of tail integrals grows without bound.
    pub divergent: bool,
    /// Fitted exponent of |Φ|² at the endpoint, when the fit succeeded.
    pub exponent: Option<f64>,
    pub log_flag: bool,
    pub integrable: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct DeficiencyReport {
    pub m: f64,
    pub n_plus: usize,
    pub n_minus: usize,
    pub verdicts: Vec<IntegrabilityVerdict>,
}

pub fn deficiency_indices(m: f64) -> Result<DeficiencyReport> {
    let grid = default_grid();
    let mut verdicts = Vec::new();
    let mut counts = [0usize; 2];
    for (slot, omega) in [Complex64::new(0.0, 1.0), Complex64::new(0.0, -1.0)].into_iter().enumerate() {
        for endpoint in [Endpoint::Plus, Endpoint::Minus] {
            let mut all = true;
            for basis in [[1.0, 0.0], [0.0, 1.0]] {
                let sol = general_solution(m, omega, Complex64::new(basis[0], 0.0), Complex64::new(basis[1], 0.0))?;
                let density = |p: &ads2_quad::Point| match sol.eval(p) {
                    Ok(v) => v[0].norm_sqr() + v[1].norm_sqr(),
                    Err(_) => f64::NAN,
                };
                let tail = tail_sequence(density, endpoint);
                let fit = endpoint_exponent_fit(density, endpoint, &grid).ok();
                let exponent = fit.as_ref().map(|f| f.exponent);
                let integrable = !tail.divergent && exponent.map_or(true, |e| e > -1.0);
                all &= integrable;
                verdicts.push(IntegrabilityVerdict {
                    omega,
                    basis,
                    endpoint,
                    divergent: tail.divergent,
                    exponent,
                    log_flag: fit.map_or(false, |f| f.log_flag),
                    integrable,
                });
            }
            if all {
                counts[slot] += 1;
            }
        }
    }
    Ok(DeficiencyReport { m, n_plus: counts[0], n_minus: counts[1], verdicts })
}
