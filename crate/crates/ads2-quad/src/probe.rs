//! Square-integrability probe near one endpoint. The density |Φ|² is
//! integrated over shells ε ∈ [δ_{k+1}, δ_k] with δ = 1e−2, 1e−4, 1e−8, …,
//! 1e−128 in the variable ln ε. A sequence of partial integrals still
//! growing by more than 10% at each of the last levels marks a
//! non-integrable endpoint.

use crate::gauss::composite;
use crate::point::{Endpoint, Point};

pub const SHELL_CUTOFFS: [f64; 8] = [1e-2, 1e-4, 1e-8, 1e-16, 1e-32, 1e-64, 1e-128, 0.0];
const GROWTH_THRESHOLD: f64 = 0.1;

#[derive(Debug, Clone, PartialEq)]
pub struct DivergenceReport {
    pub endpoint: Endpoint,
    /// Lower cutoffs δ_k of the partial integrals.
    pub cutoffs: Vec<f64>,
    /// ∫_{δ_k}^{π/2} |Φ|² dε for each cutoff.
    pub partial: Vec<f64>,
    /// Relative growth contributed by each new shell.
    pub growth: Vec<f64>,
    pub divergent: bool,
}

fn log_integral<F: Fn(&Point) -> f64>(density: &F, endpoint: Endpoint, lo: f64, hi: f64) -> f64 {
    let (a, b) = (lo.ln(), hi.ln());
    let panels = ((b - a) / 1.0).ceil().max(1.0) as usize;
    composite(a, b, panels, 16)
        .into_iter()
        .map(|(s, w)| {
            let eps = s.exp();
            w * eps * density(&Point::near(endpoint, eps))
        })
        .sum()
}

pub fn tail_sequence<F: Fn(&Point) -> f64>(density: F, endpoint: Endpoint) -> DivergenceReport {
    let cutoffs: Vec<f64> = SHELL_CUTOFFS.iter().copied().take_while(|&d| d > 0.0).collect();
    let mut partial = Vec::with_capacity(cutoffs.len());
    let mut growth = Vec::with_capacity(cutoffs.len());
    let mut total = log_integral(&density, endpoint, cutoffs[0], std::f64::consts::FRAC_PI_2);
    partial.push(total);
    for w in cutoffs.windows(2) {
        let shell = log_integral(&density, endpoint, w[1], w[0]);
        let g = if shell.is_finite() && total.is_finite() && total > 0.0 { shell / total } else { f64::INFINITY };
        total += shell;
        growth.push(g);
        partial.push(total);
    }
    let tail = &growth[growth.len().saturating_sub(3)..];
    let divergent = tail.iter().all(|&g| g > GROWTH_THRESHOLD || g.is_nan());
    DivergenceReport { endpoint, cutoffs, partial, growth, divergent }
}
