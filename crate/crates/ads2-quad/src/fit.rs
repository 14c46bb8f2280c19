//! Endpoint exponent fit: log |Φ|² against ln ε on a geometric grid, with
//! an optional ln|ln ε| column that detects logarithmic factors.

use crate::error::{QuadError, Result};
use crate::point::{Endpoint, Point};

const LOG_FLAG_THRESHOLD: f64 = 0.25;

#[derive(Debug, Clone, PartialEq)]
pub struct ExponentFit {
    pub endpoint: Endpoint,
    /// Reported exponent: the three-term value when a log factor is
    /// flagged, the pure power-law slope otherwise.
    pub exponent: f64,
    pub power_law_slope: f64,
    /// Coefficient q of ln|ln ε| in the three-term fit.
    pub log_power: f64,
    pub log_flag: bool,
    /// RMS residual of the two-term fit.
    pub residual: f64,
}

pub fn geometric_grid(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    let (a, b) = (lo.ln(), hi.ln());
    (0..n).map(|i| (a + (b - a) * i as f64 / (n - 1) as f64).exp()).collect()
}

/// Default grid: 25 points between 1e−7 and 1e−3.
pub fn default_grid() -> Vec<f64> {
    geometric_grid(1e-7, 1e-3, 25)
}

fn solve3(a: [[f64; 3]; 3], b: [f64; 3]) -> Option<[f64; 3]> {
    let det = |m: [[f64; 3]; 3]| {
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    };
    let d = det(a);
    if d.abs() < 1e-300 {
        return None;
    }
    let mut x = [0.0; 3];
    for (k, xk) in x.iter_mut().enumerate() {
        let mut m = a;
        for i in 0..3 {
            m[i][k] = b[i];
        }
        *xk = det(m) / d;
    }
    Some(x)
}

fn least_squares(rows: &[[f64; 3]], y: &[f64], cols: usize) -> Option<[f64; 3]> {
    let mut ata = [[0.0; 3]; 3];
    let mut atb = [0.0; 3];
    for (r, &yi) in rows.iter().zip(y) {
        for i in 0..cols {
            atb[i] += r[i] * yi;
            for j in 0..cols {
                ata[i][j] += r[i] * r[j];
            }
        }
    }
    if cols == 2 {
        let d = ata[0][0] * ata[1][1] - ata[0][1] * ata[1][0];
        if d.abs() < 1e-300 {
            return None;
        }
        return Some([(atb[0] * ata[1][1] - ata[0][1] * atb[1]) / d, (ata[0][0] * atb[1] - ata[1][0] * atb[0]) / d, 0.0]);
    }
    solve3(ata, atb)
}

pub fn endpoint_exponent_fit<F>(density: F, endpoint: Endpoint, grid: &[f64]) -> Result<ExponentFit>
where
    F: Fn(&Point) -> f64,
{
    if grid.len() < 4 {
        return Err(QuadError::IllConditioned(format!("{} grid points, need at least 4", grid.len())));
    }
    if let Some(e) = grid.iter().find(|&&e| !(1e-8..=1e-2).contains(&e)) {
        return Err(QuadError::InvalidSpec(format!("grid point {e:e} outside [1e-8, 1e-2]")));
    }
    let mut rows = Vec::with_capacity(grid.len());
    let mut y = Vec::with_capacity(grid.len());
    for &eps in grid {
        let v = density(&Point::near(endpoint, eps));
        if !(v.is_finite() && v > 0.0) {
            return Err(QuadError::IllConditioned(format!("density {v:e} at eps = {eps:e}")));
        }
        let l = eps.ln();
        rows.push([1.0, l, l.abs().ln()]);
        y.push(v.ln());
    }
    let two = least_squares(&rows, &y, 2).ok_or_else(|| QuadError::IllConditioned("singular normal equations".into()))?;
    let three = least_squares(&rows, &y, 3).ok_or_else(|| QuadError::IllConditioned("singular normal equations".into()))?;
    let residual = (rows.iter().zip(&y).map(|(r, yi)| (yi - two[0] - two[1] * r[1]).powi(2)).sum::<f64>() / y.len() as f64).sqrt();
    let log_flag = three[2].abs() > LOG_FLAG_THRESHOLD;
    Ok(ExponentFit {
        endpoint,
        exponent: if log_flag { three[1] } else { two[1] },
        power_law_slope: two[1],
        log_power: three[2],
        log_flag,
        residual,
    })
}
