use std::f64::consts::{FRAC_PI_2, PI};

use ads2_quad::{Point, Spinor};
use num_complex::Complex64;

use crate::error::Result;

/// Chebyshev nodes of the first kind on [a, b].
pub fn chebyshev_points(n: usize, a: f64, b: f64) -> Vec<f64> {
    (0..n)
        .map(|i| 0.5 * (a + b) + 0.5 * (b - a) * ((2 * i + 1) as f64 * PI / (2 * n) as f64).cos())
        .collect()
}

/// The default residual grid: 32 nodes on [−π/2 + 1e-3, π/2 − 1e-3].
pub fn residual_grid() -> Vec<Point> {
    chebyshev_points(32, -FRAC_PI_2 + 1e-3, FRAC_PI_2 - 1e-3).into_iter().map(Point::from_rho).collect()
}

/// Pointwise residual of Φ¹′ + M sec Φ¹ − ωΦ² and −Φ²′ + M sec Φ² − ωΦ¹,
/// relative to max(1, size of the largest term).
pub fn dirac_residual(m: f64, omega: Complex64, phi: &Spinor, dphi: &Spinor, p: &Point) -> f64 {
    let sec = 1.0 / p.cos();
    let r1 = dphi[0] + m * sec * phi[0] - omega * phi[1];
    let r2 = -dphi[1] + m * sec * phi[1] - omega * phi[0];
    let scale = [dphi[0].norm(), dphi[1].norm(), (m * sec * phi[0]).norm(), (m * sec * phi[1]).norm()]
        .into_iter()
        .chain([(omega * phi[0]).norm(), (omega * phi[1]).norm()])
        .fold(1.0, f64::max);
    r1.norm().max(r2.norm()) / scale
}

/// Largest relative residual of a solution over the given points.
pub fn max_residual<F>(m: f64, omega: Complex64, points: &[Point], mut f: F) -> Result<f64>
where
    F: FnMut(&Point) -> Result<(Spinor, Spinor)>,
{
    let mut worst = 0.0_f64;
    for p in points {
        let (phi, dphi) = f(p)?;
        worst = worst.max(dirac_residual(m, omega, &phi, &dphi, p));
    }
    Ok(worst)
}
