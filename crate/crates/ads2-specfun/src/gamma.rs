//! Gamma-family functions on the complex plane.
//!
//! `ln Γ` uses upward recurrence into |z| ≥ 15 followed by the Stirling
//! series; the left half-plane is handled by reflection. `1/Γ` is exactly
//! zero at the non-positive integers, which the connection formulas rely on.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Result, SpecError};

pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

const LN_SQRT_2PI: f64 = 0.918_938_533_204_672_8;

// B_{2k} for k = 1..=8
const BERNOULLI: [f64; 8] = [
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
];

const SHIFT_RADIUS: f64 = 15.0;

/// sin(πx) with exact zeros at the integers.
pub fn sinpi(x: f64) -> f64 {
    if !x.is_finite() {
        return f64::NAN;
    }
    let r = x - 2.0 * (x / 2.0).round(); // r in [-1, 1]
    let s = if r.abs() <= 0.25 {
        (PI * r).sin()
    } else if r > 0.75 {
        (PI * (1.0 - r)).sin()
    } else if r < -0.75 {
        -(PI * (1.0 + r)).sin()
    } else if r > 0.0 {
        (PI * (r - 0.5)).cos()
    } else {
        -(PI * (r + 0.5)).cos()
    };
    if r == r.round() {
        0.0
    } else {
        s
    }
}

/// cos(πx) with exact zeros at the half-integers.
pub fn cospi(x: f64) -> f64 {
    sinpi(x + 0.5)
}

pub fn sinpi_c(z: Complex64) -> Complex64 {
    let (y, x) = (PI * z.im, z.re);
    Complex64::new(sinpi(x) * y.cosh(), cospi(x) * y.sinh())
}

pub fn cospi_c(z: Complex64) -> Complex64 {
    let (y, x) = (PI * z.im, z.re);
    Complex64::new(cospi(x) * y.cosh(), -sinpi(x) * y.sinh())
}

pub fn is_nonpositive_integer(z: Complex64) -> bool {
    z.im == 0.0 && z.re <= 0.0 && z.re == z.re.round()
}

fn stirling_ln_gamma(z: Complex64) -> Complex64 {
    let inv = z.inv();
    let inv2 = inv * inv;
    let mut pow = inv;
    let mut corr = Complex64::new(0.0, 0.0);
    for (k, b) in BERNOULLI.iter().enumerate() {
        let m = 2.0 * (k as f64 + 1.0);
        corr += pow * (b / (m * (m - 1.0)));
        pow *= inv2;
    }
    (z - 0.5) * z.ln() - z + LN_SQRT_2PI + corr
}

/// ln Γ(z) for Re z ≥ 1/2, as a sum of principal logarithms.
fn ln_gamma_right(z: Complex64) -> Complex64 {
    let mut w = z;
    let mut acc = Complex64::new(0.0, 0.0);
    while w.norm() < SHIFT_RADIUS {
        acc += w.ln();
        w += 1.0;
    }
    stirling_ln_gamma(w) - acc
}

/// Complex log-gamma. The imaginary part is a continuous branch, not
/// necessarily the principal one; only `exp` of it is meaningful.
pub fn ln_gamma_c(z: Complex64) -> Result<Complex64> {
    if is_nonpositive_integer(z) {
        return Err(SpecError::Pole { x: z.re });
    }
    if z.re < 0.5 {
        let s = sinpi_c(z);
        Ok(Complex64::new(PI.ln(), 0.0) - s.ln() - ln_gamma_right(1.0 - z))
    } else {
        Ok(ln_gamma_right(z))
    }
}

/// Reciprocal gamma, entire, exactly zero at the poles of Γ.
pub fn rgamma_c(z: Complex64) -> Complex64 {
    if is_nonpositive_integer(z) {
        return Complex64::new(0.0, 0.0);
    }
    if z.re < 0.5 {
        sinpi_c(z) / PI * ln_gamma_right(1.0 - z).exp()
    } else {
        (-ln_gamma_right(z)).exp()
    }
}

pub fn gamma_c(z: Complex64) -> Result<Complex64> {
    if is_nonpositive_integer(z) {
        return Err(SpecError::Pole { x: z.re });
    }
    if z.re < 0.5 {
        Ok(PI / (sinpi_c(z) * ln_gamma_right(1.0 - z).exp()))
    } else {
        Ok(ln_gamma_right(z).exp())
    }
}

fn digamma_right(z: Complex64) -> Complex64 {
    let mut w = z;
    let mut acc = Complex64::new(0.0, 0.0);
    while w.norm() < SHIFT_RADIUS {
        acc += w.inv();
        w += 1.0;
    }
    let inv = w.inv();
    let inv2 = inv * inv;
    let mut pow = inv2;
    let mut series = w.ln() - 0.5 * inv;
    for (k, b) in BERNOULLI.iter().enumerate() {
        let m = 2.0 * (k as f64 + 1.0);
        series -= pow * (b / m);
        pow *= inv2;
    }
    series - acc
}

pub fn digamma_c(z: Complex64) -> Result<Complex64> {
    if is_nonpositive_integer(z) {
        return Err(SpecError::Pole { x: z.re });
    }
    if z.re < 0.5 {
        let cot = cospi_c(z) / sinpi_c(z);
        Ok(digamma_right(1.0 - z) - PI * cot)
    } else {
        Ok(digamma_right(z))
    }
}

/// ln |Γ(x)| for real x; reflection is used for x < 1/2.
pub fn gamma_ln(x: f64) -> Result<f64> {
    if x <= 0.0 && x == x.round() {
        return Err(SpecError::Pole { x });
    }
    if x < 0.5 {
        let s = sinpi(x).abs();
        Ok(PI.ln() - s.ln() - ln_gamma_right(Complex64::new(1.0 - x, 0.0)).re)
    } else {
        Ok(ln_gamma_right(Complex64::new(x, 0.0)).re)
    }
}

pub fn gamma(x: f64) -> Result<f64> {
    gamma_c(Complex64::new(x, 0.0)).map(|g| g.re)
}

pub fn rgamma(x: f64) -> f64 {
    rgamma_c(Complex64::new(x, 0.0)).re
}

pub fn digamma(x: f64) -> Result<f64> {
    digamma_c(Complex64::new(x, 0.0)).map(|p| p.re)
}
