//! Gauss hypergeometric function F(a, b; c; x) for real 0 ≤ x ≤ 1.
//!
//! Parameters may be complex (the deficiency probe evaluates at ω = ±i);
//! the argument is always real. For x ≤ 1/2 the defining series is summed
//! directly, above that the two-series connection formula in 1 − x is used.

use num_complex::Complex64;

use crate::error::{Result, SpecError};
use crate::gamma::{gamma_c, is_nonpositive_integer, rgamma_c};

const SERIES_TOL: f64 = 1e-16;
const MAX_TERMS: usize = 10_000;
const GAP_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HypergeometricParams {
    pub a: f64,
    pub b: f64,
    pub c: f64,
}

impl HypergeometricParams {
    pub fn new(a: f64, b: f64, c: f64) -> Self {
        Self { a, b, c }
    }
}

fn c64(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

/// Direct series. Terminates exactly when a or b is a non-positive integer.
pub fn hyp2f1_series_c(a: Complex64, b: Complex64, c: Complex64, x: f64) -> Result<Complex64> {
    if !(0.0..1.0).contains(&x) {
        return Err(SpecError::Domain { x, domain: "[0, 1)" });
    }
    if is_nonpositive_integer(c) {
        return Err(SpecError::Pole { x: c.re });
    }
    let mut term = c64(1.0);
    let mut sum = c64(1.0);
    let mut max_term = 1.0_f64;
    for n in 0..MAX_TERMS {
        let nf = n as f64;
        term *= (a + nf) * (b + nf) / ((c + nf) * (nf + 1.0)) * x;
        if term.norm() == 0.0 {
            return Ok(sum);
        }
        sum += term;
        let t = term.norm();
        max_term = max_term.max(t);
        let past_hump = nf > a.norm() + b.norm();
        if past_hump && (t <= SERIES_TOL * sum.norm() || t <= 1e-2 * SERIES_TOL * max_term) {
            return Ok(sum);
        }
    }
    Err(SpecError::NonConvergence { terms: MAX_TERMS })
}

fn integer_gap(d: Complex64) -> bool {
    d.im.abs() < GAP_TOL && (d.re - d.re.round()).abs() < GAP_TOL
}

/// Connection formula about x = 1, given `omx` = 1 − x computed by the caller.
pub fn hyp2f1_connected_c(a: Complex64, b: Complex64, c: Complex64, omx: f64) -> Result<Complex64> {
    if !(0.0..=1.0).contains(&omx) || omx >= 1.0 {
        return Err(SpecError::Domain { x: 1.0 - omx, domain: "(0, 1]" });
    }
    let d = c - a - b;
    if integer_gap(d) {
        return Err(SpecError::IntegerGap { gap: d.re });
    }
    let gc = gamma_c(c)?;
    let first = if rgamma_c(c - a) == c64(0.0) || rgamma_c(c - b) == c64(0.0) {
        c64(0.0)
    } else {
        gc * gamma_c(d)? * rgamma_c(c - a) * rgamma_c(c - b) * hyp2f1_series_c(a, b, 1.0 - d, omx)?
    };
    let second = if rgamma_c(a) == c64(0.0) || rgamma_c(b) == c64(0.0) {
        c64(0.0)
    } else if omx == 0.0 {
        if d.re > 0.0 {
            c64(0.0)
        } else {
            return Err(SpecError::Domain { x: 1.0, domain: "x < 1 when Re(c - a - b) <= 0" });
        }
    } else {
        let pow = (d * omx.ln()).exp();
        pow * gc * gamma_c(-d)? * rgamma_c(a) * rgamma_c(b) * hyp2f1_series_c(c - a, c - b, 1.0 + d, omx)?
    };
    Ok(first + second)
}

/// Routed evaluation with an accurately known complement `omx` = 1 − x.
pub fn hyp2f1_split_c(a: Complex64, b: Complex64, c: Complex64, x: f64, omx: f64) -> Result<Complex64> {
    if x <= 0.5 {
        hyp2f1_series_c(a, b, c, x)
    } else {
        match hyp2f1_connected_c(a, b, c, omx) {
            Err(SpecError::IntegerGap { .. }) if terminates(a, b) => hyp2f1_series_c(a, b, c, x),
            other => other,
        }
    }
}

fn terminates(a: Complex64, b: Complex64) -> bool {
    is_nonpositive_integer(a) || is_nonpositive_integer(b)
}

pub fn hyp2f1_c(a: Complex64, b: Complex64, c: Complex64, x: f64) -> Result<Complex64> {
    if !(0.0..1.0).contains(&x) {
        return Err(SpecError::Domain { x, domain: "[0, 1)" });
    }
    hyp2f1_split_c(a, b, c, x, 1.0 - x)
}

/// F(a, b; c; x) on [0, 1), routed between the direct series (x ≤ 1/2)
/// and the connection formula (x > 1/2).
pub fn hyp2f1(p: &HypergeometricParams, x: f64) -> Result<f64> {
    hyp2f1_c(c64(p.a), c64(p.b), c64(p.c), x).map(|v| v.re)
}

/// F(a, b; c; x) on (0, 1] through the two transformed series in 1 − x.
pub fn hyp2f1_connected(p: &HypergeometricParams, x: f64) -> Result<f64> {
    if !(x > 0.0 && x <= 1.0) {
        return Err(SpecError::Domain { x, domain: "(0, 1]" });
    }
    hyp2f1_connected_c(c64(p.a), c64(p.b), c64(p.c), 1.0 - x).map(|v| v.re)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn log_identity() {
        let v = hyp2f1(&HypergeometricParams::new(1.0, 1.0, 2.0), 0.5).unwrap();
        assert_relative_eq!(v, 2.0 * 2f64.ln(), max_relative = 1e-14);
    }

    #[test]
    fn zero_argument_is_one() {
        let v = hyp2f1(&HypergeometricParams::new(0.7, -0.7, 1.3), 0.0).unwrap();
        assert_eq!(v, 1.0);
    }

    #[test]
    fn integer_gap_is_rejected() {
        let p = HypergeometricParams::new(0.5, 0.5, 2.0);
        assert!(matches!(hyp2f1_connected(&p, 0.9), Err(SpecError::IntegerGap { .. })));
    }

    #[test]
    fn domain_errors() {
        let p = HypergeometricParams::new(0.5, 0.5, 1.3);
        assert!(hyp2f1(&p, 1.0).is_err());
        assert!(hyp2f1(&p, -0.1).is_err());
        assert!(hyp2f1_connected(&p, 0.0).is_err());
    }
}
