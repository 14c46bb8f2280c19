//! Leading endpoint behavior of the general solution compared with direct
//! evaluation. Each formula is carried in two versions: the corrected one
//! (with the factors of 2 that follow from σ(π/2 − ε) ≈ ε/2 and
//! 1 − cos ε ≈ ε²/2) and the printed one, which is reported for comparison.

use std::f64::consts::{PI, SQRT_2};

use ads2_modes::{general_solution, trans_coeffs, MassRegime};
use ads2_quad::{Endpoint, Point};
use ads2_specfun::{gamma_c, rgamma_c};
use num_complex::Complex64;

use crate::error::{ExtError, Result};

pub const ASYMPTOTIC_EPS: [f64; 3] = [1e-3, 1e-4, 1e-5];
pub const ASYMPTOTIC_TOL: f64 = 1e-2;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Quantity {
    Phi1,
    Phi2,
    /// |Φ¹|² + |Φ²|²
    Density,
}

#[derive(Debug, Clone, PartialEq)]
pub struct AsymptoticEntry {
    pub endpoint: Endpoint,
    pub quantity: Quantity,
    pub eps: Vec<f64>,
    pub actual: Vec<Complex64>,
    pub predicted: Vec<Complex64>,
    pub printed: Vec<Complex64>,
    pub rel_error: Vec<f64>,
    pub printed_rel_error: Vec<f64>,
}

impl AsymptoticEntry {
    /// Relative error at the smallest ε.
    pub fn final_error(&self) -> f64 {
        *self.rel_error.last().unwrap_or(&f64::NAN)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct AsymptoticReport {
    pub m: f64,
    pub omega: f64,
    pub c1: Complex64,
    pub c2: Complex64,
    pub entries: Vec<AsymptoticEntry>,
    pub pass: bool,
}

type Formula = Box<dyn Fn(f64) -> Complex64>;

fn c(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

/// (endpoint, quantity, corrected, printed)
fn formulas(m: f64, w: f64, c1: Complex64, c2: Complex64) -> Result<Vec<(Endpoint, Quantity, Formula, Formula)>> {
    let regime = MassRegime::of(m)?;
    let wc = c(w);
    let mut out: Vec<(Endpoint, Quantity, Formula, Formula)> = Vec::new();
    match regime {
        MassRegime::Massless => {
            let h = w * PI / 2.0;
            let (ch, sh) = (h.cos(), h.sin());
            let plus = [c1 * ch + c2 * sh, -c1 * sh + c2 * ch];
            let minus = [c1 * ch - c2 * sh, c1 * sh + c2 * ch];
            for (end, v) in [(Endpoint::Plus, plus), (Endpoint::Minus, minus)] {
                for (q, x) in [(Quantity::Phi1, v[0]), (Quantity::Phi2, v[1])] {
                    out.push((end, q, Box::new(move |_| x), Box::new(move |_| x)));
                }
            }
        }
        MassRegime::Low | MassRegime::Generic => {
            let tp = trans_coeffs(m, wc)?;
            let tm = trans_coeffs(-m, wc)?;
            let (k1, k4) = ((2.0 * m + 1.0) * c1, (2.0 * m - 1.0) * c2);
            let (p2m, p2p) = (2f64.powf(-m), 2f64.powf(m));
            out.push((
                Endpoint::Plus,
                Quantity::Phi1,
                Box::new(move |e| k1 * p2m * e.powf(m) + wc * c2 * p2p * e.powf(1.0 - m)),
                Box::new(move |e| k1 * e.powf(m) + wc * c2 * e.powf(1.0 - m)),
            ));
            out.push((
                Endpoint::Plus,
                Quantity::Phi2,
                Box::new(move |e| wc * c1 * p2m * e.powf(1.0 + m) + k4 * p2p * e.powf(-m)),
                Box::new(move |e| wc * c1 * e.powf(1.0 + m) + k4 * e.powf(-m)),
            ));
            out.push((
                Endpoint::Minus,
                Quantity::Phi1,
                Box::new(move |e| {
                    (k1 * tp.a1 + 2.0 * wc * c2 * tp.b2) * p2p * e.powf(-m) + (0.5 * k1 * tp.a2 + wc * c2 * tp.b1) * p2m * e.powf(1.0 + m)
                }),
                Box::new(move |e| (k1 * tp.a1 + wc * c2 * tp.b2) * e.powf(-m) + (k1 * tp.a2 + wc * c2 * tp.b1) * e.powf(1.0 + m)),
            ));
            out.push((
                Endpoint::Minus,
                Quantity::Phi2,
                Box::new(move |e| {
                    (wc * c1 * tm.b1 + 0.5 * k4 * tm.a2) * p2p * e.powf(1.0 - m) + (2.0 * wc * c1 * tm.b2 + k4 * tm.a1) * p2m * e.powf(m)
                }),
                Box::new(move |e| (wc * c1 * tm.b1 + k4 * tm.a2) * e.powf(1.0 - m) + (wc * c1 * tm.b2 + k4 * tm.a1) * e.powf(m)),
            ));
        }
        MassRegime::HalfInteger { k: 0 } => {
            let plus = (c2 / wc).norm_sqr();
            let minus = (c1 * (2.0 / (PI * w)) * (PI * w).sin() + c2 * (PI * w).cos() / w).norm_sqr();
            for (end, a) in [(Endpoint::Plus, plus), (Endpoint::Minus, minus)] {
                if a == 0.0 {
                    continue;
                }
                out.push((end, Quantity::Density, Box::new(move |e| c(2.0 * a / e)), Box::new(move |e| c(a / e))));
            }
        }
        MassRegime::HalfInteger { k } => {
            let kf = k as f64;
            let a3 = 2f64.powi(k as i32) * gamma_c(c(kf))? * gamma_c(c(w - kf))? * rgamma_c(c(w + kf + 1.0));
            let bracket = c1 * (2.0 / PI) * (PI * (w - kf)).sin() + c2 * (PI * (w - kf)).cos();
            let lo = 0.5 - kf;
            let hi = -0.5 - kf;
            let entries: [(Endpoint, Quantity, Complex64, f64, f64); 4] = [
                (Endpoint::Plus, Quantity::Phi1, c2 * wc * a3, lo, 1.0 / SQRT_2),
                (Endpoint::Plus, Quantity::Phi2, c2 * kf * a3, hi, SQRT_2),
                (Endpoint::Minus, Quantity::Phi1, kf * a3 * bracket, hi, SQRT_2),
                (Endpoint::Minus, Quantity::Phi2, wc * a3 * bracket, lo, 1.0 / SQRT_2),
            ];
            for (end, q, coef, power, fix) in entries {
                if coef.norm() == 0.0 {
                    continue;
                }
                out.push((end, q, Box::new(move |e| fix * coef * e.powf(power)), Box::new(move |e| coef * e.powf(power))));
            }
        }
    }
    Ok(out)
}

fn relative(a: Complex64, b: Complex64) -> f64 {
    if a == b {
        0.0
    } else {
        (a - b).norm() / a.norm().max(b.norm())
    }
}

pub fn asymptotic_verifier(m: f64, omega: f64, c1: Complex64, c2: Complex64) -> Result<AsymptoticReport> {
    if !omega.is_finite() || (MassRegime::of(m)? != MassRegime::Massless && omega == 0.0) {
        return Err(ExtError::Inadmissible { bc: "asymptotics".into(), m, reason: "omega must be finite and nonzero".into() });
    }
    let sol = general_solution(m, c(omega), c1, c2)?;
    let mut entries = Vec::new();
    for (endpoint, quantity, corrected, printed) in formulas(m, omega, c1, c2)? {
        let mut e = AsymptoticEntry {
            endpoint,
            quantity,
            eps: ASYMPTOTIC_EPS.to_vec(),
            actual: vec![],
            predicted: vec![],
            printed: vec![],
            rel_error: vec![],
            printed_rel_error: vec![],
        };
        for &eps in &ASYMPTOTIC_EPS {
            let v = sol.eval(&Point::near(endpoint, eps))?;
            let actual = match quantity {
                Quantity::Phi1 => v[0],
                Quantity::Phi2 => v[1],
                Quantity::Density => c(v[0].norm_sqr() + v[1].norm_sqr()),
            };
            let (p, q) = (corrected(eps), printed(eps));
            e.rel_error.push(relative(actual, p));
            e.printed_rel_error.push(relative(actual, q));
            e.actual.push(actual);
            e.predicted.push(p);
            e.printed.push(q);
        }
        entries.push(e);
    }
    let pass = !entries.is_empty() && entries.iter().all(|e| e.final_error() <= ASYMPTOTIC_TOL);
    Ok(AsymptoticReport { m, omega, c1, c2, entries, pass })
}
