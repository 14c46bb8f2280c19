//! Normalized mode families. Each component is either a weighted Jacobi
//! polynomial coef · cos^A ρ (1 + sin ρ)^B (1 − sin ρ)^C P_n^{(α,β)}(sin ρ)
//! or a cosine amp · cos(ωρ + phase).

use std::f64::consts::{FRAC_PI_2, PI};
use std::fmt;

use ads2_quad::{norm_squared, Endpoint, Point, QuadratureSpec, Spinor};
use ads2_specfun::{gamma_ln, jacobi_deriv_eval, jacobi_eval};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{ModeError, Result};
use crate::regime::half_integer_order;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", tag = "kind")]
pub enum Family {
    DirichletI,
    DirichletII,
    DirichletIII,
    DirichletIV,
    MasslessBeta { beta_plus: f64, beta_minus: f64 },
    HalfIntegerV { k: u32 },
    HalfMassVI,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::DirichletI => write!(f, "DirichletI"),
            Family::DirichletII => write!(f, "DirichletII"),
            Family::DirichletIII => write!(f, "DirichletIII"),
            Family::DirichletIV => write!(f, "DirichletIV"),
            Family::MasslessBeta { beta_plus, beta_minus } => write!(f, "MasslessBeta({beta_plus}, {beta_minus})"),
            Family::HalfIntegerV { k } => write!(f, "HalfIntegerV({k})"),
            Family::HalfMassVI => write!(f, "HalfMassVI"),
        }
    }
}

impl Family {
    /// Checks the family/mass pairing.
    pub fn check_mass(&self, m: f64) -> Result<()> {
        let ok = m.is_finite()
            && m >= 0.0
            && match self {
                Family::DirichletI => true,
                Family::DirichletII | Family::DirichletIII | Family::DirichletIV => m < 0.5,
                Family::MasslessBeta { beta_plus, beta_minus } => m == 0.0 && beta_plus.is_finite() && beta_minus.is_finite(),
                Family::HalfIntegerV { k } => half_integer_order(m) == Some(*k),
                Family::HalfMassVI => m == 0.5,
            };
        if ok {
            Ok(())
        } else {
            Err(ModeError::Incompatible { family: self.to_string(), m })
        }
    }

    /// β = (β₊ + β₋)/π and B = (β₊ − β₋)/2 of a massless family.
    pub fn beta_params(&self) -> Option<(f64, f64)> {
        match self {
            Family::MasslessBeta { beta_plus, beta_minus } => Some(((beta_plus + beta_minus) / PI, 0.5 * (beta_plus - beta_minus))),
            _ => None,
        }
    }

    /// Whether the index is the signed level of a two-sided tower with
    /// j < 0 standing for Ψ_{−(|j|−1)}. III/IV use j = n directly.
    fn split_level(&self, j: i64) -> (usize, f64) {
        match self {
            Family::DirichletIII | Family::DirichletIV => (j.unsigned_abs() as usize, if j < 0 { -1.0 } else { 1.0 }),
            _ if j >= 0 => (j as usize, 1.0),
            _ => ((-j - 1) as usize, -1.0),
        }
    }

    /// Frequency of level j at mass m.
    pub fn frequency(&self, m: f64, j: i64) -> f64 {
        let (n, sg) = self.split_level(j);
        let n = n as f64;
        match self {
            Family::DirichletI => sg * (0.5 + m + n),
            Family::DirichletII => sg * (0.5 - m + n),
            Family::DirichletIII | Family::DirichletIV => j as f64,
            Family::MasslessBeta { .. } => {
                let (beta, _) = self.beta_params().unwrap_or((0.0, 0.0));
                j as f64 + 1.0 - beta
            }
            Family::HalfIntegerV { k } => sg * (*k as f64 + n + 1.0),
            Family::HalfMassVI => sg * (n + 1.0),
        }
    }

    /// The normalization constant printed alongside each family.
    pub fn printed_normalization(&self, m: f64, j: i64) -> f64 {
        let (n, _) = self.split_level(j);
        let nf = n as f64;
        let lg = |x: f64| gamma_ln(x).unwrap_or(f64::NAN);
        let ln2 = std::f64::consts::LN_2;
        match self {
            Family::DirichletI => (0.5 * (lg(nf + 1.0) + lg(nf + 2.0 * m + 1.0)) - (m + 0.5) * ln2 - lg(0.5 + m + nf)).exp(),
            Family::DirichletII => (0.5 * (lg(nf + 1.0) + lg(nf - 2.0 * m + 1.0)) - (0.5 - m) * ln2 - lg(0.5 - m + nf)).exp(),
            Family::DirichletIII | Family::DirichletIV => {
                (lg(nf + 1.0) - 0.5 * (lg(0.5 + m + nf) + lg(0.5 - m + nf))).exp() / 2.0
            }
            Family::MasslessBeta { .. } => 1.0 / PI.sqrt(),
            Family::HalfIntegerV { k } => {
                let k = *k as f64;
                (0.5 * (lg(nf + 1.0) + lg(2.0 * k + nf + 2.0)) - (k + 1.0) * ln2 - lg(nf + k + 1.0)).exp()
            }
            Family::HalfMassVI => (nf + 0.5).sqrt(),
        }
    }

    fn shapes(&self, m: f64, j: i64) -> [Shape; 2] {
        let (n, sg) = self.split_level(j);
        let jac = |coef: f64, a: f64, b: f64, c: f64, n: usize, alpha: f64, beta: f64| Shape::Jacobi {
            coef,
            cos_power: a,
            plus_power: b,
            minus_power: c,
            degree: n,
            alpha,
            beta,
        };
        match self {
            Family::DirichletI => [
                jac(1.0, m, 0.5, 0.0, n, m - 0.5, m + 0.5),
                jac(sg, m, 0.0, 0.5, n, m + 0.5, m - 0.5),
            ],
            Family::DirichletII => [
                jac(1.0, -m, 0.0, 0.5, n, 0.5 - m, -0.5 - m),
                jac(-sg, -m, 0.5, 0.0, n, -0.5 - m, 0.5 - m),
            ],
            Family::DirichletIII => {
                let first = if n == 0 { Shape::Zero } else { jac(1.0, 1.0, 0.5 * m, -0.5 * m, n - 1, 0.5 - m, 0.5 + m) };
                [first, jac(-2.0 * sg, 0.0, 0.5 * m, -0.5 * m, n, -0.5 - m, -0.5 + m)]
            }
            Family::DirichletIV => {
                let second = if n == 0 { Shape::Zero } else { jac(sg, 1.0, -0.5 * m, 0.5 * m, n - 1, 0.5 + m, 0.5 - m) };
                [jac(2.0, 0.0, -0.5 * m, 0.5 * m, n, -0.5 + m, -0.5 - m), second]
            }
            Family::MasslessBeta { .. } => {
                let (_, b) = self.beta_params().unwrap_or((0.0, 0.0));
                let omega = self.frequency(m, j);
                if j.rem_euclid(2) == 0 {
                    [Shape::Trig { amp: 1.0, omega, phase: -b }, Shape::Trig { amp: 1.0, omega, phase: -b + FRAC_PI_2 }]
                } else {
                    [Shape::Trig { amp: 1.0, omega, phase: -b - FRAC_PI_2 }, Shape::Trig { amp: 1.0, omega, phase: -b }]
                }
            }
            Family::HalfIntegerV { k } => {
                let k = *k as f64;
                [jac(1.0, k + 0.5, 0.5, 0.0, n, k, k + 1.0), jac(sg, k + 0.5, 0.0, 0.5, n, k + 1.0, k)]
            }
            Family::HalfMassVI => [jac(1.0, 0.5, 0.5, 0.0, n, 0.0, 1.0), jac(sg, 0.5, 0.0, 0.5, n, 1.0, 0.0)],
        }
    }
}

/// One component of an unnormalized mode.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", tag = "kind")]
pub enum Shape {
    Zero,
    Jacobi { coef: f64, cos_power: f64, plus_power: f64, minus_power: f64, degree: usize, alpha: f64, beta: f64 },
    Trig { amp: f64, omega: f64, phase: f64 },
}

impl Shape {
    /// (value, ρ-derivative)
    pub fn eval(&self, p: &Point) -> (f64, f64) {
        match *self {
            Shape::Zero => (0.0, 0.0),
            Shape::Trig { amp, omega, phase } => {
                let arg = omega * p.rho + phase;
                (amp * arg.cos(), -amp * omega * arg.sin())
            }
            Shape::Jacobi { coef, cos_power, plus_power, minus_power, degree, alpha, beta } => {
                let (s, c, ops, oms) = (p.sin(), p.cos(), p.one_plus_sin(), p.one_minus_sin());
                let mut ln_pref = 0.0;
                for (pow, base) in [(cos_power, c), (plus_power, ops), (minus_power, oms)] {
                    if pow != 0.0 {
                        ln_pref += pow * base.ln();
                    }
                }
                let pref = coef * ln_pref.exp();
                let poly = jacobi_eval(degree, alpha, beta, s);
                let dpoly = jacobi_deriv_eval(degree, alpha, beta, s);
                let log_slope = -cos_power * s / c + plus_power * c / ops - minus_power * c / oms;
                (pref * poly, pref * (poly * log_slope + c * dpoly))
            }
        }
    }
}

/// A normalized mode of one family. Evaluators return the spatial part.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct SpinorMode {
    pub family: Family,
    pub m: f64,
    pub index: i64,
    pub omega: f64,
    pub normalization: f64,
    pub printed_normalization: f64,
    pub components: [Shape; 2],
}

pub fn mode(family: Family, m: f64, index: i64) -> Result<SpinorMode> {
    mode_with(family, m, index, &QuadratureSpec::default())
}

/// Normalizes numerically. For types II–IV the norm integrand behaves like
/// ε^{2M−2} at the endpoints; the default rule resolves it up to M ≈ 0.46
/// and reports non-convergence closer to ½.
pub fn mode_with(family: Family, m: f64, index: i64, spec: &QuadratureSpec) -> Result<SpinorMode> {
    family.check_mass(m)?;
    let components = family.shapes(m, index);
    let raw = norm_squared(|p| raw_eval(&components, p), spec)?;
    if !(raw.value > 0.0) || !raw.value.is_finite() {
        return Err(ModeError::IndexOutOfRange { family: family.to_string(), index });
    }
    Ok(SpinorMode {
        family,
        m,
        index,
        omega: family.frequency(m, index),
        normalization: raw.value.sqrt().recip(),
        printed_normalization: family.printed_normalization(m, index),
        components,
    })
}

/// Modes for every level in `levels`.
pub fn modes(family: Family, m: f64, levels: impl IntoIterator<Item = i64>) -> Result<Vec<SpinorMode>> {
    levels.into_iter().map(|j| mode(family, m, j)).collect()
}

fn raw_eval(shapes: &[Shape; 2], p: &Point) -> Spinor {
    [Complex64::new(shapes[0].eval(p).0, 0.0), Complex64::new(shapes[1].eval(p).0, 0.0)]
}

impl SpinorMode {
    pub fn eval(&self, p: &Point) -> Spinor {
        let r = raw_eval(&self.components, p);
        [r[0] * self.normalization, r[1] * self.normalization]
    }

    pub fn at(&self, rho: f64) -> Spinor {
        self.eval(&Point::from_rho(rho))
    }

    pub fn eval_with_derivative(&self, p: &Point) -> (Spinor, Spinor) {
        let (a, da) = self.components[0].eval(p);
        let (b, db) = self.components[1].eval(p);
        let n = self.normalization;
        let c = |x: f64| Complex64::new(n * x, 0.0);
        ([c(a), c(b)], [c(da), c(db)])
    }

    /// (σ^{−M}Φ¹, σ^{M}Φ²)
    pub fn weighted(&self, p: &Point) -> Spinor {
        let phi = self.eval(p);
        if self.m == 0.0 {
            return phi;
        }
        let ls = p.ln_sigma();
        [phi[0] * (-self.m * ls).exp(), phi[1] * (self.m * ls).exp()]
    }

    /// Largest violation of the family's boundary condition, measured on
    /// the weighted components at distance 1e-100 from each endpoint.
    /// Massless families use cos β± Φ¹(±π/2) ± sin β± Φ²(±π/2) = 0.
    pub fn boundary_defect(&self) -> f64 {
        let at = |end: Endpoint| {
            let p = Point::near(end, if matches!(self.family, Family::MasslessBeta { .. }) { 0.0 } else { 1e-100 });
            self.weighted(&p)
        };
        let (plus, minus) = (at(Endpoint::Plus), at(Endpoint::Minus));
        match self.family {
            Family::DirichletI | Family::HalfIntegerV { .. } | Family::HalfMassVI => plus[1].norm().max(minus[0].norm()),
            Family::DirichletII => plus[0].norm().max(minus[1].norm()),
            Family::DirichletIII => plus[0].norm().max(minus[0].norm()),
            Family::DirichletIV => plus[1].norm().max(minus[1].norm()),
            Family::MasslessBeta { beta_plus, beta_minus } => {
                let f = |b: f64, v: Spinor, sg: f64| (b.cos() * v[0] + sg * b.sin() * v[1]).norm();
                f(beta_plus, plus, 1.0).max(f(beta_minus, minus, -1.0))
            }
        }
    }

    /// Ratio of the printed to the numerically computed normalization.
    pub fn printed_ratio(&self) -> f64 {
        self.printed_normalization / self.normalization
    }
}
