//! General solutions of the spatial Dirac system
//!   Φ¹′ + M sec ρ Φ¹ = ω Φ²,   −Φ²′ + M sec ρ Φ² = ω Φ¹
//! in the three closed forms: trigonometric (M = 0), hypergeometric in
//! x = (1 − sin ρ)/2, and Ferrers functions of sin ρ for M = k + 1/2.

use ads2_quad::{Endpoint, Point, Spinor};
use ads2_specfun::{ferrers_pq_c, gamma_c, hyp2f1_split_c, rgamma_c};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{ModeError, Result};
use crate::regime::MassRegime;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum SolutionForm {
    Trigonometric,
    Hypergeometric,
    Ferrers { k: u32 },
}

impl SolutionForm {
    pub fn for_mass(m: f64) -> Result<Self> {
        Ok(match MassRegime::of(m)? {
            MassRegime::Massless => SolutionForm::Trigonometric,
            MassRegime::Low | MassRegime::Generic => SolutionForm::Hypergeometric,
            MassRegime::HalfInteger { k } => SolutionForm::Ferrers { k },
        })
    }
}

/// Solution for given (M, ω, C₁, C₂). At M = 0 the constants are the
/// trigonometric C̃₁, C̃₂.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GeneralSolution {
    pub m: f64,
    pub omega: Complex64,
    pub c1: Complex64,
    pub c2: Complex64,
    pub form: SolutionForm,
}

pub fn general_solution(m: f64, omega: Complex64, c1: Complex64, c2: Complex64) -> Result<GeneralSolution> {
    let form = SolutionForm::for_mass(m)?;
    Ok(GeneralSolution { m, omega, c1, c2, form })
}

/// Requests a specific closed form; fails if it does not apply at `m`.
pub fn general_solution_in(
    form: SolutionForm,
    m: f64,
    omega: Complex64,
    c1: Complex64,
    c2: Complex64,
) -> Result<GeneralSolution> {
    let routed = SolutionForm::for_mass(m)?;
    if routed != form {
        return Err(ModeError::Regime { m, what: format!("the {form:?} closed form (use {routed:?})") });
    }
    Ok(GeneralSolution { m, omega, c1, c2, form })
}

fn hyp(a: Complex64, b: Complex64, c: f64, p: &Point) -> Result<Complex64> {
    Ok(hyp2f1_split_c(a, b, Complex64::new(c, 0.0), p.x(), p.one_minus_x())?)
}

/// Hypergeometric pieces at one point, with their ρ-derivatives.
struct HypPieces {
    f: [Complex64; 4],
    df: [Complex64; 4],
}

impl GeneralSolution {
    pub fn eval(&self, p: &Point) -> Result<Spinor> {
        match self.form {
            SolutionForm::Trigonometric => Ok(self.trig(p).0),
            SolutionForm::Hypergeometric => {
                let (m, w) = (self.m, self.omega);
                let [f1, f2, f3, f4] = self.hyp_values(p)?;
                let ls = p.ln_sigma();
                let (sp, sm, cs) = ((m * ls).exp(), (-m * ls).exp(), p.cos());
                Ok([
                    (2.0 * m + 1.0) * self.c1 * sp * f1 + w * self.c2 * cs * sm * f2,
                    w * self.c1 * cs * sp * f3 + (2.0 * m - 1.0) * self.c2 * sm * f4,
                ])
            }
            SolutionForm::Ferrers { k } => Ok(self.ferrers(k, p, false)?.0),
        }
    }

    pub fn at(&self, rho: f64) -> Result<Spinor> {
        self.eval(&Point::from_rho(rho))
    }

    /// (Φ, Φ′) with analytic derivatives.
    pub fn eval_with_derivative(&self, p: &Point) -> Result<(Spinor, Spinor)> {
        match self.form {
            SolutionForm::Trigonometric => Ok(self.trig(p)),
            SolutionForm::Hypergeometric => self.hypergeometric(p),
            SolutionForm::Ferrers { k } => self.ferrers(k, p, true),
        }
    }

    fn trig(&self, p: &Point) -> (Spinor, Spinor) {
        let wr = self.omega * p.rho;
        let (c, s) = (wr.cos(), wr.sin());
        let w = self.omega;
        (
            [self.c1 * c + self.c2 * s, -self.c1 * s + self.c2 * c],
            [w * (-self.c1 * s + self.c2 * c), -w * (self.c1 * c + self.c2 * s)],
        )
    }

    fn hyp_values(&self, p: &Point) -> Result<[Complex64; 4]> {
        let (m, w) = (self.m, self.omega);
        let one = Complex64::new(1.0, 0.0);
        Ok([hyp(w, -w, 0.5 + m, p)?, hyp(one + w, one - w, 1.5 - m, p)?, hyp(one + w, one - w, 1.5 + m, p)?, hyp(w, -w, 0.5 - m, p)?])
    }

    fn hyp_pieces(&self, p: &Point) -> Result<HypPieces> {
        let (m, w) = (self.m, self.omega);
        let one = Complex64::new(1.0, 0.0);
        let (a0, b0, a1, b1, a2, b2) = (w, -w, one + w, one - w, 2.0 * one + w, 2.0 * one - w);
        let [f1, f2, f3, f4] = self.hyp_values(p)?;
        // dx/dρ = −cos ρ / 2
        let dx = -0.5 * p.cos();
        let ab0 = a0 * b0;
        let ab1 = a1 * b1;
        let df1 = ab0 / (0.5 + m) * f3 * dx;
        let df2 = ab1 / (1.5 - m) * hyp(a2, b2, 2.5 - m, p)? * dx;
        let df3 = ab1 / (1.5 + m) * hyp(a2, b2, 2.5 + m, p)? * dx;
        let df4 = ab0 / (0.5 - m) * f2 * dx;
        Ok(HypPieces { f: [f1, f2, f3, f4], df: [df1, df2, df3, df4] })
    }

    fn hypergeometric(&self, p: &Point) -> Result<(Spinor, Spinor)> {
        let (m, w, c1, c2) = (self.m, self.omega, self.c1, self.c2);
        let HypPieces { f: [f1, f2, f3, f4], df: [d1, d2, d3, d4] } = self.hyp_pieces(p)?;
        let ls = p.ln_sigma();
        let (sp, sm) = ((m * ls).exp(), (-m * ls).exp());
        let (cs, sn, sec) = (p.cos(), p.sin(), 1.0 / p.cos());
        let k1 = (2.0 * m + 1.0) * c1;
        let k2 = w * c2;
        let k3 = w * c1;
        let k4 = (2.0 * m - 1.0) * c2;
        let phi1 = k1 * sp * f1 + k2 * cs * sm * f2;
        let phi2 = k3 * cs * sp * f3 + k4 * sm * f4;
        // (σ^{±M})′ = ∓M sec ρ σ^{±M}
        let dphi1 = k1 * sp * (d1 - m * sec * f1) + k2 * sm * (-sn * f2 + m * f2 + cs * d2);
        let dphi2 = k3 * sp * (-sn * f3 - m * f3 + cs * d3) + k4 * sm * (d4 + m * sec * f4);
        Ok(([phi1, phi2], [dphi1, dphi2]))
    }

    /// Ferrers form; the derivative is left zero unless requested.
    fn ferrers(&self, k: u32, p: &Point, with_derivative: bool) -> Result<(Spinor, Spinor)> {
        let (w, c1, c2) = (self.omega, self.c1, self.c2);
        let (s, omx, opx) = (p.sin(), p.one_minus_sin(), p.one_plus_sin());
        let one = Complex64::new(1.0, 0.0);
        let (pm, qm) = ferrers_pq_c(w - one, k, s, omx, opx)?;
        let (p0, q0) = ferrers_pq_c(w, k, s, omx, opx)?;
        let a = c1 * (p0 + pm) + c2 * (q0 + qm);
        let b = c1 * (pm - p0) + c2 * (qm - q0);
        let ls = p.ln_sigma();
        let (sh, smh) = ((0.5 * ls).exp(), (-0.5 * ls).exp());
        if !with_derivative {
            let z = Complex64::new(0.0, 0.0);
            return Ok(([sh * a, smh * b], [z, z]));
        }
        let (pp, qp) = ferrers_pq_c(w + one, k, s, omx, opx)?;
        // d/dρ f_ν(sin ρ) = [(μ − ν − 1) f_{ν+1} + (ν + 1) s f_ν] / cos ρ with μ = −k
        let mu = -(k as f64);
        let cs = p.cos();
        let deriv = |nu: Complex64, f_next: Complex64, f: Complex64| ((mu - nu - 1.0) * f_next + (nu + 1.0) * s * f) / cs;
        let (dp0, dq0) = (deriv(w, pp, p0), deriv(w, qp, q0));
        let (dpm, dqm) = (deriv(w - one, p0, pm), deriv(w - one, q0, qm));
        let da = c1 * (dp0 + dpm) + c2 * (dq0 + dqm);
        let db = c1 * (dpm - dp0) + c2 * (dqm - dq0);
        let sec = 1.0 / cs;
        Ok(([sh * a, smh * b], [sh * (da - 0.5 * sec * a), smh * (db + 0.5 * sec * b)]))
    }

    /// (σ^{−M}Φ¹, σ^{M}Φ²), formed without overflow near the endpoints.
    pub fn weighted(&self, p: &Point) -> Result<Spinor> {
        match self.form {
            SolutionForm::Trigonometric => Ok(self.trig(p).0),
            SolutionForm::Hypergeometric => {
                let (m, w) = (self.m, self.omega);
                let [f1, f2, f3, f4] = self.hyp_values(p)?;
                let ls = p.ln_sigma();
                let cs = p.cos();
                let phi1 = (2.0 * m + 1.0) * self.c1 * f1 + w * self.c2 * cs * (-2.0 * m * ls).exp() * f2;
                let phi2 = w * self.c1 * cs * (2.0 * m * ls).exp() * f3 + (2.0 * m - 1.0) * self.c2 * f4;
                Ok([phi1, phi2])
            }
            SolutionForm::Ferrers { .. } => {
                let phi = self.eval(p)?;
                let ls = p.ln_sigma();
                Ok([(-self.m * ls).exp() * phi[0], (self.m * ls).exp() * phi[1]])
            }
        }
    }
}

/// The weighted components, available where they have finite endpoint limits.
#[derive(Debug, Clone, Copy)]
pub struct WeightedComponents<'a> {
    pub solution: &'a GeneralSolution,
}

impl WeightedComponents<'_> {
    pub fn eval(&self, p: &Point) -> Result<Spinor> {
        self.solution.weighted(p)
    }
}

pub fn weighted_components(sol: &GeneralSolution) -> Result<WeightedComponents<'_>> {
    if !MassRegime::of(sol.m)?.has_boundary_freedom() {
        return Err(ModeError::Regime { m: sol.m, what: "weighted components (requires 0 <= M < 1/2)".into() });
    }
    Ok(WeightedComponents { solution: sol })
}

/// Connection coefficients of the hypergeometric pieces at ρ → −π/2.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TransCoeffs {
    pub a1: Complex64,
    pub a2: Complex64,
    pub b1: Complex64,
    pub b2: Complex64,
}

pub fn trans_coeffs(m: f64, omega: Complex64) -> Result<TransCoeffs> {
    let c = |x: f64| Complex64::new(x, 0.0);
    let one = c(1.0);
    let g = |x: f64| gamma_c(c(x));
    Ok(TransCoeffs {
        a1: g(0.5 + m)?.powi(2) * rgamma_c(0.5 + m + omega) * rgamma_c(0.5 + m - omega),
        a2: g(0.5 + m)? * g(-0.5 - m)? * rgamma_c(omega) * rgamma_c(-omega),
        b1: g(1.5 - m)? * g(-m - 0.5)? * rgamma_c(0.5 - m + omega) * rgamma_c(0.5 - m - omega),
        b2: g(1.5 - m)? * g(0.5 + m)? * rgamma_c(one + omega) * rgamma_c(one - omega),
    })
}

/// (Φ̃¹(π/2), Φ̃²(π/2), Φ̃¹(−π/2), Φ̃²(−π/2))
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BoundaryData {
    pub values: [Complex64; 4],
}

impl BoundaryData {
    pub fn plus(&self) -> Spinor {
        [self.values[0], self.values[1]]
    }

    pub fn minus(&self) -> Spinor {
        [self.values[2], self.values[3]]
    }

    pub fn at(&self, endpoint: Endpoint) -> Spinor {
        match endpoint {
            Endpoint::Plus => self.plus(),
            Endpoint::Minus => self.minus(),
        }
    }

    pub fn max_abs_diff(&self, other: &BoundaryData) -> f64 {
        self.values.iter().zip(&other.values).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max)
    }
}

/// Closed-form boundary data for 0 ≤ M < 1/2.
pub fn boundary_data(sol: &GeneralSolution) -> Result<BoundaryData> {
    weighted_components(sol)?;
    let (m, w, c1, c2) = (sol.m, sol.omega, sol.c1, sol.c2);
    if sol.form == SolutionForm::Trigonometric {
        let h = w * std::f64::consts::FRAC_PI_2;
        let (c, s) = (h.cos(), h.sin());
        return Ok(BoundaryData { values: [c1 * c + c2 * s, -c1 * s + c2 * c, c1 * c - c2 * s, c1 * s + c2 * c] });
    }
    let tp = trans_coeffs(m, w)?;
    let tm = trans_coeffs(-m, w)?;
    Ok(BoundaryData {
        values: [
            (2.0 * m + 1.0) * c1,
            (2.0 * m - 1.0) * c2,
            (2.0 * m + 1.0) * c1 * tp.a1 + 2.0 * w * c2 * tp.b2,
            2.0 * w * c1 * tm.b2 + (2.0 * m - 1.0) * c2 * tm.a1,
        ],
    })
}

/// Endpoint limits of the weighted components taken numerically: the
/// values at ε₁ = 1e-60 and ε₂ = 1e-120 are combined by one Richardson
/// step against the leading correction ε^{1−2M}.
pub fn boundary_data_numerical(sol: &GeneralSolution) -> Result<BoundaryData> {
    let wc = weighted_components(sol)?;
    let (e1, e2) = (1e-60_f64, 1e-120_f64);
    let r = (e2 / e1).powf(1.0 - 2.0 * sol.m);
    let limit = |end: Endpoint| -> Result<Spinor> {
        let a = wc.eval(&Point::near(end, e1))?;
        let b = wc.eval(&Point::near(end, e2))?;
        Ok([(b[0] - r * a[0]) / (1.0 - r), (b[1] - r * a[1]) / (1.0 - r)])
    };
    let (p, q) = (limit(Endpoint::Plus)?, limit(Endpoint::Minus)?);
    Ok(BoundaryData { values: [p[0], p[1], q[0], q[1]] })
}
