//! Double-exponential and composite Gauss–Legendre rules on (−π/2, π/2).
//!
//! The DE map is ρ = (π/2) tanh((π/2) sinh t). Endpoint distances are
//! formed directly as ε₊ = π/(1 + e^{2u}), ε₋ = π/(1 + e^{−2u}) with
//! u = (π/2) sinh t, so nodes crowd the endpoints without cancellation.
//! Levels halve the step and reuse all earlier nodes.

use std::f64::consts::{FRAC_PI_2, PI};

use num_complex::Complex64;

use crate::error::{QuadError, Result};
use crate::gauss::composite;
use crate::point::Point;

pub type Spinor = [Complex64; 2];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scheme {
    DoubleExponential,
    GaussLegendre,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureSpec {
    pub scheme: Scheme,
    /// Nodes closer than this to an endpoint are dropped.
    pub inset: f64,
    pub tolerance: f64,
    pub max_levels: usize,
}

pub const DEFAULT_TOLERANCE: f64 = 1e-11;
const T_MAX: f64 = 5.5;
const H0: f64 = 0.125;

impl Default for QuadratureSpec {
    fn default() -> Self {
        Self { scheme: Scheme::DoubleExponential, inset: 1e-150, tolerance: DEFAULT_TOLERANCE, max_levels: 4 }
    }
}

impl QuadratureSpec {
    pub fn with_tolerance(tolerance: f64) -> Self {
        Self { tolerance, ..Self::default() }
    }

    fn validate(&self) -> Result<()> {
        if !(self.tolerance > 0.0) {
            return Err(QuadError::InvalidSpec(format!("tolerance {} must be positive", self.tolerance)));
        }
        if !(self.inset >= 0.0 && self.inset < 0.1) {
            return Err(QuadError::InvalidSpec(format!("inset {} outside [0, 0.1)", self.inset)));
        }
        if self.max_levels < 2 {
            return Err(QuadError::InvalidSpec("at least two refinement levels are needed".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct QuadResult<T> {
    pub value: T,
    /// Change between the last two refinement levels.
    pub error: f64,
    pub levels: usize,
    pub nodes: usize,
}

fn de_node(t: f64, inset: f64) -> Option<(Point, f64)> {
    let u = FRAC_PI_2 * t.sinh();
    let eps_plus = PI / (1.0 + (2.0 * u).exp());
    let eps_minus = PI / (1.0 + (-2.0 * u).exp());
    if eps_plus.min(eps_minus) < inset || eps_plus.min(eps_minus) == 0.0 {
        return None;
    }
    let rho = if u > 0.0 { FRAC_PI_2 - eps_plus } else { eps_minus - FRAC_PI_2 };
    let e = (-u.abs()).exp();
    let sech = 2.0 * e / (1.0 + e * e);
    let w = FRAC_PI_2 * FRAC_PI_2 * t.cosh() * sech * sech;
    Some((Point { rho, eps_plus, eps_minus }, w))
}

/// Nodes first appearing at `level`, with weights excluding the step.
fn de_level_nodes(level: usize, inset: f64) -> Vec<(Point, f64)> {
    let h = H0 / (1u64 << level) as f64;
    let kmax = (T_MAX / h).floor() as i64;
    let step = if level == 0 { 1 } else { 2 };
    let start = if level == 0 { -kmax } else { -kmax + (1 - kmax.rem_euclid(2)) };
    let mut out = Vec::new();
    let mut k = start;
    while k <= kmax {
        if let Some(n) = de_node(k as f64 * h, inset) {
            out.push(n);
        }
        k += step;
    }
    out
}

/// Integrates `n` complex outputs of `f` simultaneously; `f` writes into its
/// slice argument. Convergence is judged on the largest output change.
pub fn integrate_many<F>(spec: &QuadratureSpec, n: usize, mut f: F) -> Result<QuadResult<Vec<Complex64>>>
where
    F: FnMut(&Point, &mut [Complex64]),
{
    spec.validate()?;
    let mut buf = vec![Complex64::new(0.0, 0.0); n];
    let mut add = |p: &Point, w: f64, acc: &mut [Complex64]| -> Result<()> {
        buf.iter_mut().for_each(|b| *b = Complex64::new(0.0, 0.0));
        f(p, &mut buf);
        for (a, b) in acc.iter_mut().zip(&buf) {
            if !b.re.is_finite() || !b.im.is_finite() {
                return Err(QuadError::NonFinite { rho: p.rho });
            }
            *a += w * b;
        }
        Ok(())
    };

    let mut prev: Option<Vec<Complex64>> = None;
    let mut history: Vec<f64> = Vec::new();
    let mut nodes = 0;
    let mut change = f64::INFINITY;
    let mut de_sum = vec![Complex64::new(0.0, 0.0); n];
    for level in 0..spec.max_levels {
        let estimate: Vec<Complex64> = match spec.scheme {
            Scheme::DoubleExponential => {
                for (p, w) in de_level_nodes(level, spec.inset) {
                    add(&p, w, &mut de_sum)?;
                    nodes += 1;
                }
                let h = H0 / (1u64 << level) as f64;
                de_sum.iter().map(|s| s * h).collect()
            }
            Scheme::GaussLegendre => {
                let mut acc = vec![Complex64::new(0.0, 0.0); n];
                let lo = -FRAC_PI_2 + spec.inset;
                for (x, w) in composite(lo, -lo, 4 << level, 20) {
                    add(&Point::from_rho(x), w, &mut acc)?;
                    nodes += 1;
                }
                acc
            }
        };
        let scale = estimate.iter().map(|z| z.norm()).fold(1.0, f64::max);
        history.push(estimate.iter().map(|z| z.norm()).fold(0.0, f64::max));
        if let Some(p) = &prev {
            change = estimate.iter().zip(p).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max);
            if change <= spec.tolerance * scale {
                return Ok(QuadResult { value: estimate, error: change, levels: level + 1, nodes });
            }
        }
        prev = Some(estimate);
    }
    let diverging = history.len() >= 3 && history.windows(2).rev().take(2).all(|w| w[1] > 1.1 * w[0]);
    Err(QuadError::NonConvergence { levels: spec.max_levels, change, diverging })
}

pub fn integrate<F>(spec: &QuadratureSpec, f: F) -> Result<QuadResult<Complex64>>
where
    F: Fn(&Point) -> Complex64,
{
    let r = integrate_many(spec, 1, |p, out| out[0] = f(p))?;
    Ok(QuadResult { value: r.value[0], error: r.error, levels: r.levels, nodes: r.nodes })
}

/// ∫ (conj Φ_a¹ Φ_b¹ + conj Φ_a² Φ_b²) dρ over (−π/2, π/2).
pub fn inner_product<A, B>(a: A, b: B, spec: &QuadratureSpec) -> Result<QuadResult<Complex64>>
where
    A: Fn(&Point) -> Spinor,
    B: Fn(&Point) -> Spinor,
{
    integrate(spec, |p| {
        let (x, y) = (a(p), b(p));
        x[0].conj() * y[0] + x[1].conj() * y[1]
    })
}

pub fn norm_squared<A>(a: A, spec: &QuadratureSpec) -> Result<QuadResult<f64>>
where
    A: Fn(&Point) -> Spinor,
{
    let r = integrate(spec, |p| {
        let x = a(p);
        Complex64::new(x[0].norm_sqr() + x[1].norm_sqr(), 0.0)
    })?;
    Ok(QuadResult { value: r.value.re, error: r.error, levels: r.levels, nodes: r.nodes })
}

/// Hermitian Gram matrix G_ij = ⟨Φ_i, Φ_j⟩. Each sampler is evaluated once
/// per node; the upper triangle is integrated and mirrored.
pub fn gram_matrix(samplers: &[&dyn Fn(&Point) -> Spinor], spec: &QuadratureSpec) -> Result<QuadResult<Vec<Vec<Complex64>>>> {
    let m = samplers.len();
    let pairs: Vec<(usize, usize)> = (0..m).flat_map(|i| (i..m).map(move |j| (i, j))).collect();
    let mut vals = vec![[Complex64::new(0.0, 0.0); 2]; m];
    let r = integrate_many(spec, pairs.len(), |p, out| {
        for (v, s) in vals.iter_mut().zip(samplers) {
            *v = s(p);
        }
        for (o, &(i, j)) in out.iter_mut().zip(&pairs) {
            *o = vals[i][0].conj() * vals[j][0] + vals[i][1].conj() * vals[j][1];
        }
    })?;
    let mut g = vec![vec![Complex64::new(0.0, 0.0); m]; m];
    for (v, &(i, j)) in r.value.iter().zip(&pairs) {
        g[i][j] = *v;
        g[j][i] = v.conj();
    }
    Ok(QuadResult { value: g, error: r.error, levels: r.levels, nodes: r.nodes })
}

/// Max-norm deviation of a square matrix from the identity.
pub fn identity_deviation(g: &[Vec<Complex64>]) -> f64 {
    let mut worst = 0.0f64;
    for (i, row) in g.iter().enumerate() {
        for (j, z) in row.iter().enumerate() {
            let target = if i == j { 1.0 } else { 0.0 };
            worst = worst.max((z - target).norm());
        }
    }
    worst
}
