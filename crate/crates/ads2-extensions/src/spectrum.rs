//! Frequency spectra of the self-adjoint extensions. Closed forms are used
//! where they exist; for 0 ≤ M < 1/2 the spectrum is also found by scanning
//! det(K·B(ω)), K the condition rows and B(ω) the boundary data of the
//! two basis solutions, with a separate check at ω = 0.

use std::f64::consts::PI;

use ads2_algebra::SpinorMatrix;
use ads2_modes::{boundary_data, general_solution, GeneralSolution, MassRegime};
use num_complex::Complex64;

use crate::bc::{BcTag, BoundaryCondition};
use crate::error::{ExtError, Result};
use crate::invariance::invariance_test;

pub const SCAN_STEP: f64 = 0.05;
const ZERO_GAP: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectralLine {
    pub omega: f64,
    pub multiplicity: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    pub lines: Vec<SpectralLine>,
    /// Root-scan result, when the scan applies.
    pub scanned: Option<Vec<SpectralLine>>,
    /// Largest distance between closed-form and scanned frequencies;
    /// infinite if the two lists differ in length.
    pub agreement: Option<f64>,
}

fn validate_window(window: (f64, f64)) -> Result<()> {
    if !(window.0 < window.1) || !window.0.is_finite() || !window.1.is_finite() {
        return Err(ExtError::Window(window.0, window.1));
    }
    Ok(())
}

/// The named condition a matrix realizes at mass `m`, if any.
pub fn infer_tag(bc: &BoundaryCondition, m: f64) -> Option<BcTag> {
    if let Some(t) = bc.tag {
        return Some(t);
    }
    if !bc.is_diagonal() {
        return None;
    }
    if m == 0.0 {
        let half_arg = |z: Complex64| (0.5 * z.arg()).rem_euclid(PI);
        return Some(BcTag::Diagonal { beta_plus: half_arg(bc.u.get(0, 0)), beta_minus: half_arg(bc.u.get(1, 1)) });
    }
    [BcTag::DirichletI, BcTag::DirichletII, BcTag::DirichletIII, BcTag::DirichletIV]
        .into_iter()
        .find(|t| (t.matrix() - bc.u).max_abs() <= 1e-12)
}

fn admissible(bc: &BoundaryCondition, m: f64) -> Result<BcTag> {
    let regime = MassRegime::of(m)?;
    let fail = |reason: &str| ExtError::Inadmissible { bc: bc.label(), m, reason: reason.into() };
    if !regime.has_boundary_freedom() {
        return match bc.tag {
            Some(BcTag::DirichletI) => Ok(BcTag::DirichletI),
            _ => Err(fail("only the Dirichlet type I condition exists for M >= 1/2")),
        };
    }
    if m > 0.0 && !invariance_test(bc, m).invariant {
        return Err(fail("the condition is not invariant"));
    }
    infer_tag(bc, m).ok_or_else(|| fail("a massless condition must be diagonal"))
}

fn closed_form(tag: BcTag, m: f64, window: (f64, f64)) -> Vec<f64> {
    let (lo, hi) = window;
    let mut out = Vec::new();
    let mut push_ladder = |start: f64| {
        let mut w = start;
        while w < hi {
            if w > lo {
                out.push(w);
            }
            w += 1.0;
        }
    };
    if m == 0.0 {
        let (bp, bm) = tag.betas();
        let beta = (bp + bm) / PI;
        push_ladder((lo + beta).floor() - beta);
    } else {
        match tag {
            BcTag::DirichletI | BcTag::DirichletII => {
                let base = if matches!(tag, BcTag::DirichletI) { 0.5 + m } else { 0.5 - m };
                push_ladder(base);
                let mut w = -base;
                while w > lo {
                    if w < hi {
                        out.push(w);
                    }
                    w -= 1.0;
                }
            }
            BcTag::DirichletIII | BcTag::DirichletIV => push_ladder(lo.floor()),
            BcTag::Diagonal { .. } => {}
        }
    }
    out.sort_by(f64::total_cmp);
    out
}

/// The 2×2 matrix K·B(ω).
pub fn condition_matrix(bc: &BoundaryCondition, m: f64, omega: Complex64) -> Result<SpinorMatrix> {
    let k = bc.rows();
    let mut cols = [[Complex64::new(0.0, 0.0); 4]; 2];
    for (j, col) in cols.iter_mut().enumerate() {
        let (c1, c2) = if j == 0 { (1.0, 0.0) } else { (0.0, 1.0) };
        let sol = general_solution(m, omega, Complex64::new(c1, 0.0), Complex64::new(c2, 0.0))?;
        *col = boundary_data(&sol)?.values;
    }
    let entry = |i: usize, j: usize| (0..4).map(|l| k[i][l] * cols[j][l]).sum::<Complex64>();
    Ok(SpinorMatrix::new(entry(0, 0), entry(0, 1), entry(1, 0), entry(1, 1)))
}

fn multiplicity(a: &SpinorMatrix, scale: f64) -> usize {
    if a.max_abs() <= 1e-8 * scale {
        2
    } else {
        1
    }
}

/// Root scan of the real-normalized determinant over an open window.
pub fn spectrum_by_roots(bc: &BoundaryCondition, m: f64, window: (f64, f64)) -> Result<Vec<SpectralLine>> {
    validate_window(window)?;
    if !MassRegime::of(m)?.has_boundary_freedom() {
        return Err(ExtError::Inadmissible { bc: bc.label(), m, reason: "no boundary data for M >= 1/2".into() });
    }
    let phase = Complex64::from_polar(1.0, -0.5 * bc.u.det().arg());
    let f = |w: f64| -> Result<f64> { Ok((phase * condition_matrix(bc, m, Complex64::new(w, 0.0))?.det()).re) };
    let (lo, hi) = window;
    let steps = ((hi - lo) / SCAN_STEP).ceil() as usize;
    let xs: Vec<f64> = (0..=steps).map(|i| (lo + i as f64 * SCAN_STEP).min(hi)).collect();
    let vals = xs.iter().map(|&x| f(x)).collect::<Result<Vec<_>>>()?;
    let mut roots = Vec::new();
    for i in 0..xs.len() {
        if vals[i] == 0.0 && xs[i] > lo && xs[i] < hi {
            roots.push(xs[i]);
        }
        if i + 1 < xs.len() && vals[i] != 0.0 && vals[i + 1] != 0.0 && vals[i].signum() != vals[i + 1].signum() {
            let (mut a, mut b, mut fa) = (xs[i], xs[i + 1], vals[i]);
            for _ in 0..200 {
                let mid = 0.5 * (a + b);
                if mid <= a || mid >= b {
                    break;
                }
                let fm = f(mid)?;
                if fm == 0.0 {
                    a = mid;
                    b = mid;
                    break;
                }
                if fm.signum() == fa.signum() {
                    a = mid;
                    fa = fm;
                } else {
                    b = mid;
                }
            }
            roots.push(0.5 * (a + b));
        }
    }
    let mut lines = Vec::new();
    for w in roots {
        if w.abs() < ZERO_GAP {
            continue;
        }
        let a = condition_matrix(bc, m, Complex64::new(w, 0.0))?;
        let scale = condition_matrix(bc, m, Complex64::new(w + 0.5, 0.0))?.max_abs().max(1.0);
        // a sign change of the real part is a root only if the full determinant vanishes
        if a.det().norm() > 1e-6 * scale * scale {
            continue;
        }
        lines.push(SpectralLine { omega: w, multiplicity: multiplicity(&a, scale) });
    }
    if lo < 0.0 && hi > 0.0 {
        let a = condition_matrix(bc, m, Complex64::new(0.0, 0.0))?;
        let scale = a.max_abs().max(1.0);
        if a.det().norm() <= 1e-12 * scale * scale {
            lines.push(SpectralLine { omega: 0.0, multiplicity: multiplicity(&a, scale) });
        }
    }
    lines.sort_by(|a, b| a.omega.total_cmp(&b.omega));
    Ok(lines)
}

pub fn spectrum(bc: &BoundaryCondition, m: f64, window: (f64, f64)) -> Result<Spectrum> {
    validate_window(window)?;
    let tag = admissible(bc, m)?;
    let lines: Vec<SpectralLine> =
        closed_form(tag, m, window).into_iter().map(|omega| SpectralLine { omega, multiplicity: 1 }).collect();
    if !MassRegime::of(m)?.has_boundary_freedom() {
        return Ok(Spectrum { lines, scanned: None, agreement: None });
    }
    let scanned = spectrum_by_roots(bc, m, window)?;
    let agreement = if scanned.len() == lines.len() {
        lines.iter().zip(&scanned).map(|(a, b)| (a.omega - b.omega).abs()).fold(0.0, f64::max)
    } else {
        f64::INFINITY
    };
    Ok(Spectrum { lines, scanned: Some(scanned), agreement: Some(agreement) })
}

/// A solution satisfying the condition at an eigenfrequency.
pub fn eigen_solution(bc: &BoundaryCondition, m: f64, omega: f64) -> Result<GeneralSolution> {
    let a = condition_matrix(bc, m, Complex64::new(omega, 0.0))?;
    let r0 = a.get(0, 0).norm_sqr() + a.get(0, 1).norm_sqr();
    let r1 = a.get(1, 0).norm_sqr() + a.get(1, 1).norm_sqr();
    let row = if r0 >= r1 { 0 } else { 1 };
    let (x, y) = (a.get(row, 0), a.get(row, 1));
    let (c1, c2) = if x.norm() + y.norm() == 0.0 { (Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)) } else { (-y, x) };
    Ok(general_solution(m, Complex64::new(omega, 0.0), c1, c2)?)
}
