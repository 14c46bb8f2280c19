//! Ladder operators L± acting on normalized modes, realized numerically
//! and projected back onto the mode family.

use std::collections::BTreeMap;

use ads2_algebra::ladder_action_sc;
use ads2_modes::{mode_with, Family, SpinorMode};
use ads2_quad::{integrate_many, Point, QuadratureSpec, Spinor};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{RepsError, Result};

/// Largest admissible ‖L±Ψ − cΨ′‖.
pub const LADDER_TOL: f64 = 1e-8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Ladder {
    Raise,
    Lower,
}

impl Ladder {
    pub fn sign(self) -> f64 {
        match self {
            Ladder::Raise => 1.0,
            Ladder::Lower => -1.0,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Ladder::Raise => '+',
            Ladder::Lower => '-',
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct LadderAction {
    pub ladder: Ladder,
    pub source: i64,
    /// Level with frequency ω ± 1, if the family has one.
    pub target: Option<i64>,
    pub coefficient: Complex64,
    /// ‖L±Ψ‖.
    pub image_norm: f64,
    /// ‖L±Ψ − cΨ_target‖.
    pub residual: f64,
}

impl LadderAction {
    pub fn annihilates(&self) -> bool {
        self.image_norm <= LADDER_TOL
    }
}

/// The level reached from `j` by one ladder step, if it exists.
pub fn neighbor_level(family: Family, m: f64, j: i64, ladder: Ladder) -> Option<i64> {
    let want = family.frequency(m, j) + ladder.sign();
    let cand = j + ladder.sign() as i64;
    ((family.frequency(m, cand) - want).abs() <= 1e-12 * want.abs().max(1.0)).then_some(cand)
}

/// (L±Ψ)(ρ) with the analytic derivative of the mode.
pub fn ladder_image(ladder: Ladder, mode: &SpinorMode, p: &Point) -> Spinor {
    let (phi, dphi) = mode.eval_with_derivative(p);
    ladder_action_sc(ladder.sign(), Complex64::new(mode.omega, 0.0), (p.sin(), p.cos()), &phi, &dphi)
}

fn project(ladder: Ladder, mode: &SpinorMode, target: Option<&SpinorMode>, spec: &QuadratureSpec) -> Result<LadderAction> {
    let zero = Complex64::new(0.0, 0.0);
    let dot = |a: &Spinor, b: &Spinor| a[0].conj() * b[0] + a[1].conj() * b[1];
    let first = integrate_many(spec, 2, |p, out| {
        let img = ladder_image(ladder, mode, p);
        out[0] = dot(&img, &img);
        out[1] = target.map_or(zero, |t| dot(&t.eval(p), &img));
    })?;
    let image_norm = first.value[0].re.max(0.0).sqrt();
    let coefficient = first.value[1];
    let residual = match target {
        None => image_norm,
        Some(t) => {
            let r = integrate_many(spec, 1, |p, out| {
                let img = ladder_image(ladder, mode, p);
                let tv = t.eval(p);
                let d = [img[0] - coefficient * tv[0], img[1] - coefficient * tv[1]];
                out[0] = dot(&d, &d);
            })?;
            r.value[0].re.max(0.0).sqrt()
        }
    };
    Ok(LadderAction { ladder, source: mode.index, target: target.map(|t| t.index), coefficient, image_norm, residual })
}

fn check(action: LadderAction, family: Family) -> Result<LadderAction> {
    if action.residual > LADDER_TOL {
        return Err(RepsError::Projection {
            family: family.to_string(),
            index: action.source,
            sign: action.ladder.symbol(),
            residual: action.residual,
        });
    }
    Ok(action)
}

/// Applies L± to `mode` and expands the result in the family's modes.
pub fn apply_ladder(ladder: Ladder, mode: &SpinorMode) -> Result<LadderAction> {
    let spec = QuadratureSpec::default();
    let target = match neighbor_level(mode.family, mode.m, mode.index, ladder) {
        Some(j) => Some(mode_with(mode.family, mode.m, j, &spec)?),
        None => None,
    };
    check(project(ladder, mode, target.as_ref(), &spec)?, mode.family)
}

/// Ladder coefficients of a window of levels, sharing one mode cache.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct LadderTable {
    pub family: Family,
    pub m: f64,
    pub levels: Vec<i64>,
    pub omegas: Vec<f64>,
    pub raise: Vec<LadderAction>,
    pub lower: Vec<LadderAction>,
}

pub fn ladder_table(family: Family, m: f64, levels: &[i64]) -> Result<LadderTable> {
    let spec = QuadratureSpec::default();
    let mut cache: BTreeMap<i64, SpinorMode> = BTreeMap::new();
    let mut get = |j: i64| -> Result<SpinorMode> {
        if let Some(md) = cache.get(&j) {
            return Ok(md.clone());
        }
        let md = mode_with(family, m, j, &spec)?;
        cache.insert(j, md.clone());
        Ok(md)
    };
    let mut raise = Vec::with_capacity(levels.len());
    let mut lower = Vec::with_capacity(levels.len());
    let mut omegas = Vec::with_capacity(levels.len());
    for &j in levels {
        let md = get(j)?;
        omegas.push(md.omega);
        for (ladder, out) in [(Ladder::Raise, &mut raise), (Ladder::Lower, &mut lower)] {
            let target = neighbor_level(family, m, j, ladder).map(&mut get).transpose()?;
            out.push(check(project(ladder, &md, target.as_ref(), &spec)?, family)?);
        }
    }
    Ok(LadderTable { family, m, levels: levels.to_vec(), omegas, raise, lower })
}

impl LadderTable {
    fn position(&self, j: i64) -> Option<usize> {
        self.levels.iter().position(|&l| l == j)
    }

    /// Coefficient of the ladder step from level j, zero when annihilated.
    pub fn coefficient(&self, ladder: Ladder, j: i64) -> Option<Complex64> {
        let i = self.position(j)?;
        let a = match ladder {
            Ladder::Raise => &self.raise[i],
            Ladder::Lower => &self.lower[i],
        };
        Some(if a.target.is_some() { a.coefficient } else { Complex64::new(0.0, 0.0) })
    }

    /// Eigenvalues of L₊L₋ and L₋L₊ on level j, when both round trips stay
    /// inside the window.
    pub fn round_trips(&self, j: i64) -> Option<(Complex64, Complex64)> {
        let i = self.position(j)?;
        let trip = |first: &LadderAction, back: Ladder| -> Option<Complex64> {
            match first.target {
                None => Some(Complex64::new(0.0, 0.0)),
                Some(t) => Some(first.coefficient * self.coefficient(back, t)?),
            }
        };
        Some((trip(&self.lower[i], Ladder::Raise)?, trip(&self.raise[i], Ladder::Lower)?))
    }

    /// Casimir value ω² + ½(c₊c₋ + c₋c₊) for each level with both round trips.
    pub fn casimir_values(&self) -> Vec<(i64, Complex64)> {
        self.levels
            .iter()
            .zip(&self.omegas)
            .filter_map(|(&j, &w)| self.round_trips(j).map(|(pm, mp)| (j, w * w + 0.5 * (pm + mp))))
            .collect()
    }

    /// max |L₊L₋ − L₋L₊ − 2ω| over the levels with both round trips.
    pub fn commutator_defect(&self) -> f64 {
        self.levels
            .iter()
            .zip(&self.omegas)
            .filter_map(|(&j, &w)| self.round_trips(j).map(|(pm, mp)| (pm - mp - 2.0 * w).norm()))
            .fold(0.0, f64::max)
    }

    /// max |c₊(j) + conj c₋(j+1)|, the coefficient form of L±† = −L∓.
    pub fn unitarity_defect(&self) -> f64 {
        self.raise
            .iter()
            .filter_map(|a| {
                let t = a.target?;
                let back = self.coefficient(Ladder::Lower, t)?;
                Some((a.coefficient + back.conj()).norm())
            })
            .fold(0.0, f64::max)
    }
}
