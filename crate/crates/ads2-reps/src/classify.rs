//! Casimir bookkeeping and identification of a mode family with a sum of
//! unitary irreducible representations of the universal cover of SL(2,R).

use std::fmt;

use ads2_modes::Family;
use serde::{Deserialize, Serialize};

use crate::error::{RepsError, Result};
use crate::ladder::{ladder_table, LadderTable};

pub const CASIMIR_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Series {
    DiscretePlus,
    DiscreteMinus,
    MockDiscretePlus,
    MockDiscreteMinus,
    PrincipalS0,
    Complementary,
}

/// `weight` is the lowest |ω| for the discrete series, ½ + M for the
/// complementary series and ½ for the principal series at s = 0.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct UirLabel {
    pub series: Series,
    pub weight: f64,
    pub mu: f64,
}

impl fmt::Display for UirLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let w = self.weight;
        match self.series {
            Series::DiscretePlus => write!(f, "D+_{{{w}}}"),
            Series::DiscreteMinus => write!(f, "D-_{{{w}}}"),
            Series::MockDiscretePlus => write!(f, "D+_{{1/2}} (mock)"),
            Series::MockDiscreteMinus => write!(f, "D-_{{1/2}} (mock)"),
            Series::PrincipalS0 => write!(f, "P_0^{{{}}}", self.mu),
            Series::Complementary => write!(f, "C^{{{}}}_{{{w}}}", self.mu),
        }
    }
}

/// Reduces a frequency to its class μ in (−½, ½].
pub fn reduce_mu(omega: f64) -> f64 {
    let r = omega - omega.round();
    if r <= -0.5 + 1e-12 {
        r + 1.0
    } else if r.abs() < 1e-12 {
        0.0
    } else {
        r
    }
}

/// Nine consecutive levels around the zero of the frequency.
pub fn default_levels(family: Family) -> Vec<i64> {
    let center = match family.beta_params() {
        Some((beta, _)) => (beta - 1.0).round() as i64,
        None => 0,
    };
    (center - 4..=center + 4).collect()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct CasimirReport {
    pub q: f64,
    /// Spread of the per-level values (real parts) plus the largest imaginary part.
    pub spread: f64,
    pub per_level: Vec<(i64, f64)>,
}

fn casimir_of(table: &LadderTable) -> Result<CasimirReport> {
    let vals = table.casimir_values();
    let per_level: Vec<(i64, f64)> = vals.iter().map(|(j, q)| (*j, q.re)).collect();
    let lo = per_level.iter().map(|v| v.1).fold(f64::INFINITY, f64::min);
    let hi = per_level.iter().map(|v| v.1).fold(f64::NEG_INFINITY, f64::max);
    let imag = vals.iter().map(|v| v.1.im.abs()).fold(0.0, f64::max);
    let spread = (hi - lo).max(imag);
    if per_level.is_empty() || spread > CASIMIR_TOL {
        return Err(RepsError::NonConstantCasimir { family: table.family.to_string(), spread });
    }
    Ok(CasimirReport { q: 0.5 * (lo + hi), spread, per_level })
}

/// Casimir value realized by the ladder coefficients of nine levels.
pub fn casimir_check(family: Family, m: f64) -> Result<CasimirReport> {
    casimir_of(&ladder_table(family, m, &default_levels(family))?)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Classification {
    pub family: Family,
    pub m: f64,
    pub q: f64,
    /// Lowest positive level annihilated by L₋.
    pub lowest_weight: Option<i64>,
    /// Highest negative level annihilated by L₊.
    pub highest_weight: Option<i64>,
    pub labels: Vec<UirLabel>,
}

impl Classification {
    pub fn splits(&self) -> bool {
        self.lowest_weight.is_some() && self.highest_weight.is_some()
    }
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.labels.iter().map(|l| l.to_string()).collect();
        write!(f, "{}", parts.join(" ⊕ "))
    }
}

struct Weights {
    lowest: Option<(i64, f64)>,
    highest: Option<(i64, f64)>,
    any_annihilated: bool,
}

fn weights(table: &LadderTable) -> Weights {
    let n = table.levels.len();
    let pos = (0..n).filter(|&i| table.omegas[i] > 1e-12).min_by(|&a, &b| table.omegas[a].total_cmp(&table.omegas[b]));
    let neg = (0..n).filter(|&i| table.omegas[i] < -1e-12).max_by(|&a, &b| table.omegas[a].total_cmp(&table.omegas[b]));
    let lowest = pos.filter(|&i| table.lower[i].annihilates()).map(|i| (table.levels[i], table.omegas[i]));
    let highest = neg.filter(|&i| table.raise[i].annihilates()).map(|i| (table.levels[i], table.omegas[i]));
    let any_annihilated = table.raise.iter().chain(&table.lower).any(|a| a.annihilates());
    Weights { lowest, highest, any_annihilated }
}

/// Whether L₋ kills the lowest positive-frequency mode and L₊ the highest
/// negative-frequency mode.
pub fn invariant_frequency_splitting(family: Family, m: f64) -> Result<bool> {
    let table = ladder_table(family, m, &default_levels(family))?;
    let w = weights(&table);
    Ok(w.lowest.is_some() && w.highest.is_some())
}

/// Classifies a family from its realized ladder coefficients: annihilated
/// modes give lowest/highest weights, and (q, μ) picks the series.
pub fn classify(family: Family, m: f64) -> Result<Classification> {
    let table = ladder_table(family, m, &default_levels(family))?;
    let q = casimir_of(&table)?.q;
    let w = weights(&table);
    let fail = || RepsError::Unclassified { family: family.to_string(), m, q };
    let close = |a: f64, b: f64| (a - b).abs() <= 1e-8;
    let labels = match (w.lowest, w.highest) {
        (Some((_, lam)), Some((_, top))) => {
            if !close(lam, -top) || !close(lam * (lam - 1.0), q) {
                return Err(fail());
            }
            let mock = close(q, -0.25) && close(lam, 0.5);
            let (plus, minus) = if mock {
                (Series::MockDiscretePlus, Series::MockDiscreteMinus)
            } else {
                (Series::DiscretePlus, Series::DiscreteMinus)
            };
            vec![UirLabel { series: plus, weight: lam, mu: reduce_mu(lam) }, UirLabel { series: minus, weight: lam, mu: reduce_mu(-lam) }]
        }
        (None, None) if !w.any_annihilated => {
            let mu = reduce_mu(table.omegas[0]);
            if q <= -0.25 + CASIMIR_TOL && mu.abs() < 0.5 {
                vec![UirLabel { series: Series::PrincipalS0, weight: 0.5, mu }]
            } else if q > -0.25 && q < 0.0 {
                let weight = 0.5 + (q + 0.25).sqrt();
                if mu.abs() >= weight {
                    return Err(fail());
                }
                vec![UirLabel { series: Series::Complementary, weight, mu }]
            } else {
                return Err(fail());
            }
        }
        _ => return Err(fail()),
    };
    Ok(Classification {
        family,
        m,
        q,
        lowest_weight: w.lowest.map(|x| x.0),
        highest_weight: w.highest.map(|x| x.0),
        labels,
    })
}
