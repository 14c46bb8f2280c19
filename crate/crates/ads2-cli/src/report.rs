//! Report layout shared by every subcommand:
//! {provenance, config, results, checks[]}.

use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    /// Plain-language statement of the identity being checked.
    pub paper_ref: String,
    pub value: f64,
    pub tolerance: f64,
    pub pass: bool,
}

impl Check {
    /// Passes when `value <= tolerance`.
    pub fn within(name: impl Into<String>, paper_ref: impl Into<String>, value: f64, tolerance: f64) -> Self {
        Self { name: name.into(), paper_ref: paper_ref.into(), value, tolerance, pass: value <= tolerance }
    }

    /// A yes/no check, recorded as value 0 (holds) or 1 (fails).
    pub fn holds(name: impl Into<String>, paper_ref: impl Into<String>, ok: bool) -> Self {
        Self::within(name, paper_ref, if ok { 0.0 } else { 1.0 }, 0.0)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Provenance {
    pub tool: String,
    pub version: String,
}

impl Default for Provenance {
    fn default() -> Self {
        Self { tool: "ads2".into(), version: env!("CARGO_PKG_VERSION").into() }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub provenance: Provenance,
    pub config: Value,
    pub results: Value,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(config: Value, results: Value, checks: Vec<Check>) -> Self {
        Self { provenance: Provenance::default(), config, results, checks }
    }

    pub fn failures(&self) -> usize {
        self.checks.iter().filter(|c| !c.pass).count()
    }

    pub fn to_json(&self) -> serde_json::Result<String> {
        let mut s = serde_json::to_string_pretty(self)?;
        s.push('\n');
        Ok(s)
    }
}
