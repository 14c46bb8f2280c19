//! Command-line definitions and the conversions from flags to library types.

use std::path::PathBuf;

use ads2_algebra::SpinorMatrix;
use ads2_extensions::{BcTag, BoundaryCondition};
use ads2_modes::{half_integer_order, Family};
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde_json::{json, Value};

use crate::error::{CliError, Result};

pub const DEFAULT_QUAD_TOL: f64 = 1e-11;
pub const QUAD_TOL_ENV: &str = "ADS2_QUAD_TOL";
/// Unitarity tolerance for a matrix typed on the command line.
pub const INPUT_UNITARITY_TOL: f64 = 1e-10;

#[derive(Debug, Parser)]
#[command(name = "ads2", version, about = "Dirac field on AdS2: modes, spectra, representations and checks")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Output file; standard output when absent.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,
    /// Quadrature tolerance (overrides ADS2_QUAD_TOL).
    #[arg(long, global = true)]
    pub quad_tol: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Normalized modes of a family, optionally sampled on a grid.
    Modes(ModesArgs),
    /// Frequency spectrum of a boundary condition.
    Spectrum(SpectrumArgs),
    /// Representation carried by a mode family.
    Classify(FamilyArgs),
    /// Deficiency indices of the spatial Dirac operator.
    Deficiency(MassArgs),
    /// Invariance of a boundary condition under the isometry algebra.
    Invariance(BcArgs),
    /// Endpoint asymptotics of a general solution against direct evaluation.
    Asymptotics(AsymptoticsArgs),
    /// Runs verification suites.
    Verify(VerifyArgs),
    /// Truncated Fock space checks for a non-invariant vacuum.
    Fock(FockArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyName {
    Dirichlet1,
    Dirichlet2,
    Dirichlet3,
    Dirichlet4,
    Massless,
    HalfInteger,
    HalfMass,
}

#[derive(Debug, Clone, Args)]
pub struct MassArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub mass: f64,
}

#[derive(Debug, Clone, Args)]
pub struct FamilyArgs {
    #[arg(long, allow_hyphen_values = true, default_value_t = 0.0)]
    pub mass: f64,
    #[arg(long, value_enum)]
    pub family: Option<FamilyName>,
    /// β₊ in radians (massless families and diagonal conditions).
    #[arg(long, allow_hyphen_values = true)]
    pub beta_plus: Option<f64>,
    /// β₋ in radians.
    #[arg(long, allow_hyphen_values = true)]
    pub beta_minus: Option<f64>,
}

#[derive(Debug, Clone, Args)]
pub struct BcArgs {
    #[command(flatten)]
    pub family: FamilyArgs,
    /// U as eight reals: Re u11, Im u11, Re u12, Im u12, Re u21, Im u21, Re u22, Im u22.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub u: Option<Vec<f64>>,
}

#[derive(Debug, Clone, Args)]
pub struct ModesArgs {
    #[command(flatten)]
    pub family: FamilyArgs,
    /// Level range a:b (inclusive).
    #[arg(long, allow_hyphen_values = true, default_value = "0:3")]
    pub n: String,
    /// Grid points per mode; 0 emits metadata only.
    #[arg(long, default_value_t = 0)]
    pub samples: usize,
}

#[derive(Debug, Clone, Args)]
pub struct SpectrumArgs {
    #[command(flatten)]
    pub bc: BcArgs,
    /// Frequency window a:b.
    #[arg(long, allow_hyphen_values = true, default_value = "-5:5")]
    pub window: String,
}

#[derive(Debug, Clone, Args)]
pub struct AsymptoticsArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub mass: f64,
    #[arg(long, allow_hyphen_values = true)]
    pub omega: f64,
    /// C₁ as re,im.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, default_value = "1,0")]
    pub c1: Vec<f64>,
    /// C₂ as re,im.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, default_value = "0,0")]
    pub c2: Vec<f64>,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    /// Suite name or criterion number; `all` runs every suite.
    #[arg(long, default_value = "all")]
    pub suite: String,
}

#[derive(Debug, Clone, Args)]
pub struct FockArgs {
    #[command(flatten)]
    pub family: FamilyArgs,
    /// Massless μ, used instead of a family.
    #[arg(long, allow_hyphen_values = true)]
    pub mu: Option<f64>,
    #[arg(long, default_value_t = 5)]
    pub cutoff: usize,
}

fn invalid(msg: impl Into<String>) -> CliError {
    CliError::Validation(msg.into())
}

/// Resolves the quadrature tolerance: flag, then environment, then default.
pub fn quad_tolerance(flag: Option<f64>) -> Result<f64> {
    let tol = match flag {
        Some(t) => t,
        None => match std::env::var(QUAD_TOL_ENV) {
            Ok(s) => s.trim().parse().map_err(|_| invalid(format!("{QUAD_TOL_ENV}={s} is not a number")))?,
            Err(_) => DEFAULT_QUAD_TOL,
        },
    };
    if !(tol > 0.0 && tol < 1.0) {
        return Err(invalid(format!("quadrature tolerance {tol} must lie in (0, 1)")));
    }
    Ok(tol)
}

fn split_pair(s: &str) -> Result<(&str, &str)> {
    s.split_once(':').ok_or_else(|| invalid(format!("expected a:b, got {s:?}")))
}

/// Inclusive integer range "a:b".
pub fn parse_levels(s: &str) -> Result<(i64, i64)> {
    let (a, b) = split_pair(s)?;
    let p = |x: &str| x.trim().parse::<i64>().map_err(|_| invalid(format!("{x:?} is not an integer")));
    let (a, b) = (p(a)?, p(b)?);
    if a > b {
        return Err(invalid(format!("empty level range {a}:{b}")));
    }
    Ok((a, b))
}

/// Frequency window "a:b".
pub fn parse_window(s: &str) -> Result<(f64, f64)> {
    let (a, b) = split_pair(s)?;
    let p = |x: &str| x.trim().parse::<f64>().map_err(|_| invalid(format!("{x:?} is not a number")));
    Ok((p(a)?, p(b)?))
}

pub fn complex_arg(v: &[f64], name: &str) -> Result<Complex64> {
    match v {
        [re] => Ok(Complex64::new(*re, 0.0)),
        [re, im] => Ok(Complex64::new(*re, *im)),
        _ => Err(invalid(format!("--{name} takes re or re,im"))),
    }
}

impl FamilyArgs {
    fn betas(&self) -> Option<(f64, f64)> {
        match (self.beta_plus, self.beta_minus) {
            (None, None) => None,
            (bp, bm) => Some((bp.unwrap_or(0.0), bm.unwrap_or(0.0))),
        }
    }

    pub fn mass(&self) -> Result<f64> {
        if !self.mass.is_finite() || self.mass < 0.0 {
            return Err(invalid(format!("mass {} must be finite and non-negative", self.mass)));
        }
        Ok(self.mass)
    }

    /// The mode family named by the flags, checked against the mass.
    pub fn family(&self) -> Result<Family> {
        let m = self.mass()?;
        let fam = match (self.family, self.betas()) {
            (Some(FamilyName::Dirichlet1), None) => Family::DirichletI,
            (Some(FamilyName::Dirichlet2), None) => Family::DirichletII,
            (Some(FamilyName::Dirichlet3), None) => Family::DirichletIII,
            (Some(FamilyName::Dirichlet4), None) => Family::DirichletIV,
            (Some(FamilyName::HalfInteger), None) => Family::HalfIntegerV {
                k: half_integer_order(m).ok_or_else(|| invalid(format!("half-integer family needs M = k + 1/2, got {m}")))?,
            },
            (Some(FamilyName::HalfMass), None) => Family::HalfMassVI,
            (None | Some(FamilyName::Massless), Some((beta_plus, beta_minus))) => Family::MasslessBeta { beta_plus, beta_minus },
            (Some(FamilyName::Massless), None) => return Err(invalid("massless family needs --beta-plus/--beta-minus")),
            (None, None) => return Err(invalid("give --family or --beta-plus/--beta-minus")),
            (Some(_), Some(_)) => return Err(invalid("--beta-plus/--beta-minus only apply to the massless family")),
        };
        fam.check_mass(m)?;
        Ok(fam)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "mass": self.mass,
            "family": self.family.map(|f| format!("{f:?}").to_lowercase()),
            "betaPlus": self.beta_plus,
            "betaMinus": self.beta_minus,
        })
    }
}

/// Replaces U by the nearest unitary matrix (Newton iteration for the polar factor).
fn polar_unitary(mut u: SpinorMatrix) -> Option<SpinorMatrix> {
    for _ in 0..20 {
        let inv = u.adjoint().inverse()?;
        let next = (u + inv).scale(Complex64::new(0.5, 0.0));
        let done = (next - u).max_abs() < 1e-16;
        u = next;
        if done {
            break;
        }
    }
    Some(u)
}

impl BcArgs {
    pub fn boundary_condition(&self) -> Result<BoundaryCondition> {
        if let Some(u) = &self.u {
            if self.family.family.is_some() || self.family.betas().is_some() {
                return Err(invalid("--u excludes --family and --beta-plus/--beta-minus"));
            }
            let [a, b, c, d, e, f, g, h] = u[..] else {
                return Err(invalid(format!("--u takes 8 reals, got {}", u.len())));
            };
            let m = SpinorMatrix::new(Complex64::new(a, b), Complex64::new(c, d), Complex64::new(e, f), Complex64::new(g, h));
            let defect = m.unitarity_defect();
            if !(defect <= INPUT_UNITARITY_TOL) {
                return Err(invalid(format!("U is not unitary: |U†U − I| = {defect:.3e} exceeds {INPUT_UNITARITY_TOL:e}")));
            }
            let snapped = polar_unitary(m).ok_or_else(|| invalid("U is singular"))?;
            return Ok(BoundaryCondition::from_matrix(snapped)?);
        }
        let tag = match (self.family.family, self.family.betas()) {
            (Some(FamilyName::Dirichlet1), None) => BcTag::DirichletI,
            (Some(FamilyName::Dirichlet2), None) => BcTag::DirichletII,
            (Some(FamilyName::Dirichlet3), None) => BcTag::DirichletIII,
            (Some(FamilyName::Dirichlet4), None) => BcTag::DirichletIV,
            (None | Some(FamilyName::Massless), Some((beta_plus, beta_minus))) => BcTag::Diagonal { beta_plus, beta_minus },
            _ => return Err(invalid("give --u, --family dirichlet1..4, or --beta-plus/--beta-minus")),
        };
        Ok(BoundaryCondition::named(tag))
    }

    pub fn to_json(&self) -> Value {
        let mut v = self.family.to_json();
        v["u"] = json!(self.u);
        v
    }
}
