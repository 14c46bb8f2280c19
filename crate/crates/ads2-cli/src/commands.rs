//! One function per subcommand. Each builds a report (or a CSV table)
//! from validated flags.

use ads2_extensions::{
    asymptotic_verifier, deficiency_indices, invariance_test, spectrum, Quantity, SpectralLine, ASYMPTOTIC_TOL,
};
use ads2_fock::{build_fock, commutator_check, hermiticity_defect, vacuum_sector, FockModel};
use ads2_modes::{mode_with, SpinorMode};
use ads2_quad::{Endpoint, QuadratureSpec};
use ads2_reps::{classify as classify_family, Series, UirLabel};
use serde_json::{json, Value};

use crate::args::{
    complex_arg, parse_levels, parse_window, AsymptoticsArgs, BcArgs, FamilyArgs, FockArgs, Format, MassArgs, ModesArgs,
    SpectrumArgs, VerifyArgs,
};
use crate::error::{CliError, Result};
use crate::report::{Check, Report};
use crate::verify::{self, suite_id, SUITES};

/// Rendered output of a subcommand.
#[derive(Debug)]
pub enum Output {
    Json(Report),
    Csv(String),
}

impl Output {
    pub fn render(&self) -> Result<String> {
        match self {
            Output::Json(r) => Ok(r.to_json()?),
            Output::Csv(s) => Ok(s.clone()),
        }
    }
}

/// Settings shared by every subcommand.
#[derive(Debug, Clone, Copy)]
pub struct Context {
    pub format: Format,
    pub quad_tol: f64,
}

impl Context {
    fn spec(&self) -> QuadratureSpec {
        QuadratureSpec::with_tolerance(self.quad_tol)
    }

    fn config(&self, command: &str, flags: Value) -> Value {
        json!({ "command": command, "quadTolerance": self.quad_tol, "flags": flags })
    }

    fn json_only(&self, command: &str) -> Result<()> {
        match self.format {
            Format::Json => Ok(()),
            Format::Csv => Err(CliError::Validation(format!("{command} has no CSV form; use --format json"))),
        }
    }
}

/// Grid point k of `samples` equally spaced cell centres on (−π/2, π/2).
fn grid_rho(k: usize, samples: usize) -> f64 {
    -std::f64::consts::FRAC_PI_2 + std::f64::consts::PI * (k as f64 + 0.5) / samples as f64
}

fn mode_json(md: &SpinorMode, samples: usize) -> Value {
    let mut v = json!({
        "index": md.index,
        "omega": md.omega,
        "normalization": md.normalization,
        "printedNormalization": md.printed_normalization,
    });
    if samples > 0 {
        let rows: Vec<Value> = (0..samples)
            .map(|k| {
                let rho = grid_rho(k, samples);
                let phi = md.at(rho);
                json!([rho, phi[0].re, phi[0].im, phi[1].re, phi[1].im])
            })
            .collect();
        v["grid"] = json!({ "columns": ["rho", "rePhi1", "imPhi1", "rePhi2", "imPhi2"], "rows": rows });
    }
    v
}

fn modes_csv(args: &ModesArgs, modes: &[SpinorMode]) -> Result<String> {
    let mut out = String::new();
    for md in modes {
        out.push_str(&format!("# family={}, M={}, n={}\n", md.family, md.m, md.index));
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["rho", "re_phi1", "im_phi1", "re_phi2", "im_phi2"])?;
        for k in 0..args.samples {
            let rho = grid_rho(k, args.samples);
            let phi = md.at(rho);
            w.write_record([rho, phi[0].re, phi[0].im, phi[1].re, phi[1].im].map(|x| x.to_string()))?;
        }
        out.push_str(&String::from_utf8(w.into_inner().map_err(|e| CliError::Io(e.into_error()))?).expect("ascii"));
    }
    Ok(out)
}

pub fn modes(ctx: &Context, args: &ModesArgs) -> Result<Output> {
    let family = args.family.family()?;
    let m = args.family.mass()?;
    let (a, b) = parse_levels(&args.n)?;
    let spec = ctx.spec();
    let modes: Vec<SpinorMode> = (a..=b).map(|j| mode_with(family, m, j, &spec)).collect::<std::result::Result<_, _>>()?;
    if ctx.format == Format::Csv {
        return Ok(Output::Csv(modes_csv(args, &modes)?));
    }
    let mut flags = args.family.to_json();
    flags["n"] = json!([a, b]);
    flags["samples"] = json!(args.samples);
    let results = json!({
        "family": family.to_string(),
        "modes": modes.iter().map(|md| mode_json(md, args.samples)).collect::<Vec<_>>(),
    });
    Ok(Output::Json(Report::new(ctx.config("modes", flags), results, Vec::new())))
}

fn lines_csv(lines: &[SpectralLine]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["omega", "multiplicity"])?;
    for l in lines {
        w.write_record([l.omega.to_string(), l.multiplicity.to_string()])?;
    }
    Ok(String::from_utf8(w.into_inner().map_err(|e| CliError::Io(e.into_error()))?).expect("ascii"))
}

pub fn spectrum_cmd(ctx: &Context, args: &SpectrumArgs) -> Result<Output> {
    let m = args.bc.family.mass()?;
    let window = parse_window(&args.window)?;
    let bc = args.bc.boundary_condition()?;
    let sp = spectrum(&bc, m, window)?;
    if ctx.format == Format::Csv {
        return Ok(Output::Csv(lines_csv(&sp.lines)?));
    }
    let checks = sp
        .agreement
        .map(|a| vec![Check::within("root scan", "root-scan eigenfrequencies equal the closed-form spectrum", a, 1e-10)])
        .unwrap_or_default();
    let mut flags = args.bc.to_json();
    flags["window"] = json!([window.0, window.1]);
    let omegas: Vec<f64> = sp.lines.iter().map(|l| l.omega).collect();
    Ok(Output::Json(Report::new(ctx.config("spectrum", flags), json!(omegas), checks)))
}

fn label_json(l: &UirLabel) -> Value {
    match l.series {
        Series::PrincipalS0 => json!({ "series": "Principal", "s": 0, "mu": l.mu }),
        Series::Complementary => json!({ "series": "Complementary", "mu": l.mu, "weight": l.weight }),
        Series::DiscretePlus => json!({ "series": "DiscretePlus", "weight": l.weight }),
        Series::DiscreteMinus => json!({ "series": "DiscreteMinus", "weight": l.weight }),
        Series::MockDiscretePlus => json!({ "series": "MockDiscretePlus", "weight": l.weight }),
        Series::MockDiscreteMinus => json!({ "series": "MockDiscreteMinus", "weight": l.weight }),
    }
}

pub fn classify(ctx: &Context, args: &FamilyArgs) -> Result<Output> {
    ctx.json_only("classify")?;
    let family = args.family()?;
    let c = classify_family(family, args.mass()?)?;
    let results = json!({
        "labels": c.labels.iter().map(label_json).collect::<Vec<_>>(),
        "q": c.q,
        "splits": c.splits(),
        "text": c.to_string(),
    });
    Ok(Output::Json(Report::new(ctx.config("classify", args.to_json()), results, Vec::new())))
}

fn endpoint_name(e: Endpoint) -> &'static str {
    match e {
        Endpoint::Plus => "plus",
        Endpoint::Minus => "minus",
    }
}

pub fn deficiency(ctx: &Context, args: &MassArgs) -> Result<Output> {
    ctx.json_only("deficiency")?;
    let r = deficiency_indices(args.mass)?;
    let verdicts: Vec<Value> = r
        .verdicts
        .iter()
        .map(|v| {
            json!({
                "omega": [v.omega.re, v.omega.im],
                "basis": v.basis,
                "endpoint": endpoint_name(v.endpoint),
                "divergent": v.divergent,
                "exponent": v.exponent,
                "logFlag": v.log_flag,
                "integrable": v.integrable,
            })
        })
        .collect();
    let missed = r.verdicts.iter().filter(|v| !v.integrable && !v.divergent).count();
    let checks = vec![Check::within(
        "divergence flagged",
        "every non-square-integrable probe is flagged divergent",
        missed as f64,
        0.0,
    )];
    let results = json!({ "nPlus": r.n_plus, "nMinus": r.n_minus, "verdicts": verdicts });
    Ok(Output::Json(Report::new(ctx.config("deficiency", json!({ "mass": args.mass })), results, checks)))
}

pub fn invariance(ctx: &Context, args: &BcArgs) -> Result<Output> {
    ctx.json_only("invariance")?;
    let m = args.family.mass()?;
    let bc = args.boundary_condition()?;
    let cert = invariance_test(&bc, m);
    let failures: Vec<Value> = cert
        .failures
        .iter()
        .map(|f| json!({ "generator": f.generator, "omega": f.omega, "basisVector": f.basis_vector, "residual": f.residual }))
        .collect();
    let results = json!({
        "condition": bc.label(),
        "invariant": cert.invariant,
        "maxResidual": cert.max_residual,
        "failures": failures,
    });
    Ok(Output::Json(Report::new(ctx.config("invariance", args.to_json()), results, Vec::new())))
}

fn quantity_name(q: Quantity) -> &'static str {
    match q {
        Quantity::Phi1 => "phi1",
        Quantity::Phi2 => "phi2",
        Quantity::Density => "density",
    }
}

pub fn asymptotics(ctx: &Context, args: &AsymptoticsArgs) -> Result<Output> {
    ctx.json_only("asymptotics")?;
    let (c1, c2) = (complex_arg(&args.c1, "c1")?, complex_arg(&args.c2, "c2")?);
    let r = asymptotic_verifier(args.mass, args.omega, c1, c2)?;
    let mut checks = Vec::new();
    let entries: Vec<Value> = r
        .entries
        .iter()
        .map(|e| {
            let name = format!("{} at {}", quantity_name(e.quantity), endpoint_name(e.endpoint));
            checks.push(Check::within(
                name,
                "leading endpoint term agrees with direct evaluation at the smallest ε",
                e.final_error(),
                ASYMPTOTIC_TOL,
            ));
            json!({
                "endpoint": endpoint_name(e.endpoint),
                "quantity": quantity_name(e.quantity),
                "eps": e.eps,
                "relError": e.rel_error,
                "printedRelError": e.printed_rel_error,
            })
        })
        .collect();
    let flags = json!({ "mass": args.mass, "omega": args.omega, "c1": [c1.re, c1.im], "c2": [c2.re, c2.im] });
    Ok(Output::Json(Report::new(ctx.config("asymptotics", flags), json!({ "pass": r.pass, "entries": entries }), checks)))
}

/// Runs suites; failures outside a suite's allowed list count as breaches.
pub fn verify(ctx: &Context, args: &VerifyArgs) -> Result<(Output, usize)> {
    ctx.json_only("verify")?;
    let spec = ctx.spec();
    let reports = if args.suite == "all" {
        verify::run_all(&spec)
    } else {
        let id = suite_id(&args.suite).ok_or_else(|| {
            CliError::Validation(format!("unknown suite {:?}; expected 1-11, all, or one of {}", args.suite, SUITES.join(", ")))
        })?;
        vec![verify::criterion(id, &spec)]
    };
    let breaches: usize = reports.iter().map(|r| r.failures().count()).sum();
    let checks: Vec<Check> = reports.iter().flat_map(|r| r.checks.iter().cloned()).collect();
    let results = json!({
        "suites": reports.iter().map(|r| json!({
            "id": r.id,
            "name": r.name,
            "pass": r.pass,
            "allowed": r.allowed,
            "notes": r.notes,
        })).collect::<Vec<_>>(),
    });
    let report = Report::new(ctx.config("verify", json!({ "suite": args.suite })), results, checks);
    Ok((Output::Json(report), breaches))
}

pub fn fock(ctx: &Context, args: &FockArgs) -> Result<Output> {
    ctx.json_only("fock")?;
    let model = match args.mu {
        Some(mu) if mu.is_finite() => FockModel::massless(mu),
        Some(mu) => return Err(CliError::Validation(format!("μ = {mu} is not finite"))),
        None => FockModel::for_family(args.family.family()?, args.family.mass()?)?,
    };
    let (space, ops) = build_fock(model, args.cutoff)?;
    let comm = commutator_check(&space, &ops, None);
    let (herm, herm_edge) = hermiticity_defect(&space, &ops);
    let sector = vacuum_sector(&space, &ops);
    let checks = vec![
        Check::within("anticommutators", "{c_j, c_k†} = δ_jk and {c_j, c_k} = 0", space.anticommutator_defect(), 0.0),
        Check::within("commutator", "[L̂₊, L̂₋] = 2L̂₀ on the admissible subspace", comm.max_deviation, 1e-12),
        Check::within("vacuum annihilated", "L̂₋|0⟩ = 0", ops.lower.column_max_abs(0), 1e-12),
        Check::within("adjoint", "L̂₊† = −L̂₋ on the admissible subspace", herm, 1e-12),
    ];
    let mut flags = args.family.to_json();
    flags["mu"] = json!(args.mu);
    flags["cutoff"] = json!(args.cutoff);
    let results = json!({
        "model": model,
        "dimension": space.dim(),
        "lambda": ops.lambda,
        "vacuumWeight": sector.weight,
        "degeneracy": sector.degeneracy,
        "label": sector.label.to_string(),
        "commutatorChecked": comm.checked,
        "edgeCommutatorDeviation": comm.edge_deviation,
        "edgeAdjointDeviation": herm_edge,
    });
    Ok(Output::Json(Report::new(ctx.config("fock", flags), results, checks)))
}
