//! The eleven verification suites. Each returns a list of checks; a suite
//! passes when every check passes or is listed as allowed to fail.

use std::f64::consts::{PI, TAU};

use ads2_algebra::{chiral_rotation, charge_conjugate, parity_at, SpinorMatrix};
use ads2_extensions::{
    asymptotic_verifier, deficiency_indices, invariance_test, spectrum, BcTag, BoundaryCondition, ASYMPTOTIC_TOL,
};
use ads2_fock::{build_fock, commutator_check, vacuum_sector, FockModel};
use ads2_modes::{general_solution, mode_with, Family, SpinorMode};
use ads2_quad::{default_grid, endpoint_exponent_fit, gram_matrix, identity_deviation, Endpoint, Point, QuadratureSpec, Spinor};
use ads2_reps::{apply_ladder, casimir_check, classify, Ladder, Series};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use serde::Serialize;

use crate::report::Check;

pub const SUITES: [&str; 11] = [
    "deficiency",
    "spectra",
    "orthonormality",
    "normalization",
    "ladder",
    "casimir",
    "classification",
    "invariance",
    "asymptotics",
    "symmetries",
    "fock",
];

const SAMPLE_RHO: [f64; 9] = [-1.5, -1.1, -0.7, -0.2, 0.0, 0.3, 0.9, 1.2, 1.55];
const SMALL_MASSES: [f64; 4] = [0.0, 0.1, 0.25, 0.4];
const LARGE_MASSES: [f64; 4] = [0.5, 1.0, 1.5, 2.3];
const DIRICHLET: [Family; 4] = [Family::DirichletI, Family::DirichletII, Family::DirichletIII, Family::DirichletIV];

#[derive(Debug, Clone, Serialize)]
pub struct CriterionReport {
    pub id: usize,
    pub name: &'static str,
    pub pass: bool,
    pub checks: Vec<Check>,
    /// Checks whose failure does not fail the suite.
    pub allowed: Vec<String>,
    pub notes: Vec<String>,
}

impl CriterionReport {
    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.pass && !self.allowed.contains(&c.name))
    }
}

/// Check collector for one suite.
struct Suite {
    checks: Vec<Check>,
    allowed: Vec<String>,
    notes: Vec<String>,
}

impl Suite {
    fn new() -> Self {
        Self { checks: Vec::new(), allowed: Vec::new(), notes: Vec::new() }
    }

    fn within(&mut self, name: impl Into<String>, identity: &str, value: f64, tol: f64) {
        self.checks.push(Check::within(name, identity, value, tol));
    }

    fn holds(&mut self, name: impl Into<String>, identity: &str, ok: bool) {
        self.checks.push(Check::holds(name, identity, ok));
    }

    /// Unwraps a library result; an error becomes a failing check.
    fn attempt<T, E: std::fmt::Display>(&mut self, name: &str, identity: &str, r: Result<T, E>) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.notes.push(format!("{name}: {e}"));
                self.within(name, identity, f64::INFINITY, 0.0);
                None
            }
        }
    }

    fn finish(self, id: usize) -> CriterionReport {
        let mut r = CriterionReport {
            id,
            name: SUITES[id - 1],
            pass: false,
            checks: self.checks,
            allowed: self.allowed,
            notes: self.notes,
        };
        let pass = r.failures().next().is_none();
        r.pass = pass;
        r
    }
}

/// Suite number from a name or a number.
pub fn suite_id(s: &str) -> Option<usize> {
    match s.parse::<usize>() {
        Ok(n) if (1..=SUITES.len()).contains(&n) => Some(n),
        Ok(_) => None,
        Err(_) => SUITES.iter().position(|&n| n == s).map(|i| i + 1),
    }
}

pub fn criterion(id: usize, spec: &QuadratureSpec) -> CriterionReport {
    let suite = match id {
        1 => deficiency(),
        2 => spectra(),
        3 => orthonormality(spec),
        4 => normalization(spec),
        5 => ladder(),
        6 => casimir(),
        7 => classification(),
        8 => invariance(),
        9 => asymptotics(),
        10 => symmetries(spec),
        11 => fock(),
        _ => panic!("no suite {id}"),
    };
    suite.finish(id)
}

pub fn run_all(spec: &QuadratureSpec) -> Vec<CriterionReport> {
    (1..=SUITES.len()).map(|id| criterion(id, spec)).collect()
}

fn massless(beta: f64) -> Family {
    Family::MasslessBeta { beta_plus: 0.6 * beta * PI, beta_minus: 0.4 * beta * PI }
}

fn max_diff(a: &Spinor, b: &Spinor) -> f64 {
    (a[0] - b[0]).norm().max((a[1] - b[1]).norm())
}

fn deficiency() -> Suite {
    const ID: &str = "n± = 2 for 0 ≤ M < 1/2 and 0 for M ≥ 1/2";
    const DIV: &str = "every non-square-integrable probe is flagged divergent";
    let mut s = Suite::new();
    for (m, expect) in [(0.0, 2), (0.1, 2), (0.25, 2), (0.4, 2), (0.49, 2), (0.5, 0), (0.75, 0), (1.5, 0), (2.5, 0)] {
        let name = format!("indices M={m}");
        let Some(r) = s.attempt(&name, ID, deficiency_indices(m)) else { continue };
        s.holds(name, ID, r.n_plus == expect && r.n_minus == expect);
        let missed = r.verdicts.iter().filter(|v| !v.integrable && !v.divergent).count();
        s.holds(format!("divergence flagged M={m}"), DIV, missed == 0);
    }
    s
}

fn tag_frequencies(tag: BcTag, m: f64, (lo, hi): (f64, f64)) -> Vec<f64> {
    let towers = |lowest: f64| (0..=20).flat_map(move |n| [lowest + n as f64, -(lowest + n as f64)]).collect::<Vec<_>>();
    let mut out = match tag {
        BcTag::DirichletI => towers(0.5 + m),
        BcTag::DirichletII => towers(0.5 - m),
        BcTag::DirichletIII | BcTag::DirichletIV => (-20..=20).map(|n| n as f64).collect(),
        BcTag::Diagonal { beta_plus, beta_minus } => {
            (-20..=20).map(|j| j as f64 + 1.0 - (beta_plus + beta_minus) / PI).collect()
        }
    };
    out.retain(|&w| w > lo && w < hi);
    out.sort_by(f64::total_cmp);
    out.dedup_by(|a, b| (*a - *b).abs() < 1e-12);
    out
}

fn spectra() -> Suite {
    const ID: &str = "root-scan eigenfrequencies equal the closed-form spectrum";
    let window = (-4.77, 4.77);
    let mut s = Suite::new();
    let compare = |s: &mut Suite, name: String, tag: BcTag, m: f64| {
        let expected = tag_frequencies(tag, m, window);
        let Some(sp) = s.attempt(&name, ID, spectrum(&BoundaryCondition::named(tag), m, window)) else { return };
        let scanned: Vec<f64> = sp.scanned.unwrap_or_default().iter().map(|l| l.omega).collect();
        let dev = if scanned.len() == expected.len() {
            scanned.iter().zip(&expected).map(|(a, b)| (a - b).abs()).fold(0.0, f64::max)
        } else {
            f64::INFINITY
        };
        s.within(name, ID, dev, 1e-10);
    };
    for tag in [BcTag::DirichletI, BcTag::DirichletII, BcTag::DirichletIII, BcTag::DirichletIV] {
        for m in SMALL_MASSES {
            compare(&mut s, format!("{tag} M={m}"), tag, m);
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for i in 0..20 {
        let (beta_plus, beta_minus) = (rng.gen_range(0.0..PI), rng.gen_range(0.0..PI));
        compare(&mut s, format!("random diagonal #{i}"), BcTag::Diagonal { beta_plus, beta_minus }, 0.0);
    }
    s
}

type Sampler<'a> = Box<dyn Fn(&Point) -> Spinor + 'a>;

fn gram_deviation(modes: &[SpinorMode], spec: &QuadratureSpec) -> Result<f64, ads2_quad::QuadError> {
    let samplers: Vec<Sampler<'_>> =
        modes.iter().map(|md| Box::new(move |p: &Point| md.eval(p)) as Box<dyn Fn(&Point) -> Spinor>).collect();
    let refs: Vec<&dyn Fn(&Point) -> Spinor> = samplers.iter().map(|b| b.as_ref()).collect();
    Ok(identity_deviation(&gram_matrix(&refs, spec)?.value))
}

fn orthonormality(spec: &QuadratureSpec) -> Suite {
    const ID: &str = "⟨Ψ_j, Ψ_k⟩ = δ_jk for seventeen consecutive modes";
    let mut cases: Vec<(Family, f64)> = DIRICHLET.iter().flat_map(|&f| SMALL_MASSES.map(|m| (f, m))).collect();
    cases.extend(LARGE_MASSES.map(|m| (Family::DirichletI, m)));
    cases.extend([0.3, 0.5, 1.2, 1.7].map(|b| (massless(b), 0.0)));
    cases.extend([(Family::HalfIntegerV { k: 1 }, 1.5), (Family::HalfMassVI, 0.5)]);
    let mut s = Suite::new();
    for (f, m) in cases {
        let name = format!("{f} M={m}");
        let ms: Result<Vec<_>, _> = (-8..=8).map(|j| mode_with(f, m, j, spec)).collect();
        let Some(ms) = s.attempt(&name, ID, ms) else { continue };
        if let Some(dev) = s.attempt(&name, ID, gram_deviation(&ms, spec)) {
            s.within(name, ID, dev, 1e-9);
        }
    }
    s
}

fn normalization(spec: &QuadratureSpec) -> Suite {
    const ID: &str = "modes normalized with the printed constants have unit norm";
    let mut s = Suite::new();
    let cases = [
        (Family::DirichletI, 0.0),
        (Family::DirichletI, 0.25),
        (Family::DirichletI, 1.3),
        (Family::DirichletII, 0.1),
        (Family::DirichletII, 0.25),
        (Family::DirichletIII, 0.1),
        (Family::DirichletIII, 0.25),
        (Family::DirichletIV, 0.25),
        (Family::HalfIntegerV { k: 0 }, 0.5),
        (Family::HalfIntegerV { k: 1 }, 1.5),
        (massless(0.3), 0.0),
        (massless(1.2), 0.0),
        (Family::HalfMassVI, 0.5),
    ];
    for (f, m) in cases {
        let name = format!("{f} M={m}");
        let ms: Result<Vec<_>, _> = (-3..=3).map(|j| mode_with(f, m, j, spec)).collect();
        let Some(ms) = s.attempt(&name, ID, ms) else { continue };
        let dev = ms.iter().map(|md| (md.printed_ratio().powi(2) - 1.0).abs()).fold(0.0, f64::max);
        if f == Family::HalfMassVI {
            s.allowed.push(name.clone());
            s.notes.push(format!("{name}: printed/numerical normalization ratio {}", ms[3].printed_ratio()));
        }
        s.within(name, ID, dev, 1e-8);
    }
    s
}

/// Printed ladder coefficient of level j, or zero where the tower ends.
fn printed_coefficient(f: Family, m: f64, j: i64, ladder: Ladder) -> Complex64 {
    let sg = ladder.sign();
    let i = Complex64::i();
    match f {
        Family::DirichletI | Family::DirichletII => {
            let mm = if f == Family::DirichletI { m } else { -m };
            if j >= 0 {
                let n = j as f64;
                -i * ((n + 0.5 + 0.5 * sg) * (n + 2.0 * mm + 0.5 + 0.5 * sg)).max(0.0).sqrt()
            } else {
                let n = (-j - 1) as f64;
                i * ((n + 0.5 - 0.5 * sg) * (n + 2.0 * mm + 0.5 - 0.5 * sg)).max(0.0).sqrt()
            }
        }
        Family::DirichletIII | Family::DirichletIV => {
            let n = j.unsigned_abs() as f64;
            match j.signum() {
                1 => -i * ((n + m + 0.5 * sg) * (n - m + 0.5 * sg)).sqrt(),
                -1 => i * ((n + m - 0.5 * sg) * (n - m - 0.5 * sg)).sqrt(),
                _ => -sg * i * (0.25 - m * m).sqrt(),
            }
        }
        Family::MasslessBeta { .. } => {
            let w = f.frequency(0.0, j);
            let parity = if (j + 1).rem_euclid(2) == 0 { 1.0 } else { -1.0 };
            i * parity * (0.5 + sg * w)
        }
        _ => Complex64::new(f64::NAN, 0.0),
    }
}

fn ladder() -> Suite {
    const ID: &str = "projected ladder coefficients equal the printed ladder actions";
    const ANN: &str = "L₋Ψ₀ = 0 and L₊Ψ₋₀ = 0 for type I";
    let mut s = Suite::new();
    let cases = [
        (Family::DirichletI, 0.0, -7..=6),
        (Family::DirichletI, 0.25, -7..=6),
        (Family::DirichletI, 1.3, -7..=6),
        (Family::DirichletII, 0.1, -7..=6),
        (Family::DirichletII, 0.25, -7..=6),
        (Family::DirichletIII, 0.1, -4..=4),
        (Family::DirichletIII, 0.25, -4..=4),
        (Family::DirichletIV, 0.25, -4..=4),
        (massless(0.3), 0.0, -4..=4),
        (massless(1.2), 0.0, -4..=4),
    ];
    for (f, m, levels) in cases {
        for j in levels {
            let Some(md) = s.attempt(&format!("{f} M={m} j={j}"), ID, ads2_modes::mode(f, m, j)) else { continue };
            for l in [Ladder::Raise, Ladder::Lower] {
                let name = format!("{f} M={m} L{}Ψ_{j}", l.symbol());
                let Some(a) = s.attempt(&name, ID, apply_ladder(l, &md)) else { continue };
                let expect = printed_coefficient(f, m, j, l);
                let dev = match a.target {
                    Some(_) => (a.coefficient - expect).norm(),
                    None => a.image_norm + expect.norm(),
                };
                s.within(name, ID, dev, 1e-8);
            }
        }
    }
    for m in [0.25, 1.3] {
        for (l, j) in [(Ladder::Lower, 0), (Ladder::Raise, -1)] {
            let name = format!("annihilation L{}Ψ_{j} M={m}", l.symbol());
            let r = ads2_modes::mode(Family::DirichletI, m, j).map_err(|e| e.to_string()).and_then(|md| apply_ladder(l, &md).map_err(|e| e.to_string()));
            if let Some(a) = s.attempt(&name, ANN, r) {
                s.within(name, ANN, a.image_norm, 1e-8);
            }
        }
    }
    s
}

fn casimir() -> Suite {
    const ID: &str = "the Casimir is constant on each family and equals M² − 1/4";
    let mut cases: Vec<(Family, f64)> = DIRICHLET.iter().flat_map(|&f| SMALL_MASSES.map(|m| (f, m))).collect();
    cases.extend(LARGE_MASSES.map(|m| (Family::DirichletI, m)));
    cases.extend([0.3, 0.5, 1.0, 1.7].map(|b| (massless(b), 0.0)));
    cases.extend([(Family::HalfIntegerV { k: 1 }, 1.5), (Family::HalfMassVI, 0.5)]);
    let mut s = Suite::new();
    for (f, m) in cases {
        let name = format!("{f} M={m}");
        if let Some(r) = s.attempt(&name, ID, casimir_check(f, m)) {
            s.within(name, ID, (r.q - (m * m - 0.25)).abs().max(r.spread), 1e-9);
        }
    }
    s
}

fn mu_param(beta: f64) -> f64 {
    if beta < 0.5 {
        -beta
    } else if beta < 1.5 {
        1.0 - beta
    } else {
        2.0 - beta
    }
}

/// Series, weight and (when pinned) μ of an expected label.
type Expected = (Series, f64, Option<f64>);

fn classification() -> Suite {
    const ID: &str = "classification matches the representation identified for each family";
    let mut s = Suite::new();
    let split = |w: f64, mock: bool| {
        let (p, n) = if mock {
            (Series::MockDiscretePlus, Series::MockDiscreteMinus)
        } else {
            (Series::DiscretePlus, Series::DiscreteMinus)
        };
        vec![(p, w, None), (n, w, None)]
    };
    let mut cases: Vec<(Family, f64, Vec<Expected>)> = Vec::new();
    for m in SMALL_MASSES.into_iter().chain(LARGE_MASSES) {
        cases.push((Family::DirichletI, m, split(0.5 + m, m == 0.0)));
    }
    for m in SMALL_MASSES {
        cases.push((Family::DirichletII, m, split(0.5 - m, m == 0.0)));
        for f in [Family::DirichletIII, Family::DirichletIV] {
            let expect = if m == 0.0 {
                (Series::PrincipalS0, 0.5, Some(0.0))
            } else {
                (Series::Complementary, 0.5 + m, Some(0.0))
            };
            cases.push((f, m, vec![expect]));
        }
    }
    for b in [0.5, 1.5] {
        cases.push((massless(b), 0.0, split(0.5, true)));
    }
    for b in [0.1, 0.3, 0.8, 1.0, 1.2, 1.7, 1.9] {
        cases.push((massless(b), 0.0, vec![(Series::PrincipalS0, 0.5, Some(mu_param(b)))]));
    }
    for (f, m, expect) in cases {
        let name = format!("{f} M={m}");
        let Some(c) = s.attempt(&name, ID, classify(f, m)) else { continue };
        let ok = c.labels.len() == expect.len()
            && c.labels.iter().zip(&expect).all(|(l, (series, w, mu))| {
                l.series == *series && (l.weight - w).abs() <= 1e-9 && mu.is_none_or(|mu| (l.mu - mu).abs() <= 1e-9)
            });
        if !ok {
            s.notes.push(format!("{name}: got {c}"));
        }
        s.holds(name, ID, ok);
    }
    s
}

fn haar_unitary(rng: &mut ChaCha8Rng) -> SpinorMatrix {
    let g: [f64; 4] = std::array::from_fn(|_| rng.sample(StandardNormal));
    let n = g.iter().map(|x| x * x).sum::<f64>().sqrt();
    let (a, b) = (Complex64::new(g[0], g[1]) / n, Complex64::new(g[2], g[3]) / n);
    let phase = Complex64::from_polar(1.0, rng.gen_range(0.0..TAU));
    SpinorMatrix::new(a, b, -b.conj(), a.conj()).scale(phase)
}

fn diagonal_unitary(rng: &mut ChaCha8Rng) -> SpinorMatrix {
    SpinorMatrix::diag(Complex64::from_polar(1.0, rng.gen_range(0.0..TAU)), Complex64::from_polar(1.0, rng.gen_range(0.0..TAU)))
}

fn invariance() -> Suite {
    const NAMED: &str = "the four Dirichlet matrices diag(∓1, ±1) and ±1 give invariant conditions";
    const OTHER: &str = "no other unitary gives an invariant condition for 0 < M < 1/2";
    const MASSLESS: &str = "at M = 0 exactly the diagonal unitaries give invariant conditions";
    let mut s = Suite::new();
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let passes = |u: SpinorMatrix, m: f64| BoundaryCondition::from_matrix(u).map(|bc| invariance_test(&bc, m).invariant);
    for m in [0.1, 0.25, 0.4] {
        for tag in [BcTag::DirichletI, BcTag::DirichletII, BcTag::DirichletIII, BcTag::DirichletIV] {
            s.holds(format!("{tag} M={m}"), NAMED, invariance_test(&BoundaryCondition::named(tag), m).invariant);
        }
        let mut random: Vec<SpinorMatrix> = (0..50).map(|_| haar_unitary(&mut rng)).collect();
        random.extend((0..20).map(|_| diagonal_unitary(&mut rng)));
        let passed = random.into_iter().filter(|&u| passes(u, m).unwrap_or(true)).count();
        s.within(format!("random unitaries rejected M={m}"), OTHER, passed as f64, 0.0);
    }
    let diag_failed = (0..20).filter(|_| !passes(diagonal_unitary(&mut rng), 0.0).unwrap_or(false)).count();
    s.within("diagonal unitaries accepted M=0", MASSLESS, diag_failed as f64, 0.0);
    let off_passed = (0..20).filter(|_| passes(haar_unitary(&mut rng), 0.0).unwrap_or(true)).count();
    s.within("non-diagonal unitaries rejected M=0", MASSLESS, off_passed as f64, 0.0);
    s
}

fn asymptotics() -> Suite {
    const LEAD: &str = "leading endpoint terms agree with direct evaluation to 1% at ε = 1e-5";
    const EXP: &str = "fitted endpoint exponents of |Φ¹|², |Φ²|² and the density";
    const LOG: &str = "M = 1/2 carries a logarithm in Φ¹";
    let c = |x: f64| Complex64::new(x, 0.0);
    let (one, zero) = (c(1.0), c(0.0));
    let mut s = Suite::new();
    for m in [0.1, 0.25, 0.4, 0.75, 1.3, 0.5, 1.5, 2.5] {
        for w in [0.9, -1.4] {
            for (c1, c2) in [(one, zero), (zero, one), (Complex64::new(0.6, -0.2), c(0.8))] {
                let name = format!("leading terms M={m} ω={w} C=({c1},{c2})");
                if let Some(r) = s.attempt(&name, LEAD, asymptotic_verifier(m, w, c1, c2)) {
                    let worst = r.entries.iter().map(|e| e.final_error()).fold(0.0, f64::max);
                    s.within(name, LEAD, worst, ASYMPTOTIC_TOL);
                }
            }
        }
    }
    let w = 0.9;
    let fit = |s: &mut Suite, name: String, m: f64, cs: (f64, f64), q: usize, target: f64| {
        let Some(sol) = s.attempt(&name, EXP, general_solution(m, c(w), c(cs.0), c(cs.1))) else { return };
        let density = |p: &Point| {
            let v = sol.eval(p).unwrap_or([c(f64::NAN); 2]);
            [v[0].norm_sqr(), v[1].norm_sqr(), v[0].norm_sqr() + v[1].norm_sqr()][q]
        };
        if let Some(f) = s.attempt(&name, EXP, endpoint_exponent_fit(density, Endpoint::Plus, &default_grid())) {
            s.within(name, EXP, ((f.exponent - target) / target).abs(), 0.02);
        }
    };
    for m in [0.1, 0.25, 0.4, 0.75, 1.3] {
        fit(&mut s, format!("|Φ¹|² exponent M={m}"), m, (1.0, 0.0), 0, 2.0 * m);
        fit(&mut s, format!("|Φ²|² exponent M={m}"), m, (0.0, 1.0), 1, -2.0 * m);
    }
    for k in [1u32, 2] {
        let m = k as f64 + 0.5;
        fit(&mut s, format!("density exponent k={k}"), m, (0.0, 1.0), 2, -2.0 * k as f64 - 1.0);
    }
    if let Some(sol) = s.attempt("log flag k=0", LOG, general_solution(0.5, c(w), zero, one)) {
        let phi1 = |p: &Point| sol.eval(p).map_or(f64::NAN, |v| v[0].norm_sqr());
        if let Some(f) = s.attempt("log flag k=0", LOG, endpoint_exponent_fit(phi1, Endpoint::Plus, &default_grid())) {
            s.holds("log flag k=0", LOG, f.log_flag);
        }
    }
    s
}

fn symmetries(spec: &QuadratureSpec) -> Suite {
    const CC: &str = "Ψ_{−n} = Ψ_nᶜ";
    const PAR: &str = "Ψ_nᴵⱽ = (−1)ⁿ 𝕡 Ψ_nᴵᴵᴵ";
    const CHI: &str = "massless families with equal β agree up to a chiral rotation";
    let mut s = Suite::new();
    let pair = |f: Family, m: f64, a: i64, b: i64| -> Result<(SpinorMode, SpinorMode), ads2_modes::ModeError> {
        Ok((mode_with(f, m, a, spec)?, mode_with(f, m, b, spec)?))
    };
    for f in DIRICHLET {
        let zero_mode = matches!(f, Family::DirichletIII | Family::DirichletIV);
        let masses: &[f64] = if f == Family::DirichletI { &[0.0, 0.1, 0.25, 0.4, 1.3] } else { &SMALL_MASSES };
        for &m in masses {
            let name = format!("charge conjugation {f} M={m}");
            let mut worst = 0.0f64;
            for n in (if zero_mode { 1 } else { 0 })..6 {
                let neg = if zero_mode { -n } else { -n - 1 };
                let Some((a, b)) = s.attempt(&name, CC, pair(f, m, n, neg)) else { continue };
                for rho in SAMPLE_RHO {
                    worst = worst.max(max_diff(&charge_conjugate(&a.at(rho)), &b.at(rho)));
                }
            }
            s.within(name, CC, worst, 1e-11);
        }
    }
    for m in [0.1, 0.25] {
        if let Ok(z) = mode_with(Family::DirichletIII, m, 0, spec) {
            let odd = SAMPLE_RHO.iter().map(|&r| {
                let v = z.at(r);
                max_diff(&charge_conjugate(&v), &[-v[0], -v[1]])
            });
            s.notes.push(format!("type III zero mode at M={m} is conjugation odd to {:.1e}", odd.fold(0.0, f64::max)));
        }
    }
    for m in SMALL_MASSES {
        let name = format!("parity M={m}");
        let mut worst = 0.0f64;
        for n in 0..=5 {
            let modes = mode_with(Family::DirichletIII, m, n, spec).and_then(|a| Ok((a, mode_with(Family::DirichletIV, m, n, spec)?)));
            let Some((iii, iv)) = s.attempt(&name, PAR, modes) else { continue };
            let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
            for rho in SAMPLE_RHO {
                let p = parity_at(&iii.at(-rho));
                worst = worst.max(max_diff(&iv.at(rho), &[sign * p[0], sign * p[1]]));
            }
        }
        s.within(name, PAR, worst, 1e-11);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    for i in 0..5 {
        let (bp1, bm1) = (rng.gen_range(0.0..PI), rng.gen_range(0.0..PI));
        let shift = rng.gen_range(-1.0..1.0);
        let (bp2, bm2) = (bp1 + shift, bm1 - shift);
        let f1 = Family::MasslessBeta { beta_plus: bp1, beta_minus: bm1 };
        let f2 = Family::MasslessBeta { beta_plus: bp2, beta_minus: bm2 };
        let theta = 0.5 * (bp2 - bm2) - 0.5 * (bp1 - bm1);
        let name = format!("chiral equivalence #{i}");
        let mut worst = 0.0f64;
        for j in -3..=3 {
            let Some((a, b)) = s.attempt(&name, CHI, mode_with(f1, 0.0, j, spec).and_then(|a| Ok((a, mode_with(f2, 0.0, j, spec)?)))) else {
                continue;
            };
            for rho in SAMPLE_RHO {
                worst = worst.max(max_diff(&chiral_rotation(theta, &b.at(rho)), &a.at(rho)));
            }
        }
        s.within(name, CHI, worst, 1e-10);
    }
    s
}

fn fock() -> Suite {
    const CAR: &str = "{c_j, c_k†} = δ_jk and {c_j, c_k} = 0";
    const COMM: &str = "[L̂₊, L̂₋] = 2L̂₀ on the admissible subspace";
    const VAC: &str = "L̂₋|0⟩ = 0";
    const LAM: &str = "vacuum weight λ = (μ − 1/2)²/2 massless, (1/4 − M²)/2 with degeneracy 2 for types III/IV";
    let mut s = Suite::new();
    let cutoff = 5;
    let mut models: Vec<(String, FockModel, f64, Option<usize>)> = [0.2, 0.5, 0.75, -0.25]
        .into_iter()
        .map(|mu: f64| {
            let r = mu.rem_euclid(1.0);
            (format!("massless μ={mu}"), FockModel::massless(mu), 0.5 * (r - 0.5).powi(2), None)
        })
        .collect();
    for m in [0.0, 0.25, 0.4] {
        models.push((format!("zero mode M={m}"), FockModel::ZeroMode { m }, 0.5 * (0.25 - m * m), Some(2)));
    }
    for (label, model, lambda, degeneracy) in models {
        let Some((space, ops)) = s.attempt(&label, CAR, build_fock(model, cutoff)) else { continue };
        s.within(format!("anticommutators {label}"), CAR, space.anticommutator_defect(), 0.0);
        s.within(format!("commutator {label}"), COMM, commutator_check(&space, &ops, None).max_deviation, 1e-12);
        s.within(format!("vacuum annihilated {label}"), VAC, ops.lower.column_max_abs(0), 1e-12);
        let sector = vacuum_sector(&space, &ops);
        let mut dev = (sector.weight - lambda).abs().max((ops.lambda - lambda).abs());
        if degeneracy.is_some_and(|d| d != sector.degeneracy) {
            dev = f64::INFINITY;
        }
        s.within(format!("vacuum weight {label}"), LAM, dev, 1e-12);
    }
    s
}
