use std::io::Write;

use ads2_cli::verify::{criterion, SUITES};
use ads2_quad::QuadratureSpec;

/// The ladder suite is red on the type III zero crossing: the modes give
/// −i√(1/4 − M²) for both L₋Ψ₀ and L₊Ψ₋₁, the printed action has +i for the latter pair.
fn known_red(id: usize, name: &str) -> bool {
    id == 5 && name.starts_with("DirichletIII") && (name.ends_with("L-Ψ_0") || name.ends_with("L+Ψ_-1"))
}

#[test]
fn acceptance() {
    let spec = QuadratureSpec::default();
    // Written to the raw handle so the lines survive the test harness's capture.
    let mut err = std::io::stderr().lock();
    macro_rules! report {
        ($($t:tt)*) => { writeln!(err, $($t)*).unwrap() };
    }
    let mut unexpected = Vec::new();
    for id in 1..=SUITES.len() {
        let r = criterion(id, &spec);
        let failed: Vec<_> = r.failures().collect();
        report!("{} criterion {id:>2} {:<15} {} checks, {} failed", if r.pass { "PASS" } else { "FAIL" }, r.name, r.checks.len(), failed.len());
        for note in &r.notes {
            report!("     note: {note}");
        }
        for c in &failed {
            let tag = if known_red(id, &c.name) { "known" } else { "UNEXPECTED" };
            report!("     {tag}: {} = {:e} (tolerance {:e}): {}", c.name, c.value, c.tolerance, c.paper_ref);
            if !known_red(id, &c.name) {
                unexpected.push(format!("criterion {id}: {}", c.name));
            }
        }
        if id == 5 && !r.pass {
            report!("     reason: printed type III zero-crossing signs disagree with the printed type III modes");
        }
    }
    assert!(unexpected.is_empty(), "{unexpected:#?}");
}
