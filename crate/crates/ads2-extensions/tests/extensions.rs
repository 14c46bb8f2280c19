use std::f64::consts::PI;

use ads2_algebra::SpinorMatrix;
use ads2_extensions::*;
use ads2_modes::{boundary_data, general_solution, BoundaryData};
use ads2_quad::Endpoint;
use approx::assert_abs_diff_eq;
use num_complex::Complex64;

fn c(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

fn omegas(s: &Spectrum) -> Vec<f64> {
    s.lines.iter().map(|l| l.omega).collect()
}

fn assert_list(got: &[f64], want: &[f64]) {
    assert_eq!(got.len(), want.len(), "{got:?} vs {want:?}");
    for (a, b) in got.iter().zip(want) {
        assert_abs_diff_eq!(a, b, epsilon = 1e-12);
    }
}

#[test]
fn deficiency_examples() {
    for (m, n) in [(0.0, 2), (0.25, 2), (0.75, 0)] {
        let r = deficiency_indices(m).unwrap();
        assert_eq!((r.n_plus, r.n_minus), (n, n), "M={m}: {:?}", r.verdicts);
    }
}

#[test]
fn deficiency_near_the_threshold() {
    for (m, n) in [(0.1, 2), (0.4, 2), (0.49, 2), (0.5, 0), (1.0, 0), (1.5, 0), (2.3, 0)] {
        let r = deficiency_indices(m).unwrap();
        assert_eq!((r.n_plus, r.n_minus), (n, n), "M={m}: {:?}", r.verdicts);
    }
}

#[test]
fn named_matrices() {
    let d = |a: f64, b: f64| SpinorMatrix::real(a, 0.0, 0.0, b);
    assert_eq!(BcTag::DirichletI.matrix(), d(-1.0, 1.0));
    assert_eq!(BcTag::DirichletII.matrix(), d(1.0, -1.0));
    assert_eq!(BcTag::DirichletIII.matrix(), d(1.0, 1.0));
    assert_eq!(BcTag::DirichletIV.matrix(), d(-1.0, -1.0));
    for t in [BcTag::DirichletI, BcTag::Diagonal { beta_plus: 0.3, beta_minus: 2.0 }] {
        assert!(t.matrix().unitarity_defect() < 1e-15);
    }
    assert!(matches!(BoundaryCondition::from_matrix(d(1.0, 2.0)), Err(ExtError::NotUnitary(_))));
}

#[test]
fn identity_condition_residual() {
    let bc = BoundaryCondition::named(BcTag::DirichletIII);
    let data = BoundaryData { values: [c(0.7), Complex64::new(0.1, 2.0), Complex64::new(-0.3, 0.4), c(5.0)] };
    let r = boundary_residual(&bc, &data);
    let i = Complex64::new(0.0, 1.0);
    assert_abs_diff_eq!((r[0] - (-2.0 * i * data.values[0])).norm(), 0.0, epsilon = 1e-15);
    assert_abs_diff_eq!((r[1] - (2.0 * i * data.values[2])).norm(), 0.0, epsilon = 1e-15);
}

#[test]
fn type_one_data_satisfy_type_one() {
    let bc = BoundaryCondition::named(BcTag::DirichletI);
    let data = BoundaryData { values: [c(0.4), c(0.0), c(0.0), Complex64::new(1.0, -2.0)] };
    let r = boundary_residual(&bc, &data);
    assert_eq!(r, [c(0.0), c(0.0)]);
    // the lowest type I frequency at M = 0.25 with C₂ = 0
    let sol = general_solution(0.25, c(0.75), c(1.0), c(0.0)).unwrap();
    let r = boundary_residual(&bc, &boundary_data(&sol).unwrap());
    assert!(r[0].norm() + r[1].norm() < 1e-14);
}

#[test]
fn invariance_examples() {
    let u = |a: f64, b: f64| SpinorMatrix::diag(Complex64::from_polar(1.0, a), Complex64::from_polar(1.0, b));
    let generic = BoundaryCondition::from_matrix(u(PI / 3.0, PI / 5.0)).unwrap();
    assert!(invariance_test(&generic, 0.0).invariant);
    let cert = invariance_test(&generic, 0.25);
    assert!(!cert.invariant && !cert.failures.is_empty());
    let swap = BoundaryCondition::from_matrix(SpinorMatrix::real(0.0, 1.0, 1.0, 0.0)).unwrap();
    assert!(!invariance_test(&swap, 0.0).invariant);
}

#[test]
fn exactly_four_invariant_conditions_for_massive_fields() {
    for m in [0.1, 0.25, 0.4] {
        for t in [BcTag::DirichletI, BcTag::DirichletII, BcTag::DirichletIII, BcTag::DirichletIV] {
            assert!(invariance_test(&BoundaryCondition::named(t), m).invariant, "{t} M={m}");
        }
        for (a, b) in [(0.0, 0.5), (PI / 2.0, 0.0), (PI / 2.0 + 1e-3, PI / 2.0), (0.3, 0.3), (PI / 4.0, 3.0 * PI / 4.0)] {
            let bc = BoundaryCondition::named(BcTag::Diagonal { beta_plus: a, beta_minus: b });
            let expected = [0.0, PI / 2.0].contains(&a) && [0.0, PI / 2.0].contains(&b);
            assert_eq!(invariance_test(&bc, m).invariant, expected, "({a}, {b}) M={m}");
        }
    }
}

#[test]
fn spectrum_examples() {
    let q = PI / 4.0;
    let s = spectrum(&BoundaryCondition::named(BcTag::Diagonal { beta_plus: q, beta_minus: q }), 0.0, (-3.0, 3.0)).unwrap();
    assert_list(&omegas(&s), &[-2.5, -1.5, -0.5, 0.5, 1.5, 2.5]);
    assert!(s.agreement.unwrap() <= 1e-10);
    let s = spectrum(&BoundaryCondition::named(BcTag::DirichletI), 1.3, (0.0, 5.0)).unwrap();
    assert_list(&omegas(&s), &[1.8, 2.8, 3.8, 4.8]);
    let s = spectrum(&BoundaryCondition::named(BcTag::DirichletIII), 0.25, (-2.5, 2.5)).unwrap();
    assert_list(&omegas(&s), &[-2.0, -1.0, 0.0, 1.0, 2.0]);
    assert!(s.agreement.unwrap() <= 1e-10, "{s:?}");
}

#[test]
fn root_scan_matches_closed_forms_for_dirichlet_families() {
    for m in [0.0, 0.1, 0.25, 0.4] {
        for t in [BcTag::DirichletI, BcTag::DirichletII, BcTag::DirichletIII, BcTag::DirichletIV] {
            let s = spectrum(&BoundaryCondition::named(t), m, (-4.3, 4.3)).unwrap();
            assert!(s.agreement.unwrap() <= 1e-10, "{t} M={m}: {s:?}");
        }
    }
}

#[test]
fn inadmissible_spectra() {
    let bc = BoundaryCondition::named(BcTag::DirichletIII);
    assert!(matches!(spectrum(&bc, 0.75, (0.0, 3.0)), Err(ExtError::Inadmissible { .. })));
    let generic = BoundaryCondition::named(BcTag::Diagonal { beta_plus: 0.2, beta_minus: 0.9 });
    assert!(spectrum(&generic, 0.25, (0.0, 3.0)).is_err());
    let swap = BoundaryCondition::from_matrix(SpinorMatrix::real(0.0, 1.0, 1.0, 0.0)).unwrap();
    assert!(spectrum(&swap, 0.0, (0.0, 3.0)).is_err());
    assert!(spectrum(&BoundaryCondition::named(BcTag::DirichletI), 0.3, (2.0, 1.0)).is_err());
}

#[test]
fn eigen_solutions_satisfy_their_condition() {
    for (t, m) in [(BcTag::DirichletII, 0.3), (BcTag::DirichletIV, 0.1), (BcTag::Diagonal { beta_plus: 0.4, beta_minus: 2.1 }, 0.0)] {
        let bc = BoundaryCondition::named(t);
        let s = spectrum(&bc, m, (-3.0, 3.0)).unwrap();
        let data: Vec<BoundaryData> = s
            .lines
            .iter()
            .map(|l| boundary_data(&eigen_solution(&bc, m, l.omega).unwrap()).unwrap())
            .collect();
        for (i, d) in data.iter().enumerate() {
            let r = boundary_residual(&bc, d);
            let scale = d.values.iter().map(|z| z.norm()).fold(1.0, f64::max);
            assert!(r[0].norm().max(r[1].norm()) <= 1e-9 * scale, "{t}: {r:?}");
            for e in &data[i..] {
                assert!(boundary_form(d, e).norm() <= 1e-9 * scale * scale);
            }
        }
    }
}

#[test]
fn asymptotic_examples() {
    let r = asymptotic_verifier(0.25, 0.9, c(1.0), c(0.0)).unwrap();
    assert!(r.pass, "{r:?}");
    let e = r.entries.iter().find(|e| e.endpoint == Endpoint::Plus && e.quantity == Quantity::Phi1).unwrap();
    // the printed (2M+1)ε^M misses 2^{-M}
    assert_abs_diff_eq!(e.printed_rel_error[2], 1.0 - 2f64.powf(-0.25), epsilon = 1e-4);

    let r = asymptotic_verifier(1.5, 2.3, c(0.0), c(1.0)).unwrap();
    assert!(r.pass, "{r:?}");
    let e = r.entries.iter().find(|e| e.endpoint == Endpoint::Plus && e.quantity == Quantity::Phi2).unwrap();
    assert_abs_diff_eq!(e.printed_rel_error[2], 1.0 - 1.0 / 2f64.sqrt(), epsilon = 1e-4);

    let r = asymptotic_verifier(0.5, 1.7, c(0.0), c(1.0)).unwrap();
    assert!(r.pass, "{r:?}");
    let e = r.entries.iter().find(|e| e.endpoint == Endpoint::Minus).unwrap();
    assert_eq!(e.quantity, Quantity::Density);
    assert_abs_diff_eq!(e.printed_rel_error[2], 0.5, epsilon = 1e-4);
}

#[test]
fn asymptotics_across_regimes() {
    let cs = [(c(1.0), c(0.0)), (c(0.0), c(1.0)), (Complex64::new(0.6, -0.2), c(0.8))];
    for m in [0.0, 0.1, 0.4, 0.75, 1.2, 0.5, 1.5, 2.5] {
        for w in [0.9, 2.3, -1.4] {
            for (c1, c2) in cs {
                let r = asymptotic_verifier(m, w, c1, c2).unwrap();
                assert!(r.pass, "M={m} w={w} C=({c1},{c2}): {:?}", r.entries.iter().map(|e| e.final_error()).collect::<Vec<_>>());
            }
        }
    }
}
