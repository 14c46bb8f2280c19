use std::f64::consts::{FRAC_PI_2, PI};
use std::time::Instant;

use ads2_algebra::{charge_conjugate, mass_flip, parity_at};
use ads2_modes::*;
use ads2_quad::{gram_matrix, identity_deviation, Point, QuadratureSpec, Spinor};
use approx::assert_abs_diff_eq;
use num_complex::Complex64;

const SAMPLE_RHO: [f64; 9] = [-1.5, -1.1, -0.7, -0.2, 0.0, 0.3, 0.9, 1.2, 1.55];

fn max_diff(a: &Spinor, b: &Spinor) -> f64 {
    (a[0] - b[0]).norm().max((a[1] - b[1]).norm())
}

fn dirichlet_families() -> [Family; 4] {
    [Family::DirichletI, Family::DirichletII, Family::DirichletIII, Family::DirichletIV]
}

#[test]
fn printed_frequencies() {
    assert_eq!(mode(Family::DirichletI, 1.0, 0).unwrap().omega, 1.5);
    assert_eq!(mode(Family::DirichletII, 0.25, 2).unwrap().omega, 2.25);
    assert_eq!(mode(Family::DirichletII, 0.25, -1).unwrap().omega, -0.25);
    assert_eq!(mode(Family::HalfIntegerV { k: 1 }, 1.5, 0).unwrap().omega, 2.0);
    assert_eq!(mode(Family::HalfMassVI, 0.5, 3).unwrap().omega, 4.0);
    assert_eq!(mode(Family::DirichletIV, 0.1, -3).unwrap().omega, -3.0);
}

#[test]
fn type_three_zero_mode() {
    let z = mode(Family::DirichletIII, 0.25, 0).unwrap();
    assert_eq!(z.omega, 0.0);
    for rho in SAMPLE_RHO {
        let p = Point::from_rho(rho);
        let v = z.eval(&p);
        assert_eq!(v[0].norm(), 0.0);
        // Φ² ∝ σ^{−M}
        assert!(v[1].re < 0.0);
        assert_abs_diff_eq!(v[1].re / p.sigma().powf(-0.25), z.eval(&Point::from_rho(0.0))[1].re, epsilon = 1e-13);
    }
}

#[test]
fn massless_beta_lowest_mode() {
    let q = PI / 4.0;
    let z = mode(Family::MasslessBeta { beta_plus: q, beta_minus: q }, 0.0, 0).unwrap();
    assert_eq!(z.omega, 0.5);
    assert_abs_diff_eq!(z.normalization, PI.powf(-0.5), epsilon = 1e-12);
    for rho in SAMPLE_RHO {
        let v = z.at(rho);
        assert_abs_diff_eq!(v[0].re, (0.5 * rho).cos() / PI.sqrt(), epsilon = 1e-12);
        assert_abs_diff_eq!(v[1].re, -(0.5 * rho).sin() / PI.sqrt(), epsilon = 1e-12);
    }
}

#[test]
fn incompatible_pairs_are_rejected() {
    let bad = [
        (Family::DirichletII, 0.5),
        (Family::DirichletIII, 0.7),
        (Family::MasslessBeta { beta_plus: 0.1, beta_minus: 0.2 }, 0.1),
        (Family::HalfIntegerV { k: 1 }, 1.0),
        (Family::HalfIntegerV { k: 1 }, 0.5),
        (Family::HalfMassVI, 0.4),
        (Family::DirichletI, -0.2),
    ];
    for (f, m) in bad {
        assert!(matches!(mode(f, m, 0), Err(ModeError::Incompatible { .. })), "{f} at {m}");
    }
}

#[test]
fn printed_normalizations_agree_except_half_mass() {
    let cases: Vec<(Family, f64)> = vec![
        (Family::DirichletI, 0.0),
        (Family::DirichletI, 0.25),
        (Family::DirichletI, 1.0),
        (Family::DirichletI, 2.3),
        (Family::DirichletII, 0.1),
        (Family::DirichletII, 0.4),
        (Family::DirichletIII, 0.25),
        (Family::DirichletIV, 0.4),
        (Family::HalfIntegerV { k: 0 }, 0.5),
        (Family::HalfIntegerV { k: 2 }, 2.5),
        (Family::MasslessBeta { beta_plus: 0.3, beta_minus: 1.9 }, 0.0),
    ];
    for (f, m) in cases {
        for j in -4..=4 {
            let md = mode(f, m, j).unwrap();
            assert!((md.printed_ratio() - 1.0).abs() < 1e-9, "{f} M={m} j={j}: ratio {}", md.printed_ratio());
        }
    }
    for n in 0..5 {
        let md = mode(Family::HalfMassVI, 0.5, n).unwrap();
        let nf = n as f64;
        assert_abs_diff_eq!(md.printed_ratio(), 2.0 * ((nf + 0.5) / (nf + 1.0)).sqrt(), epsilon = 1e-9);
        assert_abs_diff_eq!(md.normalization, (nf + 1.0).sqrt() / 2.0, epsilon = 1e-10);
    }
}

#[test]
fn modes_solve_the_dirac_system() {
    let grid = residual_grid();
    let cases: Vec<(Family, f64)> = vec![
        (Family::DirichletI, 0.0),
        (Family::DirichletI, 0.25),
        (Family::DirichletI, 2.3),
        (Family::DirichletII, 0.4),
        (Family::DirichletIII, 0.1),
        (Family::DirichletIV, 0.25),
        (Family::HalfIntegerV { k: 1 }, 1.5),
        (Family::HalfMassVI, 0.5),
        (Family::MasslessBeta { beta_plus: 1.0, beta_minus: 2.0 }, 0.0),
    ];
    for (f, m) in cases {
        for j in -8..=8 {
            let md = mode(f, m, j).unwrap();
            let r = max_residual(m, Complex64::new(md.omega, 0.0), &grid, |p| Ok(md.eval_with_derivative(p))).unwrap();
            assert!(r < 1e-8, "{f} M={m} j={j}: residual {r}");
        }
    }
}

#[test]
fn gram_matrices_are_identity() {
    let spec = QuadratureSpec::default();
    let start = Instant::now();
    let cases: Vec<(Family, f64)> = vec![
        (Family::DirichletI, 0.0),
        (Family::DirichletI, 0.4),
        (Family::DirichletI, 2.3),
        (Family::DirichletII, 0.4),
        (Family::DirichletIII, 0.25),
        (Family::DirichletIV, 0.1),
        (Family::HalfIntegerV { k: 1 }, 1.5),
        (Family::MasslessBeta { beta_plus: 0.7, beta_minus: 2.2 }, 0.0),
    ];
    for (f, m) in cases {
        let ms = modes(f, m, -8..=8).unwrap();
        let samplers: Vec<Box<dyn Fn(&Point) -> Spinor + '_>> =
            ms.iter().map(|md| Box::new(move |p: &Point| md.eval(p)) as Box<dyn Fn(&Point) -> Spinor>).collect();
        let refs: Vec<&dyn Fn(&Point) -> Spinor> = samplers.iter().map(|b| b.as_ref()).collect();
        let g = gram_matrix(&refs, &spec).unwrap();
        let dev = identity_deviation(&g.value);
        assert!(dev <= 1e-9, "{f} M={m}: deviation {dev}");
    }
    eprintln!("gram checks took {:?}", start.elapsed());
}

#[test]
fn charge_conjugation_pairs_levels() {
    for f in dirichlet_families() {
        let first = if matches!(f, Family::DirichletIII | Family::DirichletIV) { 1 } else { 0 };
        for n in first..6 {
            let neg = if first == 1 { -n } else { -n - 1 };
            let (a, b) = (mode(f, 0.25, n).unwrap(), mode(f, 0.25, neg).unwrap());
            assert_eq!(a.omega, -b.omega);
            for rho in SAMPLE_RHO {
                let d = max_diff(&charge_conjugate(&a.at(rho)), &b.at(rho));
                assert!(d <= 1e-11, "{f} n={n} rho={rho}: {d}");
            }
        }
    }
}

#[test]
fn type_three_zero_mode_is_conjugation_odd() {
    let z = mode(Family::DirichletIII, 0.25, 0).unwrap();
    let z4 = mode(Family::DirichletIV, 0.25, 0).unwrap();
    for rho in SAMPLE_RHO {
        let v = z.at(rho);
        assert!(max_diff(&charge_conjugate(&v), &[-v[0], -v[1]]) < 1e-15);
        let w = z4.at(rho);
        assert!(max_diff(&charge_conjugate(&w), &w) < 1e-15);
    }
}

#[test]
fn parity_maps_type_three_to_type_four() {
    for n in 0..=5 {
        let (iii, iv) = (mode(Family::DirichletIII, 0.25, n).unwrap(), mode(Family::DirichletIV, 0.25, n).unwrap());
        let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
        for rho in SAMPLE_RHO {
            let p = parity_at(&iii.at(-rho));
            let d = max_diff(&iv.at(rho), &[sign * p[0], sign * p[1]]);
            assert!(d <= 1e-12, "n={n} rho={rho}: {d}");
        }
    }
}

#[test]
fn half_integer_families_coincide_with_type_one() {
    for k in 0..3u32 {
        let m = k as f64 + 0.5;
        for j in -4..=4 {
            let (v, i) = (mode(Family::HalfIntegerV { k }, m, j).unwrap(), mode(Family::DirichletI, m, j).unwrap());
            assert_eq!(v.omega, i.omega);
            for rho in SAMPLE_RHO {
                assert!(max_diff(&v.at(rho), &i.at(rho)) < 1e-12);
            }
        }
    }
    for j in -3..=3 {
        let (vi, i) = (mode(Family::HalfMassVI, 0.5, j).unwrap(), mode(Family::DirichletI, 0.5, j).unwrap());
        for rho in SAMPLE_RHO {
            assert!(max_diff(&vi.at(rho), &i.at(rho)) < 1e-12);
        }
    }
}

#[test]
fn massless_dirichlet_families_are_beta_families() {
    let pairs = [
        (Family::DirichletI, Family::MasslessBeta { beta_plus: FRAC_PI_2, beta_minus: 0.0 }),
        (Family::DirichletII, Family::MasslessBeta { beta_plus: 0.0, beta_minus: FRAC_PI_2 }),
    ];
    for (d, b) in pairs {
        for j in -6..=6 {
            let (x, y) = (mode(d, 0.0, j).unwrap(), mode(b, 0.0, j).unwrap());
            assert_abs_diff_eq!(x.omega, y.omega, epsilon = 1e-15);
            // equal up to an overall sign
            let s = if (x.at(0.3)[0] + x.at(0.3)[1]).re * (y.at(0.3)[0] + y.at(0.3)[1]).re < 0.0 { -1.0 } else { 1.0 };
            for rho in SAMPLE_RHO {
                let yv = y.at(rho);
                assert!(max_diff(&x.at(rho), &[s * yv[0], s * yv[1]]) < 1e-12, "{d} j={j}");
            }
        }
    }
}

#[test]
fn mass_flip_gives_negative_mass_solution() {
    let grid = residual_grid();
    for (f, m) in [(Family::DirichletI, 0.25), (Family::DirichletIII, 0.4), (Family::HalfIntegerV { k: 1 }, 1.5)] {
        for j in [-2, 0, 3] {
            let md = mode(f, m, j).unwrap();
            let r = max_residual(-m, Complex64::new(md.omega, 0.0), &grid, |p| {
                let (phi, dphi) = md.eval_with_derivative(p);
                Ok((mass_flip(&phi), mass_flip(&dphi)))
            })
            .unwrap();
            assert!(r <= 1e-8, "{f} j={j}: {r}");
        }
    }
}

#[test]
fn boundary_conditions_hold() {
    let cases: Vec<(Family, f64)> = vec![
        (Family::DirichletI, 0.0),
        (Family::DirichletI, 0.4),
        (Family::DirichletI, 1.0),
        (Family::DirichletII, 0.1),
        (Family::DirichletII, 0.4),
        (Family::DirichletIII, 0.25),
        (Family::DirichletIII, 0.4),
        (Family::DirichletIV, 0.4),
        (Family::HalfIntegerV { k: 2 }, 2.5),
        (Family::HalfMassVI, 0.5),
        (Family::MasslessBeta { beta_plus: 0.4, beta_minus: 2.9 }, 0.0),
    ];
    for (f, m) in cases {
        for j in -8..=8 {
            let d = mode(f, m, j).unwrap().boundary_defect();
            assert!(d <= 1e-9, "{f} M={m} j={j}: defect {d}");
        }
    }
}

#[test]
fn chiral_equivalence_of_beta_families() {
    // Same β, different B: modes differ by the rotation R(B' − B).
    let (f1, f2) = (
        Family::MasslessBeta { beta_plus: 1.0, beta_minus: 0.5 },
        Family::MasslessBeta { beta_plus: 0.2, beta_minus: 1.3 },
    );
    let theta = 0.5 * (0.2 - 1.3) - 0.5 * (1.0 - 0.5);
    for j in -3..=3 {
        let (a, b) = (mode(f1, 0.0, j).unwrap(), mode(f2, 0.0, j).unwrap());
        for rho in SAMPLE_RHO {
            let rotated = ads2_algebra::chiral_rotation(theta, &b.at(rho));
            assert!(max_diff(&rotated, &a.at(rho)) < 1e-12);
        }
    }
}
