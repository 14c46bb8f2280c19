use std::f64::consts::FRAC_PI_4;

use ads2_modes::*;
use ads2_quad::Point;
use approx::assert_abs_diff_eq;
use num_complex::Complex64;

fn c(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

fn residual_of(sol: &GeneralSolution) -> f64 {
    max_residual(sol.m, sol.omega, &residual_grid(), |p| sol.eval_with_derivative(p)).unwrap()
}

#[test]
fn massless_solution_is_trigonometric() {
    let w = 0.7;
    let sol = general_solution(0.0, c(w), c(1.0), c(0.0)).unwrap();
    for rho in [-1.2, -0.3, 0.0, 0.8, 1.5] {
        let phi = sol.at(rho).unwrap();
        assert_abs_diff_eq!(phi[0].re, (w * rho).cos(), epsilon = 1e-15);
        assert_abs_diff_eq!(phi[1].re, -(w * rho).sin(), epsilon = 1e-15);
    }
}

#[test]
fn zero_frequency_decouples() {
    let m = 0.25;
    let sol = general_solution(m, c(0.0), c(1.0), c(0.0)).unwrap();
    for rho in [-1.0, 0.2, 1.3] {
        let p = Point::from_rho(rho);
        let phi = sol.eval(&p).unwrap();
        assert_abs_diff_eq!(phi[0].re, 1.5 * p.sigma().powf(m), epsilon = 1e-14);
        assert_eq!(phi[1], c(0.0));
    }
    assert!(residual_of(&sol) < 1e-14);
}

#[test]
fn matches_adaptive_ode_integration() {
    // Adaptive DOP853 integration (rtol 1e-13) from ρ = 0 with data taken
    // from a 30-digit evaluation at ρ = 0.
    let cases = [
        ((1.0, 0.0), [
            (-1.2, 0.18039843177286533, 0.961858320751892),
            (-0.6, 0.5609180782035441, 1.0633689294365682),
            (0.5, 1.0499952013274128, 0.6228481628233105),
            (1.0, 1.037672739679492, 0.30446147596717954),
            (1.4, 0.8069366734297198, 0.06907891890321465),
        ]),
        ((0.0, 1.0), [
            (-1.2, 0.9243229338456814, 0.7708919840078446),
            (-0.6, 0.9803065008606574, 0.521337224994543),
            (0.5, 0.8359058998054604, -0.21843675639949853),
            (1.0, 0.5668603582571556, -0.5564498676490911),
            (1.4, 0.23627094808278534, -0.9092146663997759),
        ]),
    ];
    for ((c1, c2), rows) in cases {
        let sol = general_solution(0.25, c(0.75), c(c1), c(c2)).unwrap();
        for (rho, p1, p2) in rows {
            let phi = sol.at(rho).unwrap();
            assert!((phi[0].re - p1).abs() <= 1e-7 && (phi[1].re - p2).abs() <= 1e-7, "rho {rho}: {phi:?}");
        }
    }
}

#[test]
fn residual_small_across_regimes() {
    let masses = [0.0, 0.1, 0.25, 0.4, 0.49, 0.5, 0.75, 1.0, 1.5, 2.3, 2.5];
    let omegas = [c(0.3), c(1.7), Complex64::new(0.0, 1.0), Complex64::new(0.0, -1.0), Complex64::new(0.4, 0.9)];
    for &m in &masses {
        for &w in &omegas {
            for (c1, c2) in [(c(1.0), c(0.0)), (c(0.0), c(1.0)), (c(0.3), Complex64::new(0.0, -0.8))] {
                let sol = general_solution(m, w, c1, c2).unwrap();
                let r = residual_of(&sol);
                assert!(r <= 1e-8, "M={m} w={w} C=({c1},{c2}): residual {r}");
            }
        }
    }
}

#[test]
fn routing_rejects_mismatched_forms() {
    assert!(general_solution_in(SolutionForm::Ferrers { k: 0 }, 0.25, c(1.0), c(1.0), c(0.0)).is_err());
    assert!(general_solution_in(SolutionForm::Hypergeometric, 1.5, c(1.0), c(1.0), c(0.0)).is_err());
    assert!(general_solution_in(SolutionForm::Trigonometric, 0.1, c(1.0), c(1.0), c(0.0)).is_err());
    assert!(general_solution_in(SolutionForm::Ferrers { k: 1 }, 1.5, c(1.0), c(1.0), c(0.0)).is_ok());
    assert!(general_solution(-0.1, c(1.0), c(1.0), c(0.0)).is_err());
}

#[test]
fn weighted_components_regime() {
    let sol = general_solution(0.75, c(1.0), c(1.0), c(0.0)).unwrap();
    assert!(weighted_components(&sol).is_err());
    assert!(boundary_data(&sol).is_err());
    let massless = general_solution(0.0, c(0.4), c(0.2), c(1.0)).unwrap();
    let w = weighted_components(&massless).unwrap();
    let p = Point::from_rho(0.3);
    assert_eq!(w.eval(&p).unwrap(), massless.eval(&p).unwrap());
}

#[test]
fn boundary_values_at_plus() {
    let b = boundary_data(&general_solution(0.25, c(0.6), c(1.0), c(0.0)).unwrap()).unwrap();
    assert_abs_diff_eq!(b.values[0].re, 1.5, epsilon = 1e-15);
    let b = boundary_data(&general_solution(0.25, c(0.6), c(0.0), c(1.0)).unwrap()).unwrap();
    assert_abs_diff_eq!(b.values[1].re, -0.5, epsilon = 1e-15);
}

#[test]
fn massless_boundary_values() {
    let b = boundary_data(&general_solution(0.0, c(0.5), c(1.0), c(0.0)).unwrap()).unwrap();
    let h = FRAC_PI_4.cos();
    for (got, want) in b.values.iter().zip([h, -h, h, h]) {
        assert_abs_diff_eq!(got.re, want, epsilon = 1e-15);
    }
}

#[test]
fn lowest_type_one_frequency_kills_minus_first_component() {
    let (m, w) = (0.25, 0.75);
    let b = boundary_data(&general_solution(m, c(w), c(1.0), c(0.0)).unwrap()).unwrap();
    assert!(b.values[2].norm() < 1e-15);
    assert_abs_diff_eq!(trans_coeffs(m, c(w)).unwrap().a1.norm(), 0.0, epsilon = 1e-15);
    // The second component does not vanish: 2ω B₂ at −M equals 2ω here.
    assert_abs_diff_eq!(b.values[3].re, 1.5, epsilon = 1e-13);
}

#[test]
fn closed_forms_match_numerical_limits() {
    let omegas = [c(0.3), c(0.75), Complex64::new(0.0, 1.0), Complex64::new(0.0, -1.0), Complex64::new(1.2, -0.4)];
    for m in [0.0, 0.1, 0.25, 0.4, 0.49] {
        for &w in &omegas {
            for (c1, c2) in [(c(1.0), c(0.0)), (c(0.0), c(1.0)), (Complex64::new(0.3, 0.2), c(-0.7))] {
                let sol = general_solution(m, w, c1, c2).unwrap();
                let closed = boundary_data(&sol).unwrap();
                let numeric = boundary_data_numerical(&sol).unwrap();
                let d = closed.max_abs_diff(&numeric);
                assert!(d <= 1e-8, "M={m} w={w}: {closed:?} vs {numeric:?}");
            }
        }
    }
}

#[test]
fn zero_constants_give_zero_data() {
    for m in [0.0, 0.3] {
        let b = boundary_data(&general_solution(m, c(0.9), c(0.0), c(0.0)).unwrap()).unwrap();
        assert!(b.values.iter().all(|z| z.norm() == 0.0));
    }
}

#[test]
fn weighted_values_approach_closed_form() {
    use ads2_quad::Endpoint;
    let sol = general_solution(0.3, Complex64::new(0.0, 1.0), c(1.0), c(1.0)).unwrap();
    let closed = boundary_data(&sol).unwrap();
    for end in [Endpoint::Plus, Endpoint::Minus] {
        let v = sol.weighted(&Point::near(end, 1e-150)).unwrap();
        let want = closed.at(end);
        assert!((v[0] - want[0]).norm() < 1e-10 && (v[1] - want[1]).norm() < 1e-10, "{end:?}: {v:?} vs {want:?}");
    }
}
