use std::f64::consts::PI;

use ads2_quad::*;
use ads2_specfun::{gamma, jacobi_eval};
use num_complex::Complex64;

fn re(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

fn trig_mode(omega: f64) -> impl Fn(&Point) -> Spinor {
    move |p: &Point| {
        let k = PI.powf(-0.5);
        [re(k * (omega * p.rho).cos()), re(-k * (omega * p.rho).sin())]
    }
}

/// Dirichlet type I mode Ψ_n at mass m with the closed-form constant.
fn dirichlet1(m: f64, n: usize) -> impl Fn(&Point) -> Spinor {
    let nf = n as f64;
    let norm = (gamma(nf + 1.0).unwrap() * gamma(nf + 2.0 * m + 1.0).unwrap()).sqrt()
        / (2f64.powf(m + 0.5) * gamma(0.5 + m + nf).unwrap());
    move |p: &Point| {
        let s = p.sin();
        let c = p.cos().powf(m);
        [
            re(norm * c * p.one_plus_sin().sqrt() * jacobi_eval(n, m - 0.5, m + 0.5, s)),
            re(norm * c * p.one_minus_sin().sqrt() * jacobi_eval(n, m + 0.5, m - 0.5, s)),
        ]
    }
}

#[test]
fn trigonometric_mode_has_unit_norm() {
    let spec = QuadratureSpec::default();
    for &omega in &[0.0, 0.5, 1.7, 6.3] {
        let r = inner_product(trig_mode(omega), trig_mode(omega), &spec).unwrap();
        assert!((r.value - 1.0).norm() < 1e-12, "omega={omega}: {}", r.value);
        assert!(r.error <= spec.tolerance);
    }
}

#[test]
fn dirichlet_modes_are_orthonormal() {
    let spec = QuadratureSpec::default();
    let a = inner_product(dirichlet1(0.25, 0), dirichlet1(0.25, 1), &spec).unwrap();
    assert!(a.value.norm() < 1e-10);
    let b = inner_product(dirichlet1(0.25, 0), dirichlet1(0.25, 0), &spec).unwrap();
    assert!((b.value - 1.0).norm() < 1e-9);
}

#[test]
fn gram_matrix_of_mixed_family() {
    let modes: Vec<Box<dyn Fn(&Point) -> Spinor>> = (0..6).map(|n| Box::new(dirichlet1(0.4, n)) as Box<dyn Fn(&Point) -> Spinor>).collect();
    let refs: Vec<&dyn Fn(&Point) -> Spinor> = modes.iter().map(|b| b.as_ref()).collect();
    let g = gram_matrix(&refs, &QuadratureSpec::default()).unwrap();
    assert!(identity_deviation(&g.value) < 1e-9);
}

#[test]
fn singular_power_integrands() {
    // ∫ cos^{-2M} ρ dρ = √π Γ(1/2 − M)/Γ(1 − M)
    let spec = QuadratureSpec::default();
    for &m in &[0.1, 0.25, 0.4, 0.45] {
        let r = integrate(&spec, |p| re(p.cos().powf(-2.0 * m))).unwrap();
        let want = PI.sqrt() * gamma(0.5 - m).unwrap() / gamma(1.0 - m).unwrap();
        assert!((r.value.re - want).abs() < 1e-10 * want, "M={m}: {} vs {want}", r.value.re);
    }
}

#[test]
fn gauss_legendre_scheme_on_smooth_integrands() {
    let spec = QuadratureSpec { scheme: Scheme::GaussLegendre, inset: 0.0, ..QuadratureSpec::default() };
    let r = integrate(&spec, |p| re(p.rho.cos().powi(2))).unwrap();
    assert!((r.value.re - PI / 2.0).abs() < 1e-12);
}

#[test]
fn halving_the_inset_is_within_the_error_estimate() {
    for &m in &[0.0, 0.2, 0.4] {
        let f = |p: &Point| re(p.cos().powf(-2.0 * m) * (1.0 + p.sin()));
        let a = integrate(&QuadratureSpec { inset: 1e-100, ..QuadratureSpec::default() }, f).unwrap();
        let b = integrate(&QuadratureSpec { inset: 0.5e-100, ..QuadratureSpec::default() }, f).unwrap();
        assert!((a.value - b.value).norm() <= a.error.max(b.error).max(1e-15));
    }
}

#[test]
fn nonintegrable_integrand_fails_to_converge() {
    let spec = QuadratureSpec { inset: 0.0, ..QuadratureSpec::default() };
    let r = integrate(&spec, |p| re(1.0 / p.cos().powf(1.5)));
    assert!(matches!(r, Err(QuadError::NonConvergence { .. })), "{r:?}");
}

#[test]
fn invalid_specs_are_rejected() {
    let bad = QuadratureSpec { tolerance: -1.0, ..QuadratureSpec::default() };
    assert!(matches!(integrate(&bad, |_| re(1.0)), Err(QuadError::InvalidSpec(_))));
}

#[test]
fn shell_probe_separates_integrable_powers() {
    let divergent = |p: f64| tail_sequence(|pt: &Point| pt.eps_plus.powf(p), Endpoint::Plus).divergent;
    assert!(divergent(-1.0));
    assert!(divergent(-1.5));
    assert!(divergent(-3.0));
    assert!(!divergent(-0.98));
    assert!(!divergent(-0.5));
    assert!(!divergent(0.0));
    // a log factor on the borderline power still diverges
    assert!(tail_sequence(|pt: &Point| pt.eps_minus.ln().powi(2) / pt.eps_minus, Endpoint::Minus).divergent);
}

#[test]
fn overflowing_density_counts_as_divergent() {
    let r = tail_sequence(|pt: &Point| pt.eps_plus.powf(-5.0), Endpoint::Plus);
    assert!(r.divergent);
}

#[test]
fn exponent_fit_examples() {
    let grid = default_grid();
    // Dirichlet I, M = 0.25: |Φ|² ~ ε^{2M}
    let f = endpoint_exponent_fit(|p| {
        let v = dirichlet1(0.25, 0)(p);
        v[0].norm_sqr() + v[1].norm_sqr()
    }, Endpoint::Plus, &grid)
    .unwrap();
    assert!((f.exponent - 0.5).abs() < 0.01 && !f.log_flag, "{f:?}");

    let f = endpoint_exponent_fit(|p| p.eps_plus.powf(-0.5) * (1.0 + p.eps_plus), Endpoint::Plus, &grid).unwrap();
    assert!((f.exponent + 0.5).abs() < 0.01);

    let free = |p: &Point| {
        let v = trig_mode(1.3)(p);
        v[0].norm_sqr() + v[1].norm_sqr()
    };
    let f = endpoint_exponent_fit(free, Endpoint::Minus, &grid).unwrap();
    assert!(f.exponent.abs() < 1e-6);
}

#[test]
fn exponent_fit_flags_logarithms() {
    let grid = default_grid();
    let f = endpoint_exponent_fit(|p| p.eps_plus * p.eps_plus.ln().powi(2), Endpoint::Plus, &grid).unwrap();
    assert!(f.log_flag);
    assert!((f.exponent - 1.0).abs() < 0.02);
    assert!((f.log_power - 2.0).abs() < 0.05);
}

#[test]
fn exponent_fit_rejects_bad_grids() {
    assert!(matches!(endpoint_exponent_fit(|_| 1.0, Endpoint::Plus, &[1e-9, 1e-5, 1e-4, 1e-3]), Err(QuadError::InvalidSpec(_))));
    assert!(matches!(endpoint_exponent_fit(|_| 0.0, Endpoint::Plus, &default_grid()), Err(QuadError::IllConditioned(_))));
}
