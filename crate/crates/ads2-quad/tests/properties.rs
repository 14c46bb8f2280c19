use ads2_quad::*;
use num_complex::Complex64;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn power_law_fit_recovers_exponent(p in -1.5f64..2.0, scale in 0.1f64..10.0) {
        let f = endpoint_exponent_fit(|pt| scale * pt.eps_minus.powf(p), Endpoint::Minus, &default_grid()).unwrap();
        prop_assert!((f.exponent - p).abs() < 1e-8);
        prop_assert!(!f.log_flag);
    }

    #[test]
    fn inner_product_is_hermitian(a in -2.0f64..2.0, b in -2.0f64..2.0, m in 0.0f64..0.45) {
        let spec = QuadratureSpec::default();
        let u = move |p: &Point| [Complex64::new(p.cos().powf(-m), a), Complex64::new(p.sin(), 0.0)];
        let v = move |p: &Point| [Complex64::new(0.0, b * p.rho), Complex64::new(p.cos().powf(m), 1.0)];
        let x = inner_product(u, v, &spec).unwrap().value;
        let y = inner_product(v, u, &spec).unwrap().value;
        prop_assert!((x - y.conj()).norm() < 1e-10);
    }
}
