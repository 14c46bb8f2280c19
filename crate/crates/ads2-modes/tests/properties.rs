use ads2_algebra::mass_flip;
use ads2_modes::*;
use num_complex::Complex64;
use proptest::prelude::*;

fn cplx() -> impl Strategy<Value = Complex64> {
    (-2.0..2.0f64, -2.0..2.0f64).prop_map(|(a, b)| Complex64::new(a, b))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn general_solutions_have_small_residual(m in 0.0..3.0f64, w in cplx(), c1 in cplx(), c2 in cplx()) {
        let sol = general_solution(m, w, c1, c2).unwrap();
        let r = max_residual(m, w, &residual_grid(), |p| sol.eval_with_derivative(p)).unwrap();
        prop_assert!(r <= 1e-8, "residual {}", r);
    }

    #[test]
    fn flipped_solutions_have_negative_mass(m in 0.01..0.49f64, w in cplx(), c1 in cplx(), c2 in cplx()) {
        let sol = general_solution(m, w, c1, c2).unwrap();
        let r = max_residual(-m, w, &residual_grid(), |p| {
            let (phi, dphi) = sol.eval_with_derivative(p)?;
            Ok((mass_flip(&phi), mass_flip(&dphi)))
        }).unwrap();
        prop_assert!(r <= 1e-8);
    }

    #[test]
    fn boundary_data_is_linear(m in 0.0..0.49f64, w in cplx(), a in cplx(), b in cplx(), z in cplx()) {
        let d = |c1, c2| boundary_data(&general_solution(m, w, c1, c2).unwrap()).unwrap();
        let (x, y, s) = (d(a, b), d(b, a), d(a + z * b, b + z * a));
        for i in 0..4 {
            let want = x.values[i] + z * y.values[i];
            prop_assert!((s.values[i] - want).norm() <= 1e-10 * (1.0 + want.norm()));
        }
    }

    #[test]
    fn regime_depends_on_mass_only(m in 0.0..5.0f64) {
        let r = MassRegime::of(m).unwrap();
        prop_assert_eq!(r.has_boundary_freedom(), m < 0.5);
    }
}
