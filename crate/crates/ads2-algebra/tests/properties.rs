use ads2_algebra::*;
use num_complex::Complex64;
use proptest::prelude::*;

fn spinor() -> impl Strategy<Value = Spinor> {
    prop::array::uniform4(-10.0f64..10.0).prop_map(|x| [Complex64::new(x[0], x[1]), Complex64::new(x[2], x[3])])
}

proptest! {
    #[test]
    fn charge_conjugation_is_an_involution(v in spinor()) {
        prop_assert_eq!(charge_conjugate(&charge_conjugate(&v)), v);
    }

    #[test]
    fn charge_conjugation_is_antilinear(v in spinor(), w in spinor(), re in -3.0f64..3.0, im in -3.0f64..3.0) {
        let z = Complex64::new(re, im);
        let lhs = charge_conjugate(&[z * v[0] + w[0], z * v[1] + w[1]]);
        let (cv, cw) = (charge_conjugate(&v), charge_conjugate(&w));
        for k in 0..2 {
            prop_assert!((lhs[k] - (z.conj() * cv[k] + cw[k])).norm() < 1e-12);
        }
    }

    #[test]
    fn rotations_preserve_norm_and_compose(v in spinor(), a in -7.0f64..7.0, b in -7.0f64..7.0) {
        let r = chiral_rotation(a, &chiral_rotation(b, &v));
        let direct = chiral_rotation(a + b, &v);
        let n0 = v[0].norm_sqr() + v[1].norm_sqr();
        let n1 = r[0].norm_sqr() + r[1].norm_sqr();
        prop_assert!((n0 - n1).abs() <= 1e-12 * n0.max(1.0));
        for k in 0..2 {
            prop_assert!((r[k] - direct[k]).norm() <= 1e-12 * n0.sqrt().max(1.0));
        }
    }

    #[test]
    fn parity_is_an_involution(v in spinor()) {
        let w = parity_at(&parity_at(&v));
        prop_assert_eq!(w, v);
    }
}
