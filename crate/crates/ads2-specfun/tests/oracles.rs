//! Reference values computed with mpmath at 40 digits.

use ads2_specfun::*;
use approx::assert_relative_eq;
use num_complex::Complex64;

#[test]
fn log_gamma_reference() {
    let table = [
        (0.1, 2.252712651734205902),
        (0.37, 0.87694681948487930234),
        (2.5, 0.28468287047291915963),
        (7.3, 7.1478925230222486921),
        (33.3, 82.603723581654943008),
        (150.2, 601.01106392589216349),
        (-0.6, 1.3075034414677744299),
        (-2.4, 0.10258361596827728433),
    ];
    for (x, want) in table {
        assert_relative_eq!(gamma_ln(x).unwrap(), want, max_relative = 1e-13);
    }
}

#[test]
fn digamma_reference() {
    let table = [
        (0.1, -10.423754940411076232),
        (0.37, -2.7953014108905639988),
        (2.5, 0.70315664064524318723),
        (7.3, 1.9178203356379860723),
        (33.3, 3.4904672385202427773),
        (150.2, 5.0086351506926047306),
        (-0.6, -0.89471787791844925584),
        (-2.4, 2.0903331670591914764),
    ];
    for (x, want) in table {
        assert_relative_eq!(digamma(x).unwrap(), want, max_relative = 1e-13);
    }
}

#[test]
fn duplication_formula() {
    let m: f64 = 0.37;
    let lhs = gamma(2.0 * m + 1.0).unwrap() * std::f64::consts::PI.sqrt();
    let rhs = 2f64.powf(2.0 * m) * gamma(m + 0.5).unwrap() * gamma(m + 1.0).unwrap();
    assert_relative_eq!(lhs, rhs, max_relative = 1e-12);
}

#[test]
fn hypergeometric_reference() {
    let table = [
        (0.3, -0.3, 0.75, 0.2, 0.97461744736243580807),
        (1.7, -1.7, 0.25, 0.45, -2.2622029293300724626),
        (2.5, 0.5, 1.3, 0.8, 7.0464812857334469859),
        (1.25, 0.75, 1.75, 0.95, 3.9238760313992467488),
        (-3.2, 4.1, 2.2, 0.7, -0.014595316805041763229),
        (0.9, 1.1, 0.6, 0.999, 20591.052181766507319),
    ];
    for (a, b, c, x, want) in table {
        let got = hyp2f1(&HypergeometricParams::new(a, b, c), x).unwrap();
        assert_relative_eq!(got, want, max_relative = 1e-12);
    }
}

#[test]
fn hypergeometric_imaginary_parameters() {
    let i = Complex64::new(0.0, 1.0);
    let table = [(0.75, 0.3, 1.4842265748750090986), (0.75, 0.9, 3.840072027682191661), (1.25, 0.99, 2.7227699822390633483), (0.25, 0.7, 7.2238345564220242088)];
    for (c, x, want) in table {
        let got = hyp2f1_c(i, -i, Complex64::new(c, 0.0), x).unwrap();
        assert_relative_eq!(got.re, want, max_relative = 1e-12);
        assert!(got.im.abs() < 1e-12);
    }
}

#[test]
fn ferrers_real_degree_reference() {
    let table = [
        (2.3, 0, 0.5, -0.26615611148542657031, -0.67881103382256379847),
        (2.3, 1, 0.5, 0.15268483749120668043, -0.18218745993629129377),
        (2.3, 1, -0.5, -0.18357903547570648076, 0.086944930320786322828),
        (1.7, 2, 0.9, 0.024335375153872066103, 1.0198764395197006157),
        (1.7, 2, -0.9, 0.53957727559887208321, -0.56854291310122644245),
        (0.4, 0, -0.99, -0.97666104946897445664, -2.1454709472874689715),
        (3.6, 3, 0.2, 0.0088398684983776467167, -0.0052273083098479741595),
        (2.3, 1, -0.7, -0.12440841330305324361, 0.27290687854307204305),
        (-0.3, 1, 0.6, 0.51136487259713506087, -4.9752572546035697258),
    ];
    for (nu, k, x, p, q) in table {
        assert_relative_eq!(ferrers_p(nu, k, x).unwrap(), p, max_relative = 1e-11);
        assert_relative_eq!(ferrers_q(nu, k, x).unwrap(), q, max_relative = 1e-11);
    }
}

#[test]
fn ferrers_complex_degree_reference() {
    let table = [
        (0.0, 1.0, 0, 0.3, 1.4265989822538493865, -0.52311350747949867304, -0.60905781502321274881, -1.9778997370039027041),
        (0.0, 1.0, 1, -0.8, 5.0642398923513417492, -3.5075823278610380146, -5.5327421850868101193, -8.0323395720945118881),
        (1.0, 1.0, 2, 0.95, 0.012710308446476013634, -0.00032049584449498833795, -1.9822312680262680421, -0.16184342252348831394),
        (-1.0, 1.0, 1, -0.6, 3.1402610626761757634, 1.7257967805502406223, 2.7131805296468517825, -4.8758646985726005029),
    ];
    for (re, im, k, x, pr, pi, qr, qi) in table {
        let nu = Complex64::new(re, im);
        let p = ferrers_p_c(nu, k, x).unwrap();
        let q = ferrers_q_c(nu, k, x).unwrap();
        assert!((p - Complex64::new(pr, pi)).norm() <= 1e-11 * Complex64::new(pr, pi).norm());
        assert!((q - Complex64::new(qr, qi)).norm() <= 1e-11 * Complex64::new(qr, qi).norm());
    }
}

#[test]
fn legendre_degree_zero() {
    assert_relative_eq!(ferrers_p(0.0, 0, 0.3).unwrap(), 1.0, max_relative = 1e-15);
    assert!(ferrers_q(0.0, 0, 0.0).unwrap().abs() < 1e-15);
    let x: f64 = 0.6;
    assert_relative_eq!(ferrers_q(0.0, 0, x).unwrap(), 0.5 * ((1.0 + x) / (1.0 - x)).ln(), max_relative = 1e-14);
}

#[test]
fn ferrers_domain_errors() {
    assert!(ferrers_p(1.2, 1, 1.0).is_err());
    assert!(ferrers_q(1.2, 1, -1.0).is_err());
}

#[test]
fn ferrers_p_near_one_has_the_power_law_prefactor() {
    let (k, omega) = (2u32, 1.9);
    for &e in &[1e-4f64, 1e-6] {
        let x = 1.0 - e;
        let lead = (e / 2.0).powf(k as f64 / 2.0) / 2.0; // ((1−x)/2)^{k/2}/Γ(1+k)
        assert_relative_eq!(ferrers_p(omega, k, x).unwrap(), lead, max_relative = 1e-3);
    }
}

#[test]
fn log_form_of_q_near_one() {
    let omega: f64 = 1.3;
    let x: f64 = 1.0 - 1e-7;
    let p = ferrers_p(omega, 0, x).unwrap();
    let approx = p * (0.5 * ((1.0 + x) / (1.0 - x)).ln() - EULER_GAMMA - digamma(omega + 1.0).unwrap());
    assert_relative_eq!(ferrers_q(omega, 0, x).unwrap(), approx, max_relative = 1e-5);
}

#[test]
fn ferrers_p_reduces_to_jacobi() {
    // P_{k+n}^{-k}(x) = n!/(k+n)! · (1−x²)^{k/2} / 2^k · P_n^{(k,k)}(x)
    for k in 0..3u32 {
        for n in 0..5usize {
            for &x in &[-0.7f64, -0.2, 0.4, 0.8] {
                let kf = k as f64;
                let nf = n as f64;
                let pref = gamma(nf + 1.0).unwrap() / gamma(kf + nf + 1.0).unwrap() * (1.0 - x * x).powf(kf / 2.0) / 2f64.powf(kf);
                let want = pref * jacobi_p(n, kf, kf, x).unwrap();
                let got = ferrers_p(kf + nf, k, x).unwrap();
                assert!((got - want).abs() <= 1e-10 * want.abs().max(1e-3), "k={k} n={n} x={x}: {got} vs {want}");
            }
        }
    }
}

#[test]
fn chebyshev_from_jacobi() {
    let x = 0.3;
    let t3 = chebyshev_t(3, x);
    assert_relative_eq!(t3, -0.792, max_relative = 1e-14);
    let ratio = gamma(4.0).unwrap() * std::f64::consts::PI.sqrt() / gamma(3.5).unwrap();
    assert_relative_eq!(ratio * jacobi_p(3, -0.5, -0.5, x).unwrap(), t3, max_relative = 1e-13);
    let u4 = chebyshev_u(4, x);
    let ratio_u = gamma(6.0).unwrap() * std::f64::consts::PI.sqrt() / (2.0 * gamma(5.5).unwrap());
    assert_relative_eq!(ratio_u * jacobi_p(4, 0.5, 0.5, x).unwrap(), u4, max_relative = 1e-13);
}
