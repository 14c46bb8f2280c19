use crate::error::{Result, SpecError};

/// Explicit finite sum, used where the recurrence has a vanishing leading
/// coefficient (a + b a negative integer).
fn jacobi_explicit(n: usize, a: f64, b: f64, x: f64) -> f64 {
    // P_n = Σ_s C(n+a, n−s) C(n+b, s) ((x−1)/2)^s ((x+1)/2)^{n−s}
    let binom = |top: f64, m: usize| -> f64 {
        let mut v = 1.0;
        for i in 1..=m {
            v *= (top - m as f64 + i as f64) / i as f64;
        }
        v
    };
    let xm = 0.5 * (x - 1.0);
    let xp = 0.5 * (x + 1.0);
    let nf = n as f64;
    (0..=n)
        .map(|s| binom(nf + a, n - s) * binom(nf + b, s) * xm.powi(s as i32) * xp.powi((n - s) as i32))
        .sum()
}

/// P_n^{(a,b)}(x) by the three-term recurrence; `n < 0` is encoded by the
/// caller as the zero polynomial.
pub fn jacobi_eval(n: usize, a: f64, b: f64, x: f64) -> f64 {
    if n == 0 {
        return 1.0;
    }
    let p1 = 0.5 * (a - b) + 0.5 * (a + b + 2.0) * x;
    if n == 1 {
        return p1;
    }
    let ab = a + b;
    let (mut pm2, mut pm1) = (1.0, p1);
    for k in 2..=n {
        let kf = k as f64;
        let c0 = 2.0 * kf * (kf + ab) * (2.0 * kf + ab - 2.0);
        if c0 == 0.0 {
            return jacobi_explicit(n, a, b, x);
        }
        let c1 = (2.0 * kf + ab - 1.0) * ((2.0 * kf + ab) * (2.0 * kf + ab - 2.0) * x + a * a - b * b);
        let c2 = 2.0 * (kf + a - 1.0) * (kf + b - 1.0) * (2.0 * kf + ab);
        let p = (c1 * pm1 - c2 * pm2) / c0;
        pm2 = pm1;
        pm1 = p;
    }
    pm1
}

/// d/dx P_n^{(a,b)}(x) = (n + a + b + 1)/2 · P_{n−1}^{(a+1,b+1)}(x).
pub fn jacobi_deriv_eval(n: usize, a: f64, b: f64, x: f64) -> f64 {
    if n == 0 {
        return 0.0;
    }
    0.5 * (n as f64 + a + b + 1.0) * jacobi_eval(n - 1, a + 1.0, b + 1.0, x)
}

fn check_domain(x: f64) -> Result<()> {
    if (-1.0..=1.0).contains(&x) {
        Ok(())
    } else {
        Err(SpecError::Domain { x, domain: "[-1, 1]" })
    }
}

pub fn jacobi_p(n: usize, a: f64, b: f64, x: f64) -> Result<f64> {
    check_domain(x)?;
    Ok(jacobi_eval(n, a, b, x))
}

pub fn jacobi_p_deriv(n: usize, a: f64, b: f64, x: f64) -> Result<f64> {
    check_domain(x)?;
    Ok(jacobi_deriv_eval(n, a, b, x))
}

pub fn chebyshev_t(n: usize, x: f64) -> f64 {
    let (mut t0, mut t1) = (1.0, x);
    if n == 0 {
        return t0;
    }
    for _ in 1..n {
        let t2 = 2.0 * x * t1 - t0;
        t0 = t1;
        t1 = t2;
    }
    t1
}

pub fn chebyshev_u(n: usize, x: f64) -> f64 {
    let (mut u0, mut u1) = (1.0, 2.0 * x);
    if n == 0 {
        return u0;
    }
    for _ in 1..n {
        let u2 = 2.0 * x * u1 - u0;
        u0 = u1;
        u1 = u2;
    }
    u1
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn low_degrees() {
        assert_eq!(jacobi_eval(0, 0.3, -0.7, 0.2), 1.0);
        assert_relative_eq!(jacobi_eval(1, 0.0, 1.0, 0.0), -0.5);
    }

    #[test]
    fn explicit_sum_matches_recurrence() {
        for n in 0..8 {
            for &(a, b) in &[(0.2, 0.7), (-0.4, 0.9), (1.5, -0.5)] {
                let r = jacobi_eval(n, a, b, 0.37);
                let e = jacobi_explicit(n, a, b, 0.37);
                assert_relative_eq!(r, e, epsilon = 1e-12, max_relative = 1e-12);
            }
        }
    }

    #[test]
    fn degenerate_recurrence_falls_back() {
        // a + b = -2 makes the n = 2 leading coefficient vanish
        let v = jacobi_eval(2, -0.5, -1.5, 0.3);
        assert_relative_eq!(v, jacobi_explicit(2, -0.5, -1.5, 0.3), max_relative = 1e-14);
    }
}
