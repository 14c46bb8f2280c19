//! Ferrers functions P_ν^{−k}(x), Q_ν^{−k}(x) on the cut −1 < x < 1 for
//! integer order −k and real or complex degree ν.
//!
//! P comes from its hypergeometric series in u = (1 − x)/2. Q at integer
//! order is the μ → −k limit of
//!   Q_ν^μ = π/(2 sin μπ) (cos μπ P_ν^μ − Γ(ν+μ+1)/Γ(ν−μ+1) P_ν^{−μ}),
//! carried out term by term: the μ-derivatives of the two series bring in
//! ψ/Γ at integer arguments, with ψ/Γ(−m) = (−1)^{m+1} m!. For x < −1/2
//! the connection formulas map the evaluation to −x.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Result, SpecError};
use crate::gamma::{cospi_c, digamma_c, sinpi_c, EULER_GAMMA};

const MAX_TERMS: usize = 10_000;
const TOL: f64 = 1e-17;

/// (P_ν^{−k}(x), Q_ν^{−k}(x)) with the complements 1 − x and 1 + x
/// supplied by the caller for endpoint accuracy.
pub fn ferrers_pq_c(nu: Complex64, k: u32, x: f64, omx: f64, opx: f64) -> Result<(Complex64, Complex64)> {
    if !(x > -1.0 && x < 1.0) || omx <= 0.0 || opx <= 0.0 {
        return Err(SpecError::Domain { x, domain: "(-1, 1)" });
    }
    if x < -0.5 {
        let (p, q) = ferrers_pq_direct(nu, k, opx, omx)?;
        let theta = nu - k as f64;
        let (c, s) = (cospi_c(theta), sinpi_c(theta));
        Ok((c * p - (2.0 / PI) * s * q, -c * q - (PI / 2.0) * s * p))
    } else {
        ferrers_pq_direct(nu, k, omx, opx)
    }
}

fn ferrers_pq_direct(nu: Complex64, k: u32, omx: f64, opx: f64) -> Result<(Complex64, Complex64)> {
    let kf = k as f64;
    let ku = k as usize;
    let u = 0.5 * omx;
    let lnr = opx.ln() - omx.ln();
    let r_half = (0.5 * kf * lnr).exp(); // r^{k/2}
    let zero = Complex64::new(0.0, 0.0);

    let (mut s_pm, mut s_pm_psi, mut s_pk, mut s_minus) = (zero, zero, zero, zero);
    let mut a = Complex64::new(1.0, 0.0); // (ν+1)_n (−ν)_n / n!
    let mut un = 1.0;
    let mut inv_fact_kn = (1..=ku).fold(1.0, |acc, i| acc / i as f64); // 1/(k+n)!
    let mut harmonic_kn: f64 = (1..=ku).map(|i| 1.0 / i as f64).sum(); // H_{k+n}
    let mut inv_fact_nk = 1.0; // 1/(n−k)! once n ≥ k
    let mut harmonic_nk = 0.0; // H_{n−k}
    let mut peak = 0.0_f64;
    let hump = nu.norm() + kf + 2.0;

    let mut converged = false;
    for n in 0..MAX_TERMS {
        let nf = n as f64;
        let w = a * un;
        let t_pm = w * inv_fact_kn;
        s_pm += t_pm;
        s_pm_psi += t_pm * (harmonic_kn - EULER_GAMMA);
        let t_minus = if n + 1 <= ku {
            // ψ/Γ at the non-positive integer 1 − k + n = −m
            let m = ku - 1 - n;
            let fact: f64 = (1..=m).map(|i| i as f64).product();
            let sign = if (m + 1) % 2 == 0 { 1.0 } else { -1.0 };
            w * (sign * fact)
        } else {
            w * ((harmonic_nk - EULER_GAMMA) * inv_fact_nk)
        };
        s_minus += t_minus;
        let mut t_pk = zero;
        if n >= ku {
            t_pk = w * inv_fact_nk;
            s_pk += t_pk;
        }
        let mag = t_pm.norm().max(t_minus.norm()).max(t_pk.norm());
        peak = peak.max(mag);
        if w.norm() == 0.0 || (nf > hump && mag <= TOL * peak) {
            converged = true;
            break;
        }
        // advance to n + 1
        a *= (nu + 1.0 + nf) * (-nu + nf) / (nf + 1.0);
        un *= u;
        inv_fact_kn /= kf + nf + 1.0;
        harmonic_kn += 1.0 / (kf + nf + 1.0);
        if n + 1 > ku {
            let j = (n + 1 - ku) as f64;
            inv_fact_nk /= j;
            harmonic_nk += 1.0 / j;
        }
    }
    if !converged {
        return Err(SpecError::NonConvergence { terms: MAX_TERMS });
    }

    let p_minus = s_pm / r_half;
    let p_plus = s_pk * r_half;
    let d_p_mu = 0.5 * lnr * p_minus + s_pm_psi / r_half;
    let d_p_minus = -0.5 * lnr * p_plus - s_minus * r_half;

    let mut denom = Complex64::new(1.0, 0.0);
    for i in (1 - k as i64)..=(k as i64) {
        denom *= nu + i as f64;
    }
    if denom.norm() == 0.0 {
        return Err(SpecError::Singular(format!("degree {nu} at order -{k}")));
    }
    let ratio = denom.inv();
    let psi_sum = digamma_c(nu - kf + 1.0).and_then(|a| digamma_c(nu + kf + 1.0).map(|b| a + b));
    let psi_sum = psi_sum.map_err(|_| SpecError::Singular(format!("degree {nu} at order -{k}")))?;
    let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
    let q = 0.5 * sign * (sign * d_p_mu - ratio * psi_sum * p_plus - ratio * d_p_minus);
    Ok((p_minus, q))
}

pub fn ferrers_p_c(nu: Complex64, k: u32, x: f64) -> Result<Complex64> {
    ferrers_pq_c(nu, k, x, 1.0 - x, 1.0 + x).map(|(p, _)| p)
}

pub fn ferrers_q_c(nu: Complex64, k: u32, x: f64) -> Result<Complex64> {
    ferrers_pq_c(nu, k, x, 1.0 - x, 1.0 + x).map(|(_, q)| q)
}

/// P_ω^{−k}(x) for real degree ω.
pub fn ferrers_p(omega: f64, k: u32, x: f64) -> Result<f64> {
    ferrers_p_c(Complex64::new(omega, 0.0), k, x).map(|v| v.re)
}

/// Q_ω^{−k}(x) for real degree ω.
pub fn ferrers_q(omega: f64, k: u32, x: f64) -> Result<f64> {
    ferrers_q_c(Complex64::new(omega, 0.0), k, x).map(|v| v.re)
}
