//! Killing fields ξ₀, ξ₁, ξ₂ of AdS₂ and their spinorial Lie derivatives
//! 𝓛_ξ = a ∂_t + b ∂_ρ + c Σ⁰¹. Composition is evaluated on spinor jets so
//! commutators can be checked without finite differences.

use num_complex::Complex64;

use crate::matrix::{sigma01, Spinor};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KillingField {
    Xi0,
    Xi1,
    Xi2,
}

/// Coefficients (a, b, c) of 𝓛_ξ and their t- and ρ-derivatives.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LieCoefficients {
    pub value: [f64; 3],
    pub d_t: [f64; 3],
    pub d_rho: [f64; 3],
}

impl KillingField {
    pub fn coefficients(self, t: f64, rho: f64) -> LieCoefficients {
        let (st, ct) = t.sin_cos();
        let (sr, cr) = rho.sin_cos();
        match self {
            KillingField::Xi0 => LieCoefficients { value: [1.0, 0.0, 0.0], d_t: [0.0; 3], d_rho: [0.0; 3] },
            KillingField::Xi1 => LieCoefficients {
                value: [ct * sr, st * cr, ct * cr],
                d_t: [-st * sr, ct * cr, -st * cr],
                d_rho: [ct * cr, -st * sr, -ct * sr],
            },
            KillingField::Xi2 => LieCoefficients {
                value: [-st * sr, ct * cr, -st * cr],
                d_t: [-ct * sr, -st * cr, -ct * cr],
                d_rho: [-st * cr, -ct * sr, st * sr],
            },
        }
    }
}

/// Value and first partial derivatives of a spinor field at a point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FirstJet {
    pub value: Spinor,
    pub d_t: Spinor,
    pub d_rho: Spinor,
}

/// Value, first and second partial derivatives of a spinor field.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SecondJet {
    pub value: Spinor,
    pub d_t: Spinor,
    pub d_rho: Spinor,
    pub d_tt: Spinor,
    pub d_trho: Spinor,
    pub d_rhorho: Spinor,
}

fn combo(terms: &[(f64, Spinor)]) -> Spinor {
    let mut out = [Complex64::new(0.0, 0.0); 2];
    for (w, v) in terms {
        out[0] += *w * v[0];
        out[1] += *w * v[1];
    }
    out
}

pub fn lie_derivative(field: KillingField, t: f64, rho: f64, psi: &FirstJet) -> Spinor {
    let k = field.coefficients(t, rho);
    let s = sigma01();
    combo(&[(k.value[0], psi.d_t), (k.value[1], psi.d_rho), (k.value[2], s.apply(&psi.value))])
}

/// 𝓛_ξψ together with its first partial derivatives.
pub fn lie_derivative_jet(field: KillingField, t: f64, rho: f64, psi: &SecondJet) -> FirstJet {
    let k = field.coefficients(t, rho);
    let s = sigma01();
    let value = combo(&[(k.value[0], psi.d_t), (k.value[1], psi.d_rho), (k.value[2], s.apply(&psi.value))]);
    let d_t = combo(&[
        (k.d_t[0], psi.d_t),
        (k.value[0], psi.d_tt),
        (k.d_t[1], psi.d_rho),
        (k.value[1], psi.d_trho),
        (k.d_t[2], s.apply(&psi.value)),
        (k.value[2], s.apply(&psi.d_t)),
    ]);
    let d_rho = combo(&[
        (k.d_rho[0], psi.d_t),
        (k.value[0], psi.d_trho),
        (k.d_rho[1], psi.d_rho),
        (k.value[1], psi.d_rhorho),
        (k.d_rho[2], s.apply(&psi.value)),
        (k.value[2], s.apply(&psi.d_rho)),
    ]);
    FirstJet { value, d_t, d_rho }
}

/// [𝓛_a, 𝓛_b]ψ at a point.
pub fn commutator_jet(a: KillingField, b: KillingField, t: f64, rho: f64, psi: &SecondJet) -> Spinor {
    let ab = lie_derivative(a, t, rho, &lie_derivative_jet(b, t, rho, psi));
    let ba = lie_derivative(b, t, rho, &lie_derivative_jet(a, t, rho, psi));
    [ab[0] - ba[0], ab[1] - ba[1]]
}
