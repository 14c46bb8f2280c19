use num_complex::Complex64;
use thiserror::Error;

use crate::matrix::{gamma0, gamma1, sigma01, Spinor, SpinorMatrix};

const I: Complex64 = Complex64::new(0.0, 1.0);

#[derive(Debug, Clone, PartialEq, Error)]
pub enum AlgebraError {
    #[error("evaluation grid is not symmetric about rho = 0 (mismatch {0:e})")]
    AsymmetricGrid(f64),
    #[error("grid has {grid} points but {values} values were supplied")]
    LengthMismatch { grid: usize, values: usize },
}

/// Φᶜ = C(γ⁰)ᵀ conj(Φ) = −γ¹ conj(Φ).
pub fn charge_conjugate(phi: &Spinor) -> Spinor {
    let c = [phi[0].conj(), phi[1].conj()];
    (-gamma1()).apply(&c)
}

/// iγ⁰ applied to the value Φ(−ρ).
pub fn parity_at(phi_at_minus_rho: &Spinor) -> Spinor {
    gamma0().scale(I).apply(phi_at_minus_rho)
}

/// (𝕡Φ)(ρ) = iγ⁰Φ(−ρ) on a grid symmetric about the origin.
pub fn parity(grid: &[f64], values: &[Spinor]) -> Result<Vec<Spinor>, AlgebraError> {
    if grid.len() != values.len() {
        return Err(AlgebraError::LengthMismatch { grid: grid.len(), values: values.len() });
    }
    let n = grid.len();
    let mismatch = (0..n).map(|i| (grid[i] + grid[n - 1 - i]).abs()).fold(0.0, f64::max);
    if mismatch > 1e-12 {
        return Err(AlgebraError::AsymmetricGrid(mismatch));
    }
    Ok((0..n).map(|i| parity_at(&values[n - 1 - i])).collect())
}

/// R(θ) = exp(−2iθΣ⁰¹), the real rotation [[cos θ, sin θ], [−sin θ, cos θ]].
pub fn rotation(theta: f64) -> SpinorMatrix {
    let (s, c) = theta.sin_cos();
    SpinorMatrix::real(c, s, -s, c)
}

pub fn chiral_rotation(theta: f64, phi: &Spinor) -> Spinor {
    rotation(theta).apply(phi)
}

/// iΣ⁰¹Φ, which maps a mass-M solution to a mass −M solution.
pub fn mass_flip(phi: &Spinor) -> Spinor {
    sigma01().scale(I).apply(phi)
}

/// Spatial part of L±[Φ e^{−iωt}]:
/// ±i[cos ρ Φ′ − (½ ± ω) sin ρ Φ ∓ i cos ρ Σ⁰¹Φ].
pub fn ladder_action(sign: f64, omega: Complex64, rho: f64, phi: &Spinor, dphi: &Spinor) -> Spinor {
    ladder_action_sc(sign, omega, rho.sin_cos(), phi, dphi)
}

/// Same as [`ladder_action`] with (sin ρ, cos ρ) supplied by the caller,
/// for points where cos ρ must keep full relative precision.
pub fn ladder_action_sc(sign: f64, omega: Complex64, (s, c): (f64, f64), phi: &Spinor, dphi: &Spinor) -> Spinor {
    let sig = sigma01().apply(phi);
    let w = 0.5 + sign * omega;
    let pre = sign * I;
    let comp = |k: usize| pre * (c * dphi[k] - w * s * phi[k] - sign * I * c * sig[k]);
    [comp(0), comp(1)]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rotation_composes() {
        let a = rotation(0.3) * rotation(1.1);
        assert!((a - rotation(1.4)).max_abs() < 1e-15);
    }
}
