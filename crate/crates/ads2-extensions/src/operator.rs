use ads2_quad::{Point, Spinor};

/// 𝔻Φ = (−Φ²′ + M sec ρ Φ², Φ¹′ + M sec ρ Φ¹), so that 𝔻Φ = ωΦ is the
/// spatial Dirac system.
pub fn dirac_apply(m: f64, phi: &Spinor, dphi: &Spinor, p: &Point) -> Spinor {
    let sec = 1.0 / p.cos();
    [-dphi[1] + m * sec * phi[1], dphi[0] + m * sec * phi[0]]
}
