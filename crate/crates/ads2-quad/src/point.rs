use std::f64::consts::FRAC_PI_2;

/// A point of (−π/2, π/2) carrying both endpoint distances, so that
/// quantities like 1 − sin ρ keep full relative accuracy near ρ = π/2.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Point {
    pub rho: f64,
    /// π/2 − ρ
    pub eps_plus: f64,
    /// ρ + π/2
    pub eps_minus: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Endpoint {
    Plus,
    Minus,
}

impl Endpoint {
    pub fn sign(self) -> f64 {
        match self {
            Endpoint::Plus => 1.0,
            Endpoint::Minus => -1.0,
        }
    }
}

impl Point {
    pub fn from_rho(rho: f64) -> Self {
        Self { rho, eps_plus: FRAC_PI_2 - rho, eps_minus: rho + FRAC_PI_2 }
    }

    /// The point at distance `eps` from the given endpoint.
    pub fn near(endpoint: Endpoint, eps: f64) -> Self {
        match endpoint {
            Endpoint::Plus => Self { rho: FRAC_PI_2 - eps, eps_plus: eps, eps_minus: std::f64::consts::PI - eps },
            Endpoint::Minus => Self { rho: eps - FRAC_PI_2, eps_plus: std::f64::consts::PI - eps, eps_minus: eps },
        }
    }

    pub fn sin(&self) -> f64 {
        if self.eps_plus < self.eps_minus {
            self.eps_plus.cos()
        } else {
            -self.eps_minus.cos()
        }
    }

    pub fn cos(&self) -> f64 {
        self.eps_plus.min(self.eps_minus).sin()
    }

    /// 1 − sin ρ = 2 sin²(ε₊/2)
    pub fn one_minus_sin(&self) -> f64 {
        2.0 * (0.5 * self.eps_plus).sin().powi(2)
    }

    /// 1 + sin ρ = 2 sin²(ε₋/2)
    pub fn one_plus_sin(&self) -> f64 {
        2.0 * (0.5 * self.eps_minus).sin().powi(2)
    }

    /// x = (1 − sin ρ)/2
    pub fn x(&self) -> f64 {
        (0.5 * self.eps_plus).sin().powi(2)
    }

    /// 1 − x = (1 + sin ρ)/2
    pub fn one_minus_x(&self) -> f64 {
        (0.5 * self.eps_minus).sin().powi(2)
    }

    /// σ = ((1 − sin ρ)/(1 + sin ρ))^{1/2}
    pub fn sigma(&self) -> f64 {
        (0.5 * self.eps_plus).sin().abs() / (0.5 * self.eps_minus).sin().abs()
    }

    /// ln σ, finite wherever the point is interior.
    pub fn ln_sigma(&self) -> f64 {
        (0.5 * self.eps_plus).sin().abs().ln() - (0.5 * self.eps_minus).sin().abs().ln()
    }

    pub fn distance(&self, endpoint: Endpoint) -> f64 {
        match endpoint {
            Endpoint::Plus => self.eps_plus,
            Endpoint::Minus => self.eps_minus,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complements_are_accurate() {
        let p = Point::near(Endpoint::Plus, 1e-9);
        assert!((p.one_minus_sin() / 0.5e-18 - 1.0).abs() < 1e-12);
        assert!((p.cos() - 1e-9).abs() < 1e-24);
        let q = Point::near(Endpoint::Minus, 1e-9);
        assert!((q.one_plus_sin() / 0.5e-18 - 1.0).abs() < 1e-12);
        assert!((q.sigma() * 0.5e-9 - 1.0).abs() < 1e-9);
    }

    #[test]
    fn interior_consistency() {
        let p = Point::from_rho(0.3);
        assert!((p.sin() - 0.3f64.sin()).abs() < 1e-15);
        assert!((p.one_minus_sin() - (1.0 - 0.3f64.sin())).abs() < 1e-15);
        assert!((p.x() + p.one_minus_x() - 1.0).abs() < 1e-15);
    }
}
