use serde::{Deserialize, Serialize};

use crate::error::{ModeError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum MassRegime {
    Massless,
    /// 0 < M < 1/2
    Low,
    /// M > 1/2 with M − 1/2 not an integer
    Generic,
    /// M = k + 1/2
    HalfInteger { k: u32 },
}

impl MassRegime {
    pub fn of(m: f64) -> Result<Self> {
        if !(m >= 0.0) || !m.is_finite() {
            return Err(ModeError::Regime { m, what: "a mass regime (M must be finite and non-negative)".into() });
        }
        Ok(if m == 0.0 {
            MassRegime::Massless
        } else if m < 0.5 {
            MassRegime::Low
        } else if let Some(k) = half_integer_order(m) {
            MassRegime::HalfInteger { k }
        } else {
            MassRegime::Generic
        })
    }

    /// Whether the two-parameter family of self-adjoint extensions exists.
    pub fn has_boundary_freedom(self) -> bool {
        matches!(self, MassRegime::Massless | MassRegime::Low)
    }
}

/// k with M = k + 1/2, if M is a half-integer.
pub fn half_integer_order(m: f64) -> Option<u32> {
    let k = m - 0.5;
    if k >= 0.0 && k == k.round() && k < u32::MAX as f64 {
        Some(k as u32)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn boundaries_are_exact() {
        assert_eq!(MassRegime::of(0.0).unwrap(), MassRegime::Massless);
        assert_eq!(MassRegime::of(0.4999999).unwrap(), MassRegime::Low);
        assert_eq!(MassRegime::of(0.5).unwrap(), MassRegime::HalfInteger { k: 0 });
        assert_eq!(MassRegime::of(0.5000001).unwrap(), MassRegime::Generic);
        assert_eq!(MassRegime::of(2.5).unwrap(), MassRegime::HalfInteger { k: 2 });
        assert!(MassRegime::of(-0.1).is_err());
        assert!(MassRegime::of(f64::NAN).is_err());
    }
}
