//! Self-adjoint boundary conditions
//!   (I − U)(Φ̃²(π/2), Φ̃²(−π/2))ᵀ = i(I + U)(Φ̃¹(π/2), −Φ̃¹(−π/2))ᵀ
//! for a 2×2 unitary U acting on boundary data.

use std::f64::consts::FRAC_PI_2;
use std::fmt;

use ads2_algebra::{identity, SpinorMatrix};
use ads2_modes::{BoundaryData, Family};
use ads2_quad::Spinor;
use num_complex::Complex64;

use crate::error::{ExtError, Result};

const I: Complex64 = Complex64 { re: 0.0, im: 1.0 };

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum BcTag {
    DirichletI,
    DirichletII,
    DirichletIII,
    DirichletIV,
    Diagonal { beta_plus: f64, beta_minus: f64 },
}

impl BcTag {
    pub fn matrix(&self) -> SpinorMatrix {
        match *self {
            BcTag::DirichletI => SpinorMatrix::real(-1.0, 0.0, 0.0, 1.0),
            BcTag::DirichletII => SpinorMatrix::real(1.0, 0.0, 0.0, -1.0),
            BcTag::DirichletIII => identity(),
            BcTag::DirichletIV => -identity(),
            BcTag::Diagonal { beta_plus, beta_minus } => {
                SpinorMatrix::diag(Complex64::from_polar(1.0, 2.0 * beta_plus), Complex64::from_polar(1.0, 2.0 * beta_minus))
            }
        }
    }

    /// The mode family solving this condition, if it has one at mass `m`.
    pub fn family(&self, m: f64) -> Option<Family> {
        match *self {
            BcTag::DirichletI => Some(Family::DirichletI),
            BcTag::DirichletII if m < 0.5 => Some(Family::DirichletII),
            BcTag::DirichletIII if m < 0.5 => Some(Family::DirichletIII),
            BcTag::DirichletIV if m < 0.5 => Some(Family::DirichletIV),
            BcTag::Diagonal { beta_plus, beta_minus } if m == 0.0 => Some(Family::MasslessBeta { beta_plus, beta_minus }),
            _ => None,
        }
    }

    /// The massless angles (β₊, β₋) of a named condition.
    pub fn betas(&self) -> (f64, f64) {
        match *self {
            BcTag::DirichletI => (FRAC_PI_2, 0.0),
            BcTag::DirichletII => (0.0, FRAC_PI_2),
            BcTag::DirichletIII => (0.0, 0.0),
            BcTag::DirichletIV => (FRAC_PI_2, FRAC_PI_2),
            BcTag::Diagonal { beta_plus, beta_minus } => (beta_plus, beta_minus),
        }
    }
}

impl fmt::Display for BcTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BcTag::Diagonal { beta_plus, beta_minus } => write!(f, "Diagonal({beta_plus}, {beta_minus})"),
            other => write!(f, "{other:?}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundaryCondition {
    pub u: SpinorMatrix,
    pub tag: Option<BcTag>,
}

pub const UNITARITY_TOL: f64 = 1e-12;

impl BoundaryCondition {
    pub fn named(tag: BcTag) -> Self {
        Self { u: tag.matrix(), tag: Some(tag) }
    }

    pub fn from_matrix(u: SpinorMatrix) -> Result<Self> {
        let defect = u.unitarity_defect();
        if !(defect <= UNITARITY_TOL) {
            return Err(ExtError::NotUnitary(defect));
        }
        Ok(Self { u, tag: None })
    }

    pub fn is_diagonal(&self) -> bool {
        self.u.is_diagonal(UNITARITY_TOL)
    }

    pub fn label(&self) -> String {
        match self.tag {
            Some(t) => t.to_string(),
            None => format!("U = {:?}", self.u.0),
        }
    }

    /// Row form of the condition: K·d = 0 for d = (Φ̃¹₊, Φ̃²₊, Φ̃¹₋, Φ̃²₋).
    pub fn rows(&self) -> [[Complex64; 4]; 2] {
        let u = &self.u;
        let one = Complex64::new(1.0, 0.0);
        let id = |i: usize, j: usize| if i == j { one } else { Complex64::new(0.0, 0.0) };
        let mut k = [[Complex64::new(0.0, 0.0); 4]; 2];
        for (i, row) in k.iter_mut().enumerate() {
            // (I − U) acts on (Φ̃²₊, Φ̃²₋); −i(I + U) on (Φ̃¹₊, −Φ̃¹₋)
            row[1] = id(i, 0) - u.get(i, 0);
            row[3] = id(i, 1) - u.get(i, 1);
            row[0] = -I * (id(i, 0) + u.get(i, 0));
            row[2] = I * (id(i, 1) + u.get(i, 1));
        }
        k
    }

    /// Two boundary-data vectors spanning the solutions of the condition,
    /// from φ₂ = Uφ₁ with φ₁ running over the unit vectors.
    pub fn data_basis(&self) -> [BoundaryData; 2] {
        let mut out = [BoundaryData { values: [Complex64::new(0.0, 0.0); 4] }; 2];
        for (j, d) in out.iter_mut().enumerate() {
            let phi1: Spinor = if j == 0 { [Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0)] } else { [Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0)] };
            let phi2 = self.u.apply(&phi1);
            // φ₁ = (Φ̃²₊ + iΦ̃¹₊, Φ̃²₋ − iΦ̃¹₋), φ₂ = (Φ̃²₊ − iΦ̃¹₊, Φ̃²₋ + iΦ̃¹₋)
            d.values = [
                (phi1[0] - phi2[0]) / (2.0 * I),
                (phi1[0] + phi2[0]) / 2.0,
                -(phi1[1] - phi2[1]) / (2.0 * I),
                (phi1[1] + phi2[1]) / 2.0,
            ];
        }
        out
    }
}

/// (I − U)(Φ̃²₊, Φ̃²₋)ᵀ − i(I + U)(Φ̃¹₊, −Φ̃¹₋)ᵀ
pub fn boundary_residual(bc: &BoundaryCondition, data: &BoundaryData) -> Spinor {
    let lhs = (identity() - bc.u).apply(&[data.values[1], data.values[3]]);
    let rhs = (identity() + bc.u).apply(&[data.values[0], -data.values[2]]);
    [lhs[0] - I * rhs[0], lhs[1] - I * rhs[1]]
}

/// The boundary term of ⟨𝔻Φ_a, Φ_b⟩ − ⟨Φ_a, 𝔻Φ_b⟩ in terms of boundary data.
pub fn boundary_form(a: &BoundaryData, b: &BoundaryData) -> Complex64 {
    let [a1p, a2p, a1m, a2m] = a.values;
    let [b1p, b2p, b1m, b2m] = b.values;
    (a1p.conj() * b2p - a2p.conj() * b1p) - (a1m.conj() * b2m - a2m.conj() * b1m)
}
