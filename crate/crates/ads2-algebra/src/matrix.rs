use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

pub type Spinor = [Complex64; 2];

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);
const I: Complex64 = Complex64::new(0.0, 1.0);

/// Complex 2×2 matrix, row-major.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpinorMatrix(pub [[Complex64; 2]; 2]);

impl SpinorMatrix {
    pub fn new(a: Complex64, b: Complex64, c: Complex64, d: Complex64) -> Self {
        Self([[a, b], [c, d]])
    }

    pub fn real(a: f64, b: f64, c: f64, d: f64) -> Self {
        Self::new(a.into(), b.into(), c.into(), d.into())
    }

    pub fn diag(a: Complex64, d: Complex64) -> Self {
        Self::new(a, ZERO, ZERO, d)
    }

    pub fn zero() -> Self {
        Self::diag(ZERO, ZERO)
    }

    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.0[i][j]
    }

    pub fn adjoint(&self) -> Self {
        let m = &self.0;
        Self::new(m[0][0].conj(), m[1][0].conj(), m[0][1].conj(), m[1][1].conj())
    }

    pub fn transpose(&self) -> Self {
        let m = &self.0;
        Self::new(m[0][0], m[1][0], m[0][1], m[1][1])
    }

    pub fn conj(&self) -> Self {
        let m = &self.0;
        Self::new(m[0][0].conj(), m[0][1].conj(), m[1][0].conj(), m[1][1].conj())
    }

    pub fn det(&self) -> Complex64 {
        let m = &self.0;
        m[0][0] * m[1][1] - m[0][1] * m[1][0]
    }

    pub fn trace(&self) -> Complex64 {
        self.0[0][0] + self.0[1][1]
    }

    pub fn inverse(&self) -> Option<Self> {
        let d = self.det();
        if d.norm() == 0.0 {
            return None;
        }
        let m = &self.0;
        Some(Self::new(m[1][1] / d, -m[0][1] / d, -m[1][0] / d, m[0][0] / d))
    }

    pub fn scale(&self, s: Complex64) -> Self {
        let m = &self.0;
        Self::new(s * m[0][0], s * m[0][1], s * m[1][0], s * m[1][1])
    }

    pub fn apply(&self, v: &Spinor) -> Spinor {
        let m = &self.0;
        [m[0][0] * v[0] + m[0][1] * v[1], m[1][0] * v[0] + m[1][1] * v[1]]
    }

    /// Largest entry modulus.
    pub fn max_abs(&self) -> f64 {
        self.0.iter().flatten().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn is_diagonal(&self, tol: f64) -> bool {
        self.0[0][1].norm() <= tol && self.0[1][0].norm() <= tol
    }

    /// Max-norm deviation of U†U from the identity.
    pub fn unitarity_defect(&self) -> f64 {
        (self.adjoint() * *self - identity()).max_abs()
    }

    pub fn commutator(&self, other: &Self) -> Self {
        *self * *other - *other * *self
    }

    pub fn anticommutator(&self, other: &Self) -> Self {
        *self * *other + *other * *self
    }
}

impl Add for SpinorMatrix {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        let (a, b) = (self.0, o.0);
        Self::new(a[0][0] + b[0][0], a[0][1] + b[0][1], a[1][0] + b[1][0], a[1][1] + b[1][1])
    }
}

impl Sub for SpinorMatrix {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self + (-o)
    }
}

impl Neg for SpinorMatrix {
    type Output = Self;
    fn neg(self) -> Self {
        self.scale(-ONE)
    }
}

impl Mul for SpinorMatrix {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        let (a, b) = (self.0, o.0);
        let e = |i: usize, j: usize| a[i][0] * b[0][j] + a[i][1] * b[1][j];
        Self::new(e(0, 0), e(0, 1), e(1, 0), e(1, 1))
    }
}

pub fn identity() -> SpinorMatrix {
    SpinorMatrix::diag(ONE, ONE)
}

pub fn gamma0() -> SpinorMatrix {
    SpinorMatrix::new(ZERO, I, I, ZERO)
}

pub fn gamma1() -> SpinorMatrix {
    SpinorMatrix::real(-1.0, 0.0, 0.0, 1.0)
}

/// Σ⁰¹ = [γ⁰, γ¹]/4.
pub fn sigma01() -> SpinorMatrix {
    SpinorMatrix::new(ZERO, 0.5 * I, -0.5 * I, ZERO)
}

/// C = 2zΣ⁰¹ with the phase z = −1.
pub fn charge_conjugation_matrix() -> SpinorMatrix {
    sigma01().scale((-2.0).into())
}
