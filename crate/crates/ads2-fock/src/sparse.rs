//! Column-sparse complex matrices, enough for fermionic operator algebra.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Sub};

use num_complex::Complex64;

#[derive(Debug, Clone, PartialEq)]
pub struct SparseOp {
    dim: usize,
    cols: Vec<Vec<(usize, Complex64)>>,
}

fn pack(map: BTreeMap<usize, Complex64>) -> Vec<(usize, Complex64)> {
    map.into_iter().filter(|(_, z)| *z != Complex64::new(0.0, 0.0)).collect()
}

impl SparseOp {
    pub fn zero(dim: usize) -> Self {
        Self { dim, cols: vec![Vec::new(); dim] }
    }

    pub fn identity(dim: usize) -> Self {
        Self::diagonal(&vec![1.0; dim])
    }

    pub fn diagonal(d: &[f64]) -> Self {
        Self { dim: d.len(), cols: d.iter().enumerate().map(|(i, &x)| vec![(i, Complex64::new(x, 0.0))]).collect() }
    }

    /// Builds the matrix column by column from the image of each basis state.
    pub fn from_columns<F>(dim: usize, mut f: F) -> Self
    where
        F: FnMut(usize) -> Vec<(usize, Complex64)>,
    {
        let cols = (0..dim)
            .map(|j| {
                let mut m = BTreeMap::new();
                for (i, z) in f(j) {
                    *m.entry(i).or_insert(Complex64::new(0.0, 0.0)) += z;
                }
                pack(m)
            })
            .collect();
        Self { dim, cols }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn column(&self, j: usize) -> &[(usize, Complex64)] {
        &self.cols[j]
    }

    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.cols[j].iter().find(|e| e.0 == i).map_or(Complex64::new(0.0, 0.0), |e| e.1)
    }

    pub fn apply(&self, v: &[Complex64]) -> Vec<Complex64> {
        let mut out = vec![Complex64::new(0.0, 0.0); self.dim];
        for (j, x) in v.iter().enumerate().filter(|(_, x)| x.norm_sqr() > 0.0) {
            for &(i, z) in &self.cols[j] {
                out[i] += z * x;
            }
        }
        out
    }

    pub fn scale(&self, s: Complex64) -> Self {
        Self { dim: self.dim, cols: self.cols.iter().map(|c| c.iter().map(|&(i, z)| (i, z * s)).collect()).collect() }
    }

    pub fn adjoint(&self) -> Self {
        let mut cols = vec![Vec::new(); self.dim];
        for (j, c) in self.cols.iter().enumerate() {
            for &(i, z) in c {
                cols[i].push((j, z.conj()));
            }
        }
        cols.iter_mut().for_each(|c| c.sort_by_key(|e| e.0));
        Self { dim: self.dim, cols }
    }

    pub fn commutator(&self, other: &Self) -> Self {
        &(self * other) - &(other * self)
    }

    pub fn anticommutator(&self, other: &Self) -> Self {
        &(self * other) + &(other * self)
    }

    /// Largest entry modulus in column j.
    pub fn column_max_abs(&self, j: usize) -> f64 {
        self.cols[j].iter().map(|e| e.1.norm()).fold(0.0, f64::max)
    }

    pub fn max_abs(&self) -> f64 {
        (0..self.dim).map(|j| self.column_max_abs(j)).fold(0.0, f64::max)
    }

    pub fn is_diagonal(&self) -> bool {
        self.cols.iter().enumerate().all(|(j, c)| c.iter().all(|e| e.0 == j))
    }

    pub fn nonzeros(&self) -> usize {
        self.cols.iter().map(Vec::len).sum()
    }
}

fn combine(a: &SparseOp, b: &SparseOp, sign: f64) -> SparseOp {
    assert_eq!(a.dim, b.dim, "dimension mismatch");
    SparseOp::from_columns(a.dim, |j| {
        a.cols[j].iter().copied().chain(b.cols[j].iter().map(|&(i, z)| (i, z * sign))).collect()
    })
}

impl Add for &SparseOp {
    type Output = SparseOp;
    fn add(self, rhs: &SparseOp) -> SparseOp {
        combine(self, rhs, 1.0)
    }
}

impl Sub for &SparseOp {
    type Output = SparseOp;
    fn sub(self, rhs: &SparseOp) -> SparseOp {
        combine(self, rhs, -1.0)
    }
}

impl Mul for &SparseOp {
    type Output = SparseOp;
    fn mul(self, rhs: &SparseOp) -> SparseOp {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        SparseOp::from_columns(self.dim, |j| {
            rhs.cols[j].iter().flat_map(|&(k, y)| self.cols[k].iter().map(move |&(i, x)| (i, x * y))).collect()
        })
    }
}
