//! Occupation-number basis with Jordan–Wigner signs, and the quantum charges
//! L̂₀, L̂± of the two non-invariant vacuum constructions.

use std::fmt;

use ads2_modes::Family;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{FockError, Result};
use crate::sparse::SparseOp;

const I: Complex64 = Complex64::new(0.0, 1.0);

/// Particle species: a for positive frequencies (and the zero mode), b for
/// the antiparticles of the negative-frequency tower.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Species {
    A,
    B,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FockMode {
    pub species: Species,
    pub index: usize,
}

impl fmt::Display for FockMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self.species {
            Species::A => 'a',
            Species::B => 'b',
        };
        write!(f, "{s}{}", self.index)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", tag = "kind")]
pub enum FockModel {
    /// Massless field with frequencies j + μ, 0 < μ < 1.
    Massless { mu: f64 },
    /// Dirichlet type III/IV (same charges) with the zero mode a₀.
    ZeroMode { m: f64 },
}

impl FockModel {
    /// Massless model for any μ: μ is taken mod 1 so that ω₀ = μ is the
    /// lowest positive frequency, and μ ≡ 0 becomes the zero-mode model at M = 0.
    pub fn massless(mu: f64) -> Self {
        let r = mu.rem_euclid(1.0);
        if r < 1e-12 || 1.0 - r < 1e-12 {
            FockModel::ZeroMode { m: 0.0 }
        } else {
            FockModel::Massless { mu: r }
        }
    }

    pub fn for_family(family: Family, m: f64) -> Result<Self> {
        match family {
            Family::MasslessBeta { .. } if m == 0.0 => {
                let (beta, _) = family.beta_params().unwrap_or((0.0, 0.0));
                Ok(Self::massless(1.0 - beta))
            }
            Family::DirichletIII | Family::DirichletIV if (0.0..0.5).contains(&m) => Ok(FockModel::ZeroMode { m }),
            _ => Err(FockError::Unsupported { family: family.to_string(), m }),
        }
    }

    /// Weight of the vacuum |0⟩.
    pub fn lambda(&self) -> f64 {
        match *self {
            FockModel::Massless { mu } => 0.5 * (mu - 0.5).powi(2),
            FockModel::ZeroMode { m } => 0.5 * (0.25 - m * m),
        }
    }
}

/// 2N fermionic modes; basis states are bit strings over `modes`.
#[derive(Debug, Clone, PartialEq)]
pub struct TruncatedFock {
    pub model: FockModel,
    pub cutoff: usize,
    pub modes: Vec<FockMode>,
}

impl TruncatedFock {
    /// Massless: a₀..a_{N−1}, b₀..b_{N−1}. Zero-mode: a₀..a_{N−1}, b₁..b_N.
    pub fn new(model: FockModel, cutoff: usize) -> Result<Self> {
        if !(3..=6).contains(&cutoff) {
            return Err(FockError::Cutoff(cutoff));
        }
        if let FockModel::ZeroMode { m } = model {
            if !(0.0..0.5).contains(&m) {
                return Err(FockError::Mass(m));
            }
        }
        let b0 = match model {
            FockModel::Massless { .. } => 0,
            FockModel::ZeroMode { .. } => 1,
        };
        let modes = (0..cutoff)
            .map(|i| FockMode { species: Species::A, index: i })
            .chain((b0..b0 + cutoff).map(|i| FockMode { species: Species::B, index: i }))
            .collect();
        Ok(Self { model, cutoff, modes })
    }

    pub fn dim(&self) -> usize {
        1 << self.modes.len()
    }

    pub fn bit(&self, mode: FockMode) -> Option<usize> {
        self.modes.iter().position(|&m| m == mode)
    }

    fn bit_of(&self, species: Species, index: usize) -> Option<usize> {
        self.bit(FockMode { species, index })
    }

    /// Applies a word of ladder operators (rightmost acts first) to a basis state.
    fn apply_word(word: &[(bool, usize)], mut state: usize) -> Option<(f64, usize)> {
        let mut sign = 1.0;
        for &(dagger, k) in word.iter().rev() {
            let occupied = state >> k & 1 == 1;
            if occupied == dagger {
                return None;
            }
            if (state & ((1 << k) - 1)).count_ones() % 2 == 1 {
                sign = -sign;
            }
            state ^= 1 << k;
        }
        Some((sign, state))
    }

    /// Σ coef · word as a matrix; words with an absent mode are skipped.
    fn operator(&self, terms: &[(Complex64, Vec<Option<(bool, usize)>>)]) -> SparseOp {
        let words: Vec<(Complex64, Vec<(bool, usize)>)> = terms
            .iter()
            .filter_map(|(c, w)| w.iter().copied().collect::<Option<Vec<_>>>().map(|w| (*c, w)))
            .collect();
        SparseOp::from_columns(self.dim(), |j| {
            words.iter().filter_map(|(c, w)| Self::apply_word(w, j).map(|(s, i)| (i, c * s))).collect()
        })
    }

    pub fn annihilator(&self, mode: FockMode) -> Option<SparseOp> {
        let k = self.bit(mode)?;
        Some(self.operator(&[(Complex64::new(1.0, 0.0), vec![Some((false, k))])]))
    }

    pub fn creator(&self, mode: FockMode) -> Option<SparseOp> {
        let k = self.bit(mode)?;
        Some(self.operator(&[(Complex64::new(1.0, 0.0), vec![Some((true, k))])]))
    }

    /// Basis index of the state with the listed modes occupied.
    pub fn basis_state(&self, occupied: &[FockMode]) -> Option<usize> {
        occupied.iter().try_fold(0usize, |s, &m| self.bit(m).map(|k| s | 1 << k))
    }

    pub fn vacuum(&self) -> Vec<Complex64> {
        let mut v = vec![Complex64::new(0.0, 0.0); self.dim()];
        v[0] = Complex64::new(1.0, 0.0);
        v
    }

    /// Basis states with the top a and top b modes empty.
    pub fn is_admissible(&self, state: usize) -> bool {
        let top = [self.cutoff - 1, 2 * self.cutoff - 1];
        top.iter().all(|&k| state >> k & 1 == 0)
    }

    pub fn admissible_states(&self) -> Vec<usize> {
        (0..self.dim()).filter(|&s| self.is_admissible(s)).collect()
    }

    /// Number of a-particles minus b-particles.
    pub fn charge(&self, state: usize) -> i32 {
        self.modes
            .iter()
            .enumerate()
            .filter(|(k, _)| state >> k & 1 == 1)
            .map(|(_, m)| if m.species == Species::A { 1 } else { -1 })
            .sum()
    }

    /// Max-norm defect of {c_j, c_k†} = δ_jk and {c_j, c_k} = 0 over all pairs.
    pub fn anticommutator_defect(&self) -> f64 {
        let ann: Vec<SparseOp> = self.modes.iter().map(|&m| self.annihilator(m).expect("own mode")).collect();
        let cre: Vec<SparseOp> = ann.iter().map(SparseOp::adjoint).collect();
        let id = SparseOp::identity(self.dim());
        let mut worst = 0.0f64;
        for j in 0..ann.len() {
            for k in 0..ann.len() {
                let mixed = ann[j].anticommutator(&cre[k]);
                let target = if j == k { &mixed - &id } else { mixed };
                worst = worst.max(target.max_abs()).max(ann[j].anticommutator(&ann[k]).max_abs());
            }
        }
        worst
    }
}

/// L̂₊, L̂₋ and the diagonal L̂₀ on a truncated Fock space.
#[derive(Debug, Clone, PartialEq)]
pub struct ChargeOperators {
    pub raise: SparseOp,
    pub lower: SparseOp,
    pub l0: SparseOp,
    pub lambda: f64,
}

/// Builds the space and its charges; sums over modes stop at the cutoff.
pub fn build_fock(model: FockModel, cutoff: usize) -> Result<(TruncatedFock, ChargeOperators)> {
    let fock = TruncatedFock::new(model, cutoff)?;
    let n = cutoff;
    let a = |j: usize| fock.bit_of(Species::A, j);
    let b = |j: usize| fock.bit_of(Species::B, j);
    let cr = |k: Option<usize>| k.map(|k| (true, k));
    let an = |k: Option<usize>| k.map(|k| (false, k));
    let c = |re: f64, im: f64| Complex64::new(re, im);
    let mut up = Vec::new();
    let mut down = Vec::new();
    let mut diag = vec![0.0; fock.dim()];
    let lambda = model.lambda();
    let mut energies: Vec<(Option<usize>, f64)> = Vec::new();
    match model {
        FockModel::Massless { mu } => {
            let w = |j: f64| j + mu;
            for j in 0..n - 1 {
                let s = if j % 2 == 0 { -1.0 } else { 1.0 };
                let ca = I * s * (w(j as f64) + 0.5);
                let cb = I * s * (0.5 - w(-(j as f64) - 1.0));
                up.push((ca, vec![cr(a(j + 1)), an(a(j))]));
                up.push((cb, vec![cr(b(j + 1)), an(b(j))]));
                down.push((ca, vec![cr(a(j)), an(a(j + 1))]));
                down.push((cb, vec![cr(b(j)), an(b(j + 1))]));
            }
            up.push((I * (mu - 0.5), vec![cr(a(0)), cr(b(0))]));
            down.push((-I * (mu - 0.5), vec![an(a(0)), an(b(0))]));
            for j in 0..n {
                energies.push((a(j), w(j as f64)));
                energies.push((b(j), -w(-(j as f64) - 1.0)));
            }
        }
        FockModel::ZeroMode { m } => {
            let cn = |k: usize| ((k as f64 + m + 0.5) * (k as f64 - m + 0.5)).sqrt();
            for k in 1..=n {
                up.push((c(0.0, -cn(k)), vec![cr(a(k + 1)), an(a(k))]));
                up.push((c(0.0, -cn(k)), vec![cr(b(k + 1)), an(b(k))]));
                down.push((c(0.0, -cn(k)), vec![cr(a(k)), an(a(k + 1))]));
                down.push((c(0.0, -cn(k)), vec![cr(b(k)), an(b(k + 1))]));
            }
            let c0 = cn(0);
            up.push((c(0.0, c0), vec![cr(a(0)), cr(b(1))]));
            up.push((c(0.0, -c0), vec![cr(a(1)), an(a(0))]));
            down.push((c(0.0, c0), vec![an(b(1)), an(a(0))]));
            down.push((c(0.0, -c0), vec![cr(a(0)), an(a(1))]));
            for k in 1..=n {
                energies.push((a(k), k as f64));
                energies.push((b(k), k as f64));
            }
        }
    }
    for (s, d) in diag.iter_mut().enumerate() {
        *d = lambda + energies.iter().filter_map(|(k, e)| k.filter(|&k| s >> k & 1 == 1).map(|_| e)).sum::<f64>();
    }
    let ops = ChargeOperators { raise: fock.operator(&up), lower: fock.operator(&down), l0: SparseOp::diagonal(&diag), lambda };
    Ok((fock, ops))
}
