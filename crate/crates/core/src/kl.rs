//! Dense state-vector oracle for small codes.
//!
//! Builds an explicit orthonormal basis of the joint +1 eigenspace and checks
//! `<ψ_i| E_a† E_b |ψ_j> = C_ab δ_ij` entry by entry. Everything is real:
//! each Pauli acts on a state as a signed permutation of amplitudes.
//!
//! Amplitude index bit `q` holds the computational value of qubit `q`.

use thiserror::Error;

use crate::par::{self, Execution};
use crate::pauli::PauliOperator;
use crate::stabilizer::StabilizerCode;
use crate::verification::ErrorSet;

pub const DEFAULT_QUBIT_CAP: usize = 10;
/// Projected vectors below this norm are treated as rank-deficient.
pub const RESIDUAL_CUTOFF: f64 = 1e-8;
/// Hard ceiling regardless of the caller's cap (2^n × 2^n doubles).
pub const MAX_QUBIT_CAP: usize = 14;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum KlError {
    #[error("{n} qubits exceeds the dense oracle cap of {cap}")]
    CapExceeded { n: usize, cap: usize },
    #[error("projector rank {found} but expected 2^k = {expected}")]
    RankMismatch { found: usize, expected: usize },
    #[error("tolerance must be positive, got {0}")]
    BadTolerance(f64),
    #[error("error set acts on {errors} qubits, code on {code}")]
    LengthMismatch { errors: usize, code: usize },
}

/// Applies a Pauli to a real state vector: `X^x Z^z |b> = (-1)^{z·b} |b ⊕ x>`.
pub struct DenseAction {
    x_mask: usize,
    z_mask: usize,
    negate: bool,
}

impl DenseAction {
    pub fn new(op: &PauliOperator) -> Self {
        assert!(op.num_qubits() < usize::BITS as usize);
        let mask = |bits: &crate::bits::BitRow| bits.iter_ones().fold(0usize, |m, q| m | (1 << q));
        DenseAction {
            x_mask: mask(op.x_bits()),
            z_mask: mask(op.z_bits()),
            negate: op.sign().is_minus(),
        }
    }

    #[inline]
    fn coefficient(&self, b: usize) -> f64 {
        let odd = ((b & self.z_mask).count_ones() & 1 == 1) ^ self.negate;
        if odd {
            -1.0
        } else {
            1.0
        }
    }

    pub fn apply(&self, state: &[f64]) -> Vec<f64> {
        let mut out = vec![0.0; state.len()];
        for (b, &amp) in state.iter().enumerate() {
            out[b ^ self.x_mask] = self.coefficient(b) * amp;
        }
        out
    }

    /// `<left| P |right>` without materialising `P|right>`.
    pub fn matrix_element(&self, left: &[f64], right: &[f64]) -> f64 {
        right
            .iter()
            .enumerate()
            .map(|(b, &amp)| left[b ^ self.x_mask] * self.coefficient(b) * amp)
            .sum()
    }

    /// In place `v ← (v + P v) / 2`.
    fn project(&self, state: &mut [f64]) {
        let image = self.apply(state);
        for (v, w) in state.iter_mut().zip(image) {
            *v = 0.5 * (*v + w);
        }
    }
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Orthonormal basis of the code space.
#[derive(Debug, Clone)]
pub struct Codespace {
    pub n: usize,
    pub basis: Vec<Vec<f64>>,
}

impl Codespace {
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }
}

pub fn codewords(code: &StabilizerCode, qubit_cap: usize) -> Result<Codespace, KlError> {
    let n = code.num_qubits();
    let cap = qubit_cap.min(MAX_QUBIT_CAP);
    if n > cap {
        return Err(KlError::CapExceeded { n, cap });
    }
    let dim = 1usize << n;
    let actions: Vec<DenseAction> = code.generators().iter().map(DenseAction::new).collect();

    // Column b of the projector is Π e_b.
    let mut candidates: Vec<Vec<f64>> = (0..dim)
        .map(|b| {
            let mut v = vec![0.0; dim];
            v[b] = 1.0;
            for a in &actions {
                a.project(&mut v);
            }
            v
        })
        .collect();
    let mut norms: Vec<f64> = candidates.iter().map(|v| dot(v, v)).collect();

    // Modified Gram–Schmidt, always taking the largest remaining residual.
    let mut basis = Vec::new();
    let mut taken = vec![false; dim];
    loop {
        let pivot = (0..dim)
            .filter(|&i| !taken[i])
            .max_by(|&i, &j| norms[i].total_cmp(&norms[j]).then(j.cmp(&i)));
        let Some(pivot) = pivot else { break };
        if norms[pivot].sqrt() < RESIDUAL_CUTOFF {
            break;
        }
        taken[pivot] = true;
        let scale = 1.0 / norms[pivot].sqrt();
        let q: Vec<f64> = candidates[pivot].iter().map(|v| v * scale).collect();
        for i in 0..dim {
            if taken[i] {
                continue;
            }
            let c = dot(&q, &candidates[i]);
            if c != 0.0 {
                for (v, qv) in candidates[i].iter_mut().zip(&q) {
                    *v -= c * qv;
                }
                norms[i] = dot(&candidates[i], &candidates[i]);
            }
        }
        basis.push(q);
    }

    let expected = 1usize << code.parameters().k;
    if basis.len() != expected {
        return Err(KlError::RankMismatch {
            found: basis.len(),
            expected,
        });
    }
    Ok(Codespace { n, basis })
}

#[derive(Debug, Clone)]
pub struct KlReport {
    /// `C_ab`, from the diagonal average over codewords.
    pub c: Vec<Vec<f64>>,
    /// max over (a, b, i, j) of `|<ψ_i|E_a†E_b|ψ_j> - C_ab δ_ij|`.
    pub max_deviation: f64,
    pub tolerance: f64,
    pub rank: usize,
    pub codeword_count: usize,
}

impl KlReport {
    /// The error-correction conditions hold to tolerance.
    pub fn passed(&self) -> bool {
        self.max_deviation < self.tolerance
    }

    pub fn full_rank(&self) -> bool {
        self.rank == self.c.len()
    }

    /// Conditions hold and C has maximum rank.
    pub fn nondegenerate(&self) -> bool {
        self.passed() && self.full_rank()
    }

    /// Largest `|C_ab - C_ba|`.
    pub fn asymmetry(&self) -> f64 {
        let m = self.c.len();
        let mut worst: f64 = 0.0;
        for a in 0..m {
            for b in 0..m {
                worst = worst.max((self.c[a][b] - self.c[b][a]).abs());
            }
        }
        worst
    }
}

/// Rank by Gaussian elimination with partial pivoting.
pub fn numeric_rank(matrix: &[Vec<f64>], tol: f64) -> usize {
    let mut m: Vec<Vec<f64>> = matrix.to_vec();
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for col in 0..cols {
        if rank == rows {
            break;
        }
        let (best, best_val) = (rank..rows)
            .map(|r| (r, m[r][col].abs()))
            .max_by(|a, b| a.1.total_cmp(&b.1))
            .expect("non-empty range");
        if best_val <= tol {
            continue;
        }
        m.swap(rank, best);
        let pivot_row = m[rank].clone();
        for row in m.iter_mut().skip(rank + 1) {
            let factor = row[col] / pivot_row[col];
            if factor != 0.0 {
                for (v, p) in row.iter_mut().zip(&pivot_row).skip(col) {
                    *v -= factor * p;
                }
            }
        }
        rank += 1;
    }
    rank
}

pub fn kl_check(code: &StabilizerCode, errors: &ErrorSet, tol: f64) -> Result<KlReport, KlError> {
    kl_check_with(code, errors, tol, DEFAULT_QUBIT_CAP, Execution::default())
}

pub fn kl_check_with(
    code: &StabilizerCode,
    errors: &ErrorSet,
    tol: f64,
    qubit_cap: usize,
    exec: Execution,
) -> Result<KlReport, KlError> {
    if tol.is_nan() || tol <= 0.0 {
        return Err(KlError::BadTolerance(tol));
    }
    if errors.n != code.num_qubits() {
        return Err(KlError::LengthMismatch {
            errors: errors.n,
            code: code.num_qubits(),
        });
    }
    let space = codewords(code, qubit_cap)?;
    let m = errors.len();
    let d = space.dimension();

    // Row a: (C_a·, worst deviation on that row).
    let rows = par::map_range(exec, m, |a| {
        let adj = errors.members[a].adjoint();
        let mut c_row = vec![0.0; m];
        let mut worst: f64 = 0.0;
        for (b, eb) in errors.members.iter().enumerate() {
            let action = DenseAction::new(&adj.mul_unchecked(eb));
            let mut block = vec![vec![0.0; d]; d];
            for (j, psi_j) in space.basis.iter().enumerate() {
                let image = action.apply(psi_j);
                for (i, psi_i) in space.basis.iter().enumerate() {
                    block[i][j] = dot(psi_i, &image);
                }
            }
            let c = (0..d).map(|i| block[i][i]).sum::<f64>() / d as f64;
            for (i, row) in block.iter().enumerate() {
                for (j, &v) in row.iter().enumerate() {
                    let target = if i == j { c } else { 0.0 };
                    worst = worst.max((v - target).abs());
                }
            }
            c_row[b] = c;
        }
        (c_row, worst)
    });

    let max_deviation = rows.iter().map(|(_, w)| *w).fold(0.0, f64::max);
    let c: Vec<Vec<f64>> = rows.into_iter().map(|(r, _)| r).collect();
    let scale = c
        .iter()
        .flatten()
        .fold(1.0f64, |acc, v| acc.max(v.abs()));
    let rank = numeric_rank(&c, 1e-8 * scale);
    Ok(KlReport {
        c,
        max_deviation,
        tolerance: tol,
        rank,
        codeword_count: d,
    })
}
