//! n-qubit Pauli products in the symplectic (x | z) bit representation.
//!
//! Single-qubit factors are the real matrices
//!
//! ```text
//! I = [[1, 0], [0, 1]]   X = [[0, 1], [1, 0]]
//! Y = [[0,-1], [1, 0]]   Z = [[1, 0], [0,-1]]
//! ```
//!
//! so `Y = X·Z` exactly and every product of factors is a real signed
//! permutation matrix. A [`PauliOperator`] with bits `(x, z)` and sign `s`
//! denotes `s · ⊗_i X^{x_i} Z^{z_i}`; no imaginary phase ever appears.
//!
//! Qubit 1 in text form is bit index 0.

use std::fmt;
use std::ops::{Mul, Neg};
use std::str::FromStr;

use thiserror::Error;

use crate::bits::BitRow;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PauliError {
    #[error("qubit count mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("empty Pauli string")]
    Empty,
    #[error("invalid character {ch:?} at position {position}")]
    InvalidChar { position: usize, ch: char },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub enum Sign {
    #[default]
    Plus,
    Minus,
}

impl Sign {
    #[inline]
    pub fn from_parity(odd: bool) -> Sign {
        if odd {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }

    #[inline]
    pub fn is_minus(self) -> bool {
        self == Sign::Minus
    }

    pub fn value(self) -> i32 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

impl Mul for Sign {
    type Output = Sign;
    #[inline]
    fn mul(self, rhs: Sign) -> Sign {
        Sign::from_parity(self.is_minus() != rhs.is_minus())
    }
}

impl Neg for Sign {
    type Output = Sign;
    fn neg(self) -> Sign {
        self * Sign::Minus
    }
}

/// One tensor factor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Factor {
    I,
    X,
    Y,
    Z,
}

impl Factor {
    pub const ALL: [Factor; 4] = [Factor::I, Factor::X, Factor::Y, Factor::Z];
    /// Non-identity factors in enumeration order.
    pub const NONTRIVIAL: [Factor; 3] = [Factor::X, Factor::Y, Factor::Z];

    #[inline]
    pub fn bits(self) -> (bool, bool) {
        match self {
            Factor::I => (false, false),
            Factor::X => (true, false),
            Factor::Y => (true, true),
            Factor::Z => (false, true),
        }
    }

    #[inline]
    pub fn from_bits(x: bool, z: bool) -> Factor {
        match (x, z) {
            (false, false) => Factor::I,
            (true, false) => Factor::X,
            (true, true) => Factor::Y,
            (false, true) => Factor::Z,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Factor::I => 'I',
            Factor::X => 'X',
            Factor::Y => 'Y',
            Factor::Z => 'Z',
        }
    }

    /// The 2×2 real matrix, row-major.
    pub fn matrix(self) -> [[i32; 2]; 2] {
        match self {
            Factor::I => [[1, 0], [0, 1]],
            Factor::X => [[0, 1], [1, 0]],
            Factor::Y => [[0, -1], [1, 0]],
            Factor::Z => [[1, 0], [0, -1]],
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PauliOperator {
    x: BitRow,
    z: BitRow,
    sign: Sign,
}

impl PauliOperator {
    pub fn identity(n: usize) -> Self {
        PauliOperator {
            x: BitRow::zeros(n),
            z: BitRow::zeros(n),
            sign: Sign::Plus,
        }
    }

    /// `factor` on `qubit` (0-based), identity elsewhere.
    pub fn single(n: usize, qubit: usize, factor: Factor) -> Self {
        let mut p = PauliOperator::identity(n);
        p.set_factor(qubit, factor);
        p
    }

    /// `factor` on every qubit.
    pub fn uniform(n: usize, factor: Factor) -> Self {
        let mut p = PauliOperator::identity(n);
        for q in 0..n {
            p.set_factor(q, factor);
        }
        p
    }

    pub fn from_bits(x: BitRow, z: BitRow, sign: Sign) -> Result<Self, PauliError> {
        if x.len() != z.len() {
            return Err(PauliError::LengthMismatch {
                left: x.len(),
                right: z.len(),
            });
        }
        Ok(PauliOperator { x, z, sign })
    }

    pub fn from_factors<I: IntoIterator<Item = Factor>>(factors: I) -> Self {
        let factors: Vec<Factor> = factors.into_iter().collect();
        let mut p = PauliOperator::identity(factors.len());
        for (q, f) in factors.into_iter().enumerate() {
            p.set_factor(q, f);
        }
        p
    }

    #[inline]
    pub fn num_qubits(&self) -> usize {
        self.x.len()
    }

    #[inline]
    pub fn x_bits(&self) -> &BitRow {
        &self.x
    }

    #[inline]
    pub fn z_bits(&self) -> &BitRow {
        &self.z
    }

    #[inline]
    pub fn sign(&self) -> Sign {
        self.sign
    }

    pub fn with_sign(mut self, sign: Sign) -> Self {
        self.sign = sign;
        self
    }

    pub fn factor(&self, qubit: usize) -> Factor {
        Factor::from_bits(self.x.get(qubit), self.z.get(qubit))
    }

    pub fn set_factor(&mut self, qubit: usize, factor: Factor) {
        let (x, z) = factor.bits();
        self.x.set(qubit, x);
        self.z.set(qubit, z);
    }

    pub fn factors(&self) -> impl Iterator<Item = Factor> + '_ {
        (0..self.num_qubits()).map(move |q| self.factor(q))
    }

    /// Concatenated `(x | z)` row of width 2n.
    pub fn symplectic_row(&self) -> BitRow {
        self.x.concat(&self.z)
    }

    pub fn is_identity(&self) -> bool {
        self.x.is_zero() && self.z.is_zero()
    }

    pub fn weight(&self) -> usize {
        self.x.or_count(&self.z)
    }

    pub fn y_count(&self) -> usize {
        self.x.and_count(&self.z)
    }

    /// Sign of `P·P`: `(-1)^{y_count}`.
    pub fn square_sign(&self) -> Sign {
        Sign::from_parity(self.y_count() % 2 == 1)
    }

    /// Adjoint, which for these real operators is also the inverse.
    pub fn adjoint(&self) -> Self {
        let mut out = self.clone();
        out.sign = self.sign * self.square_sign();
        out
    }

    fn check_len(&self, other: &Self) -> Result<(), PauliError> {
        if self.num_qubits() != other.num_qubits() {
            Err(PauliError::LengthMismatch {
                left: self.num_qubits(),
                right: other.num_qubits(),
            })
        } else {
            Ok(())
        }
    }

    /// Symplectic inner product: 0 when the operators commute, 1 when they
    /// anticommute. Signs play no part.
    pub fn commutator_bit(&self, other: &Self) -> Result<u8, PauliError> {
        self.check_len(other)?;
        Ok(self.anticommutes_unchecked(other) as u8)
    }

    pub fn commutes_with(&self, other: &Self) -> Result<bool, PauliError> {
        Ok(self.commutator_bit(other)? == 0)
    }

    #[inline]
    pub(crate) fn anticommutes_unchecked(&self, other: &Self) -> bool {
        self.x.dot(&other.z) ^ self.z.dot(&other.x)
    }

    /// Operator product `self · other`.
    ///
    /// Per qubit `(X^a Z^b)(X^c Z^d) = (-1)^{b·c} X^{a⊕c} Z^{b⊕d}`, so the
    /// result sign picks up one factor of -1 for every qubit where `self`
    /// carries a Z part and `other` an X part.
    pub fn try_mul(&self, other: &Self) -> Result<Self, PauliError> {
        self.check_len(other)?;
        Ok(self.mul_unchecked(other))
    }

    pub(crate) fn mul_unchecked(&self, other: &Self) -> Self {
        let swaps = self.z.and_count(&other.x);
        PauliOperator {
            x: self.x.xor(&other.x),
            z: self.z.xor(&other.z),
            sign: self.sign * other.sign * Sign::from_parity(swaps % 2 == 1),
        }
    }

    /// `self ⊗ other`, with `self` on the low qubits.
    pub fn tensor(&self, other: &Self) -> Self {
        PauliOperator {
            x: self.x.concat(&other.x),
            z: self.z.concat(&other.z),
            sign: self.sign * other.sign,
        }
    }
}

impl Mul for &PauliOperator {
    type Output = PauliOperator;

    /// Panics on qubit-count mismatch; use [`PauliOperator::try_mul`] otherwise.
    fn mul(self, rhs: &PauliOperator) -> PauliOperator {
        self.try_mul(rhs).expect("Pauli product of mismatched lengths")
    }
}

impl Neg for PauliOperator {
    type Output = PauliOperator;
    fn neg(mut self) -> PauliOperator {
        self.sign = -self.sign;
        self
    }
}

impl FromStr for PauliOperator {
    type Err = PauliError;

    fn from_str(text: &str) -> Result<Self, PauliError> {
        let (sign, body, offset) = if let Some(rest) = text.strip_prefix('+') {
            (Sign::Plus, rest, 1)
        } else if let Some(rest) = text.strip_prefix('-') {
            (Sign::Minus, rest, 1)
        } else if let Some(rest) = text.strip_prefix('\u{2212}') {
            (Sign::Minus, rest, 1)
        } else {
            (Sign::Plus, text, 0)
        };
        if body.is_empty() {
            return Err(PauliError::Empty);
        }
        let mut factors = Vec::with_capacity(body.len());
        for (i, ch) in body.chars().enumerate() {
            let f = match ch {
                'I' => Factor::I,
                'X' => Factor::X,
                'Y' => Factor::Y,
                'Z' => Factor::Z,
                _ => {
                    return Err(PauliError::InvalidChar {
                        position: i + offset,
                        ch,
                    })
                }
            };
            factors.push(f);
        }
        Ok(PauliOperator::from_factors(factors).with_sign(sign))
    }
}

impl fmt::Display for PauliOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.sign.is_minus() {
            f.write_str("-")?;
        }
        for factor in self.factors() {
            write!(f, "{}", factor.symbol())?;
        }
        Ok(())
    }
}

impl fmt::Debug for PauliOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Pauli({self})")
    }
}
