//! Shipped codes and the two constructed families.
//!
//! * `code5`, `code8`, `code13`: the 13-qubit stabilizer obtained by pasting
//!   the 5-qubit code onto the augmented 8-qubit code, and its two blocks.
//! * [`hamming_class`]: codes on `2^m` qubits with `m + 2` generators whose
//!   first two rows are `X^⊗n` and `Z^⊗n`.
//! * [`perfect`]: one-error perfect codes on `(4^{j+1} - 1) / 3` qubits,
//!   built recursively by pasting.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use thiserror::Error;

use crate::pasting::{paste, PaddedCode, PasteError};
use crate::pauli::{Factor, PauliOperator};
use crate::stabilizer::{CodeError, StabilizerCode};
use crate::verification::{hamming_bound, verify_distance3, BoundVerdict};

pub const CODE5: [&str; 4] = ["XXZIZ", "ZXXZI", "IZXXZ", "ZIZXX"];

pub const CODE8: [&str; 5] = [
    "XXXXXXXX", "ZZZZZZZZ", "XIXIZYZY", "XIYZXIYZ", "XZIYIYXZ",
];

pub const CODE13: [&str; 6] = [
    "XXXXXXXXIIIII",
    "ZZZZZZZZIIIII",
    "XIXIZYZYXXZIZ",
    "XIYZXIYZZXXZI",
    "XZIYIYXZIZXXZ",
    "IIIIIIIIZIZXX",
];

/// Default upper limit on the perfect-code recursion index (n = 341).
pub const DEFAULT_J_MAX: usize = 4;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("unknown catalog code {0:?} (expected code5, code8 or code13)")]
    UnknownName(String),
    #[error("hamming class needs m >= 3, got {0}")]
    MTooSmall(usize),
    #[error("m = {0} is too large for this build")]
    MTooLarge(usize),
    #[error("no usable label map for m = {0}")]
    NoLabelMap(usize),
    #[error("perfect code index j = {j} outside 1..={j_max}")]
    JOutOfRange { j: usize, j_max: usize },
    #[error("constructed code failed verification: {0}")]
    Verification(String),
    #[error(transparent)]
    Code(#[from] CodeError),
    #[error(transparent)]
    Paste(#[from] PasteError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Builtin {
    Code5,
    Code8,
    Code13,
}

impl Builtin {
    pub const ALL: [Builtin; 3] = [Builtin::Code5, Builtin::Code8, Builtin::Code13];

    pub fn name(self) -> &'static str {
        match self {
            Builtin::Code5 => "code5",
            Builtin::Code8 => "code8",
            Builtin::Code13 => "code13",
        }
    }

    pub fn rows(self) -> &'static [&'static str] {
        match self {
            Builtin::Code5 => &CODE5,
            Builtin::Code8 => &CODE8,
            Builtin::Code13 => &CODE13,
        }
    }
}

impl fmt::Display for Builtin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Builtin {
    type Err = CatalogError;

    fn from_str(s: &str) -> Result<Self, CatalogError> {
        Builtin::ALL
            .into_iter()
            .find(|b| b.name() == s)
            .ok_or_else(|| CatalogError::UnknownName(s.to_string()))
    }
}

fn builtin_cell(name: Builtin) -> &'static OnceLock<StabilizerCode> {
    static CELLS: [OnceLock<StabilizerCode>; 3] = [OnceLock::new(), OnceLock::new(), OnceLock::new()];
    &CELLS[name as usize]
}

pub fn builtin(name: Builtin) -> StabilizerCode {
    builtin_cell(name)
        .get_or_init(|| StabilizerCode::from_strs(name.rows()).expect("shipped code is valid"))
        .clone()
}

pub fn builtin_by_name(name: &str) -> Result<StabilizerCode, CatalogError> {
    Ok(builtin(name.parse()?))
}

/// Primitive polynomials over GF(2), bit i = coefficient of x^i, indexed by
/// degree.
const PRIMITIVE_POLYS: [(usize, u32); 14] = [
    (3, 0b1011),                 // x^3 + x + 1
    (4, 0b1_0011),               // x^4 + x + 1
    (5, 0b10_0101),              // x^5 + x^2 + 1
    (6, 0b100_0011),             // x^6 + x + 1
    (7, 0b1000_0011),            // x^7 + x + 1
    (8, 0b1_0001_1101),          // x^8 + x^4 + x^3 + x^2 + 1
    (9, 0b10_0001_0001),         // x^9 + x^4 + 1
    (10, 0b100_0000_1001),       // x^10 + x^3 + 1
    (11, 0b1000_0000_0101),      // x^11 + x^2 + 1
    (12, 0b1_0000_0101_0011),    // x^12 + x^6 + x^4 + x + 1
    (13, 0b10_0000_0001_1011),   // x^13 + x^4 + x^3 + x + 1
    (14, 0b100_0100_0100_0011),  // x^14 + x^10 + x^6 + x + 1
    (15, 0b1000_0000_0000_0011), // x^15 + x + 1
    (16, 0b1_0001_0000_0000_1011), // x^16 + x^12 + x^3 + x + 1
];

/// Largest supported m (n = 2^m qubits).
pub const MAX_M: usize = 20;

pub fn primitive_polynomial(m: usize) -> Option<u32> {
    PRIMITIVE_POLYS.iter().find(|(d, _)| *d == m).map(|(_, p)| *p)
}

/// An m×m matrix over GF(2); `rows[r]` has bit c set for entry (r, c).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabelMap {
    m: usize,
    rows: Vec<u32>,
}

impl LabelMap {
    pub fn from_rows(m: usize, rows: Vec<u32>) -> Self {
        assert_eq!(rows.len(), m);
        LabelMap { m, rows }
    }

    /// Multiplication by x modulo `poly` (degree m), the companion matrix.
    pub fn companion(m: usize, poly: u32) -> Self {
        let mut rows = vec![0u32; m];
        for c in 0..m {
            // image of basis x^c
            let mut img = 1u32 << (c + 1);
            if img >> m & 1 == 1 {
                img ^= poly;
            }
            for (r, row) in rows.iter_mut().enumerate() {
                if img >> r & 1 == 1 {
                    *row |= 1 << c;
                }
            }
        }
        LabelMap { m, rows }
    }

    pub fn dim(&self) -> usize {
        self.m
    }

    pub fn apply(&self, v: u32) -> u32 {
        self.rows
            .iter()
            .enumerate()
            .fold(0, |acc, (r, row)| acc | (((row & v).count_ones() & 1) << r))
    }

    pub fn plus_identity(&self) -> Self {
        let rows = self.rows.iter().enumerate().map(|(r, row)| row ^ (1 << r)).collect();
        LabelMap { m: self.m, rows }
    }

    pub fn is_invertible(&self) -> bool {
        let mut rows = self.rows.clone();
        let mut rank = 0;
        for c in 0..self.m {
            let Some(p) = (rank..self.m).find(|&r| rows[r] >> c & 1 == 1) else {
                continue;
            };
            rows.swap(rank, p);
            let pivot = rows[rank];
            for (r, row) in rows.iter_mut().enumerate() {
                if r != rank && *row >> c & 1 == 1 {
                    *row ^= pivot;
                }
            }
            rank += 1;
        }
        rank == self.m
    }

    /// Both `L` and `L + I` are bijections, which is what distinct syndromes need.
    pub fn qualifies(&self) -> bool {
        self.is_invertible() && self.plus_identity().is_invertible()
    }
}

/// Default label map for `m`: companion of the tabulated primitive polynomial,
/// or of `x^m + x + 1` (p(0) = p(1) = 1) beyond the table.
pub fn default_label_map(m: usize) -> LabelMap {
    let poly = primitive_polynomial(m).unwrap_or((1 << m) | 0b11);
    LabelMap::companion(m, poly)
}

/// Hamming-class code from a label map, without the `m = 3` special case.
///
/// Qubit `v` (0 ≤ v < 2^m) carries, in generator `2 + r`, z-bit `v_r` and
/// x-bit `(L v)_r`. Syndromes of single-qubit errors are then `01‖v`,
/// `10‖Lv` and `11‖(L+I)v`.
pub fn hamming_class_with(m: usize, label_map: &LabelMap) -> Result<StabilizerCode, CatalogError> {
    if m < 3 {
        return Err(CatalogError::MTooSmall(m));
    }
    if m > MAX_M {
        return Err(CatalogError::MTooLarge(m));
    }
    if label_map.dim() != m || !label_map.qualifies() {
        return Err(CatalogError::NoLabelMap(m));
    }
    let n = 1usize << m;
    let mut gens = vec![
        PauliOperator::uniform(n, Factor::X),
        PauliOperator::uniform(n, Factor::Z),
    ];
    for r in 0..m {
        let mut g = PauliOperator::identity(n);
        for v in 0..n as u32 {
            let z = v >> r & 1 == 1;
            let x = label_map.apply(v) >> r & 1 == 1;
            g.set_factor(v as usize, Factor::from_bits(x, z));
        }
        gens.push(g);
    }
    let code = StabilizerCode::new(n, gens)?;
    check_constructed(&code, n - m - 2)?;
    Ok(code)
}

fn check_constructed(code: &StabilizerCode, expected_k: usize) -> Result<(), CatalogError> {
    if code.parameters().k != expected_k {
        return Err(CatalogError::Verification(format!(
            "k = {} but expected {expected_k}",
            code.parameters().k
        )));
    }
    let report = verify_distance3(code, false);
    if !report.is_nondegenerate() {
        return Err(CatalogError::Verification(report.to_string()));
    }
    Ok(())
}

/// The `n = 2^m` family. `m = 3` returns [`CODE8`].
pub fn hamming_class(m: usize) -> Result<StabilizerCode, CatalogError> {
    if m == 3 {
        return Ok(builtin(Builtin::Code8));
    }
    hamming_class_with(m, &default_label_map(m))
}

fn perfect_cache(j: usize) -> Option<&'static OnceLock<StabilizerCode>> {
    static CELLS: [OnceLock<StabilizerCode>; DEFAULT_J_MAX] =
        [OnceLock::new(), OnceLock::new(), OnceLock::new(), OnceLock::new()];
    CELLS.get(j.checked_sub(1)?)
}

/// The j-th perfect one-error code, `1 ≤ j ≤ DEFAULT_J_MAX`.
pub fn perfect(j: usize) -> Result<StabilizerCode, CatalogError> {
    perfect_with_limit(j, DEFAULT_J_MAX)
}

/// The j-th perfect code with a caller-chosen limit on j.
pub fn perfect_with_limit(j: usize, j_max: usize) -> Result<StabilizerCode, CatalogError> {
    if j == 0 || j > j_max {
        return Err(CatalogError::JOutOfRange { j, j_max });
    }
    if let Some(cell) = perfect_cache(j) {
        return Ok(cell
            .get_or_init(|| build_perfect(j).expect("default perfect family verifies"))
            .clone());
    }
    build_perfect(j)
}

fn build_perfect(j: usize) -> Result<StabilizerCode, CatalogError> {
    if j == 1 {
        return Ok(builtin(Builtin::Code5));
    }
    let previous = perfect_with_limit(j - 1, j)?;
    let larger = PaddedCode::from(hamming_class(2 * j)?);
    let code = paste(&larger, &previous)?;
    let params = code.parameters();
    if params.a != 2 * j + 2 || hamming_bound(params.n, params.k) != BoundVerdict::Saturated {
        return Err(CatalogError::Verification(format!(
            "perfect({j}) has n = {}, a = {}",
            params.n, params.a
        )));
    }
    Ok(code)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    Table,
    ConstructedFamily,
    Pasted,
}

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub name: String,
    pub code: StabilizerCode,
    pub provenance: Provenance,
    /// (n, a, k)
    pub expected: (usize, usize, usize),
}

/// Every shipped entry plus the default ranges of both families.
pub fn entries() -> Result<Vec<CatalogEntry>, CatalogError> {
    let mut out: Vec<CatalogEntry> = Builtin::ALL
        .iter()
        .map(|&b| {
            let code = builtin(b);
            let p = code.parameters();
            CatalogEntry {
                name: b.name().to_string(),
                expected: (p.n, p.a, p.k),
                code,
                provenance: Provenance::Table,
            }
        })
        .collect();
    for m in 4..=8 {
        let n = 1 << m;
        out.push(CatalogEntry {
            name: format!("hamming{m}"),
            code: hamming_class(m)?,
            provenance: Provenance::ConstructedFamily,
            expected: (n, m + 2, n - m - 2),
        });
    }
    for j in 2..=DEFAULT_J_MAX {
        let n = ((1usize << (2 * (j + 1))) - 1) / 3;
        out.push(CatalogEntry {
            name: format!("perfect{j}"),
            code: perfect(j)?,
            provenance: Provenance::Pasted,
            expected: (n, 2 * j + 2, n - 2 * j - 2),
        });
    }
    Ok(out)
}
