//! Pasting two one-error codes into a larger one.
//!
//! The larger code keeps its `X^⊗n` and `Z^⊗n` rows acting trivially on the
//! new qubits; each remaining row is extended by one generator of the smaller
//! code. Errors on the new qubits then have syndromes starting `00`, which no
//! error on the old qubits uses, and the smaller code keeps them apart.

use std::fmt;

use thiserror::Error;

use crate::pauli::{Factor, PauliOperator};
use crate::stabilizer::StabilizerCode;
use crate::verification::{verify_distance3, DistanceReport};

/// Where identity placeholder rows go.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Placement {
    /// After the generators (the usual choice for the larger code).
    #[default]
    Append,
    /// Before the generators.
    Prepend,
}

/// A generator template: the code's generators in order, with identity
/// placeholder rows interleaved. Only meaningful as pasting input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PaddedCode {
    base: StabilizerCode,
    /// `true` marks a placeholder row; `false` rows consume generators in order.
    placeholders: Vec<bool>,
}

impl PaddedCode {
    /// Template from an explicit row mask. `None` if the number of
    /// non-placeholder rows does not match the generator count.
    pub fn with_mask(base: StabilizerCode, placeholders: Vec<bool>) -> Option<Self> {
        let real = placeholders.iter().filter(|p| !**p).count();
        (real == base.generator_count()).then_some(PaddedCode { base, placeholders })
    }

    pub fn base(&self) -> &StabilizerCode {
        &self.base
    }

    pub fn num_qubits(&self) -> usize {
        self.base.num_qubits()
    }

    pub fn row_count(&self) -> usize {
        self.placeholders.len()
    }

    pub fn pad_count(&self) -> usize {
        self.placeholders.iter().filter(|p| **p).count()
    }

    pub fn placeholder_mask(&self) -> &[bool] {
        &self.placeholders
    }

    pub fn rows(&self) -> Vec<PauliOperator> {
        self.rows_from(self.base.generators())
    }

    fn rows_from(&self, generators: &[PauliOperator]) -> Vec<PauliOperator> {
        let mut gens = generators.iter();
        self.placeholders
            .iter()
            .map(|&pad| {
                if pad {
                    PauliOperator::identity(self.num_qubits())
                } else {
                    gens.next().expect("mask matches generator count").clone()
                }
            })
            .collect()
    }
}

impl From<StabilizerCode> for PaddedCode {
    fn from(base: StabilizerCode) -> Self {
        augment(&base, 0, Placement::Append)
    }
}

pub fn augment(code: &StabilizerCode, count: usize, placement: Placement) -> PaddedCode {
    let real = std::iter::repeat_n(false, code.generator_count());
    let pads = std::iter::repeat_n(true, count);
    let placeholders = match placement {
        Placement::Append => real.chain(pads).collect(),
        Placement::Prepend => pads.chain(real).collect(),
    };
    PaddedCode {
        base: code.clone(),
        placeholders,
    }
}

/// A generator list for the same group whose first two rows are exactly
/// `+X^⊗n` and `+Z^⊗n`, or `None` if either is missing from the group.
///
/// Returns the input untouched when its first two rows already qualify.
/// Otherwise the remaining rows are the original generators, in order,
/// that extend the span.
pub fn locate_xz_generators(code: &StabilizerCode) -> Option<StabilizerCode> {
    let n = code.num_qubits();
    let all_x = PauliOperator::uniform(n, Factor::X);
    let all_z = PauliOperator::uniform(n, Factor::Z);
    let gens = code.generators();
    if gens.len() >= 2 && gens[0] == all_x && gens[1] == all_z {
        return Some(code.clone());
    }
    if !code.contains(&all_x).ok()? || !code.contains(&all_z).ok()? {
        return None;
    }
    let mut basis = crate::bits::RowBasis::new(2 * n);
    basis.insert(all_x.symplectic_row());
    basis.insert(all_z.symplectic_row());
    let mut rows = vec![all_x, all_z];
    for g in gens {
        if rows.len() == gens.len() {
            break;
        }
        if basis.insert(g.symplectic_row()) {
            rows.push(g.clone());
        }
    }
    let out = StabilizerCode::new(n, rows).ok()?;
    debug_assert!(out.group_eq(code));
    Some(out)
}

/// The individual paste preconditions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PasteCheck {
    /// `X^⊗n` and `Z^⊗n` are in the larger code's group.
    XzRows,
    /// Larger row count minus two equals the smaller row count.
    GeneratorCount,
    /// Both codes have distinct weight-≤1 syndromes.
    Nondegenerate,
    /// Both codes satisfy the stabilizer conditions.
    Validity,
}

impl PasteCheck {
    pub const ALL: [PasteCheck; 4] = [
        PasteCheck::XzRows,
        PasteCheck::GeneratorCount,
        PasteCheck::Nondegenerate,
        PasteCheck::Validity,
    ];

    pub fn name(self) -> &'static str {
        match self {
            PasteCheck::XzRows => "xz-rows",
            PasteCheck::GeneratorCount => "generator-count",
            PasteCheck::Nondegenerate => "nondegenerate",
            PasteCheck::Validity => "validity",
        }
    }
}

impl fmt::Display for PasteCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub check: PasteCheck,
    pub ok: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PasteDiagnostics {
    pub checks: Vec<CheckResult>,
}

impl PasteDiagnostics {
    pub fn ok(&self) -> bool {
        self.checks.iter().all(|c| c.ok)
    }

    pub fn failures(&self) -> Vec<PasteCheck> {
        self.checks.iter().filter(|c| !c.ok).map(|c| c.check).collect()
    }

    pub fn get(&self, check: PasteCheck) -> &CheckResult {
        self.checks
            .iter()
            .find(|c| c.check == check)
            .expect("every check is recorded")
    }
}

impl fmt::Display for PasteDiagnostics {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let lines: Vec<String> = self
            .checks
            .iter()
            .map(|c| format!("{}: {} ({})", c.check, if c.ok { "ok" } else { "FAIL" }, c.detail))
            .collect();
        f.write_str(&lines.join("\n"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PasteError {
    #[error("paste precondition failed: {}", .0.failures().iter().map(|c| c.name()).collect::<Vec<_>>().join(", "))]
    Precondition(PasteDiagnostics),
    #[error(
        "pasting only works for codes correcting one error (t = 1), got t = {0}: \
         a combined error on old and new qubits looks like an error on the old qubits"
    )]
    MultiErrorUnsupported(usize),
    #[error("pasted code failed verification: {0}")]
    PostVerification(String),
}

impl PasteError {
    /// Every failed check, empty for non-precondition errors.
    pub fn failed_checks(&self) -> Vec<PasteCheck> {
        match self {
            PasteError::Precondition(d) => d.failures(),
            _ => Vec::new(),
        }
    }
}

fn nondegenerate_detail(label: &str, report: &DistanceReport) -> (bool, String) {
    let ok = report.is_nondegenerate();
    let detail = if ok {
        format!("{label}: {} distinct syndromes", report.distinct_syndromes)
    } else {
        let (e, f) = report.witness.as_ref().expect("failure has witness");
        format!("{label}: syndromes of {e} and {f} coincide")
    };
    (ok, detail)
}

/// Runs every paste precondition without building anything.
pub fn can_paste(larger: &PaddedCode, smaller: &PaddedCode) -> PasteDiagnostics {
    let mut checks = Vec::with_capacity(4);

    let xz = locate_xz_generators(larger.base());
    checks.push(CheckResult {
        check: PasteCheck::XzRows,
        ok: xz.is_some(),
        detail: if xz.is_some() {
            format!("X^{0} and Z^{0} present", larger.num_qubits())
        } else {
            format!(
                "X^{0} or Z^{0} is not in the larger code's group",
                larger.num_qubits()
            )
        },
    });

    let (lr, sr) = (larger.row_count(), smaller.row_count());
    checks.push(CheckResult {
        check: PasteCheck::GeneratorCount,
        ok: lr >= 2 && lr - 2 == sr,
        detail: format!("larger has {lr} rows, smaller has {sr}; need larger - 2 = smaller"),
    });

    let (l_ok, l_detail) = nondegenerate_detail("larger", &verify_distance3(larger.base(), false));
    let (s_ok, s_detail) = nondegenerate_detail("smaller", &verify_distance3(smaller.base(), false));
    checks.push(CheckResult {
        check: PasteCheck::Nondegenerate,
        ok: l_ok && s_ok,
        detail: format!("{l_detail}; {s_detail}"),
    });

    let l_valid = larger.base().validate();
    let s_valid = smaller.base().validate();
    checks.push(CheckResult {
        check: PasteCheck::Validity,
        ok: l_valid.passed() && s_valid.passed(),
        detail: format!("larger: {l_valid}; smaller: {s_valid}"),
    });

    PasteDiagnostics { checks }
}

/// Pastes `smaller` onto `larger`.
///
/// Output rows are `X^⊗n ⊗ I`, `Z^⊗n ⊗ I`, then each remaining larger row
/// (placeholders included) tensored with the smaller rows in order.
pub fn paste(larger: &PaddedCode, smaller: &StabilizerCode) -> Result<StabilizerCode, PasteError> {
    paste_padded(larger, &PaddedCode::from(smaller.clone()))
}

/// [`paste`] for a caller-requested correctable weight; anything but 1 is
/// refused.
pub fn paste_correcting(
    larger: &PaddedCode,
    smaller: &PaddedCode,
    t: usize,
) -> Result<StabilizerCode, PasteError> {
    if t != 1 {
        return Err(PasteError::MultiErrorUnsupported(t));
    }
    paste_padded(larger, smaller)
}

/// [`paste`] where the smaller code may carry placeholder rows too.
pub fn paste_padded(larger: &PaddedCode, smaller: &PaddedCode) -> Result<StabilizerCode, PasteError> {
    let diagnostics = can_paste(larger, smaller);
    if !diagnostics.ok() {
        return Err(PasteError::Precondition(diagnostics));
    }
    let xz_basis = locate_xz_generators(larger.base()).expect("checked above");

    // Rebuild the template on the recombined basis; its first two real rows
    // are X^n and Z^n.
    let template = larger.rows_from(xz_basis.generators());
    let mut real_seen = 0;
    let mut tail = Vec::with_capacity(template.len() - 2);
    for (row, &pad) in template.into_iter().zip(larger.placeholder_mask()) {
        if !pad && real_seen < 2 {
            real_seen += 1;
            continue;
        }
        tail.push(row);
    }

    let n_small = smaller.num_qubits();
    let id_small = PauliOperator::identity(n_small);
    let gens = xz_basis.generators();
    let mut rows = vec![gens[0].tensor(&id_small), gens[1].tensor(&id_small)];
    rows.extend(
        tail.iter()
            .zip(smaller.rows())
            .map(|(big, small)| big.tensor(&small)),
    );

    let n = larger.num_qubits() + n_small;
    let code = StabilizerCode::new(n, rows).map_err(|e| PasteError::PostVerification(e.to_string()))?;
    let report = verify_distance3(&code, false);
    if !report.is_nondegenerate() {
        return Err(PasteError::PostVerification(report.to_string()));
    }
    Ok(code)
}
