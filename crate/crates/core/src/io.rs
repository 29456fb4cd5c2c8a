//! Plain-text stabilizer files: one generator per line in Pauli text form,
//! `#` comments and blank lines ignored, every row the same length. A row of
//! all `I` is a placeholder and only makes sense as paste input.

use std::fmt::Write as _;

use thiserror::Error;

use crate::pasting::PaddedCode;
use crate::pauli::{PauliError, PauliOperator, Sign};
use crate::stabilizer::{CodeError, StabilizerCode};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FileError {
    #[error("no generator lines")]
    Empty,
    #[error("line {line}: {source}")]
    Parse { line: usize, source: PauliError },
    #[error("line {line}: row has {found} qubits, expected {expected}")]
    Ragged {
        line: usize,
        expected: usize,
        found: usize,
    },
    #[error("placeholder identity rows at lines {lines:?} are only valid as paste input (see `paste --augment`)")]
    PlaceholderRows { lines: Vec<usize> },
    #[error(transparent)]
    Code(#[from] CodeError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StabilizerFile {
    pub comments: Vec<String>,
    pub rows: Vec<PauliOperator>,
    /// 1-based source line of each row.
    pub lines: Vec<usize>,
}

impl StabilizerFile {
    pub fn parse(text: &str) -> Result<Self, FileError> {
        let mut comments = Vec::new();
        let mut rows: Vec<PauliOperator> = Vec::new();
        let mut lines = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() {
                continue;
            }
            if let Some(comment) = line.strip_prefix('#') {
                comments.push(comment.trim_start().to_string());
                continue;
            }
            let op: PauliOperator = line
                .parse()
                .map_err(|source| FileError::Parse { line: line_no, source })?;
            if let Some(first) = rows.first() {
                if op.num_qubits() != first.num_qubits() {
                    return Err(FileError::Ragged {
                        line: line_no,
                        expected: first.num_qubits(),
                        found: op.num_qubits(),
                    });
                }
            }
            rows.push(op);
            lines.push(line_no);
        }
        if rows.is_empty() {
            return Err(FileError::Empty);
        }
        Ok(StabilizerFile {
            comments,
            rows,
            lines,
        })
    }

    pub fn num_qubits(&self) -> usize {
        self.rows[0].num_qubits()
    }

    fn is_placeholder(row: &PauliOperator) -> bool {
        row.is_identity() && row.sign() == Sign::Plus
    }

    pub fn placeholder_mask(&self) -> Vec<bool> {
        self.rows.iter().map(Self::is_placeholder).collect()
    }

    pub fn has_placeholders(&self) -> bool {
        self.rows.iter().any(Self::is_placeholder)
    }

    /// A full code; refuses files with placeholder rows.
    pub fn to_code(&self) -> Result<StabilizerCode, FileError> {
        let lines: Vec<usize> = self
            .rows
            .iter()
            .zip(&self.lines)
            .filter(|(r, _)| Self::is_placeholder(r))
            .map(|(_, &l)| l)
            .collect();
        if !lines.is_empty() {
            return Err(FileError::PlaceholderRows { lines });
        }
        Ok(StabilizerCode::new(self.num_qubits(), self.rows.clone())?)
    }

    /// Paste input: placeholder rows kept in place.
    pub fn to_padded(&self) -> Result<PaddedCode, FileError> {
        let mask = self.placeholder_mask();
        let real: Vec<PauliOperator> = self
            .rows
            .iter()
            .zip(&mask)
            .filter(|(_, &pad)| !pad)
            .map(|(r, _)| r.clone())
            .collect();
        let base = StabilizerCode::new(self.num_qubits(), real)?;
        Ok(PaddedCode::with_mask(base, mask).expect("mask built from the same rows"))
    }

    pub fn format(&self) -> String {
        let mut out = String::new();
        for c in &self.comments {
            let _ = writeln!(out, "# {c}");
        }
        for r in &self.rows {
            let _ = writeln!(out, "{r}");
        }
        out
    }
}

/// Generator lines only, one per line.
pub fn format_code(code: &StabilizerCode) -> String {
    format_rows(code.generators())
}

pub fn format_rows(rows: &[PauliOperator]) -> String {
    let mut out = String::new();
    for r in rows {
        let _ = writeln!(out, "{r}");
    }
    out
}

pub fn parse_code(text: &str) -> Result<StabilizerCode, FileError> {
    StabilizerFile::parse(text)?.to_code()
}
