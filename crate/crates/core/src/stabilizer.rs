//! Stabilizer groups given by an ordered list of generators.

use std::fmt;

use thiserror::Error;

use crate::bits::{BitRow, RowBasis};
use crate::pauli::{PauliError, PauliOperator, Sign};

/// One broken stabilizer condition. Row indices are 0-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    WrongLength { row: usize, len: usize },
    NegativeSign { row: usize },
    SquaresToMinusOne { row: usize },
    Anticommuting { first: usize, second: usize },
    /// `row` lies in the span of the rows before it.
    Dependent { row: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::WrongLength { row, len } => {
                write!(f, "generator M{} has length {len}", row + 1)
            }
            Violation::NegativeSign { row } => write!(f, "generator M{} has sign -1", row + 1),
            Violation::SquaresToMinusOne { row } => {
                write!(f, "generator M{} squares to -1 (odd number of Y factors)", row + 1)
            }
            Violation::Anticommuting { first, second } => {
                write!(f, "generators M{} and M{} anticommute", first + 1, second + 1)
            }
            Violation::Dependent { row } => write!(
                f,
                "generator M{} is a product of earlier generators (not independent)",
                row + 1
            ),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub n: usize,
    pub generator_count: usize,
    pub rank: usize,
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            return write!(f, "valid ({} generators on {} qubits)", self.generator_count, self.n);
        }
        let parts: Vec<String> = self.violations.iter().map(|v| v.to_string()).collect();
        write!(f, "{}", parts.join("; "))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CodeError {
    #[error("invalid stabilizer: {0}")]
    Invalid(ValidationReport),
    #[error(transparent)]
    Pauli(#[from] PauliError),
    #[error("a code needs at least one qubit")]
    NoQubits,
}

/// Checks the three stabilizer conditions: pairwise commutation, every
/// generator squaring to +1 with sign +1, and GF(2) independence.
pub fn validate(n: usize, generators: &[PauliOperator]) -> ValidationReport {
    let mut violations = Vec::new();
    for (i, g) in generators.iter().enumerate() {
        if g.num_qubits() != n {
            violations.push(Violation::WrongLength {
                row: i,
                len: g.num_qubits(),
            });
        }
    }
    if !violations.is_empty() {
        return ValidationReport {
            n,
            generator_count: generators.len(),
            rank: 0,
            violations,
        };
    }
    for (i, g) in generators.iter().enumerate() {
        if g.sign().is_minus() {
            violations.push(Violation::NegativeSign { row: i });
        }
        if g.square_sign().is_minus() {
            violations.push(Violation::SquaresToMinusOne { row: i });
        }
    }
    for i in 0..generators.len() {
        for j in i + 1..generators.len() {
            if generators[i].anticommutes_unchecked(&generators[j]) {
                violations.push(Violation::Anticommuting { first: i, second: j });
            }
        }
    }
    let mut basis = RowBasis::new(2 * n);
    for (i, g) in generators.iter().enumerate() {
        if !basis.insert(g.symplectic_row()) {
            violations.push(Violation::Dependent { row: i });
        }
    }
    ValidationReport {
        n,
        generator_count: generators.len(),
        rank: basis.rank(),
        violations,
    }
}

/// `n - a` bookkeeping; `t` is only set once a distance check has run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CodeParameters {
    pub n: usize,
    pub a: usize,
    pub k: usize,
    pub t: Option<usize>,
}

/// f(E): bit i set iff E anticommutes with generator i.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Syndrome(BitRow);

impl Syndrome {
    pub fn bits(&self) -> &BitRow {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn get(&self, i: usize) -> bool {
        self.0.get(i)
    }

    pub fn xor(&self, other: &Syndrome) -> Syndrome {
        Syndrome(self.0.xor(&other.0))
    }
}

impl fmt::Display for Syndrome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl fmt::Debug for Syndrome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Syndrome({})", self.0)
    }
}

/// A validated stabilizer code. Generator order is kept exactly as given and
/// fixes the syndrome bit order.
#[derive(Clone)]
pub struct StabilizerCode {
    n: usize,
    generators: Vec<PauliOperator>,
    basis: RowBasis,
}

impl StabilizerCode {
    pub fn new(n: usize, generators: Vec<PauliOperator>) -> Result<Self, CodeError> {
        if n == 0 {
            return Err(CodeError::NoQubits);
        }
        let report = validate(n, &generators);
        if !report.passed() {
            return Err(CodeError::Invalid(report));
        }
        let rows: Vec<BitRow> = generators.iter().map(|g| g.symplectic_row()).collect();
        let basis = RowBasis::from_rows(2 * n, &rows);
        Ok(StabilizerCode {
            n,
            generators,
            basis,
        })
    }

    /// Parses one generator per string; `n` is taken from the first.
    pub fn from_strs<S: AsRef<str>>(rows: &[S]) -> Result<Self, CodeError> {
        let generators = rows
            .iter()
            .map(|r| r.as_ref().parse::<PauliOperator>())
            .collect::<Result<Vec<_>, _>>()?;
        let n = generators.first().map_or(0, |g| g.num_qubits());
        StabilizerCode::new(n, generators)
    }

    pub fn num_qubits(&self) -> usize {
        self.n
    }

    pub fn generator_count(&self) -> usize {
        self.generators.len()
    }

    pub fn generators(&self) -> &[PauliOperator] {
        &self.generators
    }

    pub fn parameters(&self) -> CodeParameters {
        CodeParameters {
            n: self.n,
            a: self.generators.len(),
            k: self.n - self.generators.len(),
            t: None,
        }
    }

    pub fn validate(&self) -> ValidationReport {
        validate(self.n, &self.generators)
    }

    fn check_len(&self, p: &PauliOperator) -> Result<(), PauliError> {
        if p.num_qubits() != self.n {
            return Err(PauliError::LengthMismatch {
                left: self.n,
                right: p.num_qubits(),
            });
        }
        Ok(())
    }

    pub fn syndrome(&self, error: &PauliOperator) -> Result<Syndrome, PauliError> {
        self.check_len(error)?;
        Ok(self.syndrome_unchecked(error))
    }

    pub(crate) fn syndrome_unchecked(&self, error: &PauliOperator) -> Syndrome {
        let mut bits = BitRow::zeros(self.generators.len());
        for (i, g) in self.generators.iter().enumerate() {
            if g.anticommutes_unchecked(error) {
                bits.set(i, true);
            }
        }
        Syndrome(bits)
    }

    /// Which generators multiply to `p` up to sign, as a subset mask.
    pub fn decompose(&self, p: &PauliOperator) -> Result<Option<BitRow>, PauliError> {
        self.check_len(p)?;
        Ok(self.basis.solve(&p.symplectic_row()))
    }

    /// Product of the generators selected by `subset`, in generator order.
    pub fn product_of(&self, subset: &BitRow) -> PauliOperator {
        subset
            .iter_ones()
            .fold(PauliOperator::identity(self.n), |acc, i| {
                acc.mul_unchecked(&self.generators[i])
            })
    }

    /// Sign-sensitive membership in the stabilizer group.
    pub fn contains(&self, p: &PauliOperator) -> Result<bool, PauliError> {
        Ok(match self.decompose(p)? {
            Some(subset) => self.product_of(&subset).sign() == p.sign(),
            None => false,
        })
    }

    /// True when `p` or `-p` belongs to the group.
    pub fn contains_up_to_sign(&self, p: &PauliOperator) -> Result<bool, PauliError> {
        Ok(self.decompose(p)?.is_some())
    }

    pub(crate) fn in_span_unchecked(&self, p: &PauliOperator) -> bool {
        self.basis.in_span(&p.symplectic_row())
    }

    /// Sign of the group element with the same bits as `p`, if any.
    pub fn member_sign(&self, p: &PauliOperator) -> Result<Option<Sign>, PauliError> {
        Ok(self
            .decompose(p)?
            .map(|subset| self.product_of(&subset).sign()))
    }

    /// Reduced row-echelon form of the `(x | z)` generator matrix. Loses
    /// signs; use [`StabilizerCode::group_eq`] for a full comparison.
    pub fn canonical_rows(&self) -> Vec<BitRow> {
        self.basis.reduced_rows()
    }

    /// Same group, possibly with a different generator list.
    pub fn group_eq(&self, other: &StabilizerCode) -> bool {
        self.n == other.n
            && self.generators.len() == other.generators.len()
            && other
                .generators
                .iter()
                .all(|g| self.contains(g).unwrap_or(false))
    }
}

/// Bit-exact equality: same ordered generator list.
impl PartialEq for StabilizerCode {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.generators == other.generators
    }
}

impl Eq for StabilizerCode {}

impl fmt::Debug for StabilizerCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("StabilizerCode")
            .field("n", &self.n)
            .field("generators", &self.generators)
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{builtin, Builtin};
    use crate::pauli::Factor;

    fn p(s: &str) -> PauliOperator {
        s.parse().unwrap()
    }

    #[test]
    fn table_code_validates() {
        let code = builtin(Builtin::Code13);
        assert!(code.validate().passed());
        assert_eq!(code.validate().rank, 6);
    }

    #[test]
    fn anticommuting_pair_reported() {
        let report = validate(1, &[p("X"), p("Z")]);
        assert!(!report.passed());
        assert!(report
            .violations
            .contains(&Violation::Anticommuting { first: 0, second: 1 }));
        assert!(matches!(
            StabilizerCode::from_strs(&["X", "Z"]),
            Err(CodeError::Invalid(_))
        ));
    }

    #[test]
    fn duplicate_row_is_dependent() {
        let report = validate(2, &[p("XX"), p("XX")]);
        assert_eq!(report.rank, 1);
        assert_eq!(report.violations, vec![Violation::Dependent { row: 1 }]);
    }

    #[test]
    fn sign_and_square_conditions() {
        let report = validate(2, &[p("-XX")]);
        assert_eq!(report.violations, vec![Violation::NegativeSign { row: 0 }]);
        let report = validate(2, &[p("YI")]);
        assert_eq!(report.violations, vec![Violation::SquaresToMinusOne { row: 0 }]);
        let report = validate(2, &[p("XXX")]);
        assert_eq!(report.violations, vec![Violation::WrongLength { row: 0, len: 3 }]);
        assert_eq!(StabilizerCode::new(0, vec![]).unwrap_err(), CodeError::NoQubits);
    }

    // Oracle: per-column single-qubit anticommutation, independent of the
    // symplectic dot product.
    fn column_syndrome(code: &StabilizerCode, qubit: usize, f: Factor) -> String {
        code.generators()
            .iter()
            .map(|g| {
                let gf = g.factor(qubit);
                if gf != Factor::I && f != Factor::I && gf != f {
                    '1'
                } else {
                    '0'
                }
            })
            .collect()
    }

    #[test]
    fn table_code_syndromes() {
        let code = builtin(Builtin::Code13);
        let id = PauliOperator::identity(13);
        assert_eq!(code.syndrome(&id).unwrap().to_string(), "000000");
        let x1 = PauliOperator::single(13, 0, Factor::X);
        assert_eq!(column_syndrome(&code, 0, Factor::X), "010000");
        assert_eq!(code.syndrome(&x1).unwrap().to_string(), "010000");
        let x9 = PauliOperator::single(13, 8, Factor::X);
        assert_eq!(column_syndrome(&code, 8, Factor::X), "000101");
        assert_eq!(code.syndrome(&x9).unwrap().to_string(), "000101");
        for q in 0..13 {
            for f in Factor::NONTRIVIAL {
                let e = PauliOperator::single(13, q, f);
                assert_eq!(code.syndrome(&e).unwrap().to_string(), column_syndrome(&code, q, f));
            }
        }
        assert!(code.syndrome(&p("XX")).is_err());
    }

    #[test]
    fn membership() {
        let code = builtin(Builtin::Code13);
        let g = code.generators();
        let prod = &g[0] * &g[1];
        assert!(code.contains(&prod).unwrap());
        assert!(!code.contains(&-prod).unwrap());
        let x1 = PauliOperator::single(13, 0, Factor::X);
        assert!(!code.contains(&x1).unwrap());
        assert!(!code.contains_up_to_sign(&x1).unwrap());
        let five = builtin(Builtin::Code5);
        assert!(five.contains(&p("XXZIZ")).unwrap());
        for g in code.generators() {
            assert!(code.contains(g).unwrap());
            assert!(code.syndrome(g).unwrap().is_zero());
        }
    }

    #[test]
    fn parameters_of_catalog_codes() {
        let cases = [(Builtin::Code13, 13, 6, 7), (Builtin::Code5, 5, 4, 1), (Builtin::Code8, 8, 5, 3)];
        for (name, n, a, k) in cases {
            let params = builtin(name).parameters();
            assert_eq!((params.n, params.a, params.k, params.t), (n, a, k, None));
        }
    }

    #[test]
    fn group_equality_vs_bit_exact() {
        let five = builtin(Builtin::Code5);
        let g = five.generators();
        let recombined = StabilizerCode::new(5, vec![g[1].clone(), g[0].clone(), g[2].clone(), g[3].clone()]).unwrap();
        assert_ne!(five, recombined);
        assert!(five.group_eq(&recombined));
        assert_eq!(five.canonical_rows(), recombined.canonical_rows());
        let prod = &g[0] * &g[1];
        if prod.sign() == Sign::Plus {
            let alt = StabilizerCode::new(5, vec![prod, g[1].clone(), g[2].clone(), g[3].clone()]).unwrap();
            assert!(five.group_eq(&alt));
        }
    }
}
