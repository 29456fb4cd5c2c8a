//! Exhaustive checks: low-weight error enumeration, distinct-syndrome
//! verification, brute-force distance and the one-error quantum Hamming bound.

use std::fmt;

use itertools::Itertools;
use num_bigint::BigUint;
use thiserror::Error;

use crate::bits::BitRow;
use crate::par::{self, Execution};
use crate::pauli::{Factor, PauliOperator};
use crate::stabilizer::{StabilizerCode, Syndrome};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerificationError {
    #[error("max weight {t} exceeds qubit count {n}")]
    WeightTooLarge { n: usize, t: usize },
}

/// Every Pauli of weight at most `max_weight`, sign +1, ordered by weight,
/// then by the sorted list of support positions, then by factors with
/// X < Y < Z. The identity comes first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ErrorSet {
    pub n: usize,
    pub max_weight: usize,
    pub members: Vec<PauliOperator>,
}

impl ErrorSet {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, PauliOperator> {
        self.members.iter()
    }

    pub fn identity_only(n: usize) -> Self {
        ErrorSet {
            n,
            max_weight: 0,
            members: vec![PauliOperator::identity(n)],
        }
    }
}

/// Calls `visit` on every factor assignment for `support`, X<Y<Z with the
/// first position most significant. Stops early when `visit` returns true.
fn for_each_assignment(support: &[usize], mut visit: impl FnMut(&[Factor]) -> bool) -> bool {
    let w = support.len();
    let mut digits = vec![0usize; w];
    let mut factors = vec![Factor::X; w];
    loop {
        for (f, &d) in factors.iter_mut().zip(&digits) {
            *f = Factor::NONTRIVIAL[d];
        }
        if visit(&factors) {
            return true;
        }
        let mut pos = w;
        loop {
            if pos == 0 {
                return false;
            }
            pos -= 1;
            digits[pos] += 1;
            if digits[pos] < 3 {
                break;
            }
            digits[pos] = 0;
        }
    }
}

pub fn enumerate_errors(n: usize, max_weight: usize) -> Result<ErrorSet, VerificationError> {
    if max_weight > n {
        return Err(VerificationError::WeightTooLarge { n, t: max_weight });
    }
    let mut members = vec![PauliOperator::identity(n)];
    for w in 1..=max_weight {
        for support in (0..n).combinations(w) {
            for_each_assignment(&support, |factors| {
                let mut op = PauliOperator::identity(n);
                for (&q, &f) in support.iter().zip(factors) {
                    op.set_factor(q, f);
                }
                members.push(op);
                false
            });
        }
    }
    Ok(ErrorSet {
        n,
        max_weight,
        members,
    })
}

/// Number of Paulis of weight at most `t` on `n` qubits: Σ C(n,w)·3^w.
pub fn error_count(n: usize, t: usize) -> BigUint {
    let mut total = BigUint::from(0u32);
    let mut binom = BigUint::from(1u32);
    let mut pow3 = BigUint::from(1u32);
    for w in 0..=t.min(n) {
        total += &binom * &pow3;
        binom = binom * (n - w) / (w + 1);
        pow3 *= 3u32;
    }
    total
}

/// Weight-≤1 errors with their syndromes, in enumeration order.
pub fn syndrome_table(code: &StabilizerCode) -> Vec<(PauliOperator, Syndrome)> {
    syndrome_table_with(code, Execution::default())
}

pub fn syndrome_table_with(code: &StabilizerCode, exec: Execution) -> Vec<(PauliOperator, Syndrome)> {
    let errors = enumerate_errors(code.num_qubits(), 1).expect("n >= 1").members;
    let syndromes = par::map_range(exec, errors.len(), |i| code.syndrome_unchecked(&errors[i]));
    errors.into_iter().zip(syndromes).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    /// All weight-≤1 syndromes distinct.
    Nondegenerate,
    /// Some syndromes coincide but every such pair acts identically on the
    /// code space.
    Degenerate,
    Fail,
}

/// Cap on the number of colliding pairs kept per list in a report.
pub const MAX_REPORTED_PAIRS: usize = 32;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceReport {
    pub n: usize,
    pub generator_count: usize,
    pub error_count: usize,
    pub distinct_syndromes: usize,
    pub verdict: Verdict,
    /// First unexcused colliding pair, in enumeration order.
    pub witness: Option<(PauliOperator, PauliOperator)>,
    pub collision_count: usize,
    pub collisions: Vec<(PauliOperator, PauliOperator)>,
    pub degenerate_pair_count: usize,
    pub degenerate_pairs: Vec<(PauliOperator, PauliOperator)>,
}

impl DistanceReport {
    pub fn passed(&self) -> bool {
        self.verdict != Verdict::Fail
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.verdict == Verdict::Nondegenerate
    }

    /// The weight-≤1 syndromes fill {0,1}^a exactly once each.
    pub fn syndromes_bijective(&self) -> bool {
        self.generator_count < usize::BITS as usize
            && self.error_count == 1usize << self.generator_count
            && self.distinct_syndromes == self.error_count
    }
}

impl fmt::Display for DistanceReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.verdict {
            Verdict::Nondegenerate => write!(
                f,
                "pass ({} errors, {} distinct syndromes, nondegenerate)",
                self.error_count, self.distinct_syndromes
            ),
            Verdict::Degenerate => write!(
                f,
                "pass ({} errors, {} distinct syndromes, degenerate: {} excused pairs)",
                self.error_count, self.distinct_syndromes, self.degenerate_pair_count
            ),
            Verdict::Fail => {
                let (e, g) = self.witness.as_ref().expect("failing report carries a witness");
                write!(
                    f,
                    "fail ({} colliding pairs; first {} ~ {})",
                    self.collision_count, e, g
                )
            }
        }
    }
}

/// `E` and `F` act identically (up to a global sign) on the code space
/// exactly when `F†E` is in the group up to sign.
fn excused(code: &StabilizerCode, e: &PauliOperator, f: &PauliOperator) -> bool {
    let prod = f.adjoint().mul_unchecked(e);
    code.in_span_unchecked(&prod)
}

pub fn verify_distance3(code: &StabilizerCode, allow_degenerate: bool) -> DistanceReport {
    verify_distance3_with(code, allow_degenerate, Execution::default())
}

pub fn verify_distance3_with(
    code: &StabilizerCode,
    allow_degenerate: bool,
    exec: Execution,
) -> DistanceReport {
    let table = syndrome_table_with(code, exec);
    let error_count = table.len();

    let mut order: Vec<usize> = (0..error_count).collect();
    order.sort_by(|&i, &j| table[i].1.cmp(&table[j].1).then(i.cmp(&j)));

    let mut distinct = 0;
    let mut pairs = Vec::new();
    for group in order.chunk_by(|&i, &j| table[i].1 == table[j].1) {
        distinct += 1;
        for (ai, &i) in group.iter().enumerate() {
            for &j in &group[ai + 1..] {
                pairs.push((i.min(j), i.max(j)));
            }
        }
    }
    pairs.sort_unstable();

    let flags = par::map_range(exec, pairs.len(), |p| {
        let (i, j) = pairs[p];
        allow_degenerate && excused(code, &table[i].0, &table[j].0)
    });

    let mut collisions = Vec::new();
    let mut degenerate_pairs = Vec::new();
    let mut collision_count = 0;
    let mut degenerate_pair_count = 0;
    for (&(i, j), &ok) in pairs.iter().zip(&flags) {
        let pair = || (table[i].0.clone(), table[j].0.clone());
        if ok {
            degenerate_pair_count += 1;
            if degenerate_pairs.len() < MAX_REPORTED_PAIRS {
                degenerate_pairs.push(pair());
            }
        } else {
            collision_count += 1;
            if collisions.len() < MAX_REPORTED_PAIRS {
                collisions.push(pair());
            }
        }
    }

    let verdict = if collision_count > 0 {
        Verdict::Fail
    } else if degenerate_pair_count > 0 {
        Verdict::Degenerate
    } else {
        Verdict::Nondegenerate
    };
    DistanceReport {
        n: code.num_qubits(),
        generator_count: code.generator_count(),
        error_count,
        distinct_syndromes: distinct,
        verdict,
        witness: collisions.first().cloned(),
        collision_count,
        collisions,
        degenerate_pair_count,
        degenerate_pairs,
    }
}

/// Lowest-weight operator commuting with every generator yet outside the
/// group (for either sign), searched up to `max_weight` in enumeration order.
pub fn find_logical(code: &StabilizerCode, max_weight: usize) -> Option<PauliOperator> {
    find_logical_with(code, max_weight, Execution::default())
}

pub fn find_logical_with(
    code: &StabilizerCode,
    max_weight: usize,
    exec: Execution,
) -> Option<PauliOperator> {
    let n = code.num_qubits();
    let max_weight = max_weight.min(n);
    // single[q][f]: syndrome of factor f on qubit q; linearity gives the rest.
    let single: Vec<[BitRow; 3]> = (0..n)
        .map(|q| {
            Factor::NONTRIVIAL.map(|f| {
                code.syndrome_unchecked(&PauliOperator::single(n, q, f))
                    .bits()
                    .clone()
            })
        })
        .collect();

    for w in 1..=max_weight {
        let found = par::find_first(exec, n, |first| {
            let mut scratch = BitRow::zeros(code.generator_count());
            let mut hit = None;
            for rest in (first + 1..n).combinations(w - 1) {
                let mut support = Vec::with_capacity(w);
                support.push(first);
                support.extend(rest);
                let done = for_each_assignment(&support, |factors| {
                    scratch = BitRow::zeros(code.generator_count());
                    for (&q, &f) in support.iter().zip(factors) {
                        scratch.xor_assign(&single[q][f as usize - 1]);
                    }
                    if !scratch.is_zero() {
                        return false;
                    }
                    let mut op = PauliOperator::identity(n);
                    for (&q, &f) in support.iter().zip(factors) {
                        op.set_factor(q, f);
                    }
                    let plus_in = code.contains(&op).expect("same length");
                    let minus_in = code.contains(&-op.clone()).expect("same length");
                    if !plus_in && !minus_in {
                        hit = Some(op);
                        true
                    } else {
                        false
                    }
                });
                if done {
                    break;
                }
            }
            hit
        });
        if found.is_some() {
            return found;
        }
    }
    None
}

/// Minimum weight of a logical operator, or `None` if there is none of
/// weight ≤ `max_weight`.
pub fn distance(code: &StabilizerCode, max_weight: usize) -> Option<usize> {
    find_logical(code, max_weight).map(|op| op.weight())
}

pub fn distance_with(code: &StabilizerCode, max_weight: usize, exec: Execution) -> Option<usize> {
    find_logical_with(code, max_weight, exec).map(|op| op.weight())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundVerdict {
    Violated,
    Satisfied,
    /// Equality: a perfect code.
    Saturated,
}

impl BoundVerdict {
    pub fn holds(self) -> bool {
        self != BoundVerdict::Violated
    }
}

impl fmt::Display for BoundVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BoundVerdict::Violated => "violated",
            BoundVerdict::Satisfied => "satisfied",
            BoundVerdict::Saturated => "saturated",
        })
    }
}

/// Compares `(3n+1)·2^k` with `2^n` exactly.
pub fn hamming_bound(n: usize, k: usize) -> BoundVerdict {
    let lhs = BigUint::from(3 * n as u64 + 1) << k;
    let rhs = BigUint::from(1u32) << n;
    match lhs.cmp(&rhs) {
        std::cmp::Ordering::Greater => BoundVerdict::Violated,
        std::cmp::Ordering::Equal => BoundVerdict::Saturated,
        std::cmp::Ordering::Less => BoundVerdict::Satisfied,
    }
}

/// Largest `k` allowed by the bound, `None` when even `k = 0` is excluded.
pub fn best_k(n: usize) -> Option<usize> {
    // 2^k ≤ 2^n / (3n+1)  ⇔  k ≤ n - ceil(log2(3n+1))
    let m = BigUint::from(3 * n as u64 + 1);
    let bits = m.bits() as usize;
    let ceil_log2 = if m.count_ones() == 1 { bits - 1 } else { bits };
    n.checked_sub(ceil_log2)
}

/// `(4^j - 1) / 3`, the lengths where a one-error perfect code can exist.
pub fn perfect_length(j: u32) -> Option<u64> {
    let pow = 4u64.checked_pow(j)?;
    Some((pow - 1) / 3)
}

/// First `count` perfect lengths for j = 2, 3, ... (j = 1 gives n = 1).
pub fn perfect_lengths(count: usize) -> Vec<u64> {
    (2..).map_while(perfect_length).take(count).collect()
}

pub fn is_perfect(n: usize, k: usize) -> bool {
    hamming_bound(n, k) == BoundVerdict::Saturated
}
