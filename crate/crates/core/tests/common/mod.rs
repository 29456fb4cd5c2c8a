#![allow(dead_code)]

use rand::Rng;

use qpaste::catalog::{builtin, Builtin};
use qpaste::pasting::{augment, PaddedCode, Placement};
use qpaste::random::{random_hamming_variant, random_variant};
use qpaste::{Factor, PauliOperator, StabilizerCode};

fn pair(n: usize, a: usize, b: usize, f: Factor) -> PauliOperator {
    let mut p = PauliOperator::identity(n);
    p.set_factor(a, f);
    p.set_factor(b, f);
    p
}

/// `code` on its own qubits plus a Bell pair on two extra qubits. With
/// `extend_xz` the first two rows also gain `XX` / `ZZ` so all-X and all-Z
/// rows survive. Single-qubit errors on the two extra qubits collide but
/// act identically on the codespace.
pub fn with_bell_pair(code: &StabilizerCode, extend_xz: bool) -> StabilizerCode {
    let n = code.num_qubits() + 2;
    let mut rows: Vec<PauliOperator> = code
        .generators()
        .iter()
        .enumerate()
        .map(|(i, g)| {
            let tail = match (extend_xz, i) {
                (true, 0) => PauliOperator::uniform(2, Factor::X),
                (true, 1) => PauliOperator::uniform(2, Factor::Z),
                _ => PauliOperator::identity(2),
            };
            g.tensor(&tail)
        })
        .collect();
    rows.push(pair(n, n - 2, n - 1, Factor::X));
    rows.push(pair(n, n - 2, n - 1, Factor::Z));
    StabilizerCode::new(n, rows).unwrap()
}

/// Degenerate 7-qubit code with 6 generators.
pub fn degenerate_seven() -> StabilizerCode {
    with_bell_pair(&builtin(Builtin::Code5), false)
}

/// Degenerate 10-qubit code with 7 generators and X/Z rows.
pub fn degenerate_ten() -> StabilizerCode {
    with_bell_pair(&builtin(Builtin::Code8), true)
}

/// A precondition-satisfying (larger, smaller) pair drawn from randomized
/// Hamming-class codes and relabelled/recombined catalog codes.
pub fn random_pair<R: Rng>(rng: &mut R) -> (PaddedCode, PaddedCode) {
    match rng.random_range(0..5) {
        0 => (
            augment(&random_hamming_variant(rng, 3), 1, Placement::Append),
            random_variant(rng, &builtin(Builtin::Code5)).into(),
        ),
        1 => (
            random_hamming_variant(rng, 4).into(),
            random_variant(rng, &builtin(Builtin::Code5)).into(),
        ),
        2 => (
            augment(&random_hamming_variant(rng, 3), 2, Placement::Append),
            random_variant(rng, &builtin(Builtin::Code8)).into(),
        ),
        3 => (
            augment(&random_hamming_variant(rng, 4), 2, Placement::Append),
            random_variant(rng, &builtin(Builtin::Code13)).into(),
        ),
        _ => (
            augment(&random_hamming_variant(rng, 4), 1, Placement::Append),
            augment(&random_variant(rng, &builtin(Builtin::Code5)), 1, Placement::Prepend),
        ),
    }
}

/// Checks the syndrome prefix split of a pasted code. Returns a description
/// of the first violation.
pub fn prefix_split_violation(
    pasted: &StabilizerCode,
    larger: &PaddedCode,
    smaller: &PaddedCode,
) -> Option<String> {
    let n_large = larger.num_qubits();
    let n = pasted.num_qubits();
    let small_rows = smaller.rows();
    for q in 0..n {
        for f in Factor::NONTRIVIAL {
            let e = PauliOperator::single(n, q, f);
            let s = pasted.syndrome(&e).unwrap();
            let prefix = (s.get(0), s.get(1));
            if q < n_large {
                let expect = match f {
                    Factor::X => (false, true),
                    Factor::Z => (true, false),
                    Factor::Y => (true, true),
                    Factor::I => unreachable!(),
                };
                if prefix != expect {
                    return Some(format!("old qubit {q} {f:?}: prefix {prefix:?}"));
                }
            } else {
                if prefix != (false, false) {
                    return Some(format!("new qubit {q} {f:?}: prefix {prefix:?}"));
                }
                let local = PauliOperator::single(n - n_large, q - n_large, f);
                for (i, row) in small_rows.iter().enumerate() {
                    let bit = row.commutator_bit(&local).unwrap() == 1;
                    if s.get(i + 2) != bit {
                        return Some(format!("new qubit {q} {f:?}: bit {} differs", i + 2));
                    }
                }
            }
        }
    }
    None
}
