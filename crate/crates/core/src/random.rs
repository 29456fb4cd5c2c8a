//! Random stabilizer codes for property tests and sweeps.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::bits::RowBasis;
use crate::catalog::{hamming_class_with, LabelMap};
use crate::pauli::{Factor, PauliOperator, Sign};
use crate::stabilizer::StabilizerCode;
use crate::verification::verify_distance3;

fn random_pauli<R: Rng + ?Sized>(rng: &mut R, n: usize) -> PauliOperator {
    PauliOperator::from_factors((0..n).map(|_| Factor::ALL[rng.random_range(0..4)]))
}

/// Rejection-samples a valid code with `a` generators on `n` qubits, each
/// new row commuting with the previous ones, squaring to +1 and extending
/// the span. `None` if `max_tries` draws per row were not enough.
pub fn random_stabilizer<R: Rng + ?Sized>(
    rng: &mut R,
    n: usize,
    a: usize,
    max_tries: usize,
) -> Option<StabilizerCode> {
    random_extension(rng, n, Vec::new(), a, max_tries)
}

fn random_extension<R: Rng + ?Sized>(
    rng: &mut R,
    n: usize,
    mut rows: Vec<PauliOperator>,
    a: usize,
    max_tries: usize,
) -> Option<StabilizerCode> {
    if a > n {
        return None;
    }
    let mut basis = RowBasis::new(2 * n);
    for r in &rows {
        basis.insert(r.symplectic_row());
    }
    while rows.len() < a {
        let mut placed = false;
        for _ in 0..max_tries {
            let cand = random_pauli(rng, n);
            if cand.is_identity() || cand.square_sign() == Sign::Minus {
                continue;
            }
            if rows.iter().any(|r| r.anticommutes_unchecked(&cand)) {
                continue;
            }
            if basis.insert(cand.symplectic_row()) {
                rows.push(cand);
                placed = true;
                break;
            }
        }
        if !placed {
            return None;
        }
    }
    StabilizerCode::new(n, rows).ok()
}

/// Random code whose first two generators are `X^⊗n` and `Z^⊗n` (n even).
pub fn random_xz_stabilizer<R: Rng + ?Sized>(
    rng: &mut R,
    n: usize,
    a: usize,
    max_tries: usize,
) -> Option<StabilizerCode> {
    if n % 2 == 1 || a < 2 {
        return None;
    }
    let rows = vec![
        PauliOperator::uniform(n, Factor::X),
        PauliOperator::uniform(n, Factor::Z),
    ];
    random_extension(rng, n, rows, a, max_tries)
}

/// Samples until a code with distinct weight-≤1 syndromes turns up.
pub fn random_nondegenerate<R: Rng + ?Sized>(
    rng: &mut R,
    n: usize,
    a: usize,
    attempts: usize,
) -> Option<StabilizerCode> {
    (0..attempts)
        .filter_map(|_| random_stabilizer(rng, n, a, 4096))
        .find(|c| verify_distance3(c, false).is_nondegenerate())
}

/// An m×m GF(2) matrix with `L` and `L + I` invertible.
pub fn random_label_map<R: Rng + ?Sized>(rng: &mut R, m: usize) -> LabelMap {
    loop {
        let rows = (0..m).map(|_| rng.random_range(0..1u32 << m)).collect();
        let l = LabelMap::from_rows(m, rows);
        if l.qualifies() {
            return l;
        }
    }
}

/// Relabels qubits: qubit `q` of the input becomes qubit `perm[q]`.
pub fn permute_qubits(code: &StabilizerCode, perm: &[usize]) -> StabilizerCode {
    let n = code.num_qubits();
    assert_eq!(perm.len(), n);
    let gens = code
        .generators()
        .iter()
        .map(|g| {
            let mut out = PauliOperator::identity(n);
            for (q, &target) in perm.iter().enumerate() {
                out.set_factor(target, g.factor(q));
            }
            out
        })
        .collect();
    StabilizerCode::new(n, gens).expect("relabelling preserves validity")
}

pub fn random_permutation<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    perm
}

/// Multiplies rows `keep..` by random other rows, skipping products that
/// come out with sign -1. The group is unchanged; rows before `keep` are
/// left alone.
pub fn recombine<R: Rng + ?Sized>(rng: &mut R, code: &StabilizerCode, keep: usize, rounds: usize) -> StabilizerCode {
    let mut gens = code.generators().to_vec();
    let a = gens.len();
    if a < 2 || keep >= a {
        return code.clone();
    }
    for _ in 0..rounds {
        let target = rng.random_range(keep..a);
        let other = rng.random_range(0..a);
        if other == target {
            continue;
        }
        let prod = &gens[target] * &gens[other];
        if prod.sign() == Sign::Plus {
            gens[target] = prod;
        }
    }
    StabilizerCode::new(code.num_qubits(), gens).expect("row operations preserve validity")
}

/// Hamming-class code for a random label map, with its non-XZ qubit order
/// shuffled and rows 3.. recombined. Rows 1–2 stay `X^⊗n`, `Z^⊗n`.
pub fn random_hamming_variant<R: Rng + ?Sized>(rng: &mut R, m: usize) -> StabilizerCode {
    let l = random_label_map(rng, m);
    let code = hamming_class_with(m, &l).expect("qualifying label map");
    let perm = random_permutation(rng, code.num_qubits());
    let code = permute_qubits(&code, &perm);
    recombine(rng, &code, 2, 3 * m)
}

/// Qubit relabelling plus row recombination of `code`.
pub fn random_variant<R: Rng + ?Sized>(rng: &mut R, code: &StabilizerCode) -> StabilizerCode {
    let perm = random_permutation(rng, code.num_qubits());
    let permuted = permute_qubits(code, &perm);
    let rounds = 2 * code.generator_count();
    recombine(rng, &permuted, 0, rounds)
}
