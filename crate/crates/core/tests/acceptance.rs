//! One line per acceptance criterion. Run with
//! `cargo test -p qpaste --test acceptance`.

mod common;

use std::collections::HashSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use itertools::Itertools;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use common::{degenerate_seven, degenerate_ten, prefix_split_violation, random_pair};
use qpaste::catalog::{builtin, perfect, Builtin};
use qpaste::io::parse_code;
use qpaste::kl::kl_check;
use qpaste::pasting::{augment, can_paste, paste, paste_padded, PaddedCode, PasteCheck, Placement};
use qpaste::random::{random_hamming_variant, random_nondegenerate, random_stabilizer, random_variant};
use qpaste::verification::{best_k, enumerate_errors, hamming_bound, verify_distance3, BoundVerdict};
use qpaste::{Factor, PauliOperator, Sign, StabilizerCode};

const TABLE_13: [&str; 6] = [
    "XXXXXXXXIIIII",
    "ZZZZZZZZIIIII",
    "XIXIZYZYXXZIZ",
    "XIYZXIYZZXXZI",
    "XZIYIYXZIZXXZ",
    "IIIIIIIIZIZXX",
];

fn within(start: Instant, limit: Duration) -> Result<String, String> {
    let took = start.elapsed();
    let msg = format!("{:.3} ms, limit {} ms", took.as_secs_f64() * 1e3, limit.as_millis());
    if took < limit {
        Ok(msg)
    } else {
        Err(format!("too slow: {msg}"))
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn table_reproduction() -> Result<String, String> {
    let larger = augment(&builtin(Builtin::Code8), 1, Placement::Append);
    let smaller = builtin(Builtin::Code5);
    let start = Instant::now();
    let pasted = paste(&larger, &smaller).map_err(|e| e.to_string())?;
    let timing = within(start, Duration::from_millis(10))?;
    let rows: Vec<String> = pasted.generators().iter().map(|g| g.to_string()).collect();
    ensure(rows == TABLE_13, || format!("rows differ: {rows:?}"))?;
    ensure(pasted.generators().iter().all(|g| g.sign() == Sign::Plus), || "sign".into())?;
    let shipped = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/data/code13.stab"))
        .map_err(|e| e.to_string())?;
    let shipped = parse_code(&shipped).map_err(|e| e.to_string())?;
    ensure(pasted == shipped, || "differs from data/code13.stab".into())?;
    Ok(timing)
}

/// Group elements as (x, z) bit strings, sign ignored.
fn group_elements(code: &StabilizerCode) -> HashSet<(String, String)> {
    let key = |p: &PauliOperator| (p.x_bits().to_string(), p.z_bits().to_string());
    let gens = code.generators();
    (0..1usize << gens.len())
        .map(|mask| {
            let mut p = PauliOperator::identity(code.num_qubits());
            for (i, g) in gens.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    p = &p * g;
                }
            }
            key(&p)
        })
        .collect()
}

/// Smallest weight of a Pauli commuting with every generator but outside
/// the group, by enumerating all operators up to `max`.
fn brute_distance(code: &StabilizerCode, max: usize) -> Option<usize> {
    let n = code.num_qubits();
    let group = group_elements(code);
    for w in 1..=max {
        for support in (0..n).combinations(w) {
            for factors in std::iter::repeat_n(Factor::NONTRIVIAL, w).multi_cartesian_product() {
                let mut p = PauliOperator::identity(n);
                for (&q, &f) in support.iter().zip(&factors) {
                    p.set_factor(q, f);
                }
                let central = code.generators().iter().all(|g| g.commutes_with(&p).unwrap());
                let key = (p.x_bits().to_string(), p.z_bits().to_string());
                if central && !group.contains(&key) {
                    return Some(w);
                }
            }
        }
    }
    None
}

fn thirteen_verification() -> Result<String, String> {
    let start = Instant::now();
    let code = builtin(Builtin::Code13);
    ensure(code.validate().passed(), || "validate".into())?;
    let errors = enumerate_errors(13, 1).map_err(|e| e.to_string())?;
    ensure(errors.len() == 40, || format!("{} errors", errors.len()))?;
    let syndromes: HashSet<String> = errors
        .iter()
        .map(|e| code.syndrome(e).unwrap().to_string())
        .collect();
    ensure(syndromes.len() == 40, || format!("{} distinct syndromes", syndromes.len()))?;
    ensure(verify_distance3(&code, false).is_nondegenerate(), || "verify_distance3".into())?;
    let d = brute_distance(&code, 3);
    ensure(d == Some(3), || format!("brute-force distance {d:?}"))?;
    ensure(qpaste::verification::distance(&code, 3) == Some(3), || "library distance".into())?;
    ensure(best_k(13) == Some(7), || format!("best_k {:?}", best_k(13)))?;
    within(start, Duration::from_secs(1))
}

fn perfect_family() -> Result<String, String> {
    let start = Instant::now();
    for (j, n, k) in [(1, 5, 1), (2, 21, 15), (3, 85, 77), (4, 341, 331)] {
        let code = perfect(j).map_err(|e| e.to_string())?;
        let p = code.parameters();
        ensure(p.n == n && p.k == k, || format!("j={j}: n={} k={}", p.n, p.k))?;
        ensure(hamming_bound(n, k) == BoundVerdict::Saturated, || format!("j={j}: bound"))?;
        let r = verify_distance3(&code, false);
        ensure(r.is_nondegenerate(), || format!("j={j}: {r}"))?;
        ensure(r.syndromes_bijective(), || format!("j={j}: not bijective"))?;
        ensure(r.distinct_syndromes == 1usize << (2 * j + 2), || format!("j={j}: count"))?;
    }
    within(start, Duration::from_secs(5))
}

fn kl_agreement() -> Result<String, String> {
    let start = Instant::now();
    for b in [Builtin::Code5, Builtin::Code8] {
        let code = builtin(b);
        let errors = enumerate_errors(code.num_qubits(), 1).unwrap();
        let r = kl_check(&code, &errors, 1e-10).map_err(|e| e.to_string())?;
        ensure(r.passed() && r.full_rank(), || format!("{}: deviation {:e}, rank {}", b.name(), r.max_deviation, r.rank))?;
    }

    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut nondegenerate = Vec::new();
    for i in 0..20 {
        let code = match i % 4 {
            0 => random_variant(&mut rng, &builtin(Builtin::Code5)),
            1 => random_hamming_variant(&mut rng, 3),
            2 => random_variant(&mut rng, &builtin(Builtin::Code8)),
            _ => {
                let n = rng.random_range(7..=8);
                let a = n - 1;
                random_nondegenerate(&mut rng, n, a, 10_000)
                    .ok_or_else(|| format!("no nondegenerate [[{n}, {}]] found", n - a))?
            }
        };
        nondegenerate.push(code);
    }
    let mut arbitrary = Vec::new();
    while arbitrary.len() < 20 {
        let n = rng.random_range(2..=8);
        let a = rng.random_range(1..n);
        if let Some(code) = random_stabilizer(&mut rng, n, a, 4096) {
            arbitrary.push(code);
        }
    }

    let mut agreeing = 0;
    for (idx, code) in nondegenerate.iter().chain(&arbitrary).enumerate() {
        let syndrome_level = verify_distance3(code, false).is_nondegenerate();
        if idx < nondegenerate.len() {
            ensure(syndrome_level, || format!("sample {idx} not nondegenerate"))?;
        }
        let errors = enumerate_errors(code.num_qubits(), 1).unwrap();
        let dense = kl_check(code, &errors, 1e-10).map_err(|e| e.to_string())?.nondegenerate();
        ensure(dense == syndrome_level, || {
            format!("sample {idx}: kl {dense}, syndromes {syndrome_level}, {:?}", code.generators())
        })?;
        agreeing += 1;
    }
    let timing = within(start, Duration::from_secs(30))?;
    Ok(format!("{agreeing} codes agree, {timing}"))
}

fn closure() -> Result<String, String> {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let catalog_pair = (
        augment(&builtin(Builtin::Code8), 1, Placement::Append),
        PaddedCode::from(builtin(Builtin::Code5)),
    );
    let samples = std::iter::once(catalog_pair).chain((1..100).map(|_| random_pair(&mut rng)));
    let mut count = 0;
    for (idx, (larger, smaller)) in samples.enumerate() {
        let d = can_paste(&larger, &smaller);
        ensure(d.ok(), || format!("sample {idx}: precondition {d}"))?;
        let pasted = paste_padded(&larger, &smaller).map_err(|e| format!("sample {idx}: {e}"))?;
        ensure(pasted.validate().passed(), || format!("sample {idx}: invalid"))?;
        let r = verify_distance3(&pasted, false);
        ensure(r.is_nondegenerate(), || format!("sample {idx}: {r}"))?;
        if let Some(v) = prefix_split_violation(&pasted, &larger, &smaller) {
            return Err(format!("sample {idx}: {v}"));
        }
        count += 1;
    }
    let timing = within(start, Duration::from_secs(30))?;
    Ok(format!("{count} samples, {timing}"))
}

fn negative_preconditions() -> Result<String, String> {
    let cases: [(&str, PaddedCode, PaddedCode, PasteCheck); 4] = [
        ("code13 as larger", builtin(Builtin::Code13).into(), builtin(Builtin::Code5).into(), PasteCheck::XzRows),
        ("unpadded code8", builtin(Builtin::Code8).into(), builtin(Builtin::Code5).into(), PasteCheck::GeneratorCount),
        (
            "degenerate smaller",
            augment(&builtin(Builtin::Code8), 3, Placement::Append),
            degenerate_seven().into(),
            PasteCheck::Nondegenerate,
        ),
        (
            "degenerate larger",
            degenerate_ten().into(),
            augment(&builtin(Builtin::Code5), 1, Placement::Prepend),
            PasteCheck::Nondegenerate,
        ),
    ];
    let mut seen = HashSet::new();
    for (label, larger, smaller, expected) in cases {
        let failures = match paste_padded(&larger, &smaller) {
            Err(e) => e.failed_checks(),
            Ok(_) => return Err(format!("{label}: accepted")),
        };
        ensure(failures == vec![expected], || format!("{label}: {failures:?}"))?;
        seen.insert(expected.name());
    }
    ensure(seen.len() == 3, || format!("{seen:?}"))?;
    Ok(seen.into_iter().sorted().join(", "))
}

type Matrix = [[i32; 2]; 2];
type Criterion = (&'static str, fn() -> Result<String, String>);

fn real_matrix(f: Factor) -> Matrix {
    match f {
        Factor::I => [[1, 0], [0, 1]],
        Factor::X => [[0, 1], [1, 0]],
        Factor::Y => [[0, -1], [1, 0]],
        Factor::Z => [[1, 0], [0, -1]],
    }
}

fn matmul(a: Matrix, b: Matrix) -> Matrix {
    let mut out = [[0; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            out[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
        }
    }
    out
}

fn scaled(m: Matrix, s: i32) -> Matrix {
    m.map(|row| row.map(|v| v * s))
}

fn single_qubit_algebra() -> Result<String, String> {
    let mut pairs = 0;
    for p in Factor::ALL {
        for q in Factor::ALL {
            let (a, b) = (real_matrix(p), real_matrix(q));
            let ab = matmul(a, b);
            let ba = matmul(b, a);
            let product = &PauliOperator::single(1, 0, p) * &PauliOperator::single(1, 0, q);
            let s = if product.sign() == Sign::Plus { 1 } else { -1 };
            let got = scaled(real_matrix(product.factor(0)), s);
            ensure(got == ab, || format!("{p:?}·{q:?}: {got:?} vs {ab:?}"))?;
            let commutes = PauliOperator::single(1, 0, p)
                .commutes_with(&PauliOperator::single(1, 0, q))
                .unwrap();
            ensure(commutes == (ab == ba), || format!("{p:?},{q:?} commutation"))?;
            ensure(!commutes == (ab == scaled(ba, -1)), || format!("{p:?},{q:?} anticommutation"))?;
            pairs += 1;
        }
    }
    Ok(format!("{pairs} ordered pairs"))
}

fn main() {
    let criteria: [Criterion; 7] = [
        ("1 table reproduction", table_reproduction),
        ("2 thirteen-qubit verification", thirteen_verification),
        ("3 perfect family j=1..4", perfect_family),
        ("4 KL oracle agreement", kl_agreement),
        ("5 paste closure", closure),
        ("6 negative preconditions", negative_preconditions),
        ("7 single-qubit algebra", single_qubit_algebra),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(detail) => println!("PASS  {name}  ({detail})"),
            Err(detail) => {
                failed += 1;
                println!("FAIL  {name}  ({detail})");
            }
        }
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
