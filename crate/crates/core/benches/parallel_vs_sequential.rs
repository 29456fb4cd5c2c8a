use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use qpaste::catalog::{builtin, perfect, Builtin};
use qpaste::kl::{kl_check_with, DEFAULT_QUBIT_CAP};
use qpaste::verification::{enumerate_errors, find_logical_with, verify_distance3_with};
use qpaste::Execution;

const MODES: [(&str, Execution); 2] = [
    ("sequential", Execution::Sequential),
    ("parallel", Execution::Parallel),
];

fn syndrome_distinctness(c: &mut Criterion) {
    let mut group = c.benchmark_group("verify_distance3");
    for j in [2usize, 3, 4] {
        let code = perfect(j).unwrap();
        for (label, exec) in MODES {
            group.bench_with_input(BenchmarkId::new(label, code.num_qubits()), &code, |b, code| {
                b.iter(|| verify_distance3_with(black_box(code), false, exec))
            });
        }
    }
    group.finish();
}

fn brute_force_distance(c: &mut Criterion) {
    let mut group = c.benchmark_group("distance_w3");
    group.sample_size(20);
    let codes = [builtin(Builtin::Code13), perfect(2).unwrap()];
    for code in &codes {
        for (label, exec) in MODES {
            group.bench_with_input(BenchmarkId::new(label, code.num_qubits()), code, |b, code| {
                b.iter(|| find_logical_with(black_box(code), 3, exec))
            });
        }
    }
    group.finish();
}

fn dense_oracle(c: &mut Criterion) {
    let mut group = c.benchmark_group("kl_check");
    group.sample_size(10);
    for code in [builtin(Builtin::Code5), builtin(Builtin::Code8)] {
        let errors = enumerate_errors(code.num_qubits(), 1).unwrap();
        for (label, exec) in MODES {
            group.bench_with_input(BenchmarkId::new(label, code.num_qubits()), &code, |b, code| {
                b.iter(|| kl_check_with(black_box(code), &errors, 1e-10, DEFAULT_QUBIT_CAP, exec).unwrap())
            });
        }
    }
    group.finish();
}

criterion_group!(benches, syndrome_distinctness, brute_force_distance, dense_oracle);
criterion_main!(benches);
