use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use csmlap_bench::random_integer_matrix;
use csmlap_core::laplace::determinant;
use csmlap_core::{det_condensation, laplace_det, LabeledMatrix, SignVariant, Subset};

fn determinants(c: &mut Criterion) {
    let mut group = c.benchmark_group("determinant");
    for n in [4, 6, 8] {
        let a = random_integer_matrix(n, n as u64);
        group.bench_with_input(BenchmarkId::new("leibniz", n), &a, |b, a| {
            b.iter(|| black_box(a).det_leibniz().unwrap())
        });
        group.bench_with_input(BenchmarkId::new("row-expansion", n), &a, |b, a| {
            b.iter(|| determinant(black_box(a)).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("condensation", n), &a, |b, a| {
            b.iter(|| det_condensation(black_box(a)).unwrap())
        });
        let k = Subset::from_positions(vec![0, 1], n).unwrap();
        group.bench_with_input(BenchmarkId::new("laplace-two-rows", n), &a, |b, a| {
            b.iter(|| laplace_det(black_box(a), &k, SignVariant::Rank).unwrap())
        });
    }
    group.finish();

    let s = LabeledMatrix::symbolic(5);
    c.bench_function("symbolic-5x5/leibniz", |b| {
        b.iter(|| black_box(&s).det_leibniz().unwrap())
    });
    c.bench_function("symbolic-5x5/condensation", |b| {
        b.iter(|| det_condensation(black_box(&s)).unwrap())
    });
}

criterion_group!(benches, determinants);
criterion_main!(benches);
