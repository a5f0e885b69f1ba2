//! Seeded inputs shared by the benchmarks.

use csmlap_core::{CsmPartition, LabeledMatrix, RingContext};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Integer matrix with entries uniform in `[-9, 9]`.
pub fn random_integer_matrix(n: usize, seed: u64) -> LabeledMatrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let ctx = RingContext::Integer;
    let rows = (0..n)
        .map(|_| {
            (0..n)
                .map(|_| ctx.from_integer(rng.random_range(-9i64..=9)))
                .collect()
        })
        .collect();
    LabeledMatrix::from_rows(ctx, rows).expect("square")
}

/// `F = {1..k}`, `G = {n-k+1..n}`, `I` = the next `m` rows after `F`.
pub fn block_partition(a: &LabeledMatrix, k: usize, m: usize) -> CsmPartition {
    let n = a.nrows();
    let rows = a.rows();
    let f = rows.subset(&rows.labels()[..k]).expect("labels exist");
    let g = a
        .cols()
        .subset(&a.cols().labels()[n - k..])
        .expect("labels exist");
    let i = rows.subset(&rows.labels()[k..k + m]).expect("labels exist");
    CsmPartition::new(rows, a.cols(), f, g, i).expect("valid partition")
}
