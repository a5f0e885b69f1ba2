#![allow(dead_code)]

use csmlap_core::{CsmPartition, LabeledMatrix, RingContext, RingValue, Subset};
use num_bigint::BigInt;
use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Independent determinant: every permutation of `0..n` generated by Heap's
/// algorithm, sign from the cycle decomposition, products in plain `BigInt`.
pub fn oracle_det(m: &[Vec<i64>]) -> BigInt {
    let n = m.len();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut total = BigInt::from(0);
    let mut visit = |p: &[usize]| {
        let mut seen = vec![false; n];
        let mut transpositions = 0;
        for s in 0..n {
            let mut len = 0;
            let mut x = s;
            while !seen[x] {
                seen[x] = true;
                x = p[x];
                len += 1;
            }
            if len > 0 {
                transpositions += len - 1;
            }
        }
        let mut prod = BigInt::from(1);
        for (i, &j) in p.iter().enumerate() {
            prod *= m[i][j];
        }
        if transpositions % 2 == 0 {
            total += prod;
        } else {
            total -= prod;
        }
    };
    // Heap's algorithm, iterative form
    let mut c = vec![0usize; n];
    visit(&perm);
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            visit(&perm);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    total
}

pub fn random_entries(rng: &mut ChaCha8Rng, n: usize, lo: i64, hi: i64) -> Vec<Vec<i64>> {
    (0..n)
        .map(|_| (0..n).map(|_| rng.random_range(lo..=hi)).collect())
        .collect()
}

pub fn to_matrix(ctx: &RingContext, m: &[Vec<i64>]) -> LabeledMatrix {
    LabeledMatrix::from_rows(
        ctx.clone(),
        m.iter()
            .map(|r| r.iter().map(|&v| ctx.from_integer(v)).collect())
            .collect(),
    )
    .unwrap()
}

pub fn int(v: impl Into<BigInt>) -> RingValue {
    RingValue::Integer(v.into())
}

fn random_subset(rng: &mut ChaCha8Rng, pool: &[usize], k: usize, universe: usize) -> Subset {
    let picked: Vec<usize> = pool.choose_multiple(rng, k).copied().collect();
    Subset::from_positions(picked, universe).unwrap()
}

/// `|F|` uniform in `0..n`, then `|I|` uniform in `0..=n-|F|`, then uniform sets.
pub fn random_partition(rng: &mut ChaCha8Rng, a: &LabeledMatrix) -> CsmPartition {
    let n = a.nrows();
    let all: Vec<usize> = (0..n).collect();
    let fk = rng.random_range(0..n);
    let f = random_subset(rng, &all, fk, n);
    let g = random_subset(rng, &all, fk, n);
    let rest: Vec<usize> = all.iter().copied().filter(|&p| !f.contains(p)).collect();
    let ik = rng.random_range(0..=rest.len());
    let i = random_subset(rng, &rest, ik, n);
    CsmPartition::new(a.rows(), a.cols(), f, g, i).unwrap()
}

/// Every valid `(F, G, I)` for an `n x n` matrix.
pub fn all_partitions(a: &LabeledMatrix) -> Vec<CsmPartition> {
    let n = a.nrows();
    let mut out = Vec::new();
    for fk in 0..=n {
        for f in a.rows().k_subsets(fk).unwrap() {
            for g in a.cols().k_subsets(fk).unwrap() {
                let rest = f.complement();
                for mask in 0u32..(1 << rest.len()) {
                    let i: Vec<usize> = rest
                        .positions()
                        .iter()
                        .enumerate()
                        .filter(|(b, _)| mask & (1 << b) != 0)
                        .map(|(_, &p)| p)
                        .collect();
                    let i = Subset::from_positions(i, n).unwrap();
                    out.push(
                        CsmPartition::new(a.rows(), a.cols(), f.clone(), g.clone(), i).unwrap(),
                    );
                }
            }
        }
    }
    out
}

/// All `2^(n*n)` matrices with entries in `{0, 1}`.
pub fn all_binary(n: usize) -> impl Iterator<Item = Vec<Vec<i64>>> {
    (0u32..(1 << (n * n))).map(move |bits| {
        (0..n)
            .map(|r| {
                (0..n)
                    .map(|c| i64::from((bits >> (r * n + c)) & 1))
                    .collect()
            })
            .collect()
    })
}

pub fn minor_entries(m: &[Vec<i64>], rows: &[usize], cols: &[usize]) -> Vec<Vec<i64>> {
    rows.iter()
        .map(|&r| cols.iter().map(|&c| m[r][c]).collect())
        .collect()
}

/// `det A[F|G] * det A` by the independent permutation oracle.
pub fn oracle_csm_lhs(m: &[Vec<i64>], p: &CsmPartition) -> BigInt {
    oracle_det(&minor_entries(m, p.f().positions(), p.g().positions())) * oracle_det(m)
}
