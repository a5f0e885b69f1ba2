mod common;

use common::{int, minor_entries, oracle_det, random_entries, rng, to_matrix};
use csmlap_core::{condense, desnanot_jacobi, det_condensation, LabeledMatrix, RingContext};
use rand::Rng;

/// Random matrix with roughly `zero_share` of its entries forced to zero.
fn sparse_entries(r: &mut rand_chacha::ChaCha8Rng, n: usize, zero_share: f64) -> Vec<Vec<i64>> {
    (0..n)
        .map(|_| {
            (0..n)
                .map(|_| {
                    if r.random_bool(zero_share) {
                        0
                    } else {
                        r.random_range(-9..=9)
                    }
                })
                .collect()
        })
        .collect()
}

#[test]
fn condensation_matches_oracle_with_fallbacks() {
    let mut r = rng(77);
    let mut with_fallback = 0;
    for trial in 0..500 {
        let n = r.random_range(2..=7);
        let m = if trial % 3 == 0 {
            sparse_entries(&mut r, n, 0.6)
        } else {
            random_entries(&mut r, n, -9, 9)
        };
        let a = LabeledMatrix::integers(&m).unwrap();
        let trace = condense(&a).unwrap();
        if !trace.fallback_events.is_empty() {
            with_fallback += 1;
        }
        assert_eq!(trace.determinant(), &int(oracle_det(&m)), "{m:?}");
    }
    assert!(
        with_fallback >= 50,
        "only {with_fallback} traces used the fallback"
    );
}

#[test]
fn layers_are_contiguous_minors() {
    let mut r = rng(78);
    for _ in 0..100 {
        let n = r.random_range(2..=6);
        let m = random_entries(&mut r, n, -9, 9);
        let trace = condense(&LabeledMatrix::integers(&m).unwrap()).unwrap();
        for layer in &trace.layers {
            let k = layer.order();
            for i in 0..layer.dim() {
                for j in 0..layer.dim() {
                    let rows: Vec<usize> = (i..i + k).collect();
                    let cols: Vec<usize> = (j..j + k).collect();
                    assert_eq!(
                        layer.get(i, j),
                        &int(oracle_det(&minor_entries(&m, &rows, &cols)))
                    );
                }
            }
        }
    }
}

#[test]
fn desnanot_jacobi_on_random_matrices() {
    let mut r = rng(79);
    let z11 = RingContext::modular(11).unwrap();
    for _ in 0..200 {
        let n = r.random_range(2..=6);
        let m = random_entries(&mut r, n, -9, 9);
        let dj = desnanot_jacobi(&LabeledMatrix::integers(&m).unwrap()).unwrap();
        assert!(dj.equal);
        let inner: Vec<usize> = (1..n - 1).collect();
        let expected = oracle_det(&minor_entries(&m, &inner, &inner)) * oracle_det(&m);
        assert_eq!(dj.lhs, int(expected));
        assert!(desnanot_jacobi(&to_matrix(&z11, &m)).unwrap().equal);
    }
    let s = LabeledMatrix::symbolic(4);
    assert!(desnanot_jacobi(&s).unwrap().equal);
}

#[test]
fn condensation_over_fields_and_polynomials() {
    let mut r = rng(80);
    let z13 = RingContext::modular(13).unwrap();
    for _ in 0..100 {
        let n = r.random_range(2..=6);
        let m = sparse_entries(&mut r, n, 0.4);
        assert_eq!(
            det_condensation(&to_matrix(&z13, &m)).unwrap(),
            z13.from_integer(oracle_det(&m))
        );
        assert_eq!(
            det_condensation(&to_matrix(&RingContext::Rational, &m)).unwrap(),
            RingContext::Rational.from_integer(oracle_det(&m))
        );
    }
    let s = LabeledMatrix::symbolic(5);
    assert_eq!(det_condensation(&s).unwrap(), s.det_leibniz().unwrap());
}

#[test]
fn all_zero_interior_still_exact() {
    let m = vec![
        vec![1, 2, 3, 4],
        vec![5, 0, 0, 6],
        vec![7, 0, 0, 8],
        vec![9, 1, 2, 3],
    ];
    let trace = condense(&LabeledMatrix::integers(&m).unwrap()).unwrap();
    assert!(!trace.fallback_events.is_empty());
    assert_eq!(trace.determinant(), &int(oracle_det(&m)));
}
