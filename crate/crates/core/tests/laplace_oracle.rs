mod common;

use common::{all_binary, int, oracle_det, random_entries, rng, to_matrix};
use csmlap_core::laplace::determinant;
use csmlap_core::{
    laplace_det, laplace_det_dropped, laplace_terms, Label, LabeledMatrix, OrderedIndexSet,
    RingContext, SignVariant, Subset,
};
use rand::Rng;

fn all_row_subsets(n: usize) -> impl Iterator<Item = Subset> {
    (0u32..(1 << n)).map(move |mask| {
        Subset::from_positions((0..n).filter(|p| mask & (1 << p) != 0).collect(), n).unwrap()
    })
}

#[test]
fn every_binary_three_by_three_every_row_set() {
    for m in all_binary(3) {
        let a = LabeledMatrix::integers(&m).unwrap();
        let expected = int(oracle_det(&m));
        for k in all_row_subsets(3) {
            for v in SignVariant::ALL {
                assert_eq!(laplace_det(&a, &k, v).unwrap(), expected, "{m:?} {k:?} {v}");
                assert_eq!(laplace_det_dropped(&a, &k, v).unwrap(), expected);
            }
        }
    }
}

#[test]
fn random_five_by_five_every_row_set() {
    let mut r = rng(2024);
    for _ in 0..200 {
        let m = random_entries(&mut r, 5, -9, 9);
        let a = LabeledMatrix::integers(&m).unwrap();
        let expected = int(oracle_det(&m));
        for k in all_row_subsets(5) {
            for v in SignVariant::ALL {
                assert_eq!(laplace_det(&a, &k, v).unwrap(), expected);
                assert_eq!(laplace_det_dropped(&a, &k, v).unwrap(), expected);
            }
        }
    }
}

#[test]
fn variants_agree_term_by_term() {
    let mut r = rng(7);
    for _ in 0..100 {
        let n = r.random_range(1..=6);
        let a = LabeledMatrix::integers(&random_entries(&mut r, n, -9, 9)).unwrap();
        for k in all_row_subsets(n) {
            let pos = laplace_terms(&a, &k, SignVariant::Position).unwrap();
            let rank = laplace_terms(&a, &k, SignVariant::Rank).unwrap();
            assert_eq!(pos, rank);
        }
    }
}

#[test]
fn relabelling_by_an_order_isomorphism_changes_nothing() {
    let mut r = rng(8);
    let rows = OrderedIndexSet::new(
        ["p", "q", "r", "s", "t"]
            .iter()
            .map(|s| Label::name(*s))
            .collect(),
    )
    .unwrap();
    let cols =
        OrderedIndexSet::new([-4, 0, 3, 10, 77].iter().map(|&v| Label::int(v)).collect()).unwrap();
    for _ in 0..50 {
        let m = random_entries(&mut r, 5, -9, 9);
        let a = LabeledMatrix::integers(&m).unwrap();
        let b = a.relabel(rows.clone(), cols.clone()).unwrap();
        for k in all_row_subsets(5) {
            for v in SignVariant::ALL {
                assert_eq!(
                    laplace_det(&b, &k, v).unwrap(),
                    laplace_det(&a, &k, v).unwrap()
                );
            }
        }
    }
}

#[test]
fn larger_matrices_over_other_rings() {
    let mut r = rng(9);
    let z13 = RingContext::modular(13).unwrap();
    for _ in 0..20 {
        let m = random_entries(&mut r, 7, -9, 9);
        let a = to_matrix(&z13, &m);
        let k = Subset::from_positions(vec![1, 4, 5], 7).unwrap();
        assert_eq!(
            laplace_det(&a, &k, SignVariant::Rank).unwrap(),
            z13.from_integer(oracle_det(&m))
        );
    }
    let s = LabeledMatrix::symbolic(5);
    let k = Subset::from_positions(vec![0, 2], 5).unwrap();
    assert_eq!(
        laplace_det(&s, &k, SignVariant::Position).unwrap(),
        s.det_leibniz().unwrap()
    );
    let big = LabeledMatrix::integers(&random_entries(&mut r, 8, -9, 9)).unwrap();
    assert_eq!(determinant(&big).unwrap(), big.det_leibniz().unwrap());
}

#[test]
fn laplace_rows_on_random_five_by_five_cover_the_two_row_case() {
    let mut r = rng(10);
    let m = random_entries(&mut r, 5, -9, 9);
    let a = LabeledMatrix::integers(&m).unwrap();
    let k = a.rows().subset(&[Label::int(1), Label::int(2)]).unwrap();
    let terms = laplace_terms(&a, &k, SignVariant::Rank).unwrap();
    assert_eq!(terms.len(), 10);
    assert_eq!(
        laplace_det(&a, &k, SignVariant::Rank).unwrap(),
        int(oracle_det(&m))
    );
}
