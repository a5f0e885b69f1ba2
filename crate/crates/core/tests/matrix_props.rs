mod common;

use common::{int, oracle_det, random_entries, rng, to_matrix};
use csmlap_core::{Label, LabeledMatrix, RingContext, Select, Subset};
use proptest::prelude::*;
use rand::Rng;

fn entries(max_n: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1..=max_n).prop_flat_map(|n| prop::collection::vec(prop::collection::vec(-9_i64..=9, n), n))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn leibniz_agrees_with_heap_permutations(m in entries(6)) {
        let a = LabeledMatrix::integers(&m).unwrap();
        prop_assert_eq!(a.det_leibniz().unwrap(), int(oracle_det(&m)));
    }

    #[test]
    fn keep_complement_equals_drop(m in entries(6), rk in any::<u32>(), ck in any::<u32>()) {
        let a = LabeledMatrix::integers(&m).unwrap();
        let n = m.len();
        let rows = Subset::from_positions((0..n).filter(|p| rk & (1 << p) != 0).collect(), n).unwrap();
        let cols = Subset::from_positions((0..n).filter(|p| ck & (1 << p) != 0).collect(), n).unwrap();
        let kept = a
            .submatrix(Select::Keep(&rows.complement()), Select::Keep(&cols.complement()))
            .unwrap();
        let dropped = a.submatrix(Select::Drop(&rows), Select::Drop(&cols)).unwrap();
        prop_assert_eq!(kept, dropped);
    }

    #[test]
    fn type_two_operations_preserve_det(m in entries(5), i in 0usize..5, j in 0usize..5) {
        let n = m.len();
        let (i, j) = (i % n, j % n);
        prop_assume!(i != j);
        let a = LabeledMatrix::integers(&m).unwrap();
        let (li, lj) = (Label::int(i as i64 + 1), Label::int(j as i64 + 1));
        let det = a.det_leibniz().unwrap();
        prop_assert_eq!(a.row_op_sub(&li, &lj).unwrap().det_leibniz().unwrap(), det.clone());
        prop_assert_eq!(a.col_op_add(&li, &lj).unwrap().det_leibniz().unwrap(), det);
    }

    #[test]
    fn zero_column_kills_det(m in entries(6), c in 0usize..6) {
        let n = m.len();
        let mut m = m;
        for row in &mut m {
            row[c % n] = 0;
        }
        prop_assert!(LabeledMatrix::integers(&m).unwrap().det_leibniz().unwrap().is_zero());
    }
}

#[test]
fn transpose_keeps_det() {
    let mut r = rng(11);
    for _ in 0..200 {
        let m = random_entries(&mut r, 4, -9, 9);
        let a = LabeledMatrix::integers(&m).unwrap();
        assert_eq!(
            a.transpose().det_leibniz().unwrap(),
            a.det_leibniz().unwrap()
        );
    }
}

#[test]
fn leibniz_on_nine_by_nine_matches_oracle() {
    let mut r = rng(5);
    for _ in 0..2 {
        let m = random_entries(&mut r, 9, -9, 9);
        assert_eq!(
            LabeledMatrix::integers(&m).unwrap().det_leibniz().unwrap(),
            int(oracle_det(&m))
        );
    }
}

#[test]
fn empty_matrix_has_unit_det() {
    let a = LabeledMatrix::identity(0, RingContext::Integer);
    assert_eq!(a.det_leibniz().unwrap(), int(1));
}

#[test]
fn modular_det_is_reduced_integer_det() {
    let z7 = RingContext::modular(7).unwrap();
    let mut r = rng(3);
    for _ in 0..100 {
        let n = r.random_range(1..=5);
        let m = random_entries(&mut r, n, -20, 20);
        let expected = z7.from_integer(oracle_det(&m));
        assert_eq!(to_matrix(&z7, &m).det_leibniz().unwrap(), expected);
    }
}
