//! Laplace expansion along an arbitrary row subset, for matrices labelled by
//! arbitrary ordered sets.
//!
//! With `K` the fixed rows, `K'` their complement and `L` running over the
//! column subsets of size `|K|`,
//!
//! ```text
//! det A = (-1)^(sum_K c(x)) * sum_L (-1)^(sum_L c(x)) det A[K|L] det A[K'|L']
//! ```
//!
//! where `c` is either the position or the rank function of the row (resp.
//! column) order. Both choices give the same value because `|K| = |L|`.

use serde::Serialize;

use crate::error::Result;
use crate::index::{Label, Sign, SignVariant, Subset};
use crate::matrix::{LabeledMatrix, Select};
use crate::ring::{self, RingValue};

/// Minors up to this size go straight to the permutation sum.
pub const LEIBNIZ_MINOR_LIMIT: usize = 4;

/// One summand of an expansion.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExpansionTerm {
    /// Labels of the variable column subset (`L`, or `J` in the common-submatrix form).
    pub labels: Vec<Label>,
    #[serde(skip)]
    pub subset: Subset,
    /// Total sign the term carries into the sum.
    pub sign: Sign,
    pub minor_first: RingValue,
    pub minor_second: RingValue,
    /// `sign * minor_first * minor_second`.
    pub product: RingValue,
}

impl ExpansionTerm {
    pub(crate) fn new(
        labels: Vec<Label>,
        subset: Subset,
        sign: Sign,
        minor_first: RingValue,
        minor_second: RingValue,
    ) -> Result<Self> {
        let product = sign.apply(&minor_first.mul(&minor_second)?);
        Ok(Self {
            labels,
            subset,
            sign,
            minor_first,
            minor_second,
            product,
        })
    }
}

/// Determinant of `A[rows|cols]` (positions): permutation sum for small minors,
/// first-row expansion above [`LEIBNIZ_MINOR_LIMIT`].
pub(crate) fn minor_det(a: &LabeledMatrix, rows: &[usize], cols: &[usize]) -> Result<RingValue> {
    let n = rows.len();
    if n <= LEIBNIZ_MINOR_LIMIT {
        return a.leibniz_minor(rows, cols);
    }
    let mut total = a.context().zero();
    let mut rest = Vec::with_capacity(n - 1);
    for (j, &c) in cols.iter().enumerate() {
        let e = a.at(rows[0], c);
        if e.is_zero() {
            continue;
        }
        rest.clear();
        rest.extend(cols.iter().copied().filter(|&x| x != c));
        let term = e.mul(&minor_det(a, &rows[1..], &rest)?)?;
        total = total.add(&Sign::from_exponent(j).apply(&term))?;
    }
    Ok(total)
}

/// Determinant through the minor routine used inside expansions.
pub fn determinant(a: &LabeledMatrix) -> Result<RingValue> {
    let n = a.require_square()?;
    let idx: Vec<usize> = (0..n).collect();
    minor_det(a, &idx, &idx)
}

/// Terms of the expansion along rows `k`, one per column subset in lexicographic order.
pub fn laplace_terms(
    a: &LabeledMatrix,
    k: &Subset,
    variant: SignVariant,
) -> Result<Vec<ExpansionTerm>> {
    a.require_square()?;
    a.rows().check(k)?;
    let k_prime = k.complement();
    let outer = a.rows().sign_of_sum(&a.rows().full(), k, variant)?;
    let all_cols = a.cols().full();
    a.cols()
        .k_subsets(k.len())?
        .map(|l| {
            let l_prime = l.complement();
            let inner = a.cols().sign_of_sum(&all_cols, &l, variant)?;
            let first = minor_det(a, k.positions(), l.positions())?;
            let second = minor_det(a, k_prime.positions(), l_prime.positions())?;
            ExpansionTerm::new(a.cols().labels_of(&l)?, l, outer * inner, first, second)
        })
        .collect()
}

/// `det A` by expansion along the row subset `k`.
pub fn laplace_det(a: &LabeledMatrix, k: &Subset, variant: SignVariant) -> Result<RingValue> {
    let terms = laplace_terms(a, k, variant)?;
    ring::sum(a.context(), terms.iter().map(|t| &t.product))
}

/// Same expansion with the complementary minor taken as `det A(K|L)`, built by
/// dropping rows and columns rather than keeping the complements.
pub fn laplace_det_dropped(
    a: &LabeledMatrix,
    k: &Subset,
    variant: SignVariant,
) -> Result<RingValue> {
    a.require_square()?;
    a.rows().check(k)?;
    let outer = a.rows().sign_of_sum(&a.rows().full(), k, variant)?;
    let all_cols = a.cols().full();
    let mut total = a.context().zero();
    for l in a.cols().k_subsets(k.len())? {
        let inner = a.cols().sign_of_sum(&all_cols, &l, variant)?;
        let kept = a.submatrix(Select::Keep(k), Select::Keep(&l))?;
        let dropped = a.submatrix(Select::Drop(k), Select::Drop(&l))?;
        let product = determinant(&kept)?.mul(&determinant(&dropped)?)?;
        total = total.add(&(outer * inner).apply(&product))?;
    }
    Ok(total)
}
