//! Desnanot–Jacobi identity and Dodgson condensation.
//!
//! Layer `k` holds every `k x k` contiguous minor of `A`. Layer `k + 1` follows
//! from the two previous ones by
//!
//! ```text
//! M_{k+1}(i, j) = (M_k(i, j) M_k(i+1, j+1) - M_k(i, j+1) M_k(i+1, j)) / M_{k-1}(i+1, j+1)
//! ```
//!
//! A zero divisor does not stop the algorithm: only the affected minor is
//! recomputed by Laplace expansion and recorded as a fallback event.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::index::{SignVariant, Subset};
use crate::laplace::laplace_det;
use crate::matrix::{LabeledMatrix, Select};
use crate::ring::{RingContext, RingValue};

/// Both sides of `det A(1,n|1,n) det A = det A(1|1) det A(n|n) - det A(n|1) det A(1|n)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DesnanotJacobi {
    pub lhs: RingValue,
    pub rhs: RingValue,
    pub equal: bool,
}

/// Evaluates both sides of the identity with the permutation-sum determinant.
/// "First" and "last" refer to positions in the row and column orders.
pub fn desnanot_jacobi(a: &LabeledMatrix) -> Result<DesnanotJacobi> {
    let n = a.require_square()?;
    if n < 2 {
        return Err(Error::TooSmall { size: n, min: 2 });
    }
    let one = |p: usize| Subset::from_positions(vec![p], n);
    let (first, last) = (one(0)?, one(n - 1)?);
    let ends = Subset::from_positions(vec![0, n - 1], n)?;
    let drop = |r: &Subset, c: &Subset| -> Result<RingValue> {
        a.submatrix(Select::Drop(r), Select::Drop(c))?.det_leibniz()
    };
    let lhs = drop(&ends, &ends)?.mul(&a.det_leibniz()?)?;
    let rhs = drop(&first, &first)?
        .mul(&drop(&last, &last)?)?
        .sub(&drop(&last, &first)?.mul(&drop(&first, &last)?)?)?;
    Ok(DesnanotJacobi {
        equal: lhs == rhs,
        lhs,
        rhs,
    })
}

/// The `order x order` contiguous minors of a matrix, indexed by their top-left corner.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinorLayer {
    order: usize,
    dim: usize,
    entries: Vec<RingValue>,
}

impl MinorLayer {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &RingValue {
        &self.entries[i * self.dim + j]
    }
}

/// A minor that was computed by expansion because its divisor vanished.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct FallbackEvent {
    pub order: usize,
    pub row: usize,
    pub col: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CondensationTrace {
    /// Orders `1, 2, ..., n`; layer `k` has dimension `n - k + 1`.
    pub layers: Vec<MinorLayer>,
    pub fallback_events: Vec<FallbackEvent>,
    determinant: RingValue,
}

impl CondensationTrace {
    pub fn determinant(&self) -> &RingValue {
        &self.determinant
    }
}

fn contiguous_minor(a: &LabeledMatrix, order: usize, i: usize, j: usize) -> Result<RingValue> {
    let n = a.nrows();
    let rows = Subset::from_positions((i..i + order).collect(), n)?;
    let cols = Subset::from_positions((j..j + order).collect(), n)?;
    let block = a.select(&rows, &cols)?;
    let first_row = Subset::from_positions(vec![0], order)?;
    laplace_det(&block, &first_row, SignVariant::Rank)
}

/// Runs the full condensation and keeps every layer.
pub fn condense(a: &LabeledMatrix) -> Result<CondensationTrace> {
    let n = a.require_square()?;
    let ctx: &RingContext = a.context();
    if !ctx.is_integral_domain() {
        return Err(Error::NotIntegralDomain(ctx.to_string()));
    }
    if n == 0 {
        return Ok(CondensationTrace {
            layers: Vec::new(),
            fallback_events: Vec::new(),
            determinant: ctx.one(),
        });
    }
    let mut layers = vec![MinorLayer {
        order: 1,
        dim: n,
        entries: (0..n).flat_map(|i| a.row(i).iter().cloned()).collect(),
    }];
    let mut fallback_events = Vec::new();
    // the order-0 layer is all ones
    let ones = MinorLayer {
        order: 0,
        dim: n + 1,
        entries: vec![ctx.one(); (n + 1) * (n + 1)],
    };
    for order in 2..=n {
        let cur = &layers[order - 2];
        let prev = if order == 2 {
            &ones
        } else {
            &layers[order - 3]
        };
        let dim = n - order + 1;
        let mut entries = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                let divisor = prev.get(i + 1, j + 1);
                let value = if divisor.is_zero() {
                    fallback_events.push(FallbackEvent {
                        order,
                        row: i,
                        col: j,
                    });
                    contiguous_minor(a, order, i, j)?
                } else {
                    let cross = cur
                        .get(i, j)
                        .mul(cur.get(i + 1, j + 1))?
                        .sub(&cur.get(i, j + 1).mul(cur.get(i + 1, j))?)?;
                    cross.exact_div(divisor)?
                };
                entries.push(value);
            }
        }
        layers.push(MinorLayer {
            order,
            dim,
            entries,
        });
    }
    let determinant = layers.last().expect("n >= 1").get(0, 0).clone();
    Ok(CondensationTrace {
        layers,
        fallback_events,
        determinant,
    })
}

/// `det A` by Dodgson condensation over an integral domain.
pub fn det_condensation(a: &LabeledMatrix) -> Result<RingValue> {
    condense(a).map(|t| t.determinant)
}
