//! Dense matrices whose rows and columns are addressed by labels.

mod file;
mod leibniz;

use std::fmt;

use crate::error::{Error, Result};
use crate::index::{Label, OrderedIndexSet, Subset};
use crate::ring::{RingContext, RingValue};

pub use leibniz::LEIBNIZ_CAP;

/// Row or column selection for [`LabeledMatrix::submatrix`]: keep the listed
/// labels (`A[X|..]`) or drop them (`A(X|..)`).
#[derive(Clone, Copy, Debug)]
pub enum Select<'a> {
    Keep(&'a Subset),
    Drop(&'a Subset),
}

impl Select<'_> {
    fn resolve(&self, set: &OrderedIndexSet) -> Result<Subset> {
        match self {
            Select::Keep(s) => {
                set.check(s)?;
                Ok((*s).clone())
            }
            Select::Drop(s) => set.complement(s),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledMatrix {
    rows: OrderedIndexSet,
    cols: OrderedIndexSet,
    context: RingContext,
    entries: Vec<RingValue>,
}

impl LabeledMatrix {
    /// Row-major entries; every entry must belong to `context`.
    pub fn new(
        rows: OrderedIndexSet,
        cols: OrderedIndexSet,
        context: RingContext,
        entries: Vec<RingValue>,
    ) -> Result<Self> {
        if entries.len() != rows.len() * cols.len() {
            return Err(Error::ShapeMismatch(format!(
                "{} entries for a {}x{} matrix",
                entries.len(),
                rows.len(),
                cols.len()
            )));
        }
        if let Some(bad) = entries.iter().find(|e| !e.belongs_to(&context)) {
            return Err(Error::ContextMismatch {
                left: context.to_string(),
                right: bad.context().to_string(),
            });
        }
        Ok(Self {
            rows,
            cols,
            context,
            entries,
        })
    }

    pub fn from_fn<F>(
        rows: OrderedIndexSet,
        cols: OrderedIndexSet,
        context: RingContext,
        mut f: F,
    ) -> Result<Self>
    where
        F: FnMut(usize, usize) -> RingValue,
    {
        let mut entries = Vec::with_capacity(rows.len() * cols.len());
        for r in 0..rows.len() {
            for c in 0..cols.len() {
                entries.push(f(r, c));
            }
        }
        Self::new(rows, cols, context, entries)
    }

    /// Rows and columns labelled `1..n` and `1..m`.
    pub fn from_rows(context: RingContext, rows: Vec<Vec<RingValue>>) -> Result<Self> {
        let ncols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(Error::ShapeMismatch("ragged rows".into()));
        }
        let nrows = rows.len();
        Self::new(
            OrderedIndexSet::natural(nrows),
            OrderedIndexSet::natural(ncols),
            context,
            rows.into_iter().flatten().collect(),
        )
    }

    /// Integer matrix with natural labels.
    pub fn integers<R: AsRef<[i64]>>(rows: &[R]) -> Result<Self> {
        let ctx = RingContext::Integer;
        let rows = rows
            .iter()
            .map(|r| r.as_ref().iter().map(|&v| ctx.from_integer(v)).collect())
            .collect();
        Self::from_rows(ctx, rows)
    }

    pub fn zero(rows: OrderedIndexSet, cols: OrderedIndexSet, context: RingContext) -> Self {
        let zero = context.zero();
        let entries = vec![zero; rows.len() * cols.len()];
        Self {
            rows,
            cols,
            context,
            entries,
        }
    }

    pub fn identity(n: usize, context: RingContext) -> Self {
        let (zero, one) = (context.zero(), context.one());
        Self::from_fn(
            OrderedIndexSet::natural(n),
            OrderedIndexSet::natural(n),
            context,
            |r, c| if r == c { one.clone() } else { zero.clone() },
        )
        .expect("entries match context")
    }

    /// The generic `n x n` matrix over `Z[a11, ..., ann]` (`a{i}_{j}` once `n > 9`).
    pub fn symbolic(n: usize) -> Self {
        let name = |i: usize, j: usize| {
            if n > 9 {
                format!("a{i}_{j}")
            } else {
                format!("a{i}{j}")
            }
        };
        let names: Vec<String> = (1..=n)
            .flat_map(|i| (1..=n).map(move |j| name(i, j)))
            .collect();
        let ctx = RingContext::polynomial(names.clone()).expect("valid names");
        let entries = names
            .iter()
            .map(|v| ctx.indeterminate(v).expect("declared"))
            .collect();
        Self::new(
            OrderedIndexSet::natural(n),
            OrderedIndexSet::natural(n),
            ctx,
            entries,
        )
        .expect("consistent shape")
    }

    pub fn rows(&self) -> &OrderedIndexSet {
        &self.rows
    }

    pub fn cols(&self) -> &OrderedIndexSet {
        &self.cols
    }

    pub fn context(&self) -> &RingContext {
        &self.context
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn is_square(&self) -> bool {
        self.nrows() == self.ncols()
    }

    pub fn require_square(&self) -> Result<usize> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.nrows(),
                cols: self.ncols(),
            });
        }
        Ok(self.nrows())
    }

    /// Entry by row and column position.
    pub fn at(&self, r: usize, c: usize) -> &RingValue {
        &self.entries[r * self.ncols() + c]
    }

    pub fn get(&self, row: &Label, col: &Label) -> Result<&RingValue> {
        Ok(self.at(self.rows.index_of(row)?, self.cols.index_of(col)?))
    }

    /// Copy with one entry replaced.
    pub fn with_entry(&self, row: &Label, col: &Label, value: RingValue) -> Result<Self> {
        if !value.belongs_to(&self.context) {
            return Err(Error::ContextMismatch {
                left: self.context.to_string(),
                right: value.context().to_string(),
            });
        }
        let (r, c) = (self.rows.index_of(row)?, self.cols.index_of(col)?);
        let mut out = self.clone();
        let n = out.ncols();
        out.entries[r * n + c] = value;
        Ok(out)
    }

    pub fn row(&self, r: usize) -> &[RingValue] {
        let n = self.ncols();
        &self.entries[r * n..(r + 1) * n]
    }

    /// `A[X|Y]`, `A(X|Y)` and the mixed forms, keeping labels and their order.
    pub fn submatrix(&self, rows: Select<'_>, cols: Select<'_>) -> Result<Self> {
        let rs = rows.resolve(&self.rows)?;
        let cs = cols.resolve(&self.cols)?;
        self.select(&rs, &cs)
    }

    /// `A[X|Y]` for position subsets.
    pub fn select(&self, rows: &Subset, cols: &Subset) -> Result<Self> {
        let row_labels = self.rows.labels_of(rows)?;
        let col_labels = self.cols.labels_of(cols)?;
        let mut entries = Vec::with_capacity(rows.len() * cols.len());
        for &r in rows.positions() {
            for &c in cols.positions() {
                entries.push(self.at(r, c).clone());
            }
        }
        Ok(Self {
            rows: OrderedIndexSet::new(row_labels)?,
            cols: OrderedIndexSet::new(col_labels)?,
            context: self.context.clone(),
            entries,
        })
    }

    /// Replaces row `i` by `row i - row j`.
    pub fn row_op_sub(&self, i: &Label, j: &Label) -> Result<Self> {
        if i == j {
            return Err(Error::SameLabel(i.to_string()));
        }
        let (ri, rj) = (self.rows.index_of(i)?, self.rows.index_of(j)?);
        let mut out = self.clone();
        let n = self.ncols();
        for c in 0..n {
            out.entries[ri * n + c] = self.at(ri, c).sub(self.at(rj, c))?;
        }
        Ok(out)
    }

    /// Replaces column `i` by `column i + column j`.
    pub fn col_op_add(&self, i: &Label, j: &Label) -> Result<Self> {
        if i == j {
            return Err(Error::SameLabel(i.to_string()));
        }
        let (ci, cj) = (self.cols.index_of(i)?, self.cols.index_of(j)?);
        let mut out = self.clone();
        let n = self.ncols();
        for r in 0..self.nrows() {
            out.entries[r * n + ci] = self.at(r, ci).add(self.at(r, cj))?;
        }
        Ok(out)
    }

    pub fn transpose(&self) -> Self {
        let mut entries = Vec::with_capacity(self.entries.len());
        for c in 0..self.ncols() {
            for r in 0..self.nrows() {
                entries.push(self.at(r, c).clone());
            }
        }
        Self {
            rows: self.cols.clone(),
            cols: self.rows.clone(),
            context: self.context.clone(),
            entries,
        }
    }

    /// Same entries under new labels of the same sizes.
    pub fn relabel(&self, rows: OrderedIndexSet, cols: OrderedIndexSet) -> Result<Self> {
        if rows.len() != self.nrows() || cols.len() != self.ncols() {
            return Err(Error::ShapeMismatch(
                "relabelling must keep the shape".into(),
            ));
        }
        Ok(Self {
            rows,
            cols,
            context: self.context.clone(),
            entries: self.entries.clone(),
        })
    }

    /// Determinant as the signed sum over all permutations. Capped at [`LEIBNIZ_CAP`].
    pub fn det_leibniz(&self) -> Result<RingValue> {
        let n = self.require_square()?;
        let idx: Vec<usize> = (0..n).collect();
        self.leibniz_minor(&idx, &idx)
    }

    /// Leibniz determinant of the square submatrix on the given row and column positions.
    pub(crate) fn leibniz_minor(&self, rows: &[usize], cols: &[usize]) -> Result<RingValue> {
        debug_assert_eq!(rows.len(), cols.len());
        leibniz::det(&self.context, rows.len(), |i, j| self.at(rows[i], cols[j]))
    }
}

impl fmt::Display for LabeledMatrix {
    /// Bordered layout: column labels on top, row labels on the left.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let header: Vec<String> = self.cols.labels().iter().map(ToString::to_string).collect();
        let cells: Vec<Vec<String>> = (0..self.nrows())
            .map(|r| self.row(r).iter().map(ToString::to_string).collect())
            .collect();
        let row_labels: Vec<String> = self.rows.labels().iter().map(ToString::to_string).collect();
        let label_w = row_labels.iter().map(String::len).max().unwrap_or(0);
        let widths: Vec<usize> = (0..self.ncols())
            .map(|c| {
                cells
                    .iter()
                    .map(|row| row[c].len())
                    .chain(std::iter::once(header[c].len()))
                    .max()
                    .unwrap_or(0)
            })
            .collect();
        write!(f, "{:label_w$} |", "")?;
        for (h, w) in header.iter().zip(&widths) {
            write!(f, " {h:>w$}")?;
        }
        writeln!(f)?;
        for (label, row) in row_labels.iter().zip(&cells) {
            write!(f, "{label:>label_w$} |")?;
            for (cell, w) in row.iter().zip(&widths) {
                write!(f, " {cell:>w$}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}
