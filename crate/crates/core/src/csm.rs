//! Laplace expansion restricted to a common submatrix.
//!
//! Rows are split into `(F, I, I')`, columns into `(G, J, J')` with `|F| = |G|`
//! and `|I| = |J|`; `F`, `G`, `I` are fixed and `J` varies. Then
//!
//! ```text
//! det A[F|G] * det A
//!   = (-1)^(sum_I c_R(x)) * sum_J (-1)^(sum_J c_C(x)) det A[F∪I | G∪J] det A[F∪I' | G∪J']
//! ```
//!
//! where `R = I ∪ I'` and `C = J ∪ J'` are the complements of `F` and `G`, and `c`
//! is the position or rank function relative to them.
//!
//! The identity is checked through the enlarged matrix `A⃗` over rows `F`-extended
//! and columns `G`-extended (see [`build_initialized`]): one Laplace expansion of
//! `det A⃗` gives the sum above, while determinant-preserving row and column
//! operations turn `A⃗` into a block form whose determinant is the product.

use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::index::{CsmPartition, Label, OrderedIndexSet, Sign, SignVariant, Subset};
use crate::laplace::{determinant, minor_det, ExpansionTerm};
use crate::matrix::{LabeledMatrix, Select, LEIBNIZ_CAP};
use crate::ring::{self, RingValue};

fn check_partition(a: &LabeledMatrix, p: &CsmPartition) -> Result<()> {
    a.require_square()?;
    a.rows().check(p.f())?;
    a.rows().check(p.i())?;
    a.cols().check(p.g())?;
    Ok(())
}

/// `det A[F|G] * det A`, both by the permutation sum.
pub fn csm_lhs(a: &LabeledMatrix, f: &Subset, g: &Subset) -> Result<RingValue> {
    a.require_square()?;
    a.rows().check(f)?;
    a.cols().check(g)?;
    if f.len() != g.len() {
        return Err(Error::InvalidPartition(format!(
            "|F| = {} but |G| = {}",
            f.len(),
            g.len()
        )));
    }
    let common = a.leibniz_minor(f.positions(), g.positions())?;
    common.mul(&a.det_leibniz()?)
}

/// Outer sign and the per-`J` terms of the right-hand side.
pub fn csm_terms(
    a: &LabeledMatrix,
    p: &CsmPartition,
    variant: SignVariant,
) -> Result<(Sign, Vec<ExpansionTerm>)> {
    check_partition(a, p)?;
    let rel_rows = p.relative_rows();
    let rel_cols = p.relative_cols();
    let outer = a.rows().sign_of_sum(&rel_rows, p.i(), variant)?;
    let upper_rows = p.f().union(p.i())?;
    let lower_rows = p.f().union(p.i_prime())?;
    let terms = p
        .column_splits()
        .map(|(j, j_prime)| {
            let inner = a.cols().sign_of_sum(&rel_cols, &j, variant)?;
            let first = minor_det(a, upper_rows.positions(), p.g().union(&j)?.positions())?;
            let second = minor_det(
                a,
                lower_rows.positions(),
                p.g().union(&j_prime)?.positions(),
            )?;
            ExpansionTerm::new(a.cols().labels_of(&j)?, j, outer * inner, first, second)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok((outer, terms))
}

/// The signed sum over `J`.
pub fn csm_rhs(a: &LabeledMatrix, p: &CsmPartition, variant: SignVariant) -> Result<RingValue> {
    let (_, terms) = csm_terms(a, p, variant)?;
    ring::sum(a.context(), terms.iter().map(|t| &t.product))
}

/// The signed sum with minors written as `det A(I'|J') * det A(I|J)`, extracted by
/// dropping rows and columns.
pub fn csm_rhs_complement(
    a: &LabeledMatrix,
    p: &CsmPartition,
    variant: SignVariant,
) -> Result<RingValue> {
    check_partition(a, p)?;
    let outer = a.rows().sign_of_sum(&p.relative_rows(), p.i(), variant)?;
    let rel_cols = p.relative_cols();
    let mut total = a.context().zero();
    for (j, j_prime) in p.column_splits() {
        let inner = a.cols().sign_of_sum(&rel_cols, &j, variant)?;
        let first = a.submatrix(Select::Drop(p.i_prime()), Select::Drop(&j_prime))?;
        let second = a.submatrix(Select::Drop(p.i()), Select::Drop(&j))?;
        let product = determinant(&first)?.mul(&determinant(&second)?)?;
        total = total.add(&(outer * inner).apply(&product))?;
    }
    Ok(total)
}

fn base_positions(ext: &OrderedIndexSet, base: &OrderedIndexSet) -> Result<Vec<usize>> {
    ext.labels()
        .iter()
        .map(|l| base.index_of(&l.unmarked()))
        .collect()
}

/// `Â`: rows `F`-extended and columns `G`-extended, where row `f+` repeats row `f`
/// and column `g+` repeats column `g`.
pub fn build_doubled(a: &LabeledMatrix, f: &Subset, g: &Subset) -> Result<LabeledMatrix> {
    if f.len() != g.len() {
        return Err(Error::InvalidPartition(format!(
            "|F| = {} but |G| = {}",
            f.len(),
            g.len()
        )));
    }
    let rows = a.rows().extend(f)?;
    let cols = a.cols().extend(g)?;
    let rmap = base_positions(&rows, a.rows())?;
    let cmap = base_positions(&cols, a.cols())?;
    LabeledMatrix::from_fn(rows, cols, a.context().clone(), |r, c| {
        a.at(rmap[r], cmap[c]).clone()
    })
}

/// `A⃗`, the initialization matrix: over rows `F ∪ F+ ∪ I ∪ I'` and columns `G ∪ G+ ∪ (rest)`,
///
/// * rows in `F ∪ I` copy `A` on the unmarked columns and are zero on `G+`;
/// * rows in `F+ ∪ I'` are zero on `G`, carry `A(x, g)` in column `g+`, and copy `A`
///   on the remaining columns (row `f+` reads row `f` of `A`).
pub fn build_initialized(a: &LabeledMatrix, p: &CsmPartition) -> Result<LabeledMatrix> {
    check_partition(a, p)?;
    let rows = a.rows().extend(p.f())?;
    let cols = a.cols().extend(p.g())?;
    let rmap = base_positions(&rows, a.rows())?;
    let cmap = base_positions(&cols, a.cols())?;
    let upper: Vec<bool> = rows
        .labels()
        .iter()
        .zip(&rmap)
        .map(|(l, &b)| !l.is_successor() && (p.f().contains(b) || p.i().contains(b)))
        .collect();
    let zero = a.context().zero();
    LabeledMatrix::from_fn(rows, cols.clone(), a.context().clone(), |r, c| {
        let col = cols.label(c);
        let in_g = !col.is_successor() && p.g().contains(cmap[c]);
        let blocked = if upper[r] { col.is_successor() } else { in_g };
        if blocked {
            zero.clone()
        } else {
            a.at(rmap[r], cmap[c]).clone()
        }
    })
}

/// `Ã`: adds column `g+` into column `g` for every `g` in `G`, then subtracts row `f`
/// from row `f+` for every `f` in `F`. Labels are the unmarked ones of `A`.
pub fn build_tilde(avec: &LabeledMatrix, f: &[Label], g: &[Label]) -> Result<LabeledMatrix> {
    let mut out = avec.clone();
    for label in g {
        let plus = label.successor()?;
        if !avec.cols().contains(label) || !avec.cols().contains(&plus) {
            return Err(Error::ShapeMismatch(format!(
                "no column pair {label}, {plus}"
            )));
        }
        out = out.col_op_add(label, &plus)?;
    }
    for label in f {
        let plus = label.successor()?;
        if !avec.rows().contains(label) || !avec.rows().contains(&plus) {
            return Err(Error::ShapeMismatch(format!("no row pair {label}, {plus}")));
        }
        out = out.row_op_sub(&plus, label)?;
    }
    Ok(out)
}

/// `det A⃗` as the single Laplace expansion along `F ∪ I`, reduced to minors of `A`:
///
/// `(-1)^(sum_{F∪I} rho_R(x)) * sum_J (-1)^(sum_{G∪J} rho_C(x)) det A[F∪I|G∪J] det A[F∪I'|G∪J']`.
pub fn initialized_det_expansion(a: &LabeledMatrix, p: &CsmPartition) -> Result<RingValue> {
    check_partition(a, p)?;
    let rel_rows = p.relative_rows();
    let rel_cols = p.relative_cols();
    let upper_rows = p.f().union(p.i())?;
    let lower_rows = p.f().union(p.i_prime())?;
    let outer = a
        .rows()
        .sign_of_sum(&rel_rows, &upper_rows, SignVariant::Rank)?;
    let mut total = a.context().zero();
    for (j, j_prime) in p.column_splits() {
        let upper_cols = p.g().union(&j)?;
        let inner = a
            .cols()
            .sign_of_sum(&rel_cols, &upper_cols, SignVariant::Rank)?;
        let first = minor_det(a, upper_rows.positions(), upper_cols.positions())?;
        let second = minor_det(
            a,
            lower_rows.positions(),
            p.g().union(&j_prime)?.positions(),
        )?;
        total = total.add(&(outer * inner).apply(&first.mul(&second)?))?;
    }
    Ok(total)
}

/// `det A⃗` from the reduced block form:
/// `(-1)^(sum_F rho_R(x)) (-1)^(sum_G rho_C(x)) det A[F|G] det A`.
pub fn initialized_det_factored(a: &LabeledMatrix, p: &CsmPartition) -> Result<RingValue> {
    check_partition(a, p)?;
    let row_sign = a
        .rows()
        .sign_of_sum(&p.relative_rows(), p.f(), SignVariant::Rank)?;
    let col_sign = a
        .cols()
        .sign_of_sum(&p.relative_cols(), p.g(), SignVariant::Rank)?;
    let common = minor_det(a, p.f().positions(), p.g().positions())?;
    Ok((row_sign * col_sign).apply(&common.mul(&determinant(a)?)?))
}

/// `det A⃗` computed directly and compared against both closed forms.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InitializedCheck {
    pub det_initialized: RingValue,
    pub expansion_value: RingValue,
    pub factored_value: RingValue,
    pub expansion_matches: bool,
    pub factored_matches: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CsmReport {
    pub variant: SignVariant,
    pub f: Vec<Label>,
    pub g: Vec<Label>,
    pub i: Vec<Label>,
    pub i_prime: Vec<Label>,
    /// `det A[F|G] * det A`.
    pub lhs: RingValue,
    pub rhs: RingValue,
    pub outer_sign: Sign,
    pub terms: Vec<ExpansionTerm>,
    pub equal: bool,
    /// Present when `A⃗` is small enough for the permutation-sum determinant.
    pub cross_check: Option<InitializedCheck>,
}

impl CsmReport {
    /// `lhs == rhs` and every cross-check that ran agreed.
    pub fn holds(&self) -> bool {
        self.equal
            && self
                .cross_check
                .as_ref()
                .is_none_or(|c| c.expansion_matches && c.factored_matches)
    }

    pub fn to_text(&self) -> String {
        let list = |ls: &[Label]| {
            ls.iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(",")
        };
        let mut s = String::new();
        let _ = writeln!(
            s,
            "common-submatrix expansion ({} variant)\n  F = {{{}}}  G = {{{}}}  I = {{{}}}  I' = {{{}}}",
            self.variant,
            list(&self.f),
            list(&self.g),
            list(&self.i),
            list(&self.i_prime)
        );
        let _ = writeln!(s, "lhs  det(A[F|G]) * det(A) = {}", self.lhs);
        let _ = writeln!(s, "outer sign: {}", self.outer_sign);
        let _ = writeln!(s, "terms: {}", self.terms.len());
        for t in &self.terms {
            let _ = writeln!(
                s,
                "  J = {{{}}}  sign {}  det(A[F∪I|G∪J]) = {}  det(A[F∪I'|G∪J']) = {}  term = {}",
                list(&t.labels),
                t.sign,
                t.minor_first,
                t.minor_second,
                t.product
            );
        }
        let _ = writeln!(s, "rhs = {}", self.rhs);
        if let Some(c) = &self.cross_check {
            let ok = |b: bool| if b { "ok" } else { "MISMATCH" };
            let _ = writeln!(s, "initialized matrix: det = {}", c.det_initialized);
            let _ = writeln!(
                s,
                "  expansion form = {} ({})",
                c.expansion_value,
                ok(c.expansion_matches)
            );
            let _ = writeln!(
                s,
                "  factored form  = {} ({})",
                c.factored_value,
                ok(c.factored_matches)
            );
        }
        let _ = writeln!(
            s,
            "verdict: {}",
            if self.holds() { "EQUAL" } else { "NOT-EQUAL" }
        );
        s
    }
}

/// Evaluates both sides, every term, and (under the oracle cap) `det A⃗` against
/// its two closed forms.
pub fn verify_csm(a: &LabeledMatrix, p: &CsmPartition, variant: SignVariant) -> Result<CsmReport> {
    check_partition(a, p)?;
    let (outer_sign, terms) = csm_terms(a, p, variant)?;
    let rhs = ring::sum(a.context(), terms.iter().map(|t| &t.product))?;
    let lhs = csm_lhs(a, p.f(), p.g())?;
    let cross_check = if a.nrows() + p.f().len() <= LEIBNIZ_CAP {
        let det_initialized = build_initialized(a, p)?.det_leibniz()?;
        let expansion_value = initialized_det_expansion(a, p)?;
        let factored_value = initialized_det_factored(a, p)?;
        Some(InitializedCheck {
            expansion_matches: expansion_value == det_initialized,
            factored_matches: factored_value == det_initialized,
            det_initialized,
            expansion_value,
            factored_value,
        })
    } else {
        None
    };
    Ok(CsmReport {
        variant,
        f: a.rows().labels_of(p.f())?,
        g: a.cols().labels_of(p.g())?,
        i: a.rows().labels_of(p.i())?,
        i_prime: a.rows().labels_of(p.i_prime())?,
        equal: lhs == rhs,
        lhs,
        rhs,
        outer_sign,
        terms,
        cross_check,
    })
}
