//! Monomial-level expansion of both sides of the common-submatrix identity.
//!
//! Every term `sign * det A[F∪I|G∪J] * det A[F∪I'|G∪J']` is multiplied out into
//! products `(m1)(m2)` of one monomial from each minor. Products with the same
//! merged monomial and opposite coefficients are paired off as cancelling.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use csmlap_core::ring::{Monomial, Polynomial};
use csmlap_core::{
    csm_terms, ring, CsmPartition, Label, LabeledMatrix, RingContext, RingValue, SignVariant,
};
use num_bigint::BigInt;
use serde::Serialize;

use crate::error::{CliError, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExpandedProduct {
    /// Labels of `J` for the term this product comes from.
    pub j: Vec<Label>,
    #[serde(serialize_with = "as_string")]
    pub coefficient: BigInt,
    pub first: String,
    pub second: String,
    pub monomial: String,
    #[serde(skip)]
    exponents: Vec<u32>,
}

/// Two products (indices into the product list) that sum to zero.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CancelingPair {
    pub positive: usize,
    pub negative: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct ExpansionReport {
    pub variant: SignVariant,
    pub f: Vec<Label>,
    pub g: Vec<Label>,
    pub i: Vec<Label>,
    pub i_prime: Vec<Label>,
    pub products: Vec<ExpandedProduct>,
    pub canceling_pairs: Vec<CancelingPair>,
    /// `det A[F|G] * det A`, multiplied out.
    pub lhs: RingValue,
    /// The products collected into one polynomial.
    pub rhs: RingValue,
    pub equal: bool,
    /// `det A[F|G]`; a single entry when `F` is a singleton.
    pub common_factor: RingValue,
    /// `rhs / common_factor`, absent when the factor is zero.
    pub quotient: Option<RingValue>,
    pub det: RingValue,
    /// The quotient is `det A` (vacuously true for a zero factor).
    pub quotient_matches: bool,
}

fn as_string<S: serde::Serializer>(v: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(v)
}

fn poly(v: &RingValue) -> Result<&Polynomial> {
    v.as_polynomial().ok_or_else(|| {
        CliError::Usage(format!(
            "expand needs a polynomial matrix, found {} entries (try --symbolic N)",
            v.context()
        ))
    })
}

fn monomial_string(p: &Polynomial, m: &Monomial) -> String {
    Polynomial::term(p.indeterminates(), m.clone(), BigInt::from(1)).to_string()
}

pub fn expand(
    a: &LabeledMatrix,
    p: &CsmPartition,
    variant: SignVariant,
) -> Result<ExpansionReport> {
    let ctx = a.context();
    if !matches!(ctx, RingContext::Polynomial(_)) {
        return Err(CliError::Usage(format!(
            "expand needs a polynomial matrix, found {ctx} entries (try --symbolic N)"
        )));
    }
    let (_, terms) = csm_terms(a, p, variant)?;
    let mut products = Vec::new();
    for t in &terms {
        let (p1, p2) = (poly(&t.minor_first)?, poly(&t.minor_second)?);
        for (m1, c1) in p1.terms() {
            for (m2, c2) in p2.terms() {
                let exponents: Vec<u32> = m1
                    .exponents()
                    .iter()
                    .zip(m2.exponents())
                    .map(|(x, y)| x + y)
                    .collect();
                let merged = Monomial::from_exponents(exponents.clone());
                products.push(ExpandedProduct {
                    j: t.labels.clone(),
                    coefficient: BigInt::from(t.sign.to_i8()) * c1 * c2,
                    first: monomial_string(p1, m1),
                    second: monomial_string(p2, m2),
                    monomial: monomial_string(p1, &merged),
                    exponents,
                });
            }
        }
    }
    let canceling_pairs = cancel(&products);
    let rhs = ring::sum(ctx, terms.iter().map(|t| &t.product))?;
    let common_factor = a.select(p.f(), p.g())?.det_leibniz()?;
    let det = a.det_leibniz()?;
    let lhs = common_factor.mul(&det)?;
    let quotient = if common_factor.is_zero() {
        None
    } else {
        Some(rhs.exact_div(&common_factor)?)
    };
    Ok(ExpansionReport {
        variant,
        f: a.rows().labels_of(p.f())?,
        g: a.cols().labels_of(p.g())?,
        i: a.rows().labels_of(p.i())?,
        i_prime: a.rows().labels_of(p.i_prime())?,
        products,
        canceling_pairs,
        equal: lhs == rhs,
        lhs,
        rhs,
        quotient_matches: quotient.as_ref().is_none_or(|q| *q == det),
        common_factor,
        quotient,
        det,
    })
}

/// Greedy pairing within each merged monomial, in product order.
fn cancel(products: &[ExpandedProduct]) -> Vec<CancelingPair> {
    let mut by_monomial: BTreeMap<&[u32], Vec<usize>> = BTreeMap::new();
    for (k, prod) in products.iter().enumerate() {
        by_monomial.entry(&prod.exponents).or_default().push(k);
    }
    let mut pairs = Vec::new();
    for group in by_monomial.values() {
        let mut used = vec![false; group.len()];
        for x in 0..group.len() {
            if used[x] {
                continue;
            }
            let cx = &products[group[x]].coefficient;
            let partner =
                (x + 1..group.len()).find(|&y| !used[y] && products[group[y]].coefficient == -cx);
            if let Some(y) = partner {
                used[x] = true;
                used[y] = true;
                let (a, b) = (group[x], group[y]);
                let (positive, negative) = if cx > &BigInt::from(0) {
                    (a, b)
                } else {
                    (b, a)
                };
                pairs.push(CancelingPair { positive, negative });
            }
        }
    }
    pairs.sort_by_key(|p| p.positive.min(p.negative));
    pairs
}

impl ExpansionReport {
    pub fn to_text(&self) -> String {
        let list = |ls: &[Label]| {
            ls.iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(",")
        };
        let mut partner = vec![None; self.products.len()];
        for pair in &self.canceling_pairs {
            partner[pair.positive] = Some(pair.negative);
            partner[pair.negative] = Some(pair.positive);
        }
        let mut s = String::new();
        let _ = writeln!(
            s,
            "F = {{{}}}  G = {{{}}}  I = {{{}}}  I' = {{{}}}  ({} variant)",
            list(&self.f),
            list(&self.g),
            list(&self.i),
            list(&self.i_prime),
            self.variant
        );
        let _ = writeln!(s, "expanded products: {}", self.products.len());
        for (k, prod) in self.products.iter().enumerate() {
            let sign = if prod.coefficient < BigInt::from(0) {
                '-'
            } else {
                '+'
            };
            let magnitude = prod.coefficient.magnitude().to_string();
            let coeff = if magnitude == "1" {
                String::new()
            } else {
                format!("{magnitude} ")
            };
            let _ = write!(
                s,
                "  #{:<3} J = {{{}}}  {sign} {coeff}({})({})",
                k + 1,
                list(&prod.j),
                prod.first,
                prod.second
            );
            match partner[k] {
                Some(other) => {
                    let _ = writeln!(s, "  cancels #{}", other + 1);
                }
                None => s.push('\n'),
            }
        }
        let _ = writeln!(
            s,
            "canceling pairs: {} ({} products)",
            self.canceling_pairs.len(),
            2 * self.canceling_pairs.len()
        );
        let _ = writeln!(s, "rhs collected = {}", self.rhs);
        let _ = writeln!(s, "lhs expanded  = {}", self.lhs);
        let _ = writeln!(s, "common factor det(A[F|G]) = {}", self.common_factor);
        match &self.quotient {
            Some(q) => {
                let _ = writeln!(s, "rhs / common factor = {q}");
            }
            None => {
                let _ = writeln!(s, "common factor is zero");
            }
        }
        let _ = writeln!(
            s,
            "verdict: {}",
            if self.equal && self.quotient_matches {
                "EQUAL"
            } else {
                "NOT-EQUAL"
            }
        );
        s
    }
}
