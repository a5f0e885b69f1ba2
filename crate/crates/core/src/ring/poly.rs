//! Sparse multivariate polynomials over the integers.
//!
//! Terms live in a `BTreeMap` keyed by exponent vectors, so the canonical form is
//! unique: no zero coefficients, and the term order is lexicographic on exponent
//! vectors taken over the declared indeterminate list.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// An ordered list of indeterminate names shared by every polynomial of one ring.
#[derive(Clone, Debug)]
pub struct Indeterminates(Arc<[String]>);

impl Indeterminates {
    pub fn new<I, S>(names: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        for (i, name) in names.iter().enumerate() {
            if !is_identifier(name) {
                return Err(Error::InvalidRingSpec(format!(
                    "`{name}` is not a valid indeterminate name"
                )));
            }
            if names[..i].contains(name) {
                return Err(Error::InvalidRingSpec(format!(
                    "indeterminate `{name}` repeated"
                )));
            }
        }
        Ok(Self(names.into()))
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|n| n == name)
    }
}

impl PartialEq for Indeterminates {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl Eq for Indeterminates {}

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Exponent vector of a monomial, one entry per indeterminate.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Self(vec![0; nvars])
    }

    pub fn from_exponents(exponents: Vec<u32>) -> Self {
        Self(exponents)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| u64::from(e)).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    fn mul(&self, other: &Self) -> Self {
        Self(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    fn divides(&self, other: &Self) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self`; caller guarantees `self.divides(other)`.
    fn cofactor_in(&self, other: &Self) -> Self {
        Self(other.0.iter().zip(&self.0).map(|(b, a)| b - a).collect())
    }
}

/// A polynomial with arbitrary-precision integer coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    vars: Indeterminates,
    terms: BTreeMap<Monomial, BigInt>,
}

impl Polynomial {
    pub fn zero(vars: &Indeterminates) -> Self {
        Self {
            vars: vars.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: &Indeterminates, c: BigInt) -> Self {
        Self::term(vars, Monomial::one(vars.len()), c)
    }

    /// The single-term polynomial `c * monomial`.
    pub fn term(vars: &Indeterminates, monomial: Monomial, c: BigInt) -> Self {
        assert_eq!(monomial.0.len(), vars.len(), "monomial arity mismatch");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(monomial, c);
        }
        Self {
            vars: vars.clone(),
            terms,
        }
    }

    pub fn variable(vars: &Indeterminates, index: usize) -> Self {
        let mut exps = vec![0; vars.len()];
        exps[index] = 1;
        Self::term(vars, Monomial(exps), BigInt::one())
    }

    pub fn indeterminates(&self) -> &Indeterminates {
        &self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in descending lexicographic order (the printing order).
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigInt)> + '_ {
        self.terms.iter().rev()
    }

    pub fn coefficient(&self, monomial: &Monomial) -> BigInt {
        self.terms.get(monomial).cloned().unwrap_or_default()
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &BigInt)> {
        self.terms.last_key_value()
    }

    pub fn total_degree(&self) -> Option<u64> {
        self.terms.keys().map(Monomial::degree).max()
    }

    fn accumulate(terms: &mut BTreeMap<Monomial, BigInt>, monomial: Monomial, c: BigInt) {
        use std::collections::btree_map::Entry;
        match terms.entry(monomial) {
            Entry::Vacant(slot) => {
                if !c.is_zero() {
                    slot.insert(c);
                }
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub(crate) fn add(&self, other: &Self) -> Self {
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            Self::accumulate(&mut terms, m.clone(), c.clone());
        }
        Self {
            vars: self.vars.clone(),
            terms,
        }
    }

    pub(crate) fn sub(&self, other: &Self) -> Self {
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            Self::accumulate(&mut terms, m.clone(), -c);
        }
        Self {
            vars: self.vars.clone(),
            terms,
        }
    }

    pub(crate) fn neg(&self) -> Self {
        Self {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub(crate) fn mul(&self, other: &Self) -> Self {
        let mut terms = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                Self::accumulate(&mut terms, ma.mul(mb), ca * cb);
            }
        }
        Self {
            vars: self.vars.clone(),
            terms,
        }
    }

    /// Multivariate division by leading terms. Succeeds only when the remainder is zero.
    pub(crate) fn exact_div(&self, divisor: &Self) -> Result<Self> {
        let (lead_mono, lead_coeff) = divisor.leading_term().ok_or(Error::DivisionByZero)?;
        let non_exact = || Error::NonExactDivision {
            dividend: self.to_string(),
            divisor: divisor.to_string(),
        };
        let mut quotient = BTreeMap::new();
        let mut remainder = self.clone();
        while let Some((mono, coeff)) = remainder.leading_term() {
            if !lead_mono.divides(mono) {
                return Err(non_exact());
            }
            let (q, r) = coeff.div_rem(lead_coeff);
            if !r.is_zero() {
                return Err(non_exact());
            }
            let step = Self::term(&self.vars, lead_mono.cofactor_in(mono), q);
            remainder = remainder.sub(&step.mul(divisor));
            for (m, c) in step.terms {
                Self::accumulate(&mut quotient, m, c);
            }
        }
        Ok(Self {
            vars: self.vars.clone(),
            terms: quotient,
        })
    }

    /// Evaluates at integer points. Only indeterminates that actually occur need a binding.
    pub fn eval(&self, assignment: &HashMap<String, BigInt>) -> Result<BigInt> {
        let mut values = Vec::with_capacity(self.vars.len());
        for (i, name) in self.vars.names().iter().enumerate() {
            let used = self.terms.keys().any(|m| m.0[i] > 0);
            match assignment.get(name) {
                Some(v) => values.push(v.clone()),
                None if !used => values.push(BigInt::zero()),
                None => return Err(Error::UnboundIndeterminate(name.clone())),
            }
        }
        let mut total = BigInt::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, &e) in values.iter().zip(&m.0) {
                if e > 0 {
                    t *= num_traits::pow(v.clone(), e as usize);
                }
            }
            total += t;
        }
        Ok(total)
    }

    pub(crate) fn fmt_monomial(&self, m: &Monomial, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (name, &e) in self.vars.names().iter().zip(&m.0) {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            f.write_str(name)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms().enumerate() {
            match (i, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mag = c.abs();
            if m.is_one() {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}*")?;
                }
                self.fmt_monomial(m, f)?;
            }
        }
        Ok(())
    }
}
