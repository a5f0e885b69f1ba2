//! Exact commutative rings used for matrix entries.
//!
//! A [`RingContext`] names the ring (integers, rationals, integers mod `m`, or
//! integer polynomials in a fixed list of indeterminates). A [`RingValue`] is an
//! element of one of those rings and remembers which one, so combining values
//! from different contexts is reported as [`Error::ContextMismatch`].

mod literal;
mod poly;

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

pub use poly::{Indeterminates, Monomial, Polynomial};

use crate::error::{Error, Result};

/// A modulus `m >= 2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Modulus(u64);

impl Modulus {
    pub fn new(m: u64) -> Result<Self> {
        if m < 2 {
            return Err(Error::InvalidModulus(m));
        }
        Ok(Self(m))
    }

    pub fn get(self) -> u64 {
        self.0
    }

    pub fn is_prime(self) -> bool {
        is_prime_u64(self.0)
    }

    fn reduce(self, v: &BigInt) -> u64 {
        v.mod_floor(&BigInt::from(self.0))
            .to_u64()
            .expect("residue fits in u64")
    }
}

/// An element of `Z/mZ`, stored as its least non-negative residue.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Residue {
    value: u64,
    modulus: Modulus,
}

impl Residue {
    pub fn new(value: &BigInt, modulus: Modulus) -> Self {
        Self {
            value: modulus.reduce(value),
            modulus,
        }
    }

    pub fn value(self) -> u64 {
        self.value
    }

    pub fn modulus(self) -> Modulus {
        self.modulus
    }

    fn m(self) -> u64 {
        self.modulus.0
    }

    fn add(self, o: Self) -> Self {
        let v = (u128::from(self.value) + u128::from(o.value)) % u128::from(self.m());
        Self {
            value: v as u64,
            ..self
        }
    }

    fn neg(self) -> Self {
        let v = if self.value == 0 {
            0
        } else {
            self.m() - self.value
        };
        Self { value: v, ..self }
    }

    fn mul(self, o: Self) -> Self {
        let v = (u128::from(self.value) * u128::from(o.value)) % u128::from(self.m());
        Self {
            value: v as u64,
            ..self
        }
    }

    fn inverse(self) -> Option<Self> {
        let m = BigInt::from(self.m());
        let g = BigInt::from(self.value).extended_gcd(&m);
        g.gcd.is_one().then(|| Self::new(&g.x, self.modulus))
    }
}

/// The ring all entries of one matrix (and all intermediate values) live in.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RingContext {
    Integer,
    Rational,
    Modular(Modulus),
    Polynomial(Indeterminates),
}

impl RingContext {
    pub fn modular(m: u64) -> Result<Self> {
        Modulus::new(m).map(Self::Modular)
    }

    pub fn polynomial<I, S>(names: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        Indeterminates::new(names).map(Self::Polynomial)
    }

    pub fn zero(&self) -> RingValue {
        self.from_integer(BigInt::zero())
    }

    pub fn one(&self) -> RingValue {
        self.from_integer(BigInt::one())
    }

    /// The image of an integer under the canonical map `Z -> R`.
    pub fn from_integer(&self, n: impl Into<BigInt>) -> RingValue {
        let n = n.into();
        match self {
            Self::Integer => RingValue::Integer(n),
            Self::Rational => RingValue::Rational(BigRational::from_integer(n)),
            Self::Modular(m) => RingValue::Modular(Residue::new(&n, *m)),
            Self::Polynomial(vars) => RingValue::Polynomial(Polynomial::constant(vars, n)),
        }
    }

    /// The indeterminate `name` of a polynomial ring.
    pub fn indeterminate(&self, name: &str) -> Result<RingValue> {
        match self {
            Self::Polynomial(vars) => {
                let idx = vars.index_of(name).ok_or_else(|| Error::InvalidLiteral {
                    literal: name.to_string(),
                    ring: self.to_string(),
                    reason: "unknown indeterminate".into(),
                })?;
                Ok(RingValue::Polynomial(Polynomial::variable(vars, idx)))
            }
            _ => Err(Error::NotPolynomial(self.to_string())),
        }
    }

    pub fn is_integral_domain(&self) -> bool {
        match self {
            Self::Modular(m) => m.is_prime(),
            _ => true,
        }
    }

    /// Parses an entry literal: signed decimal integers, `p/q` rationals,
    /// decimal residues, or `c*x^e*...` polynomial sums.
    pub fn parse_value(&self, literal: &str) -> Result<RingValue> {
        literal::parse(self, literal)
    }
}

impl fmt::Display for RingContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Integer => f.write_str("integer"),
            Self::Rational => f.write_str("rational"),
            Self::Modular(m) => write!(f, "mod:{}", m.0),
            Self::Polynomial(vars) => write!(f, "poly:{}", vars.names().join(",")),
        }
    }
}

impl FromStr for RingContext {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::InvalidRingSpec(s.to_string());
        match s {
            "integer" | "int" | "Z" => Ok(Self::Integer),
            "rational" | "Q" => Ok(Self::Rational),
            _ => {
                if let Some(m) = s.strip_prefix("mod:") {
                    Self::modular(m.trim().parse().map_err(|_| bad())?)
                } else if let Some(names) = s.strip_prefix("poly:") {
                    let names: Vec<&str> = names
                        .split(',')
                        .map(str::trim)
                        .filter(|n| !n.is_empty())
                        .collect();
                    if names.is_empty() {
                        return Err(bad());
                    }
                    Self::polynomial(names)
                } else {
                    Err(bad())
                }
            }
        }
    }
}

/// An exact ring element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RingValue {
    Integer(BigInt),
    Rational(BigRational),
    Modular(Residue),
    Polynomial(Polynomial),
}

impl RingValue {
    pub fn context(&self) -> RingContext {
        match self {
            Self::Integer(_) => RingContext::Integer,
            Self::Rational(_) => RingContext::Rational,
            Self::Modular(r) => RingContext::Modular(r.modulus),
            Self::Polynomial(p) => RingContext::Polynomial(p.indeterminates().clone()),
        }
    }

    pub fn belongs_to(&self, ctx: &RingContext) -> bool {
        match (self, ctx) {
            (Self::Integer(_), RingContext::Integer)
            | (Self::Rational(_), RingContext::Rational) => true,
            (Self::Modular(r), RingContext::Modular(m)) => r.modulus == *m,
            (Self::Polynomial(p), RingContext::Polynomial(v)) => p.indeterminates() == v,
            _ => false,
        }
    }

    fn mismatch(&self, other: &Self) -> Error {
        Error::ContextMismatch {
            left: self.context().to_string(),
            right: other.context().to_string(),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Self::Integer(v) => v.is_zero(),
            Self::Rational(v) => v.is_zero(),
            Self::Modular(r) => r.value == 0,
            Self::Polynomial(p) => p.is_zero(),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        Ok(match (self, other) {
            (Self::Integer(a), Self::Integer(b)) => Self::Integer(a + b),
            (Self::Rational(a), Self::Rational(b)) => Self::Rational(a + b),
            (Self::Modular(a), Self::Modular(b)) if a.modulus == b.modulus => {
                Self::Modular(a.add(*b))
            }
            (Self::Polynomial(a), Self::Polynomial(b))
                if a.indeterminates() == b.indeterminates() =>
            {
                Self::Polynomial(a.add(b))
            }
            _ => return Err(self.mismatch(other)),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        Ok(match (self, other) {
            (Self::Integer(a), Self::Integer(b)) => Self::Integer(a - b),
            (Self::Rational(a), Self::Rational(b)) => Self::Rational(a - b),
            (Self::Modular(a), Self::Modular(b)) if a.modulus == b.modulus => {
                Self::Modular(a.add(b.neg()))
            }
            (Self::Polynomial(a), Self::Polynomial(b))
                if a.indeterminates() == b.indeterminates() =>
            {
                Self::Polynomial(a.sub(b))
            }
            _ => return Err(self.mismatch(other)),
        })
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        Ok(match (self, other) {
            (Self::Integer(a), Self::Integer(b)) => Self::Integer(a * b),
            (Self::Rational(a), Self::Rational(b)) => Self::Rational(a * b),
            (Self::Modular(a), Self::Modular(b)) if a.modulus == b.modulus => {
                Self::Modular(a.mul(*b))
            }
            (Self::Polynomial(a), Self::Polynomial(b))
                if a.indeterminates() == b.indeterminates() =>
            {
                Self::Polynomial(a.mul(b))
            }
            _ => return Err(self.mismatch(other)),
        })
    }

    pub fn neg(&self) -> Self {
        match self {
            Self::Integer(a) => Self::Integer(-a),
            Self::Rational(a) => Self::Rational(-a),
            Self::Modular(a) => Self::Modular(a.neg()),
            Self::Polynomial(a) => Self::Polynomial(a.neg()),
        }
    }

    /// The unique `q` with `q * divisor == self`.
    ///
    /// Only defined over integral domains; `Z/mZ` with composite `m` is refused
    /// even when a quotient happens to exist.
    pub fn exact_div(&self, divisor: &Self) -> Result<Self> {
        let non_exact = || Error::NonExactDivision {
            dividend: self.to_string(),
            divisor: divisor.to_string(),
        };
        if !self.belongs_to(&divisor.context()) {
            return Err(self.mismatch(divisor));
        }
        if let Self::Modular(r) = self {
            if !r.modulus.is_prime() {
                return Err(Error::NotIntegralDomain(self.context().to_string()));
            }
        }
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(match (self, divisor) {
            (Self::Integer(a), Self::Integer(b)) => {
                let (q, r) = a.div_rem(b);
                if !r.is_zero() {
                    return Err(non_exact());
                }
                Self::Integer(q)
            }
            (Self::Rational(a), Self::Rational(b)) => Self::Rational(a / b),
            (Self::Modular(a), Self::Modular(b)) => {
                Self::Modular(a.mul(b.inverse().expect("nonzero residue mod a prime is a unit")))
            }
            (Self::Polynomial(a), Self::Polynomial(b)) => Self::Polynomial(a.exact_div(b)?),
            _ => unreachable!("contexts checked above"),
        })
    }

    /// Evaluates a polynomial at integer values of its indeterminates, giving an integer.
    pub fn eval(&self, assignment: &HashMap<String, BigInt>) -> Result<Self> {
        match self {
            Self::Polynomial(p) => p.eval(assignment).map(Self::Integer),
            _ => Err(Error::NotPolynomial(self.context().to_string())),
        }
    }

    pub fn as_polynomial(&self) -> Option<&Polynomial> {
        match self {
            Self::Polynomial(p) => Some(p),
            _ => None,
        }
    }

    pub fn as_integer(&self) -> Option<&BigInt> {
        match self {
            Self::Integer(v) => Some(v),
            _ => None,
        }
    }
}

impl fmt::Display for RingValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Integer(v) => write!(f, "{v}"),
            Self::Rational(v) => {
                if v.denom().is_one() {
                    write!(f, "{}", v.numer())
                } else {
                    write!(f, "{}/{}", v.numer(), v.denom())
                }
            }
            Self::Modular(r) => write!(f, "{}", r.value),
            Self::Polynomial(p) => write!(f, "{p}"),
        }
    }
}

impl Serialize for RingValue {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl From<Polynomial> for RingValue {
    fn from(p: Polynomial) -> Self {
        Self::Polynomial(p)
    }
}

/// Sum of a sequence of values, starting from the context's zero.
pub fn sum<'a, I>(ctx: &RingContext, values: I) -> Result<RingValue>
where
    I: IntoIterator<Item = &'a RingValue>,
{
    values.into_iter().try_fold(ctx.zero(), |acc, v| acc.add(v))
}

// Deterministic Miller-Rabin; these bases cover every u64.
fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for p in BASES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let mul = |a: u64, b: u64| ((u128::from(a) * u128::from(b)) % u128::from(n)) as u64;
    let pow = |mut b: u64, mut e: u64| {
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = mul(acc, b);
            }
            b = mul(b, b);
            e >>= 1;
        }
        acc
    };
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for a in BASES {
        let mut x = pow(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul(x, x);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

impl RingValue {
    /// `-1`, `0` or `1` for integer and rational values; `None` otherwise.
    pub fn signum(&self) -> Option<i8> {
        let s = match self {
            Self::Integer(v) => v.signum(),
            Self::Rational(v) => v.numer().signum(),
            _ => return None,
        };
        s.to_i8()
    }
}
