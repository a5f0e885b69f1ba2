//! Ordered label sets, position and rank functions, successor extensions,
//! subset enumeration and the ordered partitions used by the expansions.
//!
//! Subsets are stored as sorted position vectors relative to the
//! [`OrderedIndexSet`] they were taken from, so rank sums are a linear merge.

use std::collections::HashMap;
use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::ring::RingValue;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum LabelBase {
    Int(i64),
    Name(String),
}

/// A row or column label. `successor` marks the label `f+` placed directly after `f`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Label {
    base: LabelBase,
    successor: bool,
}

impl Label {
    pub fn int(v: i64) -> Self {
        Self {
            base: LabelBase::Int(v),
            successor: false,
        }
    }

    pub fn name(s: impl Into<String>) -> Self {
        Self {
            base: LabelBase::Name(s.into()),
            successor: false,
        }
    }

    pub fn base(&self) -> &LabelBase {
        &self.base
    }

    pub fn is_successor(&self) -> bool {
        self.successor
    }

    /// `f+` for this label `f`. Successors of successors are not labels.
    pub fn successor(&self) -> Result<Self> {
        if self.successor {
            return Err(Error::InvalidLabel(format!("{self}+")));
        }
        Ok(Self {
            base: self.base.clone(),
            successor: true,
        })
    }

    /// The label with the successor flag cleared.
    pub fn unmarked(&self) -> Self {
        Self {
            base: self.base.clone(),
            successor: false,
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.base {
            LabelBase::Int(v) => write!(f, "{v}")?,
            LabelBase::Name(s) => write!(f, "\"{s}\"")?,
        }
        if self.successor {
            f.write_str("+")?;
        }
        Ok(())
    }
}

impl FromStr for Label {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let (body, successor) = match t.strip_suffix('+') {
            Some(b) => (b, true),
            None => (t, false),
        };
        let base = if let Some(inner) = body.strip_prefix('"').and_then(|b| b.strip_suffix('"')) {
            if inner.is_empty() || inner.contains('"') {
                return Err(Error::InvalidLabel(s.to_string()));
            }
            LabelBase::Name(inner.to_string())
        } else {
            LabelBase::Int(
                body.parse()
                    .map_err(|_| Error::InvalidLabel(s.to_string()))?,
            )
        };
        Ok(Self { base, successor })
    }
}

impl Serialize for Label {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Splits a list such as `1,2,2+` or `"a" "b"` into labels. Quoted names may contain
/// separators.
pub fn parse_label_list(s: &str) -> Result<Vec<Label>> {
    let mut labels = Vec::new();
    let mut current = String::new();
    let mut in_quotes = false;
    for c in s.chars() {
        match c {
            '"' => {
                in_quotes = !in_quotes;
                current.push(c);
            }
            ',' | ' ' | '\t' if !in_quotes => {
                if !current.is_empty() {
                    labels.push(current.parse()?);
                    current.clear();
                }
            }
            _ => current.push(c),
        }
    }
    if in_quotes {
        return Err(Error::InvalidLabel(s.to_string()));
    }
    if !current.is_empty() {
        labels.push(current.parse()?);
    }
    Ok(labels)
}

/// `+1` or `-1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    /// `(-1)^exponent`.
    pub fn from_exponent(exponent: usize) -> Self {
        if exponent.is_multiple_of(2) {
            Self::Plus
        } else {
            Self::Minus
        }
    }

    pub fn to_i8(self) -> i8 {
        match self {
            Self::Plus => 1,
            Self::Minus => -1,
        }
    }

    pub fn apply(self, v: &RingValue) -> RingValue {
        match self {
            Self::Plus => v.clone(),
            Self::Minus => v.neg(),
        }
    }
}

impl Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Plus => "+",
            Self::Minus => "-",
        })
    }
}

impl Serialize for Sign {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_i8(self.to_i8())
    }
}

/// Which counting function feeds the sign exponents: the position function
/// (elements `<= x`) or the rank function (elements `< x`).
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SignVariant {
    Position,
    #[default]
    Rank,
}

impl SignVariant {
    pub const ALL: [SignVariant; 2] = [SignVariant::Position, SignVariant::Rank];
}

impl fmt::Display for SignVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Position => "position",
            Self::Rank => "rank",
        })
    }
}

impl FromStr for SignVariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "position" => Ok(Self::Position),
            "rank" => Ok(Self::Rank),
            _ => Err(Error::InvalidPartition(format!(
                "unknown sign variant `{s}`"
            ))),
        }
    }
}

/// A subset of an [`OrderedIndexSet`], as sorted positions into it.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subset {
    positions: Vec<usize>,
    universe: usize,
}

impl Subset {
    pub fn empty(universe: usize) -> Self {
        Self {
            positions: Vec::new(),
            universe,
        }
    }

    pub fn full(universe: usize) -> Self {
        Self {
            positions: (0..universe).collect(),
            universe,
        }
    }

    /// Builds a subset from positions in any order; duplicates and out-of-range
    /// positions are rejected.
    pub fn from_positions(mut positions: Vec<usize>, universe: usize) -> Result<Self> {
        positions.sort_unstable();
        if positions.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidPartition("repeated element in subset".into()));
        }
        if positions.last().is_some_and(|&p| p >= universe) {
            return Err(Error::ForeignSubset {
                expected: universe,
                actual: positions.last().copied().unwrap_or(0) + 1,
            });
        }
        Ok(Self {
            positions,
            universe,
        })
    }

    pub fn positions(&self) -> &[usize] {
        &self.positions
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn len(&self) -> usize {
        self.positions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.positions.is_empty()
    }

    pub fn contains(&self, pos: usize) -> bool {
        self.positions.binary_search(&pos).is_ok()
    }

    fn same_universe(&self, other: &Self) -> Result<()> {
        if self.universe != other.universe {
            return Err(Error::ForeignSubset {
                expected: self.universe,
                actual: other.universe,
            });
        }
        Ok(())
    }

    pub fn is_disjoint(&self, other: &Self) -> Result<bool> {
        self.same_universe(other)?;
        Ok(!self.positions.iter().any(|&p| other.contains(p)))
    }

    pub fn union(&self, other: &Self) -> Result<Self> {
        self.same_universe(other)?;
        let mut positions = self.positions.clone();
        positions.extend_from_slice(&other.positions);
        positions.sort_unstable();
        positions.dedup();
        Ok(Self {
            positions,
            universe: self.universe,
        })
    }

    pub fn difference(&self, other: &Self) -> Result<Self> {
        self.same_universe(other)?;
        Ok(Self {
            positions: self
                .positions
                .iter()
                .copied()
                .filter(|&p| !other.contains(p))
                .collect(),
            universe: self.universe,
        })
    }

    /// Complement within the universe.
    pub fn complement(&self) -> Self {
        Self {
            positions: (0..self.universe).filter(|&p| !self.contains(p)).collect(),
            universe: self.universe,
        }
    }
}

/// A finite, strictly ordered sequence of labels.
#[derive(Clone, Debug)]
pub struct OrderedIndexSet {
    labels: Vec<Label>,
    lookup: HashMap<Label, usize>,
}

impl PartialEq for OrderedIndexSet {
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels
    }
}

impl Eq for OrderedIndexSet {}

impl OrderedIndexSet {
    /// Labels in increasing order. A successor label whose base is present must
    /// directly follow it; without its base (a sub-order of an extended order) it
    /// may stand anywhere.
    pub fn new(labels: Vec<Label>) -> Result<Self> {
        let mut lookup = HashMap::with_capacity(labels.len());
        for (i, label) in labels.iter().enumerate() {
            if lookup.insert(label.clone(), i).is_some() {
                return Err(Error::DuplicateLabel(label.to_string()));
            }
        }
        for (i, label) in labels.iter().enumerate() {
            if !label.successor {
                continue;
            }
            if let Some(&b) = lookup.get(&label.unmarked()) {
                if b + 1 != i {
                    return Err(Error::DanglingSuccessor(label.to_string()));
                }
            }
        }
        Ok(Self { labels, lookup })
    }

    /// The natural order `1 < 2 < ... < n`.
    pub fn natural(n: usize) -> Self {
        Self::new((1..=n as i64).map(Label::int).collect()).expect("distinct labels")
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn label(&self, pos: usize) -> &Label {
        &self.labels[pos]
    }

    /// Zero-based index of `x` in the order.
    pub fn index_of(&self, x: &Label) -> Result<usize> {
        self.lookup
            .get(x)
            .copied()
            .ok_or_else(|| Error::UnknownLabel(x.to_string()))
    }

    pub fn contains(&self, x: &Label) -> bool {
        self.lookup.contains_key(x)
    }

    pub fn subset(&self, labels: &[Label]) -> Result<Subset> {
        let positions = labels
            .iter()
            .map(|l| self.index_of(l))
            .collect::<Result<Vec<_>>>()?;
        let subset = Subset::from_positions(positions, self.len())?;
        if subset.len() != labels.len() {
            return Err(Error::InvalidPartition("repeated label in subset".into()));
        }
        Ok(subset)
    }

    pub fn full(&self) -> Subset {
        Subset::full(self.len())
    }

    pub fn empty_subset(&self) -> Subset {
        Subset::empty(self.len())
    }

    pub fn check(&self, s: &Subset) -> Result<()> {
        if s.universe != self.len() {
            return Err(Error::ForeignSubset {
                expected: self.len(),
                actual: s.universe,
            });
        }
        Ok(())
    }

    pub fn labels_of(&self, s: &Subset) -> Result<Vec<Label>> {
        self.check(s)?;
        Ok(s.positions
            .iter()
            .map(|&p| self.labels[p].clone())
            .collect())
    }

    /// Number of elements of `s` that are `<= x`.
    pub fn position(&self, s: &Subset, x: &Label) -> Result<usize> {
        self.check(s)?;
        let p = self.index_of(x)?;
        Ok(s.positions.partition_point(|&t| t <= p))
    }

    /// Number of elements of `s` that are `< x`.
    pub fn rank(&self, s: &Subset, x: &Label) -> Result<usize> {
        self.check(s)?;
        let p = self.index_of(x)?;
        Ok(s.positions.partition_point(|&t| t < p))
    }

    /// Sum over `x` in `k` of the position (or rank) of `x` relative to `s`.
    pub fn count_sum(&self, s: &Subset, k: &Subset, variant: SignVariant) -> Result<usize> {
        self.check(s)?;
        self.check(k)?;
        let mut total = 0;
        let mut below = 0;
        let mut it = s.positions.iter().peekable();
        for &x in &k.positions {
            while let Some(&&t) = it.peek() {
                let counted = match variant {
                    SignVariant::Position => t <= x,
                    SignVariant::Rank => t < x,
                };
                if !counted {
                    break;
                }
                below += 1;
                it.next();
            }
            total += below;
        }
        Ok(total)
    }

    /// `(-1)` raised to [`count_sum`](Self::count_sum).
    pub fn sign_of_sum(&self, s: &Subset, k: &Subset, variant: SignVariant) -> Result<Sign> {
        self.count_sum(s, k, variant).map(Sign::from_exponent)
    }

    pub fn complement(&self, s: &Subset) -> Result<Subset> {
        self.check(s)?;
        Ok(s.complement())
    }

    /// Inserts `f+` directly after every `f` in `f_set`.
    pub fn extend(&self, f_set: &Subset) -> Result<OrderedIndexSet> {
        self.check(f_set)?;
        let mut labels = Vec::with_capacity(self.len() + f_set.len());
        for (i, label) in self.labels.iter().enumerate() {
            if label.successor {
                return Err(Error::InvalidLabel(format!(
                    "cannot extend an order that already contains successor label {label}"
                )));
            }
            labels.push(label.clone());
            if f_set.contains(i) {
                labels.push(label.successor()?);
            }
        }
        OrderedIndexSet::new(labels)
    }

    /// All `k`-subsets in lexicographic order of their position vectors.
    pub fn k_subsets(&self, k: usize) -> Result<KSubsets> {
        KSubsets::new(self.len(), k)
    }
}

impl fmt::Display for OrderedIndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, l) in self.labels.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{l}")?;
        }
        f.write_str(")")
    }
}

/// Iterator over the `k`-subsets of an `n`-element universe.
#[derive(Clone, Debug)]
pub struct KSubsets {
    n: usize,
    current: Option<Vec<usize>>,
}

impl KSubsets {
    pub fn new(n: usize, k: usize) -> Result<Self> {
        if k > n {
            return Err(Error::SubsetSizeOutOfRange { k, n });
        }
        Ok(Self {
            n,
            current: Some((0..k).collect()),
        })
    }
}

impl Iterator for KSubsets {
    type Item = Subset;

    fn next(&mut self) -> Option<Subset> {
        let current = self.current.as_mut()?;
        let out = Subset {
            positions: current.clone(),
            universe: self.n,
        };
        let k = current.len();
        // rightmost slot that can still advance
        match (0..k).rev().find(|&i| current[i] < self.n - k + i) {
            Some(i) => {
                current[i] += 1;
                for j in i + 1..k {
                    current[j] = current[j - 1] + 1;
                }
            }
            None => self.current = None,
        }
        Some(out)
    }
}

/// Row partition `(F, I, I')` and common column set `G` of a common-submatrix expansion.
///
/// The column sets `J, J'` vary per term; see [`CsmPartition::column_splits`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CsmPartition {
    f: Subset,
    g: Subset,
    i: Subset,
    i_prime: Subset,
}

impl CsmPartition {
    pub fn new(
        rows: &OrderedIndexSet,
        cols: &OrderedIndexSet,
        f: Subset,
        g: Subset,
        i: Subset,
    ) -> Result<Self> {
        if rows.len() != cols.len() {
            return Err(Error::InvalidPartition(format!(
                "row and column sets differ in size ({} vs {})",
                rows.len(),
                cols.len()
            )));
        }
        rows.check(&f)?;
        rows.check(&i)?;
        cols.check(&g)?;
        if f.len() != g.len() {
            return Err(Error::InvalidPartition(format!(
                "|F| = {} but |G| = {}",
                f.len(),
                g.len()
            )));
        }
        if !f.is_disjoint(&i)? {
            return Err(Error::InvalidPartition("F and I overlap".into()));
        }
        let i_prime = f.union(&i)?.complement();
        Ok(Self { f, g, i, i_prime })
    }

    pub fn from_labels(
        rows: &OrderedIndexSet,
        cols: &OrderedIndexSet,
        f: &[Label],
        g: &[Label],
        i: &[Label],
    ) -> Result<Self> {
        Self::new(
            rows,
            cols,
            rows.subset(f)?,
            cols.subset(g)?,
            rows.subset(i)?,
        )
    }

    /// Every valid partition of a square matrix's rows and columns: `F` and `G` of
    /// each common size in lexicographic order, then every `I` inside the rows
    /// outside `F` by increasing size.
    pub fn enumerate(rows: &OrderedIndexSet, cols: &OrderedIndexSet) -> Result<Vec<Self>> {
        let n = rows.len();
        let mut out = Vec::new();
        for k in 0..=n.min(cols.len()) {
            for f in rows.k_subsets(k)? {
                let free = f.complement();
                for g in cols.k_subsets(k)? {
                    for size in 0..=free.len() {
                        for choice in KSubsets::new(free.len(), size)? {
                            let i = choice
                                .positions
                                .iter()
                                .map(|&c| free.positions[c])
                                .collect();
                            let i = Subset::from_positions(i, n)?;
                            out.push(Self::new(rows, cols, f.clone(), g.clone(), i)?);
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn f(&self) -> &Subset {
        &self.f
    }

    pub fn g(&self) -> &Subset {
        &self.g
    }

    pub fn i(&self) -> &Subset {
        &self.i
    }

    pub fn i_prime(&self) -> &Subset {
        &self.i_prime
    }

    /// `I ∪ I'`, the rows outside `F`; fixed for the whole expansion.
    pub fn relative_rows(&self) -> Subset {
        self.f.complement()
    }

    /// `J ∪ J'`, the columns outside `G`; also fixed although `J` varies.
    pub fn relative_cols(&self) -> Subset {
        self.g.complement()
    }

    /// Every `(J, J')` split of the columns outside `G` with `|J| = |I|`, `J` in
    /// lexicographic order.
    pub fn column_splits(&self) -> impl Iterator<Item = (Subset, Subset)> + '_ {
        let free = self.relative_cols();
        let universe = free.universe;
        KSubsets::new(free.len(), self.i.len())
            .expect("|I| <= n - |F| = n - |G|")
            .map(move |choice| {
                let j: Vec<usize> = choice
                    .positions
                    .iter()
                    .map(|&c| free.positions[c])
                    .collect();
                let j = Subset {
                    positions: j,
                    universe,
                };
                let j_prime = free.difference(&j).expect("same universe");
                (j, j_prime)
            })
    }
}
