//! Endpoints, arcs and the touch/cross predicates.
//!
//! Arcs live on the totally ordered set `ℤ ⊔ {−∞}` where `−∞` is the minimum.
//! The textual form of an arc is `a..b`, with `-inf` standing for `−∞`.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A point of `ℤ ⊔ {−∞}`.
///
/// The derived order puts `MinusInfinity` below every `Finite` value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Endpoint {
    MinusInfinity,
    Finite(i64),
}

impl Endpoint {
    pub fn is_finite(self) -> bool {
        matches!(self, Endpoint::Finite(_))
    }

    pub fn finite(self) -> Option<i64> {
        match self {
            Endpoint::Finite(z) => Some(z),
            Endpoint::MinusInfinity => None,
        }
    }

    /// Adds `i` to a finite endpoint; `−∞` is fixed.
    pub fn translate(self, i: i64) -> Endpoint {
        match self {
            Endpoint::Finite(z) => Endpoint::Finite(z + i),
            Endpoint::MinusInfinity => Endpoint::MinusInfinity,
        }
    }
}

impl From<i64> for Endpoint {
    fn from(z: i64) -> Self {
        Endpoint::Finite(z)
    }
}

impl fmt::Display for Endpoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Endpoint::MinusInfinity => f.write_str("-inf"),
            Endpoint::Finite(z) => write!(f, "{z}"),
        }
    }
}

impl FromStr for Endpoint {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "-inf" {
            return Ok(Endpoint::MinusInfinity);
        }
        s.parse::<i64>()
            .map(Endpoint::Finite)
            .map_err(|e| Error::Parse(format!("bad endpoint {s:?}: {e}")))
    }
}

/// Length of an arc: `b − a`, or infinite when the left endpoint is `−∞`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Length {
    Finite(u64),
    Infinite,
}

/// An arc `(a, b)` with `a < b` and `b` finite.
///
/// Stands for the suspension orbit of the indecomposable `M(a,b)`. The
/// derived `Ord` is the lexicographic order on `(left, right)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Arc {
    left: Endpoint,
    right: i64,
}

impl Arc {
    /// Checked constructor. `a = b` is the zero object and is rejected with
    /// [`Error::DegenerateArc`].
    pub fn new(left: Endpoint, right: Endpoint) -> Result<Arc> {
        if left == right {
            return Err(Error::DegenerateArc(left));
        }
        match right {
            Endpoint::Finite(b) if left < right => Ok(Arc { left, right: b }),
            _ => Err(Error::InvalidArc { left, right }),
        }
    }

    /// Finite arc `(a, b)`.
    pub fn finite(a: i64, b: i64) -> Result<Arc> {
        Arc::new(Endpoint::Finite(a), Endpoint::Finite(b))
    }

    /// Infinite arc `(−∞, b)`.
    pub fn infinite(b: i64) -> Arc {
        Arc {
            left: Endpoint::MinusInfinity,
            right: b,
        }
    }

    /// Like [`Arc::new`] but returns `None` for degenerate pairs. Used where
    /// "those of the pairs that are arcs" are collected.
    pub(crate) fn nondegenerate(left: Endpoint, right: Endpoint) -> Option<Arc> {
        Arc::new(left, right).ok()
    }

    pub fn left(self) -> Endpoint {
        self.left
    }

    pub fn right(self) -> Endpoint {
        Endpoint::Finite(self.right)
    }

    pub fn right_value(self) -> i64 {
        self.right
    }

    pub fn is_finite(self) -> bool {
        self.left.is_finite()
    }

    pub fn endpoints(self) -> [Endpoint; 2] {
        [self.left, self.right()]
    }

    pub fn length(self) -> Length {
        match self.left {
            Endpoint::Finite(a) => Length::Finite((self.right - a) as u64),
            Endpoint::MinusInfinity => Length::Infinite,
        }
    }

    /// `a ≤ c ≤ b ≤ d` or `c ≤ a ≤ d ≤ b`.
    pub fn touches(self, other: Arc) -> bool {
        touch_chain(self, other) || touch_chain(other, self)
    }

    /// `a < c < b < d` or `c < a < d < b`.
    pub fn crosses(self, other: Arc) -> bool {
        cross_chain(self, other) || cross_chain(other, self)
    }

    pub fn lex_cmp(self, other: Arc) -> Ordering {
        self.cmp(&other)
    }
}

/// `a ≤ c ≤ b ≤ d` for `u = (a,b)`, `v = (c,d)`.
pub(crate) fn touch_chain(u: Arc, v: Arc) -> bool {
    let (a, b, c, d) = (u.left, u.right(), v.left, v.right());
    a <= c && c <= b && b <= d
}

fn cross_chain(u: Arc, v: Arc) -> bool {
    let (a, b, c, d) = (u.left, u.right(), v.left, v.right());
    a < c && c < b && b < d
}

impl fmt::Display for Arc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.left, self.right)
    }
}

impl FromStr for Arc {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (a, b) = s
            .trim()
            .split_once("..")
            .ok_or_else(|| Error::Parse(format!("expected an arc a..b, got {s:?}")))?;
        let right: Endpoint = b.parse()?;
        if right == Endpoint::MinusInfinity {
            return Err(Error::Parse(format!(
                "right endpoint of {s:?} must be finite"
            )));
        }
        Arc::new(a.parse()?, right)
    }
}

/// A finite set of arcs, iterated in lexicographic order.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ArcSet {
    arcs: BTreeSet<Arc>,
}

impl ArcSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, arc: Arc) -> bool {
        self.arcs.insert(arc)
    }

    pub fn remove(&mut self, arc: &Arc) -> bool {
        self.arcs.remove(arc)
    }

    pub fn contains(&self, arc: &Arc) -> bool {
        self.arcs.contains(arc)
    }

    pub fn len(&self) -> usize {
        self.arcs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arcs.is_empty()
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = Arc> + '_ {
        self.arcs.iter().copied()
    }

    pub fn first(&self) -> Option<Arc> {
        self.arcs.first().copied()
    }

    pub fn is_subset(&self, other: &ArcSet) -> bool {
        self.arcs.is_subset(&other.arcs)
    }

    pub fn union(&self, other: &ArcSet) -> ArcSet {
        self.arcs.union(&other.arcs).copied().collect()
    }

    pub fn intersection(&self, other: &ArcSet) -> ArcSet {
        self.arcs.intersection(&other.arcs).copied().collect()
    }

    /// All endpoints occurring in the set, ascending.
    pub fn endpoints(&self) -> BTreeSet<Endpoint> {
        self.arcs.iter().flat_map(|u| u.endpoints()).collect()
    }

    pub fn map(&self, f: impl Fn(Arc) -> Arc) -> ArcSet {
        self.iter().map(f).collect()
    }
}

impl FromIterator<Arc> for ArcSet {
    fn from_iter<I: IntoIterator<Item = Arc>>(iter: I) -> Self {
        ArcSet {
            arcs: iter.into_iter().collect(),
        }
    }
}

impl<'a> IntoIterator for &'a ArcSet {
    type Item = &'a Arc;
    type IntoIter = std::collections::btree_set::Iter<'a, Arc>;

    fn into_iter(self) -> Self::IntoIter {
        self.arcs.iter()
    }
}

impl fmt::Display for ArcSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, u) in self.arcs.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{u}")?;
        }
        f.write_str("}")
    }
}

/// Every arc whose endpoints both lie in `points`.
pub fn arcs_on(points: &BTreeSet<Endpoint>) -> Vec<Arc> {
    let pts: Vec<Endpoint> = points.iter().copied().collect();
    let mut out = Vec::new();
    for (i, &a) in pts.iter().enumerate() {
        for &b in &pts[i + 1..] {
            if let Some(u) = Arc::nondegenerate(a, b) {
                out.push(u);
            }
        }
    }
    out.sort();
    out
}
