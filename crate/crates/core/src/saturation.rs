//! Saturated arc sets.
//!
//! A set of arcs is saturated when, for any two of its arcs `(a,b)` and
//! `(c,d)` with `a ≤ c ≤ b ≤ d`, each of `(a,c)`, `(c,b)`, `(b,d)`, `(a,d)`
//! that is an arc also belongs to it. Finite saturated sets correspond to
//! finitely generated thick subcategories; those without `−∞` to thick
//! subcategories of the torsion part.
//!
//! Only finite sets are represented. The two infinite translation-stable
//! subcategories (all finite arcs, all arcs) have no value of this type.

use std::collections::{BTreeSet, VecDeque};
use std::ops::Deref;

use crate::arc::{arcs_on, touch_chain, Arc, ArcSet, Endpoint};
use crate::dualities;
use crate::error::{Error, Result};
use crate::ncp;

/// Default cap on the number of points accepted by [`enumerate_saturated`].
pub const DEFAULT_ENUMERATION_CAP: usize = 8;

/// Point counts up to this size are enumerated by filtering every subset.
const FILTER_LIMIT: usize = 6;

/// A finite arc set satisfying the saturation condition.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SaturatedArcSet {
    arcs: ArcSet,
}

impl SaturatedArcSet {
    /// Checks the saturation condition.
    pub fn new(arcs: ArcSet) -> Result<Self> {
        match violation(&arcs) {
            None => Ok(SaturatedArcSet { arcs }),
            Some((u, v, missing)) => Err(Error::NotSaturated {
                witness_left: u,
                witness_right: v,
                missing,
            }),
        }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub(crate) fn new_unchecked(arcs: ArcSet) -> Self {
        debug_assert!(is_saturated(&arcs), "{arcs} is not saturated");
        SaturatedArcSet { arcs }
    }

    pub fn arcs(&self) -> &ArcSet {
        &self.arcs
    }

    pub fn into_arcs(self) -> ArcSet {
        self.arcs
    }
}

impl Deref for SaturatedArcSet {
    type Target = ArcSet;

    fn deref(&self) -> &ArcSet {
        &self.arcs
    }
}

impl std::fmt::Display for SaturatedArcSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.arcs.fmt(f)
    }
}

/// Arcs forced by the ordered pair `u = (a,b)`, `v = (c,d)` when
/// `a ≤ c ≤ b ≤ d`; empty otherwise.
pub(crate) fn induced(u: Arc, v: Arc) -> impl Iterator<Item = Arc> {
    let forced = if touch_chain(u, v) {
        let (a, b, c, d) = (u.left(), u.right(), v.left(), v.right());
        [
            Arc::nondegenerate(a, c),
            Arc::nondegenerate(c, b),
            Arc::nondegenerate(b, d),
            Arc::nondegenerate(a, d),
        ]
    } else {
        [None; 4]
    };
    forced.into_iter().flatten()
}

fn violation(set: &ArcSet) -> Option<(Arc, Arc, Arc)> {
    for u in set.iter() {
        for v in set.iter() {
            if let Some(missing) = induced(u, v).find(|w| !set.contains(w)) {
                return Some((u, v, missing));
            }
        }
    }
    None
}

pub fn is_saturated(set: &ArcSet) -> bool {
    violation(set).is_none()
}

/// The smallest saturated set containing `set`.
///
/// Worklist closure: each newly added arc is paired, in both orders, with
/// every arc already present. New arcs only reuse endpoints of `set`, so the
/// loop adds at most `k(k−1)/2` arcs for `k` endpoints.
pub fn saturate(set: &ArcSet) -> SaturatedArcSet {
    let mut closed = ArcSet::new();
    let mut queue: VecDeque<Arc> = set.iter().collect();
    while let Some(u) = queue.pop_front() {
        if !closed.insert(u) {
            continue;
        }
        let found: Vec<Arc> = closed
            .iter()
            .flat_map(|v| induced(u, v).chain(induced(v, u)))
            .filter(|w| !closed.contains(w))
            .collect();
        queue.extend(found);
    }
    SaturatedArcSet::new_unchecked(closed)
}

/// Intersection; saturated sets are closed under it.
pub fn meet(s: &SaturatedArcSet, t: &SaturatedArcSet) -> SaturatedArcSet {
    SaturatedArcSet::new_unchecked(s.arcs.intersection(&t.arcs))
}

/// Saturation of the union.
pub fn join(s: &SaturatedArcSet, t: &SaturatedArcSet) -> SaturatedArcSet {
    saturate(&s.arcs.union(&t.arcs))
}

/// Every saturated set of arcs with endpoints in `points`, sorted.
///
/// Uses [`DEFAULT_ENUMERATION_CAP`].
pub fn enumerate_saturated(points: &BTreeSet<Endpoint>) -> Result<Vec<SaturatedArcSet>> {
    enumerate_saturated_with_cap(points, DEFAULT_ENUMERATION_CAP)
}

pub fn enumerate_saturated_with_cap(
    points: &BTreeSet<Endpoint>,
    cap: usize,
) -> Result<Vec<SaturatedArcSet>> {
    if points.len() > cap {
        return Err(Error::ResourceLimit {
            what: "number of points",
            requested: points.len(),
            limit: cap,
        });
    }
    if points.len() <= FILTER_LIMIT {
        Ok(enumerate_by_filter(points))
    } else {
        Ok(enumerate_via_partitions(points))
    }
}

/// Filters all `2^(n choose 2)` arc subsets. Only sensible for small `n`.
pub fn enumerate_by_filter(points: &BTreeSet<Endpoint>) -> Vec<SaturatedArcSet> {
    let all = arcs_on(points);
    assert!(all.len() < 32, "too many arcs to filter subsets");
    let mut out: Vec<SaturatedArcSet> = (0u32..1 << all.len())
        .filter_map(|mask| {
            let subset: ArcSet = all
                .iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, u)| *u)
                .collect();
            SaturatedArcSet::new(subset).ok()
        })
        .collect();
    out.sort();
    out
}

/// Builds every non-crossing partition of `points` and maps it through α.
pub fn enumerate_via_partitions(points: &BTreeSet<Endpoint>) -> Vec<SaturatedArcSet> {
    let mut out: Vec<SaturatedArcSet> = ncp::noncrossing_partitions(points)
        .iter()
        .map(ncp::alpha)
        .collect();
    out.sort();
    out
}

/// Whether translating every arc by `i` gives back `s`.
pub fn is_twist_stable(s: &SaturatedArcSet, i: i64) -> bool {
    s.arcs.map(|u| dualities::twist(u, i)) == s.arcs
}
