//! Finitely supported non-crossing partitions of `ℤ ⊔ {−∞}`.
//!
//! Only blocks with at least two points are stored; every other point is an
//! implicit singleton. The maps [`alpha`] and [`phi`] are mutually inverse
//! lattice isomorphisms between these partitions and finite saturated arc
//! sets.

use std::collections::BTreeSet;
use std::fmt;

use crate::arc::{Arc, ArcSet, Endpoint};
use crate::error::{Error, Result};
use crate::saturation::{self, SaturatedArcSet};

pub type Block = BTreeSet<Endpoint>;

/// A non-crossing partition with finitely many non-singleton blocks.
///
/// Blocks are kept sorted by their minimum element.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NCPartition {
    blocks: BTreeSet<Block>,
}

impl NCPartition {
    /// The partition into singletons (bottom element).
    pub fn discrete() -> Self {
        Self::default()
    }

    /// Validates disjointness and the non-crossing condition. Blocks with
    /// fewer than two points are dropped since singletons are implicit.
    pub fn new<I, B>(blocks: I) -> Result<Self>
    where
        I: IntoIterator<Item = B>,
        B: IntoIterator<Item = Endpoint>,
    {
        let blocks: Vec<Block> = blocks
            .into_iter()
            .map(|b| b.into_iter().collect::<Block>())
            .filter(|b| b.len() >= 2)
            .collect();
        if let Some((a, c, b, d)) = find_crossing(&blocks)? {
            return Err(Error::CrossingBlocks { a, c, b, d });
        }
        Ok(NCPartition {
            blocks: blocks.into_iter().collect(),
        })
    }

    pub(crate) fn new_unchecked(blocks: BTreeSet<Block>) -> Self {
        let p = NCPartition { blocks };
        debug_assert!(
            find_crossing(&p.blocks.iter().cloned().collect::<Vec<_>>()).is_ok_and(|c| c.is_none()),
            "{p} is not a non-crossing partition"
        );
        p
    }

    pub fn blocks(&self) -> impl Iterator<Item = &Block> {
        self.blocks.iter()
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    /// The block containing `x`, a singleton when `x` is not in the support.
    pub fn block_of(&self, x: Endpoint) -> Block {
        self.blocks
            .iter()
            .find(|b| b.contains(&x))
            .cloned()
            .unwrap_or_else(|| BTreeSet::from([x]))
    }

    /// Points lying in a non-singleton block.
    pub fn support(&self) -> BTreeSet<Endpoint> {
        self.blocks.iter().flatten().copied().collect()
    }

    /// Whether `self` refines `other`, i.e. `self ≤ other`.
    pub fn refines(&self, other: &NCPartition) -> bool {
        self.blocks
            .iter()
            .all(|b| other.blocks.iter().any(|c| b.is_subset(c)))
    }

    pub fn map_points(&self, f: impl Fn(Endpoint) -> Endpoint) -> NCPartition {
        let blocks = self
            .blocks
            .iter()
            .map(|b| b.iter().map(|&x| f(x)).collect())
            .collect();
        NCPartition { blocks }
    }
}

impl fmt::Display for NCPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, b) in self.blocks.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            f.write_str("{")?;
            for (j, x) in b.iter().enumerate() {
                if j > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{x}")?;
            }
            f.write_str("}")?;
        }
        f.write_str("}")
    }
}

/// First quadruple `a < c < b < d` with `a, b` in one block and `c, d` in
/// another.
fn crossing_between(p: &Block, q: &Block) -> Option<(Endpoint, Endpoint, Endpoint, Endpoint)> {
    for &a in p {
        for &b in p.range(a..).skip(1) {
            for &c in q.range(a..b).filter(|&&c| c != a) {
                if let Some(&d) = q.range(b..).find(|&&d| d != b) {
                    return Some((a, c, b, d));
                }
            }
        }
    }
    None
}

fn find_crossing(blocks: &[Block]) -> Result<Option<(Endpoint, Endpoint, Endpoint, Endpoint)>> {
    for (i, p) in blocks.iter().enumerate() {
        for q in &blocks[i + 1..] {
            if let Some(&x) = p.intersection(q).next() {
                return Err(Error::OverlappingBlocks(x));
            }
            if let Some(quad) = crossing_between(p, q).or_else(|| crossing_between(q, p)) {
                return Ok(Some(quad));
            }
        }
    }
    Ok(None)
}

/// Whether pairwise disjoint blocks are non-crossing.
pub fn is_noncrossing(blocks: &[Block]) -> Result<bool> {
    Ok(find_crossing(blocks)?.is_none())
}

/// All arcs with both endpoints in a common block.
pub fn alpha(p: &NCPartition) -> SaturatedArcSet {
    let arcs: ArcSet = p
        .blocks
        .iter()
        .flat_map(|b| {
            b.iter().flat_map(move |&x| {
                b.range(x..)
                    .skip(1)
                    .map(move |&y| Arc::new(x, y).expect("block points are distinct"))
            })
        })
        .collect();
    SaturatedArcSet::new_unchecked(arcs)
}

/// Blocks `{a} ∪ {b | (a,b) ∈ S or (b,a) ∈ S}` for the endpoints `a` of `S`.
pub fn phi(s: &SaturatedArcSet) -> NCPartition {
    let blocks = s
        .endpoints()
        .into_iter()
        .map(|a| {
            let mut block = BTreeSet::from([a]);
            block.extend(s.iter().filter_map(|u| match u.endpoints() {
                [x, y] if x == a => Some(y),
                [x, y] if y == a => Some(x),
                _ => None,
            }));
            block
        })
        .collect();
    NCPartition::new_unchecked(blocks)
}

/// [`phi`] on an unchecked arc set; fails with [`Error::NotSaturated`].
pub fn phi_checked(arcs: &ArcSet) -> Result<NCPartition> {
    Ok(phi(&SaturatedArcSet::new(arcs.clone())?))
}

/// Pairwise block intersections.
pub fn ncp_meet(p: &NCPartition, q: &NCPartition) -> NCPartition {
    let blocks = p
        .blocks
        .iter()
        .flat_map(|b| q.blocks.iter().map(move |c| b & c))
        .filter(|b| b.len() >= 2)
        .collect();
    NCPartition::new_unchecked(blocks)
}

/// Least non-crossing partition coarser than both, computed as
/// `φ(sat(α P ∪ α Q))`.
pub fn ncp_join(p: &NCPartition, q: &NCPartition) -> NCPartition {
    phi(&saturation::join(&alpha(p), &alpha(q)))
}

/// Every non-crossing partition of a finite point set.
pub fn noncrossing_partitions(points: &BTreeSet<Endpoint>) -> Vec<NCPartition> {
    let pts: Vec<Endpoint> = points.iter().copied().collect();
    let mut out: Vec<NCPartition> = partitions_of(&pts)
        .into_iter()
        .map(|blocks| NCPartition {
            blocks: blocks.into_iter().filter(|b| b.len() >= 2).collect(),
        })
        .collect();
    out.sort();
    out
}

/// Non-crossing partitions of a sorted slice: the first point's block splits
/// the remaining points into gaps, each partitioned independently.
fn partitions_of(pts: &[Endpoint]) -> Vec<Vec<Block>> {
    let Some((&first, _)) = pts.split_first() else {
        return vec![Vec::new()];
    };
    block_tails(pts, 1)
        .into_iter()
        .map(|(mut block, mut rest)| {
            block.insert(first);
            rest.push(block);
            rest
        })
        .collect()
}

/// Ways to pick the remaining members of the current block from
/// `pts[start..]`, each paired with a partition of the skipped points.
fn block_tails(pts: &[Endpoint], start: usize) -> Vec<(Block, Vec<Block>)> {
    let mut out: Vec<(Block, Vec<Block>)> = partitions_of(&pts[start..])
        .into_iter()
        .map(|rest| (Block::new(), rest))
        .collect();
    for next in start..pts.len() {
        let gaps = partitions_of(&pts[start..next]);
        for (block, rest) in block_tails(pts, next + 1) {
            for gap in &gaps {
                let mut block = block.clone();
                block.insert(pts[next]);
                let mut parts = gap.clone();
                parts.extend(rest.iter().cloned());
                out.push((block, parts));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::saturation::saturate;
    use crate::testutil::small_set;
    use proptest::prelude::*;

    const NEG: Endpoint = Endpoint::MinusInfinity;

    fn block(v: &[i64]) -> Block {
        v.iter().copied().map(Endpoint::Finite).collect()
    }

    fn ncp(blocks: &[&[i64]]) -> NCPartition {
        NCPartition::new(blocks.iter().map(|b| block(b))).unwrap()
    }

    fn set(arcs: &[&str]) -> ArcSet {
        arcs.iter().map(|s| s.parse::<Arc>().unwrap()).collect()
    }

    /// Ordinary partition join followed by merging crossing blocks until
    /// none cross.
    fn join_by_merging(p: &NCPartition, q: &NCPartition) -> NCPartition {
        let mut blocks: Vec<Block> = p.blocks().chain(q.blocks()).cloned().collect();
        loop {
            let mut merged = false;
            'scan: for i in 0..blocks.len() {
                for j in i + 1..blocks.len() {
                    let (x, y) = (&blocks[i], &blocks[j]);
                    if !x.is_disjoint(y)
                        || crossing_between(x, y).is_some()
                        || crossing_between(y, x).is_some()
                    {
                        let y = blocks.remove(j);
                        blocks[i].extend(y);
                        merged = true;
                        break 'scan;
                    }
                }
            }
            if !merged {
                return NCPartition::new(blocks).unwrap();
            }
        }
    }

    #[test]
    fn noncrossing_examples() {
        assert!(is_noncrossing(&[block(&[0, 3]), block(&[1, 2])]).unwrap());
        assert!(!is_noncrossing(&[block(&[0, 2]), block(&[1, 3])]).unwrap());
        let with_inf: Block = [NEG, Endpoint::Finite(5)].into();
        assert!(is_noncrossing(&[with_inf.clone(), block(&[0, 3])]).unwrap());
        assert!(!is_noncrossing(&[with_inf, block(&[0, 7])]).unwrap());
        assert!(matches!(
            is_noncrossing(&[block(&[0, 1]), block(&[1, 2])]),
            Err(Error::OverlappingBlocks(Endpoint::Finite(1)))
        ));
        assert!(matches!(
            NCPartition::new([block(&[0, 2]), block(&[1, 3])]),
            Err(Error::CrossingBlocks { .. })
        ));
    }

    #[test]
    fn alpha_examples() {
        assert_eq!(*alpha(&ncp(&[&[0, 1, 2]])), set(&["0..1", "0..2", "1..2"]));
        assert!(alpha(&NCPartition::discrete()).is_empty());
        let p =
            NCPartition::new([BTreeSet::from([NEG, Endpoint::Finite(3)]), block(&[0, 1])]).unwrap();
        assert_eq!(*alpha(&p), set(&["-inf..3", "0..1"]));
    }

    #[test]
    fn phi_examples() {
        let s = SaturatedArcSet::new(set(&["0..1", "1..2", "0..2"])).unwrap();
        assert_eq!(phi(&s), ncp(&[&[0, 1, 2]]));
        assert_eq!(phi(&saturate(&set(&["0..2"]))), ncp(&[&[0, 2]]));
        assert_eq!(
            phi(&saturate(&set(&["0..2", "1..3"]))),
            ncp(&[&[0, 1, 2, 3]])
        );
        assert!(matches!(
            phi_checked(&set(&["0..2", "1..3"])),
            Err(Error::NotSaturated { .. })
        ));
    }

    #[test]
    fn meet_examples() {
        assert_eq!(
            ncp_meet(&ncp(&[&[0, 1, 2]]), &ncp(&[&[1, 2, 3]])),
            ncp(&[&[1, 2]])
        );
        assert_eq!(
            ncp_meet(&ncp(&[&[0, 1, 2]]), &NCPartition::discrete()),
            NCPartition::discrete()
        );
        assert_eq!(
            ncp_meet(&ncp(&[&[0, 3], &[1, 2]]), &ncp(&[&[0, 3]])),
            ncp(&[&[0, 3]])
        );
    }

    #[test]
    fn join_examples() {
        assert_eq!(
            ncp_join(&ncp(&[&[0, 2]]), &ncp(&[&[1, 3]])),
            ncp(&[&[0, 1, 2, 3]])
        );
        assert_eq!(
            ncp_join(&ncp(&[&[0, 1]]), &ncp(&[&[2, 3]])),
            ncp(&[&[0, 1], &[2, 3]])
        );
        let p = ncp(&[&[0, 4], &[1, 3]]);
        assert_eq!(ncp_join(&p, &NCPartition::discrete()), p);
    }

    #[test]
    fn partition_counts_are_catalan() {
        let catalan = [1, 1, 2, 5, 14, 42, 132, 429, 1430];
        for (n, &c) in catalan.iter().enumerate() {
            let pts: BTreeSet<Endpoint> = (0..n as i64).map(Endpoint::Finite).collect();
            assert_eq!(noncrossing_partitions(&pts).len(), c, "n = {n}");
        }
    }

    #[test]
    fn generated_partitions_are_valid() {
        let pts: BTreeSet<Endpoint> = [NEG]
            .into_iter()
            .chain((0..5).map(Endpoint::Finite))
            .collect();
        let all = noncrossing_partitions(&pts);
        let distinct: BTreeSet<_> = all.iter().collect();
        assert_eq!(distinct.len(), all.len());
        for p in &all {
            let blocks: Vec<Block> = p.blocks().cloned().collect();
            assert!(is_noncrossing(&blocks).unwrap());
        }
    }

    proptest! {
        #[test]
        fn round_trips_and_homomorphisms(f in small_set(), g in small_set()) {
            let (s, t) = (saturate(&f), saturate(&g));
            let (p, q) = (phi(&s), phi(&t));
            prop_assert_eq!(alpha(&p), s.clone());
            prop_assert_eq!(phi(&alpha(&p)), p.clone());
            prop_assert_eq!(phi(&saturation::meet(&s, &t)), ncp_meet(&p, &q));
            prop_assert_eq!(phi(&saturation::join(&s, &t)), ncp_join(&p, &q));
            prop_assert_eq!(ncp_join(&p, &q), join_by_merging(&p, &q));
            prop_assert!(p.refines(&ncp_join(&p, &q)));
            prop_assert!(ncp_meet(&p, &q).refines(&p));
        }

        #[test]
        fn block_membership_coherent(f in small_set()) {
            let p = phi(&saturate(&f));
            for a in p.support() {
                for b in p.support() {
                    prop_assert_eq!(p.block_of(a).contains(&b), p.block_of(a) == p.block_of(b));
                }
            }
        }

        #[test]
        fn finite_part(f in small_set()) {
            let s = saturate(&f);
            let finite = s.iter().all(|u| u.is_finite());
            prop_assert_eq!(finite, phi(&s).block_of(NEG).len() == 1);
        }
    }
}
