//! Perpendicular sets and strong exceptional sequences.
//!
//! Starting from a finite saturated set, repeatedly take the lexicographically
//! minimal arc `(l,m)` and pass to the perpendicular set
//!
//! ```text
//! S ⊥ (l,m) = { (a,b) ∈ S | neither l < a ≤ m < b nor a ≤ l < b ≤ m }
//! ```
//!
//! The extracted arcs form a strong exceptional sequence generating the
//! original set, and the endomorphism algebra of their sum is a product of
//! linearly oriented type A path algebras.

use std::collections::BTreeMap;

use crate::arc::{Arc, ArcSet, Endpoint};
use crate::error::{Error, Result};
use crate::hom::{ext_dim, hom_dim};
use crate::saturation::{saturate, SaturatedArcSet};

/// Ordered arcs `(E_1, …, E_n)` with `RHom(E_j, E_i) = 0` for `j > i` and
/// `Ext¹(E_i, E_j) = 0` for `i < j`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct ExceptionalSequence {
    arcs: Vec<Arc>,
}

impl ExceptionalSequence {
    /// Validates ordered vanishing and strongness.
    pub fn new(arcs: Vec<Arc>) -> Result<Self> {
        for (i, &earlier) in arcs.iter().enumerate() {
            for &later in &arcs[i + 1..] {
                if earlier == later {
                    return Err(Error::NotExceptional(format!("{earlier} appears twice")));
                }
                if hom_dim(later, earlier) + ext_dim(later, earlier) != 0 {
                    return Err(Error::NotExceptional(format!(
                        "RHom({later}, {earlier}) is nonzero but {later} comes later"
                    )));
                }
                if ext_dim(earlier, later) != 0 {
                    return Err(Error::NotExceptional(format!(
                        "Ext¹({earlier}, {later}) is nonzero, so the sequence is not strong"
                    )));
                }
            }
        }
        Ok(ExceptionalSequence { arcs })
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn len(&self) -> usize {
        self.arcs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arcs.is_empty()
    }
}

/// Linearly oriented `A_r` chains; the endomorphism algebra is
/// `k A_{r_1} × ⋯ × k A_{r_k}`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct ChainQuiver {
    pub chains: Vec<Vec<Arc>>,
}

impl ChainQuiver {
    pub fn chain_lengths(&self) -> Vec<usize> {
        self.chains.iter().map(Vec::len).collect()
    }

    /// Arrows between consecutive arcs of each chain.
    pub fn arrows(&self) -> impl Iterator<Item = (Arc, Arc)> + '_ {
        self.chains
            .iter()
            .flat_map(|c| c.windows(2).map(|w| (w[0], w[1])))
    }

    /// `A_3 × A_1`, or `0` for the empty quiver.
    pub fn type_string(&self) -> String {
        if self.chains.is_empty() {
            return "0".to_string();
        }
        self.chains
            .iter()
            .map(|c| format!("A_{}", c.len()))
            .collect::<Vec<_>>()
            .join(" × ")
    }
}

pub fn minimal_arc(s: &SaturatedArcSet) -> Result<Arc> {
    s.first().ok_or(Error::EmptySet)
}

/// `S ⊥ (l,m)`; `lm` must be the minimal arc of `s`.
pub fn perpendicular(s: &SaturatedArcSet, lm: Arc) -> Result<SaturatedArcSet> {
    let minimal = minimal_arc(s)?;
    if lm != minimal {
        return Err(Error::NotMinimal { given: lm, minimal });
    }
    Ok(perpendicular_unchecked(s, lm))
}

fn perpendicular_unchecked(s: &ArcSet, lm: Arc) -> SaturatedArcSet {
    let (l, m) = (lm.left(), lm.right());
    let kept: ArcSet = s
        .iter()
        .filter(|u| {
            let (a, b) = (u.left(), u.right());
            let ext_to = l < a && a <= m && m < b;
            let hom_to = a <= l && l < b && b <= m;
            !(ext_to || hom_to)
        })
        .collect();
    SaturatedArcSet::new_unchecked(kept)
}

/// Strong exceptional sequence generating `saturate(f)`.
pub fn exceptional_sequence(f: &ArcSet) -> ExceptionalSequence {
    let mut current = saturate(f);
    let mut arcs = Vec::new();
    while let Some(lm) = current.first() {
        arcs.push(lm);
        current = perpendicular_unchecked(&current, lm);
    }
    ExceptionalSequence { arcs }
}

/// Groups the sequence by left endpoint; each group, ordered by right
/// endpoint, is one chain.
pub fn endo_quiver(e: &ExceptionalSequence) -> ChainQuiver {
    let mut groups: BTreeMap<Endpoint, Vec<Arc>> = BTreeMap::new();
    for &u in &e.arcs {
        groups.entry(u.left()).or_default().push(u);
    }
    let chains = groups
        .into_values()
        .map(|mut c| {
            c.sort();
            c
        })
        .collect();
    ChainQuiver { chains }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncp::phi;
    use crate::saturation::enumerate_saturated;
    use crate::testutil::small_set;
    use proptest::prelude::*;
    use std::collections::BTreeSet;

    fn arc(s: &str) -> Arc {
        s.parse().unwrap()
    }

    fn set(arcs: &[&str]) -> ArcSet {
        arcs.iter().map(|s| arc(s)).collect()
    }

    fn six() -> SaturatedArcSet {
        saturate(&set(&["0..2", "1..3"]))
    }

    #[test]
    fn minimal_examples() {
        assert_eq!(minimal_arc(&six()).unwrap(), arc("0..1"));
        assert_eq!(
            minimal_arc(&saturate(&set(&["-inf..2", "0..1"]))).unwrap(),
            arc("-inf..2")
        );
        assert_eq!(
            minimal_arc(&saturate(&set(&["5..9"]))).unwrap(),
            arc("5..9")
        );
        assert_eq!(minimal_arc(&SaturatedArcSet::empty()), Err(Error::EmptySet));
    }

    #[test]
    fn perpendicular_examples() {
        let p = perpendicular(&six(), arc("0..1")).unwrap();
        assert_eq!(*p, set(&["0..2", "0..3", "2..3"]));
        assert!(perpendicular(&saturate(&set(&["0..1"])), arc("0..1"))
            .unwrap()
            .is_empty());
        let p = perpendicular(&saturate(&set(&["0..1", "2..3"])), arc("0..1")).unwrap();
        assert_eq!(*p, set(&["2..3"]));
        assert!(matches!(
            perpendicular(&six(), arc("1..2")),
            Err(Error::NotMinimal { .. })
        ));
    }

    #[test]
    fn sequence_examples() {
        let e = exceptional_sequence(&set(&["0..2", "1..3"]));
        assert_eq!(e.arcs(), [arc("0..1"), arc("0..2"), arc("0..3")]);
        let q = endo_quiver(&e);
        assert_eq!(q.chains, [vec![arc("0..1"), arc("0..2"), arc("0..3")]]);
        assert_eq!(q.type_string(), "A_3");

        let e = exceptional_sequence(&set(&["0..1", "2..3"]));
        assert_eq!(e.arcs(), [arc("0..1"), arc("2..3")]);
        let q = endo_quiver(&e);
        assert_eq!(q.chains, [vec![arc("0..1")], vec![arc("2..3")]]);
        assert_eq!(q.type_string(), "A_1 × A_1");

        let e = exceptional_sequence(&ArcSet::new());
        assert!(e.is_empty());
        assert!(endo_quiver(&e).chains.is_empty());
    }

    #[test]
    fn validation() {
        assert!(ExceptionalSequence::new(vec![arc("0..1"), arc("0..2")]).is_ok());
        // Hom(0..2, 1..3) ≠ 0 would point backwards
        assert!(ExceptionalSequence::new(vec![arc("1..3"), arc("0..2")]).is_err());
        // exceptional but not strong: Ext¹(1..3, 0..1) ≠ 0
        let err = ExceptionalSequence::new(vec![arc("1..3"), arc("0..1")]).unwrap_err();
        assert!(err.to_string().contains("not strong"));
        assert!(ExceptionalSequence::new(vec![arc("0..2"), arc("0..2")]).is_err());
    }

    #[test]
    fn length_is_rank_of_partition() {
        let pts: BTreeSet<Endpoint> = [Endpoint::MinusInfinity]
            .into_iter()
            .chain((0..4).map(Endpoint::Finite))
            .collect();
        for s in enumerate_saturated(&pts).unwrap() {
            let e = exceptional_sequence(&s);
            let p = phi(&s);
            assert_eq!(e.len(), p.support().len() - p.num_blocks(), "{s}");
        }
    }

    proptest! {
        #[test]
        fn perpendicular_is_hom_ext_orthogonal(f in small_set()) {
            let s = saturate(&f);
            if let Ok(lm) = minimal_arc(&s) {
                let p = perpendicular(&s, lm).unwrap();
                for u in s.iter() {
                    let orthogonal = hom_dim(u, lm) == 0 && ext_dim(u, lm) == 0;
                    prop_assert_eq!(p.contains(&u), orthogonal);
                }
            }
        }

        #[test]
        fn sequences_are_strong_and_generate(f in small_set()) {
            let e = exceptional_sequence(&f);
            prop_assert!(ExceptionalSequence::new(e.arcs().to_vec()).is_ok());
            let generated = saturate(&e.arcs().iter().copied().collect());
            prop_assert_eq!(generated, saturate(&f));
        }
    }
}
