//! The arc model for the bounded derived category of finitely generated
//! graded modules over `S = k[y]` with `y` in degree 1.
//!
//! Indecomposable objects are, up to suspension, indexed by arcs `(a, b)` with
//! `a < b` in `ℤ ⊔ {−∞}`: a finite arc `(a, b)` is the torsion module
//! `S/(y^(b−a))(b)` and an infinite arc `(−∞, b)` is the free module `S(b)`.
//! Through the BGG correspondence the same combinatorics describes the
//! derived category of the graded dual numbers `k[x]/(x²)`; the torsion part
//! corresponds to perfect complexes there.
//!
//! The crate is organised as follows:
//!
//! - [`arc`]: endpoints, arcs, arc sets and the touch/cross predicates.
//! - [`hom`]: Hom and Ext¹ dimensions, kernels, cokernels, cones and fibres.
//! - [`saturation`]: saturated arc sets (finitely generated thick
//!   subcategories) and their lattice.
//! - [`ncp`]: non-crossing partitions of `ℤ ⊔ {−∞}` and the lattice
//!   isomorphisms with saturated sets.
//! - [`exceptional`]: perpendicular sets and strong exceptional sequences.
//! - [`dualities`]: grading twist and Grothendieck duality reflections.
//! - [`oracle`]: an exact linear-algebra model of the modules, used to
//!   recompute Hom and Ext independently.

pub mod arc;
pub mod dualities;
mod error;
pub mod exceptional;
pub mod hom;
pub mod ncp;
pub mod oracle;
pub mod saturation;
mod serde_impls;

pub use arc::{Arc, ArcSet, Endpoint, Length};
pub use error::{Error, Result};
pub use exceptional::{ChainQuiver, ExceptionalSequence};
pub use hom::{Decomposition, ShiftedArc};
pub use ncp::NCPartition;
pub use saturation::SaturatedArcSet;

#[cfg(test)]
pub(crate) mod testutil {
    use crate::arc::{Arc, ArcSet};
    use proptest::prelude::*;

    pub fn any_arc() -> impl Strategy<Value = Arc> {
        (proptest::option::weighted(0.8, -20i64..20), 1i64..15).prop_map(|(a, len)| match a {
            Some(a) => Arc::finite(a, a + len).unwrap(),
            None => Arc::infinite(len - 8),
        })
    }

    /// Arcs with endpoints in `{−∞} ∪ [-5, 5]`, so that random sets interact.
    pub fn small_arc() -> impl Strategy<Value = Arc> {
        (proptest::option::weighted(0.85, -5i64..5), 0i64..=5).prop_map(|(a, off)| match a {
            Some(a) => Arc::finite(a, (a + 1 + off).min(5)).unwrap(),
            None => Arc::infinite(off * 2 - 5),
        })
    }

    pub fn small_set() -> impl Strategy<Value = ArcSet> {
        proptest::collection::vec(small_arc(), 0..5).prop_map(|v| v.into_iter().collect())
    }
}
