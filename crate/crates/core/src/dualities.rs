//! Autoequivalence actions on arcs.
//!
//! The grading twist `(i)` translates arcs by `i`. Grothendieck duality
//! `RHom(−, S(j))` acts, up to suspension, by the reflection
//! `s_j(a,b) = (j−b, j−a)`, `s_j(−∞,b) = (−∞, j−b)`. Duality is contravariant
//! and moves torsion modules by one suspension, recorded by [`shift_delta`]:
//!
//! ```text
//! rhom_dim(u, v, n) = rhom_dim(s_j v, s_j u, n + δ(v) − δ(u))
//! ```

use crate::arc::{Arc, Endpoint};
use crate::ncp::NCPartition;
use crate::saturation::SaturatedArcSet;

/// Suspension acquired under duality: 1 for torsion (finite) arcs, 0 for free.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ShiftDelta(u8);

impl ShiftDelta {
    pub fn value(self) -> i64 {
        i64::from(self.0)
    }
}

pub fn twist(u: Arc, i: i64) -> Arc {
    let right = Endpoint::Finite(u.right_value() + i);
    Arc::new(u.left().translate(i), right).expect("translation preserves a < b")
}

fn reflect_point(x: Endpoint, j: i64) -> Endpoint {
    match x {
        Endpoint::Finite(z) => Endpoint::Finite(j - z),
        Endpoint::MinusInfinity => Endpoint::MinusInfinity,
    }
}

pub fn reflect(u: Arc, j: i64) -> Arc {
    let b = u.right_value();
    let reflected = match u.left() {
        Endpoint::Finite(a) => Arc::finite(j - b, j - a),
        Endpoint::MinusInfinity => Ok(Arc::infinite(j - b)),
    };
    reflected.expect("reflection preserves a < b")
}

pub fn shift_delta(u: Arc) -> ShiftDelta {
    ShiftDelta(u8::from(u.is_finite()))
}

pub fn twist_set(s: &SaturatedArcSet, i: i64) -> SaturatedArcSet {
    SaturatedArcSet::new_unchecked(s.map(|u| twist(u, i)))
}

pub fn reflect_set(s: &SaturatedArcSet, j: i64) -> SaturatedArcSet {
    SaturatedArcSet::new_unchecked(s.map(|u| reflect(u, j)))
}

/// Reflects every block point-wise.
pub fn reflect_ncp(p: &NCPartition, j: i64) -> NCPartition {
    p.map_points(|x| reflect_point(x, j))
}

pub fn is_reflection_symmetric(s: &SaturatedArcSet, j: i64) -> bool {
    reflect_set(s, j) == *s
}
