//! Hom and Ext¹ between indecomposables, with kernels, cokernels, cones and
//! fibres.
//!
//! Every Hom and Ext¹ space between two indecomposables is 0 or 1
//! dimensional, independent of the ground field, so the nonzero morphism (or
//! extension class) is unique up to scalar and its cone or fibre is
//! canonical. All dimensions are returned as `usize` with values in `{0, 1}`.
//!
//! Argument order is always source first: [`ext_dim(u, v)`](ext_dim) is
//! `dim Hom(M_u, Σ M_v) = dim Ext¹(M_u, M_v)`, the extensions *of* `u` *by*
//! `v`.

use std::fmt;

use crate::arc::{Arc, Endpoint};
use crate::error::{Error, Result};

/// `Σ^shift M(arc)`, with `shift` counting applications of the suspension.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ShiftedArc {
    pub arc: Arc,
    pub shift: i64,
}

impl ShiftedArc {
    pub fn new(arc: Arc, shift: i64) -> Self {
        ShiftedArc { arc, shift }
    }
}

/// A direct sum of shifted indecomposables; the empty sum is zero.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Decomposition {
    pub summands: Vec<ShiftedArc>,
}

impl Decomposition {
    pub fn is_zero(&self) -> bool {
        self.summands.is_empty()
    }

    pub fn arcs(&self) -> impl Iterator<Item = Arc> + '_ {
        self.summands.iter().map(|s| s.arc)
    }

    /// Renders as `Σ^1 0..1 ⊕ Σ^0 3..4`, or with `S^k` and `+` when `ascii`.
    /// The zero object prints as `0`.
    pub fn render(&self, ascii: bool) -> String {
        if self.summands.is_empty() {
            return "0".to_string();
        }
        let (sigma, plus) = if ascii { ("S", " + ") } else { ("Σ", " ⊕ ") };
        self.summands
            .iter()
            .map(|s| format!("{sigma}^{} {}", s.shift, s.arc))
            .collect::<Vec<_>>()
            .join(plus)
    }
}

impl fmt::Display for Decomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(false))
    }
}

/// `dim Hom(M_u, M_v)`: 1 iff `a ≤ c < b ≤ d` for `u = (a,b)`, `v = (c,d)`.
pub fn hom_dim(u: Arc, v: Arc) -> usize {
    let (a, b, c, d) = (u.left(), u.right(), v.left(), v.right());
    usize::from(a <= c && c < b && b <= d)
}

/// `dim Ext¹(M_u, M_v)`: with target `v = (a,b)` and source `u = (c,d)`, 1 iff
/// `a < c ≤ b < d`.
pub fn ext_dim(u: Arc, v: Arc) -> usize {
    let (c, d, a, b) = (u.left(), u.right(), v.left(), v.right());
    usize::from(a < c && c <= b && b < d)
}

/// `dim Hom(M_u, Σ^n M_v)`. The base is hereditary so only `n ∈ {0, 1}` can
/// be nonzero.
pub fn rhom_dim(u: Arc, v: Arc, n: i64) -> usize {
    match n {
        0 => hom_dim(u, v),
        1 => ext_dim(u, v),
        _ => 0,
    }
}

/// Kernel `(a,c)` and cokernel `(b,d)` of a nonzero `M_u → M_v`; `None` marks
/// a zero kernel or cokernel.
pub fn ker_coker(u: Arc, v: Arc) -> Result<(Option<Arc>, Option<Arc>)> {
    if hom_dim(u, v) == 0 {
        return Err(Error::NoMorphism { from: u, to: v });
    }
    let kernel = Arc::nondegenerate(u.left(), v.left());
    let cokernel = Arc::nondegenerate(u.right(), v.right());
    Ok((kernel, cokernel))
}

/// Cone of a nonzero `M_u → M_v`: `Σ ker ⊕ coker = Σ¹ M(a,c) ⊕ M(b,d)`.
pub fn cone(u: Arc, v: Arc) -> Result<Decomposition> {
    let (kernel, cokernel) = ker_coker(u, v)?;
    let summands = kernel
        .map(|k| ShiftedArc::new(k, 1))
        .into_iter()
        .chain(cokernel.map(|c| ShiftedArc::new(c, 0)))
        .collect();
    Ok(Decomposition { summands })
}

/// Middle term `B = M(c,b) ⊕ M(a,d)` of the non-split triangle
/// `M_v → B → M_u → Σ M_v`, where `v = (a,b)` and `u = (c,d)`.
pub fn fiber(u: Arc, v: Arc) -> Result<Decomposition> {
    if ext_dim(u, v) == 0 {
        return Err(Error::NoExtension { from: u, to: v });
    }
    let (c, d, a, b) = (u.left(), u.right(), v.left(), v.right());
    let summands = [Arc::nondegenerate(c, b), Arc::nondegenerate(a, d)]
        .into_iter()
        .flatten()
        .map(|w| ShiftedArc::new(w, 0))
        .collect();
    Ok(Decomposition { summands })
}

/// True when `u` is a free module (left endpoint `−∞`).
pub fn is_free(u: Arc) -> bool {
    u.left() == Endpoint::MinusInfinity
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::any_arc;
    use proptest::prelude::*;

    fn arc(s: &str) -> Arc {
        s.parse().unwrap()
    }

    fn arcs(d: &Decomposition) -> Vec<(String, i64)> {
        d.summands
            .iter()
            .map(|s| (s.arc.to_string(), s.shift))
            .collect()
    }

    #[test]
    fn hom_examples() {
        assert_eq!(hom_dim(arc("0..3"), arc("1..4")), 1);
        assert_eq!(hom_dim(arc("1..4"), arc("0..3")), 0);
        assert_eq!(hom_dim(arc("-inf..2"), arc("-inf..5")), 1);
        assert_eq!(hom_dim(arc("0..2"), arc("2..4")), 0);
    }

    #[test]
    fn ext_examples() {
        assert_eq!(ext_dim(arc("1..4"), arc("0..2")), 1);
        assert_eq!(ext_dim(arc("2..4"), arc("0..2")), 1);
        assert_eq!(ext_dim(arc("-inf..4"), arc("0..2")), 0);
        assert_eq!(ext_dim(arc("1..3"), arc("-inf..2")), 1);
    }

    #[test]
    fn kernels_and_cokernels() {
        assert_eq!(
            ker_coker(arc("0..3"), arc("1..4")).unwrap(),
            (Some(arc("0..1")), Some(arc("3..4")))
        );
        assert_eq!(
            ker_coker(arc("0..3"), arc("0..4")).unwrap(),
            (None, Some(arc("3..4")))
        );
        assert_eq!(ker_coker(arc("0..3"), arc("0..3")).unwrap(), (None, None));
        assert!(matches!(
            ker_coker(arc("1..4"), arc("0..3")),
            Err(Error::NoMorphism { .. })
        ));
    }

    #[test]
    fn cones() {
        let c = cone(arc("0..3"), arc("1..4")).unwrap();
        assert_eq!(arcs(&c), [("0..1".into(), 1), ("3..4".into(), 0)]);
        assert_eq!(c.to_string(), "Σ^1 0..1 ⊕ Σ^0 3..4");
        assert_eq!(c.render(true), "S^1 0..1 + S^0 3..4");
        assert!(cone(arc("0..3"), arc("0..3")).unwrap().is_zero());
        let c = cone(arc("-inf..2"), arc("-inf..5")).unwrap();
        assert_eq!(arcs(&c), [("2..5".into(), 0)]);
        // free source into torsion target: the kernel is free
        let c = cone(arc("-inf..2"), arc("1..4")).unwrap();
        assert_eq!(arcs(&c), [("-inf..1".into(), 1), ("2..4".into(), 0)]);
        assert!(cone(arc("0..2"), arc("2..4")).is_err());
    }

    #[test]
    fn fibers() {
        let f = fiber(arc("1..4"), arc("0..2")).unwrap();
        assert_eq!(arcs(&f), [("1..2".into(), 0), ("0..4".into(), 0)]);
        let f = fiber(arc("2..4"), arc("0..2")).unwrap();
        assert_eq!(arcs(&f), [("0..4".into(), 0)]);
        let f = fiber(arc("1..3"), arc("-inf..2")).unwrap();
        assert_eq!(arcs(&f), [("1..2".into(), 0), ("-inf..3".into(), 0)]);
        assert!(matches!(
            fiber(arc("0..2"), arc("1..4")),
            Err(Error::NoExtension { .. })
        ));
    }

    #[test]
    fn rhom() {
        assert_eq!(rhom_dim(arc("0..3"), arc("1..4"), 0), 1);
        assert_eq!(rhom_dim(arc("1..4"), arc("0..2"), 1), 1);
        assert_eq!(rhom_dim(arc("0..3"), arc("1..4"), 2), 0);
        assert_eq!(rhom_dim(arc("0..3"), arc("0..3"), -1), 0);
    }

    proptest! {
        #[test]
        fn exceptional_objects(u in any_arc()) {
            prop_assert_eq!(hom_dim(u, u), 1);
            prop_assert_eq!(ext_dim(u, u), 0);
        }

        #[test]
        fn structural_vanishing(u in any_arc(), v in any_arc()) {
            if u != v {
                prop_assert_eq!(hom_dim(u, v) * hom_dim(v, u), 0);
            }
            prop_assert_eq!(hom_dim(u, v) * ext_dim(u, v), 0);
            if is_free(u) {
                prop_assert_eq!(ext_dim(u, v), 0);
            }
            if !is_free(u) && is_free(v) {
                prop_assert_eq!(hom_dim(u, v), 0);
            }
        }

        #[test]
        fn cone_and_fiber_use_input_endpoints(u in any_arc(), v in any_arc()) {
            let pool = [u.left(), u.right(), v.left(), v.right()];
            let mut emitted = Vec::new();
            if let Ok(c) = cone(u, v) {
                emitted.extend(c.arcs());
            }
            if let Ok(f) = fiber(u, v) {
                emitted.extend(f.arcs());
            }
            for w in emitted {
                prop_assert!(pool.contains(&w.left()) && pool.contains(&w.right()));
            }
        }
    }
}
