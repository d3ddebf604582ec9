//! Independent recomputation of Hom and Ext¹ by exact linear algebra.
//!
//! Each arc is realised as an explicit graded vector space with the action of
//! `y` (degree +1): `M(a,b) = S/(y^(b−a))(b)` has one basis vector in each
//! degree `−b, …, −a−1`, and the free module `M(−∞,b) = S(b)` has one in each
//! degree `≥ −b`, cut off at a window top `T`.
//!
//! Two routes are provided:
//!
//! - through the projective resolution `0 → S(c) → S(d) → M(c,d) → 0`, which
//!   turns Hom and Ext¹ out of `M(c,d)` into the kernel and cokernel of
//!   `y^(d−c) : V_{−d} → V_{−c}`;
//! - by solving directly for all degree-0 linear maps commuting with `y`.
//!
//! A free target is never mapped into across the truncation: the window must
//! contain every degree where a relation or generator lives, and violations
//! are reported as [`Error::WindowTooSmall`].

pub mod field;
pub mod matrix;

use std::collections::BTreeMap;

use crate::arc::{Arc, Endpoint};
use crate::error::{Error, Result};
use field::{Field, Rational64};
use matrix::Matrix;

/// Dimensions per internal degree, zero entries omitted.
pub type DegreeProfile = BTreeMap<i64, usize>;

/// A finite-dimensional graded module over `k[y]`.
#[derive(Clone, Debug, PartialEq)]
pub struct GradedModuleRep<F> {
    degrees: BTreeMap<i64, usize>,
    /// `y_action[d]` maps the degree-`d` component to degree `d + 1`.
    y_action: BTreeMap<i64, Matrix<F>>,
    truncation_top: Option<i64>,
}

impl<F: Field> GradedModuleRep<F> {
    pub fn dim(&self, degree: i64) -> usize {
        self.degrees.get(&degree).copied().unwrap_or(0)
    }

    pub fn profile(&self) -> DegreeProfile {
        self.degrees
            .iter()
            .filter(|(_, &n)| n > 0)
            .map(|(&d, &n)| (d, n))
            .collect()
    }

    pub fn truncation_top(&self) -> Option<i64> {
        self.truncation_top
    }

    pub fn total_dim(&self) -> usize {
        self.degrees.values().sum()
    }

    /// Lowest and highest occupied degree.
    pub fn support(&self) -> Option<(i64, i64)> {
        let mut occupied = self.degrees.iter().filter(|(_, &n)| n > 0).map(|(&d, _)| d);
        let lo = occupied.next()?;
        Some((lo, occupied.next_back().unwrap_or(lo)))
    }

    /// Action of `y` from degree `d` to `d + 1`.
    pub fn y(&self, degree: i64) -> Matrix<F> {
        self.y_action
            .get(&degree)
            .cloned()
            .unwrap_or_else(|| Matrix::zeros(self.dim(degree + 1), self.dim(degree)))
    }

    /// Action of `y^k` from degree `d` to `d + k`.
    pub fn y_power(&self, degree: i64, k: u64) -> Matrix<F> {
        let mut acc = Matrix::identity(self.dim(degree));
        for step in 0..k as i64 {
            acc = self.y(degree + step).mul(&acc);
        }
        acc
    }
}

/// Smallest window top accepted for a computation involving `u` and `v`.
///
/// It must lie above every finite left endpoint's relation degree `−a` and
/// reach every generator degree `−b`.
pub fn required_window(u: Arc, v: Arc) -> i64 {
    [u, v]
        .iter()
        .flat_map(|w| {
            let relation = w.left().finite().map(|a| -a + 1);
            relation.into_iter().chain([-w.right_value()])
        })
        .max()
        .expect("two arcs")
}

fn check_window(u: Arc, v: Arc, window_top: i64) -> Result<()> {
    let required = required_window(u, v);
    if window_top < required {
        return Err(Error::WindowTooSmall {
            window_top,
            required,
        });
    }
    Ok(())
}

/// The explicit module `M_u`. Finite arcs ignore `window_top`; free modules
/// are cut off there, which must be at least the generator degree `−b`.
pub fn module_of_arc<F: Field>(u: Arc, window_top: i64) -> Result<GradedModuleRep<F>> {
    let b = u.right_value();
    let (top, truncation_top) = match u.left() {
        Endpoint::Finite(a) => (-a - 1, None),
        Endpoint::MinusInfinity => {
            if window_top < -b {
                return Err(Error::WindowTooSmall {
                    window_top,
                    required: -b,
                });
            }
            (window_top, Some(window_top))
        }
    };
    let degrees: BTreeMap<i64, usize> = (-b..=top).map(|d| (d, 1)).collect();
    let y_action = (-b..top).map(|d| (d, Matrix::identity(1))).collect();
    Ok(GradedModuleRep {
        degrees,
        y_action,
        truncation_top,
    })
}

/// `dim Hom(M_u, M_v)` via the resolution of `M_u`.
pub fn oracle_hom_dim_over<F: Field>(u: Arc, v: Arc, window_top: i64) -> Result<usize> {
    check_window(u, v, window_top)?;
    let target = module_of_arc::<F>(v, window_top)?;
    let d = u.right_value();
    Ok(match u.left() {
        // Hom(S(d), N) = N_{−d}
        Endpoint::MinusInfinity => target.dim(-d),
        Endpoint::Finite(c) => {
            let y = target.y_power(-d, (d - c) as u64);
            target.dim(-d) - y.rank()
        }
    })
}

/// `dim Ext¹(M_u, M_v)` via the resolution of `M_u`.
pub fn oracle_ext_dim_over<F: Field>(u: Arc, v: Arc, window_top: i64) -> Result<usize> {
    check_window(u, v, window_top)?;
    let Endpoint::Finite(c) = u.left() else {
        // free modules are projective
        return Ok(0);
    };
    let target = module_of_arc::<F>(v, window_top)?;
    let d = u.right_value();
    let y = target.y_power(-d, (d - c) as u64);
    Ok(target.dim(-c) - y.rank())
}

/// Degree-0 maps `M_u → M_v` commuting with `y`, as a basis of solutions.
/// Each solution assigns a matrix to every degree.
pub fn direct_hom_basis<F: Field>(
    u: Arc,
    v: Arc,
    window_top: i64,
) -> Result<Vec<BTreeMap<i64, Matrix<F>>>> {
    check_window(u, v, window_top)?;
    let source = module_of_arc::<F>(u, window_top)?;
    let target = module_of_arc::<F>(v, window_top)?;

    let mut degrees: Vec<i64> = source
        .degrees
        .keys()
        .chain(target.degrees.keys())
        .copied()
        .collect();
    degrees.sort();
    degrees.dedup();

    // unknown f_d is a dim V_d × dim U_d block
    let mut offset = BTreeMap::new();
    let mut n_vars = 0;
    for &d in &degrees {
        offset.insert(d, n_vars);
        n_vars += target.dim(d) * source.dim(d);
    }
    let var = |d: i64, r: usize, c: usize| offset[&d] + r * source.dim(d) + c;

    // f_{d+1} ∘ y_U = y_V ∘ f_d, except out of the truncation top where the
    // window has cut the action off
    let cut = source.truncation_top.or(target.truncation_top);
    let mut equations: Vec<Vec<(usize, F)>> = Vec::new();
    for &d in &degrees {
        if cut == Some(d) {
            continue;
        }
        let (y_u, y_v) = (source.y(d), target.y(d));
        for r in 0..target.dim(d + 1) {
            for s in 0..source.dim(d) {
                let mut eq = Vec::new();
                for t in 0..source.dim(d + 1) {
                    if !y_u.get(t, s).is_zero() {
                        eq.push((var(d + 1, r, t), y_u.get(t, s).clone()));
                    }
                }
                for t in 0..target.dim(d) {
                    if !y_v.get(r, t).is_zero() {
                        eq.push((var(d, t, s), -y_v.get(r, t).clone()));
                    }
                }
                if !eq.is_empty() {
                    equations.push(eq);
                }
            }
        }
    }

    let mut system = Matrix::<F>::zeros(equations.len(), n_vars);
    for (i, eq) in equations.into_iter().enumerate() {
        for (j, x) in eq {
            let x = system.get(i, j).clone() + x;
            system.set(i, j, x);
        }
    }

    let basis = system
        .nullspace()
        .into_iter()
        .map(|sol| {
            degrees
                .iter()
                .filter(|&&d| source.dim(d) > 0 && target.dim(d) > 0)
                .map(|&d| {
                    let mut m = Matrix::zeros(target.dim(d), source.dim(d));
                    for r in 0..target.dim(d) {
                        for c in 0..source.dim(d) {
                            m.set(r, c, sol[var(d, r, c)].clone());
                        }
                    }
                    (d, m)
                })
                .collect()
        })
        .collect();
    Ok(basis)
}

pub fn oracle_direct_hom_dim_over<F: Field>(u: Arc, v: Arc, window_top: i64) -> Result<usize> {
    Ok(direct_hom_basis::<F>(u, v, window_top)?.len())
}

/// [`oracle_hom_dim_over`] with rational coefficients.
pub fn oracle_hom_dim(u: Arc, v: Arc, window_top: i64) -> Result<usize> {
    oracle_hom_dim_over::<Rational64>(u, v, window_top)
}

/// [`oracle_ext_dim_over`] with rational coefficients.
pub fn oracle_ext_dim(u: Arc, v: Arc, window_top: i64) -> Result<usize> {
    oracle_ext_dim_over::<Rational64>(u, v, window_top)
}

/// [`oracle_direct_hom_dim_over`] with rational coefficients.
pub fn oracle_direct_hom_dim(u: Arc, v: Arc, window_top: i64) -> Result<usize> {
    oracle_direct_hom_dim_over::<Rational64>(u, v, window_top)
}

/// Degreewise kernel and cokernel dimensions of a nonzero morphism
/// `M_u → M_v` found by the direct solver, or `None` when Hom vanishes.
/// Hom is at most one dimensional, so any nonzero solution will do.
pub fn kernel_cokernel_profiles<F: Field>(
    u: Arc,
    v: Arc,
    window_top: i64,
) -> Result<Option<(DegreeProfile, DegreeProfile)>> {
    let Some(map) = direct_hom_basis::<F>(u, v, window_top)?.into_iter().next() else {
        return Ok(None);
    };
    let source = module_of_arc::<F>(u, window_top)?;
    let target = module_of_arc::<F>(v, window_top)?;
    let mut kernel = DegreeProfile::new();
    let mut cokernel = DegreeProfile::new();
    let all: std::collections::BTreeSet<i64> = source
        .degrees
        .keys()
        .chain(target.degrees.keys())
        .copied()
        .collect();
    for d in all {
        let rank = map.get(&d).map_or(0, Matrix::rank);
        let k = source.dim(d) - rank;
        let c = target.dim(d) - rank;
        if k > 0 {
            kernel.insert(d, k);
        }
        if c > 0 {
            cokernel.insert(d, c);
        }
    }
    Ok(Some((kernel, cokernel)))
}
