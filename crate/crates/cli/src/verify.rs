//! Exhaustive comparison of the closed-form calculus against the oracle.

use std::collections::BTreeSet;
use std::fmt::Write;

use arcthick::arc::arcs_on;
use arcthick::hom::{ext_dim, hom_dim};
use arcthick::oracle::{oracle_direct_hom_dim, oracle_ext_dim, oracle_hom_dim, required_window};
use arcthick::{Arc, Endpoint, Error};

pub struct Report {
    pub arcs: usize,
    pub pairs: usize,
    pub mismatches: Vec<String>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }

    pub fn render(&self, window: i64, lo: i64, hi: i64) -> String {
        let mut out = String::new();
        for m in &self.mismatches {
            writeln!(out, "mismatch {m}").unwrap();
        }
        writeln!(out, "range: -inf,{lo}..{hi}").unwrap();
        writeln!(out, "window: {window}").unwrap();
        writeln!(out, "arcs: {}", self.arcs).unwrap();
        writeln!(out, "pairs: {}", self.pairs).unwrap();
        writeln!(out, "mismatches: {}", self.mismatches.len()).unwrap();
        let verdict = if self.passed() { "ok" } else { "FAILED" };
        writeln!(out, "result: {verdict}").unwrap();
        out
    }
}

/// Every ordered pair of arcs with endpoints in `{−∞} ∪ [lo, hi]`.
pub fn run(window: i64, lo: i64, hi: i64) -> Result<Report, Error> {
    let mut points: BTreeSet<Endpoint> = (lo..=hi).map(Endpoint::Finite).collect();
    points.insert(Endpoint::MinusInfinity);
    let arcs: Vec<Arc> = arcs_on(&points);

    let required = arcs
        .iter()
        .map(|&u| required_window(u, u))
        .max()
        .unwrap_or(i64::MIN);
    if window < required {
        return Err(Error::WindowTooSmall {
            window_top: window,
            required,
        });
    }

    let mut mismatches = Vec::new();
    for &u in &arcs {
        for &v in &arcs {
            let hom = hom_dim(u, v);
            let ext = ext_dim(u, v);
            let o_hom = oracle_hom_dim(u, v, window)?;
            let o_ext = oracle_ext_dim(u, v, window)?;
            let o_direct = oracle_direct_hom_dim(u, v, window)?;
            if hom != o_hom || hom != o_direct {
                mismatches.push(format!(
                    "hom {u} {v}: closed form {hom}, resolution {o_hom}, direct {o_direct}"
                ));
            }
            if ext != o_ext {
                mismatches.push(format!(
                    "ext {u} {v}: closed form {ext}, resolution {o_ext}"
                ));
            }
        }
    }
    Ok(Report {
        arcs: arcs.len(),
        pairs: arcs.len() * arcs.len(),
        mismatches,
    })
}
