//! Text and DOT drawings of arc sets and endomorphism quivers.

use std::collections::BTreeSet;
use std::fmt::Write;

use arcthick::{ArcSet, ChainQuiver, Endpoint};

fn label(x: Endpoint) -> String {
    x.to_string()
}

/// Points on a horizontal line with one row per arc, longest arcs on top.
/// The `−∞` point is drawn as `<`.
///
/// ```text
/// +-------+   0..2
/// +---+       0..1
///     +---+   1..2
/// *---*---*
/// 0   1   2
/// ```
pub fn ascii(set: &ArcSet) -> String {
    let points: Vec<Endpoint> = set.endpoints().into_iter().collect();
    if points.is_empty() {
        return "(no arcs)\n".to_string();
    }
    let step = points.iter().map(|&x| label(x).len()).max().unwrap_or(1) + 3;
    let column = |x: Endpoint| step * points.binary_search(&x).expect("endpoint of the set");
    let width = step * (points.len() - 1) + 1;

    let mut arcs: Vec<_> = set.iter().collect();
    arcs.sort_by_key(|u| (std::cmp::Reverse(column(u.right()) - column(u.left())), *u));

    let mut out = String::new();
    for u in arcs {
        let (l, r) = (column(u.left()), column(u.right()));
        let mut row = vec![b' '; width];
        row[l..=r].fill(b'-');
        row[l] = b'+';
        row[r] = b'+';
        let row = String::from_utf8(row).expect("ascii row");
        writeln!(out, "{row}   {u}").unwrap();
    }

    let mut axis = vec![b'-'; width];
    let mut labels = vec![b' '; width + step];
    for &x in &points {
        let c = column(x);
        axis[c] = if x.is_finite() { b'*' } else { b'<' };
        let text = label(x);
        labels[c..c + text.len()].copy_from_slice(text.as_bytes());
    }
    writeln!(out, "{}", String::from_utf8(axis).expect("ascii axis")).unwrap();
    writeln!(
        out,
        "{}",
        String::from_utf8(labels).expect("ascii labels").trim_end()
    )
    .unwrap();
    out
}

/// One node per endpoint and one edge per arc. Invisible edges keep the
/// points in order along a line; `−∞` is a boxed node on the left.
pub fn dot(set: &ArcSet) -> String {
    let points: BTreeSet<Endpoint> = set.endpoints();
    let mut out = String::from("graph arcs {\n  rankdir=LR;\n  node [shape=circle];\n");
    for &x in &points {
        if x.is_finite() {
            writeln!(out, "  \"{x}\";").unwrap();
        } else {
            writeln!(out, "  \"{x}\" [shape=box];").unwrap();
        }
    }
    let ordered: Vec<_> = points.iter().collect();
    for w in ordered.windows(2) {
        writeln!(out, "  \"{}\" -- \"{}\" [style=invis];", w[0], w[1]).unwrap();
    }
    for u in set.iter() {
        writeln!(out, "  \"{}\" -- \"{}\";", u.left(), u.right()).unwrap();
    }
    out.push_str("}\n");
    out
}

/// Nodes are arcs, edges the arrows between consecutive arcs of a chain.
pub fn quiver_dot(q: &ChainQuiver) -> String {
    let mut out = String::from("digraph quiver {\n  rankdir=LR;\n  node [shape=box];\n");
    for u in q.chains.iter().flatten() {
        writeln!(out, "  \"{u}\";").unwrap();
    }
    for (u, v) in q.arrows() {
        writeln!(out, "  \"{u}\" -> \"{v}\";").unwrap();
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use arcthick::Arc;

    fn set(arcs: &[&str]) -> ArcSet {
        arcs.iter().map(|s| s.parse::<Arc>().unwrap()).collect()
    }

    #[test]
    fn ascii_triangle() {
        let drawn = ascii(&set(&["0..1", "1..2", "0..2"]));
        let expected = "\
+-------+   0..2
+---+       0..1
    +---+   1..2
*---*---*
0   1   2
";
        assert_eq!(drawn, expected);
    }

    #[test]
    fn ascii_marks_minus_infinity() {
        let drawn = ascii(&set(&["-inf..3"]));
        assert_eq!(drawn.lines().nth(1), Some("<------*"));
        assert_eq!(drawn.lines().nth(2), Some("-inf   3"));
        assert_eq!(ascii(&ArcSet::new()), "(no arcs)\n");
    }

    #[test]
    fn dot_has_one_edge_per_arc() {
        let drawn = dot(&set(&["-inf..0", "0..2"]));
        assert_eq!(drawn.matches(" -- ").count(), 2 + 2);
        assert!(drawn.contains("\"-inf\" [shape=box];"));
        assert!(drawn.contains("  \"0\" -- \"2\";\n"));
    }
}
