//! Parsing of command-line operands.
//!
//! Sets and partitions are accepted as inline JSON (anything starting with
//! `{`), `-` for standard input, or a path to a JSON file. Arc sets may also
//! be written as a comma-separated list such as `0..2,1..3`.

use std::collections::BTreeSet;
use std::io::Read;
use std::path::Path;

use arcthick::{Arc, ArcSet, Endpoint, ExceptionalSequence, NCPartition};
use serde::de::DeserializeOwned;

use crate::CliError;

/// Largest endpoint magnitude accepted on the command line. Twists and
/// reflections by amounts within the same bound stay far from `i64` limits.
pub const MAX_MAGNITUDE: i64 = 1 << 40;

pub fn check_magnitude(x: i64, what: &str) -> Result<i64, CliError> {
    if x.unsigned_abs() > MAX_MAGNITUDE as u64 {
        return Err(CliError::Parse(format!(
            "{what} {x} is outside the supported range ±{MAX_MAGNITUDE}"
        )));
    }
    Ok(x)
}

fn check_arc(u: Arc) -> Result<Arc, CliError> {
    if let Some(a) = u.left().finite() {
        check_magnitude(a, "endpoint")?;
    }
    check_magnitude(u.right_value(), "endpoint")?;
    Ok(u)
}

pub fn parse_arc(s: &str) -> Result<Arc, CliError> {
    let u: Arc = s
        .trim()
        .parse()
        .map_err(|e| CliError::Parse(format!("bad arc `{s}`: {e}")))?;
    check_arc(u)
}

pub fn parse_endpoint(s: &str) -> Result<Endpoint, CliError> {
    let x: Endpoint = s
        .trim()
        .parse()
        .map_err(|e| CliError::Parse(format!("bad point `{s}`: {e}")))?;
    if let Some(v) = x.finite() {
        check_magnitude(v, "point")?;
    }
    Ok(x)
}

/// `0,1,2` or `-inf,0,3`; an empty string gives no points.
pub fn parse_points(s: &str) -> Result<BTreeSet<Endpoint>, CliError> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(parse_endpoint)
        .collect()
}

/// `LO..HI` with both ends finite and `LO ≤ HI`.
pub fn parse_range(s: &str) -> Result<(i64, i64), CliError> {
    let bad = || CliError::Parse(format!("bad range `{s}`, expected LO..HI"));
    let (lo, hi) = s.split_once("..").ok_or_else(bad)?;
    let lo: i64 = lo.trim().parse().map_err(|_| bad())?;
    let hi: i64 = hi.trim().parse().map_err(|_| bad())?;
    if lo > hi {
        return Err(bad());
    }
    Ok((
        check_magnitude(lo, "range bound")?,
        check_magnitude(hi, "range bound")?,
    ))
}

fn read_text(operand: &str) -> Result<String, CliError> {
    if operand.trim_start().starts_with('{') {
        return Ok(operand.to_string());
    }
    if operand == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| CliError::Parse(format!("reading standard input: {e}")))?;
        return Ok(buf);
    }
    std::fs::read_to_string(operand)
        .map_err(|e| CliError::Parse(format!("reading `{operand}`: {e}")))
}

fn from_json<T: DeserializeOwned>(text: &str, what: &str) -> Result<T, CliError> {
    serde_json::from_str(text).map_err(|e| CliError::Parse(format!("bad {what} JSON: {e}")))
}

fn looks_like_arc_list(operand: &str) -> bool {
    operand.contains("..") && !operand.trim_start().starts_with('{') && !Path::new(operand).exists()
}

/// An arc set; the `saturated` flag of the JSON form is not trusted here.
pub fn parse_set(operand: &str) -> Result<ArcSet, CliError> {
    let set: ArcSet = if looks_like_arc_list(operand) {
        operand
            .split(',')
            .filter(|t| !t.trim().is_empty())
            .map(parse_arc)
            .collect::<Result<_, _>>()?
    } else {
        from_json(&read_text(operand)?, "arc set")?
    };
    for u in set.iter() {
        check_arc(u)?;
    }
    Ok(set)
}

pub fn parse_partition(operand: &str) -> Result<NCPartition, CliError> {
    let p: NCPartition = from_json(&read_text(operand)?, "partition")?;
    for x in p.support() {
        if let Some(v) = x.finite() {
            check_magnitude(v, "point")?;
        }
    }
    Ok(p)
}

/// Either an exceptional sequence (`{"sequence": …}`) or an arc set.
pub enum SequenceOrSet {
    Sequence(ExceptionalSequence),
    Set(ArcSet),
}

pub fn parse_sequence_or_set(operand: &str) -> Result<SequenceOrSet, CliError> {
    if looks_like_arc_list(operand) {
        return parse_set(operand).map(SequenceOrSet::Set);
    }
    let text = read_text(operand)?;
    let value: serde_json::Value = from_json(&text, "input")?;
    if value.get("sequence").is_some() {
        let e: ExceptionalSequence = from_json(&text, "exceptional sequence")?;
        for &u in e.arcs() {
            check_arc(u)?;
        }
        Ok(SequenceOrSet::Sequence(e))
    } else {
        let set: ArcSet = from_json(&text, "arc set")?;
        for u in set.iter() {
            check_arc(u)?;
        }
        Ok(SequenceOrSet::Set(set))
    }
}

/// A single arc `a..b`, or an arc set in any accepted form.
pub enum ArcOrSet {
    Arc(Arc),
    Set(ArcSet),
}

pub fn parse_arc_or_set(operand: &str) -> Result<ArcOrSet, CliError> {
    if looks_like_arc_list(operand) && !operand.contains(',') {
        parse_arc(operand).map(ArcOrSet::Arc)
    } else {
        parse_set(operand).map(ArcOrSet::Set)
    }
}
