use crate::arc::{Arc, Endpoint};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("degenerate arc {0}..{0}: M(a,a) is the zero object")]
    DegenerateArc(Endpoint),
    #[error("invalid arc ({left}, {right}): need left < right and a finite right endpoint")]
    InvalidArc { left: Endpoint, right: Endpoint },
    #[error("no nonzero morphism from {from} to {to}: condition a ≤ c < b ≤ d fails")]
    NoMorphism { from: Arc, to: Arc },
    #[error("no nontrivial extension of {from} by {to}: condition a < c ≤ b < d fails")]
    NoExtension { from: Arc, to: Arc },
    #[error("arc set is not saturated: {witness_left} and {witness_right} touch but {missing} is absent")]
    NotSaturated {
        witness_left: Arc,
        witness_right: Arc,
        missing: Arc,
    },
    #[error("arc set is empty")]
    EmptySet,
    #[error("{given} is not the lexicographically minimal arc (that is {minimal})")]
    NotMinimal { given: Arc, minimal: Arc },
    #[error("{0}")]
    NotExceptional(String),
    #[error("blocks overlap at {0}")]
    OverlappingBlocks(Endpoint),
    #[error("blocks cross: {a} < {c} < {b} < {d}")]
    CrossingBlocks {
        a: Endpoint,
        c: Endpoint,
        b: Endpoint,
        d: Endpoint,
    },
    #[error("{what} is {requested}, which exceeds the limit of {limit}")]
    ResourceLimit {
        what: &'static str,
        requested: usize,
        limit: usize,
    },
    #[error("window top {window_top} is too small: at least {required} is needed")]
    WindowTooSmall { window_top: i64, required: i64 },
    #[error("parse error: {0}")]
    Parse(String),
}
