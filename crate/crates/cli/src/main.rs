//! `arcthick`: queries on arcs, saturated sets and non-crossing partitions.
//!
//! Exit status is 0 on success, 1 when the input is well formed but a
//! mathematical precondition fails, and 2 when the input cannot be parsed.

mod input;
mod render;
mod verify;

use std::io::Write;
use std::process::ExitCode;

use arcthick::dualities::{is_reflection_symmetric, reflect, twist};
use arcthick::exceptional::{endo_quiver, exceptional_sequence};
use arcthick::hom::{cone, ext_dim, fiber, hom_dim, ker_coker, rhom_dim};
use arcthick::ncp::{alpha, ncp_join, ncp_meet, phi};
use arcthick::saturation::{
    enumerate_saturated, is_saturated, is_twist_stable, join, meet, saturate,
};
use arcthick::{Arc, ArcSet, SaturatedArcSet};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use input::{ArcOrSet, SequenceOrSet};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Parse(String),
    #[error(transparent)]
    Domain(#[from] arcthick::Error),
    #[error("{0} oracle mismatches")]
    Mismatch(usize),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Parse(_) => 2,
            CliError::Domain(_) | CliError::Mismatch(_) => 1,
        }
    }
}

#[derive(Parser)]
#[command(name = "arcthick", version, about = "Arc model of graded k[y]-modules")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, ValueEnum)]
enum Format {
    Ascii,
    Dot,
}

#[derive(Subcommand)]
enum Command {
    /// dim Hom(M_u, M_v)
    Hom {
        #[arg(allow_hyphen_values = true)]
        u: String,
        #[arg(allow_hyphen_values = true)]
        v: String,
    },
    /// dim Ext¹(M_u, M_v)
    Ext {
        #[arg(allow_hyphen_values = true)]
        u: String,
        #[arg(allow_hyphen_values = true)]
        v: String,
    },
    /// dim Hom(M_u, Σ^n M_v)
    Rhom {
        #[arg(allow_hyphen_values = true)]
        u: String,
        #[arg(allow_hyphen_values = true)]
        v: String,
        #[arg(long, allow_hyphen_values = true)]
        degree: i64,
    },
    /// Cone of the nonzero map M_u → M_v
    Cone {
        #[arg(allow_hyphen_values = true)]
        u: String,
        #[arg(allow_hyphen_values = true)]
        v: String,
        #[arg(long)]
        ascii: bool,
    },
    /// Middle term of the non-split extension of u by v
    Fiber {
        #[arg(allow_hyphen_values = true)]
        u: String,
        #[arg(allow_hyphen_values = true)]
        v: String,
        #[arg(long)]
        ascii: bool,
    },
    /// Kernel and cokernel of the nonzero map M_u → M_v
    Kercoker {
        #[arg(allow_hyphen_values = true)]
        u: String,
        #[arg(allow_hyphen_values = true)]
        v: String,
    },
    /// Saturation closure of an arc set
    Saturate {
        #[arg(allow_hyphen_values = true)]
        set: String,
    },
    /// Whether an arc set is saturated
    IsSaturated {
        #[arg(allow_hyphen_values = true)]
        set: String,
    },
    /// Intersection of two saturated sets
    Meet {
        #[arg(allow_hyphen_values = true)]
        s: String,
        #[arg(allow_hyphen_values = true)]
        t: String,
    },
    /// Saturation of the union of two saturated sets
    Join {
        #[arg(allow_hyphen_values = true)]
        s: String,
        #[arg(allow_hyphen_values = true)]
        t: String,
    },
    /// Saturated set to non-crossing partition
    ToNcp {
        #[arg(allow_hyphen_values = true)]
        set: String,
    },
    /// Non-crossing partition to saturated set
    FromNcp {
        #[arg(allow_hyphen_values = true)]
        partition: String,
    },
    /// Meet of two non-crossing partitions
    NcpMeet {
        #[arg(allow_hyphen_values = true)]
        p: String,
        #[arg(allow_hyphen_values = true)]
        q: String,
    },
    /// Join of two non-crossing partitions
    NcpJoin {
        #[arg(allow_hyphen_values = true)]
        p: String,
        #[arg(allow_hyphen_values = true)]
        q: String,
    },
    /// Strong exceptional sequence generating the saturation of a set
    Exceptional {
        #[arg(allow_hyphen_values = true)]
        set: String,
    },
    /// Endomorphism quiver of an exceptional sequence
    Quiver {
        #[arg(allow_hyphen_values = true)]
        input: String,
        #[arg(long)]
        dot: bool,
    },
    /// Grading twist of an arc or a set
    Twist {
        #[arg(allow_hyphen_values = true)]
        input: String,
        #[arg(long, allow_hyphen_values = true)]
        by: i64,
    },
    /// Duality reflection of an arc or a set
    Reflect {
        #[arg(allow_hyphen_values = true)]
        input: String,
        #[arg(long, allow_hyphen_values = true)]
        about: i64,
    },
    /// Whether a saturated set is fixed by the reflection about j
    Symmetric {
        #[arg(allow_hyphen_values = true)]
        set: String,
        #[arg(long, allow_hyphen_values = true)]
        about: i64,
    },
    /// Whether a saturated set is fixed by the twist; without a set, lists
    /// the translation-stable thick subcategories
    Stable {
        #[arg(allow_hyphen_values = true)]
        set: Option<String>,
        #[arg(long, allow_hyphen_values = true, default_value_t = 1)]
        by: i64,
    },
    /// Every saturated set on the given points
    Enumerate {
        #[arg(long, allow_hyphen_values = true)]
        points: String,
        #[arg(long)]
        count: bool,
        #[arg(long)]
        with_minus_inf: bool,
    },
    /// Cross-check Hom and Ext against the linear-algebra oracle
    Verify {
        #[arg(long)]
        window: i64,
        #[arg(long, allow_hyphen_values = true)]
        range: String,
    },
    /// Draw an arc set
    Render {
        #[arg(allow_hyphen_values = true)]
        set: String,
        #[arg(long, value_enum, default_value = "ascii")]
        format: Format,
    },
}

/// The thick subcategories fixed by every twist. Only the first is finitely
/// generated; the other two have no finite arc set and are reported by name.
const TRANSLATION_STABLE: [(&str, &str); 3] = [
    ("0", "the zero subcategory"),
    ("A_f", "all finite arcs: the torsion modules"),
    ("A", "all arcs: the whole category"),
];

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("serializable value");
    s.push('\n');
    s
}

fn two_arcs(u: &str, v: &str) -> Result<(Arc, Arc), CliError> {
    Ok((input::parse_arc(u)?, input::parse_arc(v)?))
}

fn saturated(operand: &str) -> Result<SaturatedArcSet, CliError> {
    Ok(SaturatedArcSet::new(input::parse_set(operand)?)?)
}

fn bool_line(b: bool) -> String {
    format!("{b}\n")
}

/// A set in the same form it came in: saturated sets keep the flag.
fn set_json(set: ArcSet) -> String {
    match SaturatedArcSet::new(set.clone()) {
        Ok(s) => json(&s),
        Err(_) => json(&set),
    }
}

fn run(command: Command) -> Result<String, CliError> {
    Ok(match command {
        Command::Hom { u, v } => {
            let (u, v) = two_arcs(&u, &v)?;
            format!("{}\n", hom_dim(u, v))
        }
        Command::Ext { u, v } => {
            let (u, v) = two_arcs(&u, &v)?;
            format!("{}\n", ext_dim(u, v))
        }
        Command::Rhom { u, v, degree } => {
            let (u, v) = two_arcs(&u, &v)?;
            format!("{}\n", rhom_dim(u, v, degree))
        }
        Command::Cone { u, v, ascii } => {
            let (u, v) = two_arcs(&u, &v)?;
            format!("{}\n", cone(u, v)?.render(ascii))
        }
        Command::Fiber { u, v, ascii } => {
            let (u, v) = two_arcs(&u, &v)?;
            format!("{}\n", fiber(u, v)?.render(ascii))
        }
        Command::Kercoker { u, v } => {
            let (u, v) = two_arcs(&u, &v)?;
            let (k, c) = ker_coker(u, v)?;
            let show = |w: Option<Arc>| w.map_or_else(|| "0".to_string(), |w| w.to_string());
            format!("kernel {}\ncokernel {}\n", show(k), show(c))
        }
        Command::Saturate { set } => json(&saturate(&input::parse_set(&set)?)),
        Command::IsSaturated { set } => bool_line(is_saturated(&input::parse_set(&set)?)),
        Command::Meet { s, t } => json(&meet(&saturated(&s)?, &saturated(&t)?)),
        Command::Join { s, t } => json(&join(&saturated(&s)?, &saturated(&t)?)),
        Command::ToNcp { set } => json(&phi(&saturated(&set)?)),
        Command::FromNcp { partition } => json(&alpha(&input::parse_partition(&partition)?)),
        Command::NcpMeet { p, q } => json(&ncp_meet(
            &input::parse_partition(&p)?,
            &input::parse_partition(&q)?,
        )),
        Command::NcpJoin { p, q } => json(&ncp_join(
            &input::parse_partition(&p)?,
            &input::parse_partition(&q)?,
        )),
        Command::Exceptional { set } => json(&exceptional_sequence(&input::parse_set(&set)?)),
        Command::Quiver { input, dot } => {
            let seq = match input::parse_sequence_or_set(&input)? {
                SequenceOrSet::Sequence(e) => e,
                SequenceOrSet::Set(f) => exceptional_sequence(&f),
            };
            let q = endo_quiver(&seq);
            if dot {
                render::quiver_dot(&q)
            } else {
                json(&serde_json::json!({
                    "chains": q.chains,
                    "type": q.type_string(),
                }))
            }
        }
        Command::Twist { input, by } => {
            let by = input::check_magnitude(by, "twist")?;
            match input::parse_arc_or_set(&input)? {
                ArcOrSet::Arc(u) => format!("{}\n", twist(u, by)),
                ArcOrSet::Set(s) => set_json(s.map(|u| twist(u, by))),
            }
        }
        Command::Reflect { input, about } => {
            let j = input::check_magnitude(about, "reflection centre")?;
            match input::parse_arc_or_set(&input)? {
                ArcOrSet::Arc(u) => format!("{}\n", reflect(u, j)),
                ArcOrSet::Set(s) => set_json(s.map(|u| reflect(u, j))),
            }
        }
        Command::Symmetric { set, about } => {
            let j = input::check_magnitude(about, "reflection centre")?;
            bool_line(is_reflection_symmetric(&saturated(&set)?, j))
        }
        Command::Stable { set: None, .. } => TRANSLATION_STABLE
            .iter()
            .map(|(name, what)| format!("{name:<4}{what}\n"))
            .collect(),
        Command::Stable { set: Some(set), by } => {
            let by = input::check_magnitude(by, "twist")?;
            bool_line(is_twist_stable(&saturated(&set)?, by))
        }
        Command::Enumerate {
            points,
            count,
            with_minus_inf,
        } => {
            let mut pts = input::parse_points(&points)?;
            if with_minus_inf {
                pts.insert(arcthick::Endpoint::MinusInfinity);
            }
            let all = enumerate_saturated(&pts)?;
            if count {
                format!("{}\n", all.len())
            } else {
                all.iter().map(json).collect()
            }
        }
        Command::Verify { window, range } => {
            let (lo, hi) = input::parse_range(&range)?;
            let window = input::check_magnitude(window, "window")?;
            let report = verify::run(window, lo, hi)?;
            let text = report.render(window, lo, hi);
            if !report.passed() {
                print!("{text}");
                return Err(CliError::Mismatch(report.mismatches.len()));
            }
            text
        }
        Command::Render { set, format } => {
            let set = input::parse_set(&set)?;
            match format {
                Format::Ascii => render::ascii(&set),
                Format::Dot => render::dot(&set),
            }
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(text) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(text.as_bytes()).is_err() {
                return ExitCode::from(1);
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("arcthick: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
