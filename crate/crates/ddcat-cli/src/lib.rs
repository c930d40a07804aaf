//! Command implementations behind the `ddcat` binary: Hom queries, silting
//! enumeration, golden-table reproduction, engine/oracle cross-validation,
//! and AR-quiver export.  Everything is deterministic given the flags and
//! the seed; output assembly is serialized and sorted.

use std::fmt::Write as _;

use ddcat_core::hammock::{graded_hom, hom_dim};
use ddcat_core::silting::{
    enumerate_silting, is_partial_silting, is_tilting, tilting_with, window_objects,
};
use ddcat_core::{MeshDir, ObjCoord, Params};
use ddcat_oracle::dict::{build_dictionary, cross_check};
use ddcat_oracle::fp::{DEFAULT_PRIME, SECOND_PRIME};
use ddcat_oracle::quiver::RepQuiver;

/// Errors are split by exit code: usage (2) versus data/check failure (1).
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Check(String),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(s) => write!(f, "{s}"),
            CliError::Check(s) => write!(f, "{s}"),
        }
    }
}

pub type CliResult = Result<String, CliError>;

fn usage<E: std::fmt::Display>(e: E) -> CliError {
    CliError::Usage(e.to_string())
}

fn check<E: std::fmt::Display>(e: E) -> CliError {
    CliError::Check(e.to_string())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Text,
    Dot,
}

impl std::str::FromStr for Format {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "json" => Ok(Format::Json),
            "text" => Ok(Format::Text),
            "dot" => Ok(Format::Dot),
            other => Err(format!("unknown format {other:?}")),
        }
    }
}

pub fn parse_box(s: &str) -> Result<(i64, i64), CliError> {
    let (lo, hi) = s
        .split_once("..")
        .ok_or_else(|| usage(format!("expected lo..hi but got {s:?}")))?;
    let lo: i64 = lo
        .trim()
        .parse()
        .map_err(|_| usage(format!("bad bound {lo:?}")))?;
    let hi: i64 = hi
        .trim()
        .parse()
        .map_err(|_| usage(format!("bad bound {hi:?}")))?;
    if lo > hi {
        return Err(usage(format!("empty box {s:?}")));
    }
    Ok((lo, hi))
}

/// `hom`: one dimension, one degree, or the whole graded profile.
pub fn cmd_hom(
    params: &str,
    from: &str,
    to: &str,
    graded: bool,
    degree: Option<i64>,
    format: Format,
) -> CliResult {
    let p = Params::parse(params).map_err(usage)?;
    let a = ObjCoord::parse_for(&p, from).map_err(usage)?;
    let b = ObjCoord::parse_for(&p, to).map_err(usage)?;
    let mut out = String::new();
    if graded {
        let g = graded_hom(&p, a, b);
        match format {
            Format::Json => write!(
                out,
                "{{\"schema\":1,\"params\":\"{p}\",\"from\":\"{a}\",\"to\":\"{b}\",\"graded\":{}}}",
                g.to_json()
            )
            .unwrap(),
            _ => write!(out, "{}", g.to_json()).unwrap(),
        }
    } else {
        let dim = match degree {
            None => hom_dim(&p, a, b),
            Some(d) => graded_hom(&p, a, b).get(d),
        };
        match format {
            Format::Json => {
                let deg = degree.map_or("null".to_string(), |d| d.to_string());
                write!(
                    out,
                    "{{\"schema\":1,\"params\":\"{p}\",\"from\":\"{a}\",\"to\":\"{b}\",\"degree\":{deg},\"dim\":{dim}}}"
                )
                .unwrap();
            }
            _ => write!(out, "{dim}").unwrap(),
        }
    }
    out.push('\n');
    Ok(out)
}

fn silting_json(p: &Params, z: ObjCoord, lo: i64, hi: i64, do_check: bool) -> CliResult {
    let (families, instances) = enumerate_silting(p, z, lo, hi).map_err(check)?;
    let mut out = String::new();
    write!(
        out,
        "{{\"schema\":1,\"params\":\"{p}\",\"z\":\"{z}\",\"box\":[{lo},{hi}],\"families\":["
    )
    .unwrap();
    for (k, f) in families.iter().enumerate() {
        if k > 0 {
            out.push(',');
        }
        let base = f
            .base_names
            .iter()
            .map(|n| format!("\"{n}\""))
            .collect::<Vec<_>>()
            .join(",");
        let cons = f
            .constraint_strings
            .iter()
            .map(|c| format!("\"{c}\""))
            .collect::<Vec<_>>()
            .join(",");
        let coords = f
            .base
            .iter()
            .map(|&(g, h)| format!("[{g},{h}]"))
            .collect::<Vec<_>>()
            .join(",");
        write!(
            out,
            "{{\"base\":[{base}],\"base_coords\":[{coords}],\"constraints\":[{cons}]}}"
        )
        .unwrap();
    }
    out.push_str("],\"instances\":[");
    for (k, inst) in instances.iter().enumerate() {
        if k > 0 {
            out.push(',');
        }
        if do_check && !is_partial_silting(p, &inst.object.summands) {
            return Err(check(format!(
                "instance {:?} fails the partial silting check",
                inst.object.summands
            )));
        }
        let shifts = inst
            .shifts
            .iter()
            .map(|s| s.to_string())
            .collect::<Vec<_>>()
            .join(",");
        let summands = inst
            .object
            .summands
            .iter()
            .map(|s| format!("\"{s}\""))
            .collect::<Vec<_>>()
            .join(",");
        write!(
            out,
            "{{\"family\":{},\"shifts\":[{shifts}],\"summands\":[{summands}]}}",
            inst.family
        )
        .unwrap();
    }
    out.push_str("]}");
    Ok(out)
}

/// `silting`: families and boxed instances over a chosen base.
pub fn cmd_silting(params: &str, z: &str, box_spec: &str, do_check: bool) -> CliResult {
    let p = Params::parse(params).map_err(usage)?;
    let z = ObjCoord::parse_for(&p, z).map_err(usage)?;
    let (lo, hi) = parse_box(box_spec)?;
    let mut out = silting_json(&p, z, lo, hi, do_check)?;
    out.push('\n');
    Ok(out)
}

/// The committed golden content for the worked example.
pub const TABLE231_GOLDEN: &str = include_str!("../golden/table231.json");

/// The canonical worked-example output: the twelve silting families of
/// (2,3,1) over the origin base with shift box [-2, 3], plus the six
/// tilting objects through the base.
pub fn table231_current() -> CliResult {
    let p = Params::new(2, 3, 1).map_err(check)?;
    let z = ObjCoord::z(0, 0, 0);
    let silt = silting_json(&p, z, -2, 3, true)?;
    let tilt = tilting_json(&p, z, 4)?;
    Ok(format!("{{\"schema\":1,\"table\":{silt},\"tilting\":{tilt}}}\n"))
}

/// `table231`: reproduce the worked example and compare byte-for-byte
/// against the committed golden file.
pub fn cmd_table231() -> CliResult {
    let cur = table231_current()?;
    if cur != TABLE231_GOLDEN {
        return Err(check(
            "table output deviates from the committed golden file".to_string(),
        ));
    }
    Ok(cur)
}

fn tilting_json(p: &Params, z: ObjCoord, window: i64) -> CliResult {
    let objs = tilting_with(p, z, window).map_err(check)?;
    let mut out = String::new();
    write!(
        out,
        "{{\"schema\":1,\"params\":\"{p}\",\"z\":\"{z}\",\"window\":{window},\"objects\":["
    )
    .unwrap();
    for (k, m) in objs.iter().enumerate() {
        if k > 0 {
            out.push(',');
        }
        if !is_tilting(p, &m.summands) {
            return Err(check("enumerated object fails the tilting check".to_string()));
        }
        let summands = m
            .summands
            .iter()
            .map(|s| format!("\"{s}\""))
            .collect::<Vec<_>>()
            .join(",");
        write!(out, "[{summands}]").unwrap();
    }
    out.push_str("]}");
    Ok(out)
}

/// `tilting`: every tilting object through the base inside the window.
pub fn cmd_tilting(params: &str, z: &str, window: i64) -> CliResult {
    let p = Params::parse(params).map_err(usage)?;
    let z = ObjCoord::parse_for(&p, z).map_err(usage)?;
    if window < 1 {
        return Err(usage("window must be >= 1".to_string()));
    }
    let mut out = tilting_json(&p, z, window)?;
    out.push('\n');
    Ok(out)
}

/// `oracle-check`: build the dictionary and compare the engine against the
/// string oracle on seeded samples.  Nonzero mismatch counts are a check
/// failure.  Set `DDCAT_SECOND_PRIME=1` to repeat over the second prime.
pub fn cmd_oracle_check(
    params: &str,
    window: i64,
    samples: usize,
    seed: u64,
    perturb: bool,
) -> CliResult {
    let p = Params::parse(params).map_err(usage)?;
    if window < 2 {
        return Err(usage("oracle window must be >= 2".to_string()));
    }
    if samples < 1 {
        return Err(usage("need at least one sample".to_string()));
    }
    let second = std::env::var("DDCAT_SECOND_PRIME").is_ok_and(|v| v == "1");
    let mut primes = vec![DEFAULT_PRIME];
    if second {
        primes.push(SECOND_PRIME);
    }
    let mut out = String::new();
    let mut failed = false;
    write!(out, "{{\"schema\":1,\"params\":\"{p}\",\"window\":{window},\"runs\":[").unwrap();
    for (k, &prime) in primes.iter().enumerate() {
        if k > 0 {
            out.push(',');
        }
        let q = RepQuiver::new(&p, window).map_err(check)?;
        let dict = build_dictionary(&p, &q, window - 1, prime).map_err(check)?;
        let report = cross_check(&p, &dict, samples, seed, perturb).map_err(check)?;
        failed |= report.hom_mismatches > 0 || report.count_mismatches > 0;
        write!(
            out,
            "{{\"prime\":{prime},\"mapped\":{},\"pairs\":{},\"hom_mismatches\":{},\"count_mismatches\":{}}}",
            report.mapped, report.pairs, report.hom_mismatches, report.count_mismatches
        )
        .unwrap();
    }
    write!(out, "],\"ok\":{}}}", !failed).unwrap();
    out.push('\n');
    if failed {
        return Err(check(out));
    }
    Ok(out)
}

/// `export-ar`: the AR quiver window as DOT or adjacency text, optionally
/// shading the Hom-hammock of a source object.
pub fn cmd_export_ar(
    params: &str,
    window: i64,
    format: Format,
    shade_from: Option<&str>,
) -> CliResult {
    let p = Params::parse(params).map_err(usage)?;
    if window < 0 {
        return Err(usage("window must be >= 0".to_string()));
    }
    let shade = match shade_from {
        Some(s) => Some(ObjCoord::parse_for(&p, s).map_err(usage)?),
        None => None,
    };
    let objs: Vec<ObjCoord> = if window == 0 {
        Vec::new()
    } else {
        window_objects(&p, window)
    };
    let mut edges: Vec<(ObjCoord, ObjCoord)> = Vec::new();
    for &o in &objs {
        for dir in [MeshDir::RayStep, MeshDir::CorayStep] {
            if let Ok(t) = o.mesh_move(dir, 1) {
                if t.i.abs() <= window && t.j.abs() <= window {
                    edges.push((o, t));
                }
            }
        }
    }
    let comp_name = |o: &ObjCoord| format!("{}{}", o.kind.letter(), o.comp);
    match format {
        Format::Dot => {
            let mut out = String::from("digraph ar {\n  rankdir=LR;\n  node [shape=box];\n");
            for o in &objs {
                let shaded = shade.map(|s| hom_dim(&p, s, *o) > 0).unwrap_or(false);
                let style = if shaded {
                    " style=filled fillcolor=gray80"
                } else {
                    ""
                };
                writeln!(
                    out,
                    "  \"{o}\" [label=\"{o}\" comp=\"{}\"{style}];",
                    comp_name(o)
                )
                .unwrap();
            }
            for (a, b) in &edges {
                writeln!(out, "  \"{a}\" -> \"{b}\";").unwrap();
            }
            out.push_str("}\n");
            Ok(out)
        }
        Format::Text | Format::Json => {
            let mut out = String::new();
            for (a, b) in &edges {
                writeln!(out, "{a} -> {b}").unwrap();
            }
            Ok(out)
        }
    }
}
