//! The `toric-ell` command line tool.
//!
//! Exit codes: 0 on success, 1 when a `--expect` assertion fails, 2 on usage
//! or input errors.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::cech::{self, classify, Classification};
use crate::corpus;
use crate::ellinv::{self, Outcome};
use crate::error::{Error, Result};
use crate::fan::Fan;
use crate::gkm;
use crate::io::{self, InputDigest, ReportDocument, TriangulationDocument};
use crate::triang::{self, cone_fan, GroupSpec, Triangulation};

/// Environment variable naming a directory searched for input files.
pub const CORPUS_ENV: &str = "TORIC_ELL_CORPUS";

#[derive(Parser, Debug)]
#[command(
    name = "toric-ell",
    version,
    about = "Elliptic cohomology invariants of toric varieties"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Directory searched for inputs that are not found as given.
    #[arg(long, global = true)]
    corpus: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
    Dot,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Expect {
    Iso,
    Noniso,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check smoothness, goodness and properness of a fan.
    Validate { fan: String },
    /// Rank, wall spans, determinant divisor and Mayer–Vietoris terms.
    Invariant { fan: String },
    /// Compare the elliptic cohomology invariants of two fans.
    Compare {
        left: String,
        right: String,
        #[arg(long, value_enum)]
        expect: Option<Expect>,
    },
    /// Moment graph of a good fan.
    Gkm { fan: String },
    /// Cover, poset and witness statistics for the Čech model.
    Cech { fan: String },
    /// List or apply diagonal flips of a triangulation.
    Flop {
        /// `example53` (the built-in μ₂-kernel flop) or a triangulation document.
        triangulation: String,
        /// `green` for the example's flop, or `i-j` for the diagonal between points i and j.
        #[arg(long)]
        apply: Option<String>,
    },
    /// The μ₂-kernel quotient and its two crepant resolutions, or the simplex of another group.
    MckayExample {
        /// Generators as rational weights, e.g. `1/2,1/2,0;1/2,0,1/2`.
        #[arg(long)]
        group: Option<String>,
    },
}

struct Input {
    fan: Fan,
    digest: InputDigest,
}

struct Context {
    corpus: Option<PathBuf>,
}

impl Context {
    fn read(&self, arg: &str) -> Result<(Vec<u8>, String)> {
        let direct = Path::new(arg);
        if direct.is_file() {
            return Ok((std::fs::read(direct)?, arg.to_string()));
        }
        if let Some(dir) = &self.corpus {
            for candidate in [dir.join(arg), dir.join(format!("{arg}.fan.json"))] {
                if candidate.is_file() {
                    return Ok((std::fs::read(&candidate)?, candidate.display().to_string()));
                }
            }
        }
        Err(Error::Io(format!("no such input: {arg}")))
    }

    /// Loads a fan from a file, the corpus directory, or a built-in name.
    fn fan(&self, arg: &str) -> Result<Input> {
        match self.read(arg) {
            Ok((bytes, path)) => Ok(Input {
                fan: io::parse_fan(&bytes)?,
                digest: InputDigest::of(&path, &bytes),
            }),
            Err(e) => {
                let name = arg.strip_suffix(".fan.json").unwrap_or(arg);
                let fan = corpus::by_name(name).ok_or(e)?;
                let text = io::emit_fan(&fan, name)?;
                Ok(Input {
                    digest: InputDigest::of(&format!("builtin:{name}"), text.as_bytes()),
                    fan,
                })
            }
        }
    }
}

pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{text}");
            } else {
                let _ = write!(out, "{text}");
            }
            return code;
        }
    };
    let ctx = Context {
        corpus: cli
            .corpus
            .clone()
            .or_else(|| std::env::var_os(CORPUS_ENV).map(PathBuf::from)),
    };
    match dispatch(&cli, &ctx) {
        Ok((text, code)) => {
            let _ = out.write_all(text.as_bytes());
            code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

fn to_value<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("results serialize")
}

fn report(cli: &Cli, name: &str, inputs: Vec<InputDigest>, result: Value, text: String) -> Result<String> {
    match cli.format {
        Format::Json => Ok(ReportDocument::new(name, inputs, result).to_json()),
        Format::Text => Ok(text),
        Format::Dot => Err(Error::Schema(format!(
            "--format dot is only available for gkm, not {name}"
        ))),
    }
}

fn dispatch(cli: &Cli, ctx: &Context) -> Result<(String, i32)> {
    match &cli.command {
        Command::Validate { fan } => {
            let input = ctx.fan(fan)?;
            let f = &input.fan;
            let r = f.validate();
            let result = json!({
                "ambient_rank": f.ambient_rank(),
                "rays": f.rays().len(),
                "cones": f.cone_count(),
                "top_cones": f.top_cones().len(),
                "smooth": r.smooth,
                "good": r.good,
                "proper": r.proper,
            });
            let text = format!("smooth: {}\ngood: {}\nproper: {}\n", r.smooth, r.good, r.proper);
            Ok((report(cli, "validate", vec![input.digest], result, text)?, 0))
        }
        Command::Invariant { fan } => {
            let input = ctx.fan(fan)?;
            let shadow = ellinv::ell_shadow(&input.fan)?;
            let ladder = ellinv::mv_ladder(&input.fan)?;
            let terms: Vec<Value> = ladder
                .terms
                .iter()
                .map(|t| {
                    json!({
                        "k": t.k,
                        "summands": t.summands.len(),
                        "vanishing_in_codim_two": t.summands.iter().filter(|s| s.vanishes_in_codim_two).count(),
                    })
                })
                .collect();
            let result = json!({
                "shadow": to_value(&shadow),
                "det_degree": shadow.det_degree(),
                "mayer_vietoris_terms": terms,
            });
            let spans: Vec<String> = shadow.wall_spans.iter().map(ToString::to_string).collect();
            let text = format!(
                "rank: {}\nwall spans: {}\ndeterminant degree: {}\n",
                shadow.rank,
                spans.join(" "),
                shadow.det_degree()
            );
            Ok((report(cli, "invariant", vec![input.digest], result, text)?, 0))
        }
        Command::Compare { left, right, expect } => {
            let a = ctx.fan(left)?;
            let b = ctx.fan(right)?;
            let verdict = ellinv::compare_fans(&a.fan, &b.fan)?;
            let met = match expect {
                None => true,
                Some(Expect::Iso) => verdict.outcome == Outcome::Isomorphic,
                Some(Expect::Noniso) => verdict.outcome == Outcome::NotIsomorphic,
            };
            let result = json!({
                "verdict": to_value(&verdict),
                "fans_isomorphic": crate::fan::fan_isomorphic(&a.fan, &b.fan)?.is_some(),
                "expectation_met": met,
            });
            let text = format!(
                "{}\nrule: {}\n",
                to_value(&verdict.outcome).as_str().unwrap_or(""),
                verdict.rule
            );
            Ok((
                report(cli, "compare", vec![a.digest, b.digest], result, text)?,
                if met { 0 } else { 1 },
            ))
        }
        Command::Gkm { fan } => {
            let input = ctx.fan(fan)?;
            let graph = gkm::moment_graph(&input.fan)?;
            if cli.format == Format::Dot {
                return Ok((graph.to_dot(), 0));
            }
            let skeleton = gkm::partial_skeleton(&graph);
            let result = json!({ "graph": to_value(&graph), "skeleton": to_value(&skeleton) });
            let text = format!(
                "vertices: {}\nedges: {}\ncompact edges: {}\n",
                graph.vertices.len(),
                graph.edges.len(),
                graph.compact_edges().count()
            );
            Ok((report(cli, "gkm", vec![input.digest], result, text)?, 0))
        }
        Command::Cech { fan } => {
            let input = ctx.fan(fan)?;
            let cover = cech::cover(&input.fan)?;
            let poset = cech::cech_poset(&input.fan)?;
            let witness = cech::coho_witness_in(&poset)?;
            let classes: Vec<Value> = poset
                .elements
                .iter()
                .map(|e| {
                    json!({
                        "words": e.describe(),
                        "grade": e.grade,
                        "classification": to_value(&classify(e)),
                    })
                })
                .collect();
            let singular = poset
                .elements
                .iter()
                .filter(|e| matches!(classify(e), Classification::Singular { .. }))
                .count();
            let histogram: BTreeMap<String, usize> = poset
                .support_histogram()
                .into_iter()
                .map(|(k, v)| (k.to_string(), v))
                .collect();
            let result = json!({
                "cover_size": cover.len(),
                "poset_size": poset.len(),
                "grade_counts": poset.grade_counts(),
                "support_histogram": histogram,
                "singular_elements": singular,
                "classification": classes,
                "witness": to_value(&witness),
            });
            let text = format!(
                "cover size: {}\nposet size: {}\ngrade counts: {:?}\nwitness: {}\n",
                cover.len(),
                poset.len(),
                poset.grade_counts(),
                if witness.success { "ok" } else { "failed" }
            );
            Ok((report(cli, "cech", vec![input.digest], result, text)?, 0))
        }
        Command::Flop { triangulation, apply } => flop(cli, ctx, triangulation, apply.as_deref()),
        Command::MckayExample { group } => mckay(cli, group.as_deref()),
    }
}

fn flop(cli: &Cli, ctx: &Context, arg: &str, apply: Option<&str>) -> Result<(String, i32)> {
    let example = triang::flop_example();
    let builtin = matches!(arg, "example53" | "mu2-kernel");
    let (t, digest): (Triangulation, InputDigest) = if builtin {
        let doc = TriangulationDocument::from_triangulation(&example.source)?;
        let bytes = serde_json::to_vec(&doc).expect("documents serialize");
        (
            example.source.clone(),
            InputDigest::of(&format!("builtin:{arg}"), &bytes),
        )
    } else {
        let (bytes, path) = ctx.read(arg)?;
        (io::parse_triangulation(&bytes)?, InputDigest::of(&path, &bytes))
    };
    let Some(which) = apply else {
        let moves = triang::flips(&t)?;
        let result = json!({ "triangulation": to_value(&TriangulationDocument::from_triangulation(&t)?), "flips": to_value(&moves) });
        let text: String = moves
            .iter()
            .map(|m| {
                format!(
                    "{}-{} -> {}-{}\n",
                    m.diagonal_before[0], m.diagonal_before[1], m.diagonal_after[0], m.diagonal_after[1]
                )
            })
            .collect();
        return Ok((report(cli, "flop", vec![digest], result, text)?, 0));
    };
    let m = if which == "green" {
        if !builtin {
            return Err(Error::IllegalFlip(
                "`green` names the flop of the built-in example".into(),
            ));
        }
        example.flip.clone()
    } else {
        let (i, j) = which
            .split_once('-')
            .and_then(|(i, j)| Some((i.trim().parse().ok()?, j.trim().parse().ok()?)))
            .ok_or_else(|| Error::IllegalFlip(format!("cannot read diagonal {which:?}; use i-j")))?;
        triang::flip_of_diagonal(&t, [i, j])?
    };
    let (flipped, certificate) = triang::apply_flip(&t, &m)?;
    let before = cone_fan(&t)?;
    let after = cone_fan(&flipped)?;
    let verdict = ellinv::compare_fans(&before, &after)?;
    let result = json!({
        "flip": to_value(&m),
        "triangulation": to_value(&TriangulationDocument::from_triangulation(&flipped)?),
        "fan": to_value(&io::FanDocument::from_fan(&after, BTreeMap::new())?),
        "certificate": to_value(&certificate),
        "verdict": to_value(&verdict),
    });
    let text = format!(
        "flipped {:?} -> {:?}\ncells: {:?}\nverdict: {}\n",
        m.diagonal_before,
        m.diagonal_after,
        flipped.cells(),
        to_value(&verdict.outcome).as_str().unwrap_or("")
    );
    Ok((report(cli, "flop", vec![digest], result, text)?, 0))
}

fn mckay(cli: &Cli, group: Option<&str>) -> Result<(String, i32)> {
    if let Some(spec) = group {
        let g = GroupSpec::parse(spec)?;
        let simplex = triang::quotient_simplex(&g)?;
        let mut result =
            json!({ "simplex": to_value(&simplex), "normalized_volume": simplex.normalized_volume().to_string() });
        if simplex.dim() == 1 {
            let t = triang::interval_triangulation(&simplex)?;
            let f = cone_fan(&t)?;
            result["resolution"] = to_value(&io::FanDocument::from_fan(&f, BTreeMap::new())?);
        }
        let text = format!(
            "lattice points: {}\nvolume: {}\n",
            simplex.points().len(),
            simplex.normalized_volume()
        );
        let digest = InputDigest::of("group", spec.as_bytes());
        return Ok((report(cli, "mckay-example", vec![digest], result, text)?, 0));
    }
    let ex = triang::flop_example();
    let source = cone_fan(&ex.source)?;
    let target = cone_fan(&ex.target)?;
    let (_, certificate) = triang::apply_flip(&ex.source, &ex.flip)?;
    let verdict = ellinv::compare_fans(&source, &target)?;
    let result = json!({
        "simplex": to_value(&ex.simplex),
        "source": { "cells": ex.source.cells(), "fan": to_value(&io::FanDocument::from_fan(&source, BTreeMap::new())?), "checks": to_value(&source.validate()) },
        "target": { "cells": ex.target.cells(), "fan": to_value(&io::FanDocument::from_fan(&target, BTreeMap::new())?), "checks": to_value(&target.validate()) },
        "certificate": to_value(&certificate),
        "verdict": to_value(&verdict),
    });
    let text = format!(
        "lattice points: {}\nsource cells: {:?}\ntarget cells: {:?}\nverdict: {}\n",
        ex.simplex.points().len(),
        ex.source.cells(),
        ex.target.cells(),
        to_value(&verdict.outcome).as_str().unwrap_or("")
    );
    let digest = InputDigest::of("builtin:mu2-kernel", b"1/2,1/2,0;1/2,0,1/2");
    Ok((report(cli, "mckay-example", vec![digest], result, text)?, 0))
}
