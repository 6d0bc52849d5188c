mod report;

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use critcurve::check::run_check;
use critcurve::critical::run_critical;
use critcurve::family::ParametrizedFamily;
use critcurve::implicit::{oracle, ComplexityGuard};
use critcurve::parse::parse_family;
use critcurve::realroots::pick_representatives;
use critcurve::reduce::reduce_critical_set;
use critcurve::sample::{poles, sample_curve, to_csv, topology_signature, SampleOptions};
use critcurve::Error;
use num_rational::BigRational;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Map, Value};

#[derive(Parser)]
#[command(name = "critcurve", version, about = "Critical parameter values of one-parameter families of rational curves")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Family description file.
    file: PathBuf,
    /// Seed for every random choice.
    #[arg(long, env = "CRITCURVE_SEED", default_value_t = 0)]
    seed: u64,
}

#[derive(Args)]
struct GuardArgs {
    /// Give up on the implicit method above this many terms.
    #[arg(long, default_value_t = ComplexityGuard::default().max_terms)]
    max_terms: usize,
    /// Give up on the implicit method above this degree in x or y.
    #[arg(long, default_value_t = ComplexityGuard::default().max_xy_degree)]
    max_xy_degree: u32,
}

impl GuardArgs {
    fn guard(&self) -> ComplexityGuard {
        ComplexityGuard { max_terms: self.max_terms, max_xy_degree: self.max_xy_degree }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Check the hypotheses and list the special parameter values.
    Check {
        #[command(flatten)]
        common: Common,
        /// Write the report here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compute a critical set of the family.
    Critical {
        #[command(flatten)]
        common: Common,
        /// Also report the quick candidate subset.
        #[arg(long)]
        fast: bool,
        /// Drop superfluous values using K random shears (default 1).
        #[arg(long, value_name = "K", num_args = 0..=1, require_equals = true, default_missing_value = "1")]
        reduce: Option<usize>,
        /// Cross-check against the implicit method.
        #[arg(long)]
        oracle: bool,
        #[command(flatten)]
        guard: GuardArgs,
        /// Include wall-clock timings (makes the report non-reproducible).
        #[arg(long)]
        timings: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Critical set from the implicit equation alone.
    Oracle {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        guard: GuardArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Sample one curve per cell of the partition into CSV files.
    Sample {
        #[command(flatten)]
        common: Common,
        /// Number of t values.
        #[arg(long, default_value_t = 2048)]
        grid: usize,
        /// Sample t in [-T, T].
        #[arg(long, value_name = "T", default_value = "50")]
        window: BigRational,
        /// Points closer than this are considered connected.
        #[arg(long, default_value = "1/4")]
        snap: BigRational,
        /// Digits after the decimal point in the CSV files.
        #[arg(long, default_value_t = 8)]
        digits: u32,
        #[arg(long, default_value = "samples")]
        out: PathBuf,
    },
}

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match &e {
            Error::Improper => 2,
            Error::Internal(_) => 3,
            Error::Hypothesis(_) => 4,
            Error::ComplexityGuard(_) => 5,
            Error::Parse { .. } | Error::ZeroDenominator | Error::InvalidFamily(_) | Error::Degenerate(_) => 1,
        };
        Failure { code, message: e.to_string() }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure { code: 1, message: e.to_string() }
    }
}

type Outcome = std::result::Result<(), Failure>;

fn emit(value: &Value, out: Option<&Path>) -> Outcome {
    let text = serde_json::to_string_pretty(value).expect("report serializes") + "\n";
    match out {
        Some(p) => std::fs::write(p, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn load(common: &Common) -> Result<(ParametrizedFamily, ChaCha8Rng), Failure> {
    let fam = parse_family(&common.file)?;
    Ok((fam, ChaCha8Rng::seed_from_u64(common.seed)))
}

fn merge_into(target: &mut Map<String, Value>, v: Value) {
    if let Value::Object(m) = v {
        target.extend(m);
    }
}

fn cmd_check(common: &Common, out: Option<&Path>) -> Outcome {
    let (fam, mut rng) = load(common)?;
    let rep = run_check(&fam, &mut rng)?;
    let mut doc = Map::new();
    doc.insert("input".into(), report::input(&fam, &common.file.display().to_string()));
    merge_into(&mut doc, report::check(&fam, &rep));
    doc.insert("seed".into(), json!(common.seed));
    emit(&Value::Object(doc), out)
}

#[allow(clippy::too_many_arguments)]
fn cmd_critical(
    common: &Common,
    fast: bool,
    reduce: Option<usize>,
    with_oracle: bool,
    guard: ComplexityGuard,
    timings: bool,
    out: Option<&Path>,
) -> Outcome {
    let (fam, mut rng) = load(common)?;
    let p = fam.param.clone();
    let names = fam.names();
    let mut times = Map::new();
    let clock = Instant::now();
    let lap = |name: &str, times: &mut Map<String, Value>| {
        times.insert(name.into(), json!(clock.elapsed().as_secs_f64()));
    };
    let chk = run_check(&fam, &mut rng)?;
    lap("check", &mut times);
    let rep = run_critical(&chk, fast)?;
    lap("critical", &mut times);
    let mut doc = Map::new();
    doc.insert("input".into(), report::input(&fam, &common.file.display().to_string()));
    merge_into(&mut doc, report::check(&fam, &chk));
    doc.insert("critical".into(), report::critical(&rep, &p, &names));
    doc.insert("partition".into(), report::partition(&rep.set, &rep.partition, &p));
    if let Some(fs) = &rep.fast {
        doc.insert(
            "fast".into(),
            json!({ "set": report::set(fs, &p), "subset_of_critical": fs.is_subset_of(&rep.set) }),
        );
    }
    if let Some(k) = reduce {
        let red = reduce_critical_set(&fam, &rep.set, k, &mut rng)?;
        lap("reduce", &mut times);
        doc.insert(
            "reduced".into(),
            json!({
                "rounds": k,
                "shears": red.shears.iter().map(|m| m.to_string()).collect::<Vec<_>>(),
                "size": red.set.len(),
                "set": report::set(&red.set, &p),
                "partition": report::partition(&red.set, &pick_representatives(&red.set), &p),
            }),
        );
    }
    if with_oracle {
        let v = match oracle(&fam, &guard, &mut rng) {
            Ok((_, imp)) => json!({
                "status": "ok",
                "size": imp.len(),
                "set": report::set(&imp, &p),
                "dif": rep.set.len() as i64 - imp.len() as i64,
                "agrees": imp.same_as(&rep.set),
                "implicit_subset_of_critical": imp.is_subset_of(&rep.set),
            }),
            Err(Error::ComplexityGuard(msg)) => json!({ "status": "guard", "message": msg }),
            Err(e) => return Err(e.into()),
        };
        lap("oracle", &mut times);
        doc.insert("oracle".into(), v);
    }
    if timings {
        doc.insert("timings".into(), Value::Object(times));
    }
    doc.insert("seed".into(), json!(common.seed));
    emit(&Value::Object(doc), out)
}

fn cmd_oracle(common: &Common, guard: ComplexityGuard, out: Option<&Path>) -> Outcome {
    let (fam, mut rng) = load(common)?;
    let names = fam.names();
    let p = fam.param.clone();
    let (surf, set) = oracle(&fam, &guard, &mut rng)?;
    let doc = json!({
        "input": report::input(&fam, &common.file.display().to_string()),
        "implicit": surf.f.display_with(&names),
        "implicit_terms": surf.f.nterms(),
        "discriminant_degree_x": surf.m.degree(critcurve::Var::X),
        "critical": { "size": set.len(), "set": report::set(&set, &p) },
        "verdict": if set.is_empty() { "one topology type" } else { "finitely many topology types" },
        "seed": common.seed,
    });
    emit(&doc, out)
}

fn cmd_sample(common: &Common, opts: SampleOptions, digits: u32, out: &Path) -> Outcome {
    let (fam, mut rng) = load(common)?;
    let chk = run_check(&fam, &mut rng)?;
    let rep = run_critical(&chk, false)?;
    std::fs::create_dir_all(out)?;
    let mut cells = Vec::new();
    for (i, r) in rep.partition.iter().enumerate() {
        let pts = sample_curve(&fam, &r.value, &opts);
        let sig = topology_signature(&pts, &poles(&fam, &r.value), &opts.snap);
        let name = format!("cell_{i:03}.csv");
        std::fs::write(out.join(&name), to_csv(&pts, digits))?;
        cells.push(json!({
            "cell": i,
            "kind": if r.at_root { "point" } else { "open" },
            "lambda": r.value.to_string(),
            "offset": r.offset.to_string(),
            "file": name,
            "points": pts.len(),
            "components": sig.components,
            "self_intersections": sig.self_intersections,
        }));
    }
    let doc = json!({
        "input": report::input(&fam, &common.file.display().to_string()),
        "critical": report::set(&rep.set, &fam.param),
        "grid": opts.grid,
        "window": opts.window.to_string(),
        "snap": opts.snap.to_string(),
        "cells": cells,
        "seed": common.seed,
    });
    emit(&doc, Some(&out.join("cells.json")))
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Check { common, out } => cmd_check(&common, out.as_deref()),
        Command::Critical { common, fast, reduce, oracle, guard, timings, out } => {
            cmd_critical(&common, fast, reduce, oracle, guard.guard(), timings, out.as_deref())
        }
        Command::Oracle { common, guard, out } => cmd_oracle(&common, guard.guard(), out.as_deref()),
        Command::Sample { common, grid, window, snap, digits, out } => {
            cmd_sample(&common, SampleOptions { grid, window, snap }, digits, &out)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 64 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("critcurve: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes() {
        let code = |e: Error| Failure::from(e).code;
        assert_eq!(code(Error::Improper), 2);
        assert_eq!(code(Error::Internal("x".into())), 3);
        assert_eq!(code(Error::Hypothesis("x".into())), 4);
        assert_eq!(code(Error::ComplexityGuard("x".into())), 5);
        assert_eq!(code(Error::ZeroDenominator), 1);
    }
}
