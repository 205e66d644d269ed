//! Command-line interface: instance generation, solving, construction, and
//! verification campaigns. Exit codes: 0 success, 1 check failure, 2
//! usage or I/O error.

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use mops::construct::{isolate_theorem1, isolate_theorem2, theorem1_bound, theorem2_bound};
use mops::gen::{build_family, enumerate_mops, random_mop, FamilyName, FamilySpec, Seed};
use mops::io::{read_instances, write_instances};
use mops::report::{verify_corpus, CampaignConfig, CampaignSource, CheckKind};
use mops::solve::{default_size_cap, iota_exact};
use mops::Mop;
use serde_json::json;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "mops", version, about = "Maximal outerplanar graph toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Stream every triangulation of the labeled n-gon as JSONL
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Sample triangulations uniformly at random
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        count: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build a named family instance
    Family {
        #[arg(long)]
        name: FamilyArg,
        /// Family parameter; ignored by A15
        #[arg(long, default_value_t = 0)]
        param: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exact isolation numbers for instances from a file
    Solve(SolveArgs),
    /// Constructive isolating sets for instances from a file
    Construct(ConstructArgs),
    /// Run a verification campaign and write a report
    Verify(VerifyArgs),
}

#[derive(Args)]
struct SolveArgs {
    #[arg(long = "in")]
    input: PathBuf,
    /// Star parameter: 0 isolates vertices, 1 isolates vertices and edges
    #[arg(long)]
    k: usize,
    /// Solve even above the default order limit of 20
    #[arg(long)]
    exact: bool,
    /// Cardinality cap for the subset search (default n/3 + 1)
    #[arg(long)]
    cap: Option<usize>,
}

#[derive(Args)]
struct ConstructArgs {
    #[arg(long = "in")]
    input: PathBuf,
    #[arg(long)]
    method: Method,
    /// Include the construction trace in the output
    #[arg(long)]
    trace: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// Instance source: `enumerate:MIN..MAX`, `random:n=N,count=C,seed=S`,
    /// `family:Name(param),...`, or `file:PATH`
    #[arg(long)]
    source: String,
    /// Comma-separated subset of
    /// lemmas,theorem1,theorem2,known-bounds,extremal-values, or `all`
    #[arg(long, default_value = "all")]
    checks: String,
    /// Enable exact solving (skipped above --exact-max-n for non-family sources)
    #[arg(long)]
    exact: bool,
    #[arg(long, default_value_t = mops::report::DEFAULT_EXACT_MAX_ORDER)]
    exact_max_n: usize,
    #[arg(long)]
    report: PathBuf,
    /// Process instances sequentially for reproducible timings
    #[arg(long)]
    single_thread: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    #[value(name = "Fan")]
    Fan,
    #[value(name = "Gt")]
    Gt,
    #[value(name = "Ht")]
    Ht,
    #[value(name = "A15")]
    A15,
    #[value(name = "Bt")]
    Bt,
    #[value(name = "MaxDeg2")]
    MaxDeg2,
    #[value(name = "MinDeg2")]
    MinDeg2,
}

impl From<FamilyArg> for FamilyName {
    fn from(f: FamilyArg) -> FamilyName {
        match f {
            FamilyArg::Fan => FamilyName::Fan,
            FamilyArg::Gt => FamilyName::Gt,
            FamilyArg::Ht => FamilyName::Ht,
            FamilyArg::A15 => FamilyName::A15,
            FamilyArg::Bt => FamilyName::Bt,
            FamilyArg::MaxDeg2 => FamilyName::MaxDeg2,
            FamilyArg::MinDeg2 => FamilyName::MinDeg2,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Theorem1,
    Theorem2,
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run() -> Result<ExitCode> {
    match Cli::parse().command {
        Command::Enumerate { n, out } => {
            let instances: Vec<Mop> = enumerate_mops(n)?.collect();
            emit_instances(&instances, out.as_deref())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Random { n, count, seed, out } => {
            let instances: Vec<Mop> = (0..count)
                .map(|i| random_mop(n, Seed(seed.wrapping_add(i as u64))))
                .collect::<Result<_, _>>()?;
            emit_instances(&instances, out.as_deref())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Family { name, param, out } => {
            let spec = FamilySpec::new(name.into(), param);
            let m = build_family(&spec)?;
            emit_instances(std::slice::from_ref(&m), out.as_deref())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Solve(args) => cmd_solve(args),
        Command::Construct(args) => cmd_construct(args),
        Command::Verify(args) => cmd_verify(args),
    }
}

fn emit_instances(instances: &[Mop], out: Option<&std::path::Path>) -> Result<()> {
    match out {
        Some(path) => write_instances(path, instances)
            .with_context(|| format!("writing {}", path.display()))?,
        None => {
            let stdout = std::io::stdout();
            let mut lock = stdout.lock();
            for m in instances {
                serde_json::to_writer(&mut lock, m)?;
                lock.write_all(b"\n")?;
            }
        }
    }
    Ok(())
}

fn cmd_solve(args: SolveArgs) -> Result<ExitCode> {
    if args.k > 1 {
        bail!("--k must be 0 or 1");
    }
    let mut failed = false;
    for (index, entry) in read_instances(&args.input)
        .with_context(|| format!("reading {}", args.input.display()))?
        .enumerate()
    {
        let m = match entry {
            Ok(m) => m,
            Err(e) => {
                eprintln!("error: {e}");
                failed = true;
                continue;
            }
        };
        let n = m.n();
        if n > mops::report::DEFAULT_EXACT_MAX_ORDER && !args.exact {
            println!(
                "{}",
                json!({"index": index, "n": n, "k": args.k,
                       "skipped": "order above 20; rerun with --exact"})
            );
            continue;
        }
        let cap = args.cap.unwrap_or_else(|| default_size_cap(n));
        match iota_exact(&m, args.k, cap) {
            Some(set) => println!(
                "{}",
                json!({"index": index, "n": n, "k": args.k, "size": set.size(),
                       "witness": set.members, "provenance": set.provenance})
            ),
            None => println!(
                "{}",
                json!({"index": index, "n": n, "k": args.k, "exceeds_cap": cap})
            ),
        }
    }
    Ok(if failed { ExitCode::from(1) } else { ExitCode::SUCCESS })
}

fn cmd_construct(args: ConstructArgs) -> Result<ExitCode> {
    let mut failed = false;
    for (index, entry) in read_instances(&args.input)
        .with_context(|| format!("reading {}", args.input.display()))?
        .enumerate()
    {
        let m = match entry {
            Ok(m) => m,
            Err(e) => {
                eprintln!("error: {e}");
                failed = true;
                continue;
            }
        };
        let n = m.n();
        if n < 5 {
            println!("{}", json!({"index": index, "n": n, "error": "order below 5"}));
            failed = true;
            continue;
        }
        let n2 = m.degree_two_vertices().len();
        let (set, trace, bound, method) = match args.method {
            Method::Theorem1 => {
                let (s, t) = isolate_theorem1(&m);
                (s, t, theorem1_bound(n), "theorem1")
            }
            Method::Theorem2 => {
                let (s, t) = isolate_theorem2(&m);
                (s, t, theorem2_bound(n, n2), "theorem2")
            }
        };
        let valid = set.verify(&m).unwrap_or(false);
        let within = set.size() <= bound;
        let mut record = json!({
            "index": index, "n": n, "n2": n2, "method": method,
            "size": set.size(), "witness": set.members,
            "provenance": set.provenance, "bound": bound,
            "within_bound": within, "valid": valid,
        });
        if args.trace {
            record["trace"] = serde_json::to_value(&trace.steps)?;
        }
        println!("{record}");
        if !valid || !within {
            failed = true;
        }
    }
    Ok(if failed { ExitCode::from(1) } else { ExitCode::SUCCESS })
}

fn cmd_verify(args: VerifyArgs) -> Result<ExitCode> {
    let mut cfg = CampaignConfig::new(parse_source(&args.source)?);
    cfg.checks = parse_checks(&args.checks)?;
    cfg.exact = args.exact;
    cfg.exact_max_order = args.exact_max_n;
    cfg.single_thread = args.single_thread;
    let report = verify_corpus(&cfg)?;
    let file = std::fs::File::create(&args.report)
        .with_context(|| format!("writing {}", args.report.display()))?;
    serde_json::to_writer_pretty(std::io::BufWriter::new(file), &report)?;
    println!(
        "instances: {}  checks: {}  failures: {}",
        report.summary.instances,
        report.summary.checks_run.len(),
        report.summary.failures
    );
    for e in &report.summary.read_errors {
        println!("unreadable: {e}");
    }
    for id in report.summary.failed_ids.iter().take(20) {
        println!("failed: {id}");
    }
    if let Some(r) = report.summary.worst_theorem1_ratio {
        println!("worst theorem1 size/bound: {r:.3}");
    }
    if let Some(r) = report.summary.worst_theorem2_ratio {
        println!("worst theorem2 size/bound: {r:.3}");
    }
    println!("report written to {}", args.report.display());
    Ok(if report.passed() { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn parse_source(text: &str) -> Result<CampaignSource> {
    let (kind, rest) = text
        .split_once(':')
        .ok_or_else(|| anyhow!("source must look like kind:spec, got `{text}`"))?;
    match kind {
        "enumerate" => {
            let (lo, hi) = rest
                .split_once("..")
                .ok_or_else(|| anyhow!("enumerate source needs MIN..MAX, got `{rest}`"))?;
            Ok(CampaignSource::Enumerate { min_n: lo.trim().parse()?, max_n: hi.trim().parse()? })
        }
        "random" => {
            let (mut n, mut count, mut seed) = (None, None, None);
            for part in rest.split(',') {
                let (key, value) = part
                    .split_once('=')
                    .ok_or_else(|| anyhow!("random source needs key=value parts, got `{part}`"))?;
                match key.trim() {
                    "n" => n = Some(value.trim().parse()?),
                    "count" => count = Some(value.trim().parse()?),
                    "seed" => seed = Some(value.trim().parse()?),
                    other => bail!("unknown random source key `{other}`"),
                }
            }
            Ok(CampaignSource::Random {
                n: n.ok_or_else(|| anyhow!("random source needs n="))?,
                count: count.ok_or_else(|| anyhow!("random source needs count="))?,
                seed: seed.ok_or_else(|| anyhow!("random source needs seed="))?,
            })
        }
        "family" => {
            let mut specs = Vec::new();
            for part in rest.split(',') {
                specs.push(parse_family_spec(part.trim())?);
            }
            Ok(CampaignSource::Families { specs })
        }
        "file" => Ok(CampaignSource::File { path: PathBuf::from(rest) }),
        other => bail!("unknown source kind `{other}`"),
    }
}

fn parse_family_spec(text: &str) -> Result<FamilySpec> {
    let (name, param) = match text.split_once('(') {
        Some((name, rest)) => {
            let inner = rest
                .strip_suffix(')')
                .ok_or_else(|| anyhow!("family spec `{text}` is missing `)`"))?;
            (name, inner.trim().parse()?)
        }
        None => (text, 0),
    };
    let name = match name {
        "Fan" => FamilyName::Fan,
        "Gt" => FamilyName::Gt,
        "Ht" => FamilyName::Ht,
        "A15" => FamilyName::A15,
        "Bt" => FamilyName::Bt,
        "MaxDeg2" => FamilyName::MaxDeg2,
        "MinDeg2" => FamilyName::MinDeg2,
        other => bail!("unknown family `{other}`"),
    };
    Ok(FamilySpec::new(name, param))
}

fn parse_checks(text: &str) -> Result<Vec<CheckKind>> {
    if text.trim() == "all" {
        return Ok(CheckKind::ALL.to_vec());
    }
    let mut out = Vec::new();
    for part in text.split(',') {
        let kind = match part.trim() {
            "lemmas" => CheckKind::Lemmas,
            "theorem1" => CheckKind::Theorem1,
            "theorem2" => CheckKind::Theorem2,
            "known-bounds" => CheckKind::KnownBounds,
            "extremal-values" => CheckKind::ExtremalValues,
            other => bail!("unknown check `{other}`"),
        };
        if !out.contains(&kind) {
            out.push(kind);
        }
    }
    if out.is_empty() {
        bail!("at least one check is required");
    }
    Ok(out)
}
