//! Command line entry point.
//!
//! Exit codes: 0 on success, 1 for configuration or usage errors, 2 when a
//! check suite reports failures.

use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};

use tautcoh::{build_surface, load_config};
use tautcoh::{evaluate, exit_code_for, render_json, render_text, Mode, Report, Suite};

#[derive(Parser)]
#[command(
    name = "tautcoh",
    version,
    about = "Cohomology of symmetric powers of tautological bundles on Hilbert schemes of points"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate one query described by a JSON config file.
    Compute(ComputeArgs),
    /// Run the internal consistency checks.
    Check(CheckArgs),
}

#[derive(Args)]
struct ComputeArgs {
    /// Path to the JSON config describing the surface and query.
    #[arg(long)]
    config: PathBuf,
    /// Query mode; overrides query.mode from the config.
    #[arg(long)]
    mode: Option<String>,
    /// Number of points n; overrides query.n.
    #[arg(long)]
    n: Option<usize>,
    /// Symmetric power k (sk_taut only); overrides query.k.
    #[arg(long)]
    k: Option<usize>,
    /// Check suite for mode=check; overrides query.suite.
    #[arg(long)]
    suite: Option<String>,
    /// Write the report here instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
    /// Report format: text or json.
    #[arg(long, default_value = "text")]
    format: String,
}

#[derive(Args)]
struct CheckArgs {
    /// Suite to run: default or full.
    #[arg(long, default_value = "default")]
    suite: String,
    /// Write the report here instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
    /// Report format: text or json.
    #[arg(long, default_value = "text")]
    format: String,
}

fn main() {
    std::process::exit(run());
}

fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return code;
        }
    };
    match execute(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            1
        }
    }
}

fn execute(cli: Cli) -> Result<i32> {
    let (report, output, format) = match cli.command {
        Command::Compute(args) => {
            let cfg = load_config(&args.config)?;
            let surface = build_surface(&cfg)?;
            let mode_name = args
                .mode
                .or(cfg.query.mode)
                .context("no mode given; set query.mode in the config or pass --mode")?;
            let mode = Mode::parse(&mode_name)?;
            let suite = match args.suite.or(cfg.query.suite) {
                Some(s) => Suite::parse(&s)?,
                None => Suite::Default,
            };
            let n = args.n.or(cfg.query.n);
            let k = args.k.or(cfg.query.k);
            let report = evaluate(mode, n, k, suite, surface.as_ref())?;
            (report, args.output, args.format)
        }
        Command::Check(args) => {
            let suite = Suite::parse(&args.suite)?;
            let report = evaluate(Mode::Check, None, None, suite, None)?;
            (report, args.output, args.format)
        }
    };
    emit(&report, output.as_deref(), &format)?;
    Ok(exit_code_for(&report))
}

fn emit(report: &Report, output: Option<&std::path::Path>, format: &str) -> Result<()> {
    let rendered = match format {
        "json" => render_json(report),
        "text" => render_text(report),
        other => bail!("unknown format {other:?}; expected text or json"),
    };
    match output {
        Some(path) => std::fs::write(path, rendered)
            .with_context(|| format!("writing report to {}", path.display()))?,
        None => print!("{rendered}"),
    }
    Ok(())
}
