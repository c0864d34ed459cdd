//! `greycast` command-line front end.
//!
//! Exit codes: 0 on success, 2 for bad flags or input data, 3 when the
//! numbers themselves fail (degenerate or singular fits, unusable tuning).

use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use greycast::bench::{run_benchmark, summary_csv, write_outputs, Budget};
use greycast::dataio::{bundled_dataset, read_csv, render_report, write_report, ReportFormat};
use greycast::metrics::evaluate;
use greycast::models::{fit, ModelConfig, ModelKind};
use greycast::optimize::{tune_orders, WoaConfig};
use greycast::{GreyError, TimeSeries};

const EXIT_INPUT: u8 = 2;
const EXIT_NUMERIC: u8 = 3;

#[derive(Parser)]
#[command(name = "greycast", version, about = "Small-sample grey forecasting")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Fit a model at fixed orders and write its report.
    Fit(FitArgs),
    /// Fit on a whole series and print future values as CSV.
    Forecast(ForecastArgs),
    /// Search the fractional orders with the whale optimizer.
    Tune(TuneArgs),
    /// Run every model on a bundled case study.
    Benchmark(BenchArgs),
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Source {
    /// CSV file with a `label,value` header.
    #[arg(long)]
    input: Option<PathBuf>,
    /// Bundled dataset: energy or coal.
    #[arg(long)]
    dataset: Option<String>,
}

#[derive(Args)]
struct Orders {
    #[arg(long, value_parser = parse_kind, default_value = "ccfgm")]
    model: ModelKind,
    /// Derivative order (ccfgm).
    #[arg(long)]
    r: Option<f64>,
    /// Accumulation order (ccfgm, fgm).
    #[arg(long)]
    q: Option<f64>,
    /// Caputo order (caputo_gm).
    #[arg(long)]
    p: Option<f64>,
    /// Background-value weight.
    #[arg(long, default_value_t = 0.5)]
    lambda: f64,
}

#[derive(Args)]
struct FitArgs {
    #[command(flatten)]
    source: Source,
    #[command(flatten)]
    orders: Orders,
    /// Training points; the rest is scored as holdout. Defaults to 11 for
    /// bundled datasets and the whole file otherwise.
    #[arg(long)]
    train_n: Option<usize>,
    /// Extra steps to forecast past the data.
    #[arg(long, default_value_t = 0)]
    horizon: usize,
    /// Report path; standard output if omitted.
    #[arg(long)]
    output: Option<PathBuf>,
    #[arg(long, value_parser = parse_format, default_value = "json")]
    format: ReportFormat,
}

#[derive(Args)]
struct ForecastArgs {
    #[arg(long)]
    input: PathBuf,
    #[command(flatten)]
    orders: Orders,
    #[arg(long)]
    horizon: usize,
}

#[derive(Args)]
struct Budgeted {
    #[arg(long, env = "GREYCAST_SEED", default_value_t = 42)]
    seed: u64,
    #[arg(long, default_value_t = 30)]
    agents: usize,
    #[arg(long, default_value_t = 100)]
    iters: usize,
}

#[derive(Args)]
struct TuneArgs {
    #[command(flatten)]
    source: Source,
    #[arg(long, value_parser = parse_kind, default_value = "ccfgm")]
    model: ModelKind,
    #[arg(long)]
    train_n: Option<usize>,
    #[command(flatten)]
    budget: Budgeted,
}

#[derive(Args)]
struct BenchArgs {
    /// energy or coal
    #[arg(long)]
    case: String,
    #[command(flatten)]
    budget: Budgeted,
    /// Directory for the reports and plot data.
    #[arg(long)]
    output: Option<PathBuf>,
}

fn parse_kind(s: &str) -> Result<ModelKind, GreyError> {
    s.parse()
}

fn parse_format(s: &str) -> Result<ReportFormat, GreyError> {
    s.parse()
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("greycast: {e}");
            ExitCode::from(if e.is_numeric() {
                EXIT_NUMERIC
            } else {
                EXIT_INPUT
            })
        }
    }
}

fn run(command: Command) -> greycast::Result<()> {
    match command {
        Command::Fit(args) => cmd_fit(args),
        Command::Forecast(args) => cmd_forecast(args),
        Command::Tune(args) => cmd_tune(args),
        Command::Benchmark(args) => cmd_benchmark(args),
    }
}

/// The series and its default training length.
fn load(source: &Source) -> greycast::Result<(TimeSeries, usize)> {
    match (&source.input, &source.dataset) {
        (Some(path), _) => {
            let s = read_csv(path)?;
            let n = s.len();
            Ok((s, n))
        }
        (None, Some(name)) => {
            let d = bundled_dataset(name)?;
            Ok((d.series, d.default_train_n))
        }
        (None, None) => Err(GreyError::InvalidInput(
            "one of --input or --dataset is required".into(),
        )),
    }
}

fn config(o: &Orders) -> greycast::Result<ModelConfig> {
    let reject = |flag: &str| {
        Err(GreyError::InvalidInput(format!(
            "--{flag} does not apply to {}",
            o.model
        )))
    };
    let cfg = match o.model {
        ModelKind::Ccfgm => {
            if o.p.is_some() {
                return reject("p");
            }
            ModelConfig::ccfgm(o.r.unwrap_or(1.0), o.q.unwrap_or(1.0))?
        }
        ModelKind::Fgm => {
            if o.r.is_some() || o.p.is_some() {
                return reject(if o.r.is_some() { "r" } else { "p" });
            }
            ModelConfig::fgm(o.q.unwrap_or(1.0))?
        }
        ModelKind::CaputoGm => {
            if o.r.is_some() || o.q.is_some() {
                return reject(if o.r.is_some() { "r" } else { "q" });
            }
            let p =
                o.p.ok_or_else(|| GreyError::InvalidInput("caputo_gm needs --p".into()))?;
            ModelConfig::caputo_gm(p)?
        }
        ModelKind::Gm11 | ModelKind::Pr2 => {
            if let Some(flag) = [("r", o.r), ("q", o.q), ("p", o.p)]
                .into_iter()
                .find_map(|(name, v)| v.map(|_| name))
            {
                return reject(flag);
            }
            if o.model == ModelKind::Gm11 {
                ModelConfig::gm11()
            } else {
                ModelConfig::pr2()
            }
        }
    };
    cfg.with_lambda(o.lambda)
}

fn cmd_fit(args: FitArgs) -> greycast::Result<()> {
    let (series, default_n) = load(&args.source)?;
    let cfg = config(&args.orders)?;
    let (train, holdout) = series.split(args.train_n.unwrap_or(default_n))?;
    let model = fit(&train, &cfg)?;
    let report = evaluate(&train, &model, holdout.as_ref(), args.horizon)?;
    match &args.output {
        Some(path) => write_report(&report, args.format, path),
        None => render_report(&report, args.format, io::stdout().lock()),
    }
}

fn cmd_forecast(args: ForecastArgs) -> greycast::Result<()> {
    let series = read_csv(&args.input)?;
    let model = fit(&series, &config(&args.orders)?)?;
    if args.horizon == 0 {
        return Ok(());
    }
    let n = series.len();
    let values = model.predict(n + args.horizon)?;
    let mut out = io::stdout().lock();
    writeln!(out, "label,value")?;
    for (label, v) in series
        .continued_labels(args.horizon)
        .iter()
        .zip(&values[n..])
    {
        writeln!(out, "{label},{v}")?;
    }
    Ok(())
}

fn woa(b: &Budgeted) -> WoaConfig {
    WoaConfig {
        agents: b.agents,
        iterations: b.iters,
        ..WoaConfig::new(Vec::new(), b.seed)
    }
}

fn cmd_tune(args: TuneArgs) -> greycast::Result<()> {
    let (series, default_n) = load(&args.source)?;
    let result = tune_orders(
        &series,
        args.model,
        args.train_n.unwrap_or(default_n),
        &woa(&args.budget),
    )?;
    println!("{}", result.to_json());
    Ok(())
}

fn cmd_benchmark(args: BenchArgs) -> greycast::Result<()> {
    let dataset = bundled_dataset(&args.case)?;
    let budget = Budget {
        agents: args.budget.agents,
        iterations: args.budget.iters,
        seed: args.budget.seed,
    };
    let outcome = run_benchmark(&dataset, budget)?;
    if let Some(dir) = &args.output {
        write_outputs(&outcome, Path::new(dir))?;
    }
    print!("{}", summary_csv(&outcome));
    Ok(())
}
