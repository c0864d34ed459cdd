//! Case-study benchmark: fit every model on a dataset's training split,
//! score the holdout, and lay the results out as a comparison table plus
//! plot-ready CSVs.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use crate::dataio::{write_report, Dataset, ReportFormat};
use crate::error::Result;
use crate::metrics::{evaluate, EvaluationReport};
use crate::models::{fit, ModelConfig, ModelKind};
use crate::optimize::{tune_orders, TuneResult, WoaConfig};

/// Search budget shared by all tuned models.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    pub agents: usize,
    pub iterations: usize,
    pub seed: u64,
}

impl Budget {
    pub fn new(seed: u64) -> Self {
        Self {
            agents: 30,
            iterations: 100,
            seed,
        }
    }

    fn woa(&self) -> WoaConfig {
        WoaConfig {
            agents: self.agents,
            iterations: self.iterations,
            ..WoaConfig::new(Vec::new(), self.seed)
        }
    }
}

#[derive(Debug, Clone)]
pub struct BenchmarkOutcome {
    pub case: String,
    pub seed: u64,
    /// One report per model, in [`ModelKind::ALL`] order.
    pub reports: Vec<EvaluationReport>,
    pub tuned: Vec<TuneResult>,
}

impl BenchmarkOutcome {
    pub fn report(&self, kind: ModelKind) -> Option<&EvaluationReport> {
        self.reports.iter().find(|r| r.model == kind.name())
    }
}

/// Runs all five models on `dataset` with its default split. CCFGM, FGM and
/// the Caputo model have their orders tuned first.
pub fn run_benchmark(dataset: &Dataset, budget: Budget) -> Result<BenchmarkOutcome> {
    let (train, holdout) = dataset.split()?;
    let woa = budget.woa();
    let mut reports = Vec::new();
    let mut tuned = Vec::new();

    for kind in ModelKind::ALL {
        let config = match kind {
            ModelKind::Ccfgm | ModelKind::Fgm | ModelKind::CaputoGm => {
                let t = tune_orders(&dataset.series, kind, dataset.default_train_n, &woa)?;
                let config = t.config;
                tuned.push(t);
                config
            }
            ModelKind::Gm11 => ModelConfig::gm11(),
            ModelKind::Pr2 => ModelConfig::pr2(),
        };
        let model = fit(&train, &config)?;
        let mut report = evaluate(&train, &model, holdout.as_ref(), 0)?;
        if kind != ModelKind::Gm11 && kind != ModelKind::Pr2 {
            report.seed = Some(budget.seed);
        }
        reports.push(report);
    }
    Ok(BenchmarkOutcome {
        case: dataset.name.clone(),
        seed: budget.seed,
        reports,
        tuned,
    })
}

/// Comparison table: one row per period with the raw value and every
/// model's fitted/forecast value, then `fit_mape` and `test_mape` rows.
pub fn summary_csv(outcome: &BenchmarkOutcome) -> String {
    let mut out = String::from("label,raw");
    for r in &outcome.reports {
        let _ = write!(out, ",{}", r.model);
    }
    out.push('\n');
    let first = &outcome.reports[0];
    for (i, row) in first.rows.iter().enumerate() {
        let _ = write!(out, "{},{}", row.label, row.actual);
        for r in &outcome.reports {
            let _ = write!(out, ",{:.2}", r.rows[i].predicted);
        }
        out.push('\n');
    }
    out.push_str("fit_mape,");
    for r in &outcome.reports {
        let _ = write!(out, ",{:.4}", r.fit_mape);
    }
    out.push('\n');
    if first.test_mape.is_some() {
        out.push_str("test_mape,");
        for r in &outcome.reports {
            let _ = write!(out, ",{:.4}", r.test_mape.unwrap_or(f64::NAN));
        }
        out.push('\n');
    }
    out
}

/// Per-period APE of every model (bar-chart data).
pub fn ape_csv(outcome: &BenchmarkOutcome) -> String {
    let mut out = String::from("label,segment");
    for r in &outcome.reports {
        let _ = write!(out, ",{}", r.model);
    }
    out.push('\n');
    for (i, row) in outcome.reports[0].rows.iter().enumerate() {
        let segment = match row.segment {
            crate::metrics::Segment::Fit => "fit",
            crate::metrics::Segment::Test => "test",
        };
        let _ = write!(out, "{},{segment}", row.label);
        for r in &outcome.reports {
            let _ = write!(out, ",{}", r.rows[i].ape);
        }
        out.push('\n');
    }
    out
}

/// Actual and modelled series at full precision (line-chart data).
pub fn series_csv(outcome: &BenchmarkOutcome) -> String {
    let mut out = String::from("label,actual");
    for r in &outcome.reports {
        let _ = write!(out, ",{}", r.model);
    }
    out.push('\n');
    for (i, row) in outcome.reports[0].rows.iter().enumerate() {
        let _ = write!(out, "{},{}", row.label, row.actual);
        for r in &outcome.reports {
            let _ = write!(out, ",{}", r.rows[i].predicted);
        }
        out.push('\n');
    }
    out
}

/// Writes `<model>.json` for every model plus `summary.csv`,
/// `plot_series.csv` and `plot_ape.csv` into `dir`. Returns the paths.
pub fn write_outputs(outcome: &BenchmarkOutcome, dir: &Path) -> Result<Vec<PathBuf>> {
    fs::create_dir_all(dir)?;
    let mut written = Vec::new();
    for report in &outcome.reports {
        let path = dir.join(format!("{}.json", report.model));
        write_report(report, ReportFormat::Json, &path)?;
        written.push(path);
    }
    for (name, body) in [
        ("summary.csv", summary_csv(outcome)),
        ("plot_series.csv", series_csv(outcome)),
        ("plot_ape.csv", ape_csv(outcome)),
    ] {
        let path = dir.join(name);
        fs::write(&path, body)?;
        written.push(path);
    }
    Ok(written)
}
