//! CSV ingestion, the bundled case-study datasets and report serialization.
//!
//! Input files have a `label,value` header and one record per period.
//! Report CSVs have a `label,actual,predicted,ape_percent` header followed
//! by the rows and trailing `#` comment lines carrying the MAPEs.

use std::fs::File;
use std::io::{BufWriter, Read, Write};
use std::path::Path;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{GreyError, Result};
use crate::metrics::{EvaluationReport, Segment};
use crate::series::TimeSeries;

/// Domestic energy consumption, 2005–2017 (10⁴ t standard coal).
pub const ENERGY_VALUES: [f64; 13] = [
    27573.0, 27765.0, 30814.0, 31898.0, 33843.0, 36470.0, 39584.0, 42306.0, 45531.0, 47212.0,
    50099.0, 54209.0, 57620.0,
];

/// Domestic coal consumption, 2005–2017 (10⁴ t).
pub const COAL_VALUES: [f64; 13] = [
    10039.0, 10036.0, 9761.0, 9148.0, 9122.0, 9159.0, 9212.0, 9253.0, 9290.0, 9253.0, 9347.0,
    9492.0, 9283.0,
];

pub const DATASET_NAMES: [&str; 2] = ["energy", "coal"];

#[derive(Debug, Clone, PartialEq)]
pub struct Dataset {
    pub name: String,
    pub series: TimeSeries,
    pub default_train_n: usize,
}

impl Dataset {
    /// Training points and the holdout that follows them.
    pub fn split(&self) -> Result<(TimeSeries, Option<TimeSeries>)> {
        self.series.split(self.default_train_n)
    }
}

pub fn bundled_dataset(name: &str) -> Result<Dataset> {
    let values = match name {
        "energy" => ENERGY_VALUES,
        "coal" => COAL_VALUES,
        other => return Err(GreyError::UnknownDataset(other.to_string())),
    };
    Ok(Dataset {
        name: name.to_string(),
        series: TimeSeries::from_values(2005, values.to_vec())?,
        default_train_n: 11,
    })
}

pub fn read_csv(path: impl AsRef<Path>) -> Result<TimeSeries> {
    let path = path.as_ref();
    let mut text = String::new();
    File::open(path)?.read_to_string(&mut text)?;
    parse_series_csv(&text, path)
}

/// Parses `label,value` CSV text; `origin` only labels error messages.
pub fn parse_series_csv(text: &str, origin: &Path) -> Result<TimeSeries> {
    let err = |line: usize, message: String| GreyError::Parse {
        path: origin.to_path_buf(),
        line,
        message,
    };
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(true)
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());

    let headers = reader.headers().map_err(|e| err(1, e.to_string()))?.clone();
    if headers.len() != 2 || &headers[0] != "label" || &headers[1] != "value" {
        return Err(err(
            1,
            format!(
                "expected header `label,value`, found `{}`",
                headers.iter().collect::<Vec<_>>().join(",")
            ),
        ));
    }

    let mut labels: Vec<i64> = Vec::new();
    let mut values = Vec::new();
    for record in reader.records() {
        let record = record.map_err(|e| {
            let line = e.position().map_or(0, |p| p.line() as usize);
            err(line, e.to_string())
        })?;
        let line = record.position().map_or(0, |p| p.line() as usize);
        let label = i64::from_str(&record[0])
            .map_err(|_| err(line, format!("label `{}` is not an integer", &record[0])))?;
        let value = f64::from_str(&record[1])
            .map_err(|_| err(line, format!("value `{}` is not a number", &record[1])))?;
        if !(value.is_finite() && value > 0.0) {
            return Err(err(line, format!("value {value} is not strictly positive")));
        }
        if let Some(&prev) = labels.last() {
            if label <= prev {
                return Err(err(
                    line,
                    format!("label {label} does not increase on {prev}"),
                ));
            }
        }
        labels.push(label);
        values.push(value);
    }
    if values.is_empty() {
        return Err(err(1, "no data rows".into()));
    }
    TimeSeries::new(labels, values)
}

pub fn write_series_csv(series: &TimeSeries, path: impl AsRef<Path>) -> Result<()> {
    let mut w = BufWriter::new(File::create(path)?);
    writeln!(w, "label,value")?;
    for (l, v) in series.labels().iter().zip(series.values()) {
        writeln!(w, "{l},{v}")?;
    }
    w.flush()?;
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Json,
    Csv,
}

impl FromStr for ReportFormat {
    type Err = GreyError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(ReportFormat::Json),
            "csv" => Ok(ReportFormat::Csv),
            other => Err(GreyError::InvalidInput(format!(
                "unknown report format `{other}`"
            ))),
        }
    }
}

pub fn write_report(
    report: &EvaluationReport,
    format: ReportFormat,
    path: impl AsRef<Path>,
) -> Result<()> {
    let mut w = BufWriter::new(File::create(path)?);
    render_report(report, format, &mut w)?;
    w.flush()?;
    Ok(())
}

pub fn render_report(
    report: &EvaluationReport,
    format: ReportFormat,
    mut out: impl Write,
) -> Result<()> {
    match format {
        ReportFormat::Json => {
            serde_json::to_writer_pretty(&mut out, report)?;
            writeln!(out)?;
        }
        ReportFormat::Csv => {
            writeln!(out, "label,actual,predicted,ape_percent")?;
            for row in &report.rows {
                writeln!(
                    out,
                    "{},{},{},{}",
                    row.label, row.actual, row.predicted, row.ape
                )?;
            }
            writeln!(out, "# model={}", report.model)?;
            writeln!(out, "# n_train={}", report.n_train)?;
            writeln!(out, "# fit_mape={}", report.fit_mape)?;
            if let Some(t) = report.test_mape {
                writeln!(out, "# test_mape={t}")?;
            }
        }
    }
    Ok(())
}

/// One data row of a report CSV.
#[derive(Debug, Clone, PartialEq, Serialize, serde::Deserialize)]
pub struct ReportCsvRow {
    pub label: i64,
    pub actual: f64,
    pub predicted: f64,
    pub ape_percent: f64,
}

/// Reads the data rows back from a report CSV, skipping comment lines.
pub fn read_report_csv(path: impl AsRef<Path>) -> Result<Vec<ReportCsvRow>> {
    let mut reader = csv::ReaderBuilder::new()
        .comment(Some(b'#'))
        .from_path(path)?;
    reader
        .deserialize()
        .map(|r| r.map_err(GreyError::from))
        .collect()
}

impl From<&crate::metrics::ReportRow> for ReportCsvRow {
    fn from(row: &crate::metrics::ReportRow) -> Self {
        Self {
            label: row.label,
            actual: row.actual,
            predicted: row.predicted,
            ape_percent: row.ape,
        }
    }
}

/// Rows of the given segment, in report order.
pub fn segment_rows(report: &EvaluationReport, segment: Segment) -> Vec<ReportCsvRow> {
    report
        .rows
        .iter()
        .filter(|r| r.segment == segment)
        .map(ReportCsvRow::from)
        .collect()
}
