//! Percentage errors and train/holdout evaluation reports.

use std::ops::Range;

use serde::{Deserialize, Serialize};

use crate::error::{GreyError, Result};
use crate::models::{FittedModel, Orders, Params};
use crate::series::TimeSeries;

/// Absolute percentage error `|predicted − actual| / actual × 100`.
pub fn ape(actual: f64, predicted: f64) -> Result<f64> {
    if !(actual > 0.0 && actual.is_finite()) {
        return Err(GreyError::InvalidInput(format!(
            "actual value {actual} must be positive"
        )));
    }
    Ok((predicted - actual).abs() / actual * 100.0)
}

/// Which indices a MAPE averages over.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub enum MapeRange {
    /// Every index.
    Full,
    /// Every index but the first. Grey models reproduce the first point
    /// exactly, so in-sample MAPE skips it.
    #[default]
    SkipFirst,
    /// An explicit zero-based span.
    Span(Range<usize>),
}

impl MapeRange {
    fn resolve(&self, len: usize) -> Range<usize> {
        match self {
            MapeRange::Full => 0..len,
            MapeRange::SkipFirst => 1.min(len)..len,
            MapeRange::Span(r) => r.clone(),
        }
    }
}

/// Mean absolute percentage error over `range`.
pub fn mape(actuals: &[f64], predictions: &[f64], range: MapeRange) -> Result<f64> {
    if actuals.len() != predictions.len() {
        return Err(GreyError::LengthMismatch {
            left: actuals.len(),
            right: predictions.len(),
        });
    }
    let span = range.resolve(actuals.len());
    if span.is_empty() || span.end > actuals.len() {
        return Err(GreyError::InvalidInput(format!(
            "MAPE range {span:?} is empty or exceeds length {}",
            actuals.len()
        )));
    }
    let count = span.len() as f64;
    let mut total = 0.0;
    for i in span {
        total += ape(actuals[i], predictions[i])?;
    }
    Ok(total / count)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Segment {
    Fit,
    Test,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportRow {
    pub label: i64,
    pub actual: f64,
    pub predicted: f64,
    pub ape: f64,
    pub segment: Segment,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HorizonPoint {
    pub label: i64,
    pub value: f64,
}

/// Fitted values, holdout forecasts and their errors, laid out like a
/// comparison table column.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EvaluationReport {
    pub model: String,
    pub orders: Orders,
    pub params: Params,
    pub n_train: usize,
    pub rows: Vec<ReportRow>,
    pub fit_mape: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub test_mape: Option<f64>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub horizon: Vec<HorizonPoint>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

impl EvaluationReport {
    pub fn fit_rows(&self) -> impl Iterator<Item = &ReportRow> {
        self.rows.iter().filter(|r| r.segment == Segment::Fit)
    }

    pub fn test_rows(&self) -> impl Iterator<Item = &ReportRow> {
        self.rows.iter().filter(|r| r.segment == Segment::Test)
    }
}

/// Builds the report for a model trained on `train`, scoring it on
/// `holdout` and extending the forecast `extra_horizon` steps beyond the
/// last known label. Fit MAPE skips the first point.
pub fn evaluate(
    train: &TimeSeries,
    model: &FittedModel,
    holdout: Option<&TimeSeries>,
    extra_horizon: usize,
) -> Result<EvaluationReport> {
    evaluate_with(train, model, holdout, extra_horizon, MapeRange::SkipFirst)
}

pub fn evaluate_with(
    train: &TimeSeries,
    model: &FittedModel,
    holdout: Option<&TimeSeries>,
    extra_horizon: usize,
    fit_range: MapeRange,
) -> Result<EvaluationReport> {
    let n = train.len();
    if model.n_train != n || model.fitted_restored.len() != n {
        return Err(GreyError::LengthMismatch {
            left: model.n_train,
            right: n,
        });
    }
    if let Some(h) = holdout {
        let expected = train.continued_labels(1)[0];
        if h.labels()[0] != expected {
            return Err(GreyError::LabelContinuity(format!(
                "holdout starts at {} but training data ends at {} (expected {expected})",
                h.labels()[0],
                train.labels()[n - 1]
            )));
        }
    }
    let n_test = holdout.map_or(0, TimeSeries::len);
    let predicted = model.predict(n + n_test + extra_horizon)?;

    let mut rows = Vec::with_capacity(n + n_test);
    for (i, (&label, &actual)) in train.labels().iter().zip(train.values()).enumerate() {
        let fitted = model.fitted_restored[i];
        rows.push(ReportRow {
            label,
            actual,
            predicted: fitted,
            ape: ape(actual, fitted)?,
            segment: Segment::Fit,
        });
    }
    let fit_mape = mape(train.values(), &model.fitted_restored, fit_range)?;

    let test_mape = match holdout {
        Some(h) => {
            let forecast = &predicted[n..n + n_test];
            for ((&label, &actual), &value) in h.labels().iter().zip(h.values()).zip(forecast) {
                rows.push(ReportRow {
                    label,
                    actual,
                    predicted: value,
                    ape: ape(actual, value)?,
                    segment: Segment::Test,
                });
            }
            Some(mape(h.values(), forecast, MapeRange::Full)?)
        }
        None => None,
    };

    let last = holdout.unwrap_or(train);
    let horizon = last
        .continued_labels(extra_horizon)
        .into_iter()
        .zip(&predicted[n + n_test..])
        .map(|(label, &value)| HorizonPoint { label, value })
        .collect();

    Ok(EvaluationReport {
        model: model.kind().name().to_string(),
        orders: model.config.orders(),
        params: model.params,
        n_train: n,
        rows,
        fit_mape,
        test_mape,
        horizon,
        seed: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models::gm11_fit;
    use approx::assert_abs_diff_eq;

    #[test]
    fn ape_examples() {
        assert_abs_diff_eq!(ape(100.0, 110.0).unwrap(), 10.0, epsilon = 1e-12);
        assert_abs_diff_eq!(ape(200.0, 190.0).unwrap(), 5.0, epsilon = 1e-12);
        assert_abs_diff_eq!(ape(57620.0, 57555.00).unwrap(), 0.1128, epsilon = 5e-5);
        assert!(ape(0.0, 1.0).is_err());
        assert!(ape(-2.0, 1.0).is_err());
    }

    #[test]
    fn mape_basics() {
        let x = [1.0, 2.0, 4.0];
        assert_eq!(mape(&x, &x, MapeRange::Full).unwrap(), 0.0);
        assert_abs_diff_eq!(
            mape(&[100.0, 200.0], &[110.0, 190.0], MapeRange::Full).unwrap(),
            7.5,
            epsilon = 1e-12
        );
        assert_abs_diff_eq!(
            mape(&[100.0, 200.0], &[110.0, 190.0], MapeRange::SkipFirst).unwrap(),
            5.0,
            epsilon = 1e-12
        );
        assert!(mape(&x, &x, MapeRange::Span(1..1)).is_err());
        assert!(mape(&x, &x[..2], MapeRange::Full).is_err());
        assert!(mape(&[5.0], &[5.0], MapeRange::SkipFirst).is_err());
    }

    fn sample() -> TimeSeries {
        TimeSeries::from_values(2000, vec![10.0, 11.2, 12.1, 13.5, 14.4, 16.0, 17.1, 18.9]).unwrap()
    }

    #[test]
    fn report_without_holdout() {
        let (train, _) = sample().split(8).unwrap();
        let model = gm11_fit(&train).unwrap();
        let report = evaluate(&train, &model, None, 3).unwrap();
        assert!(report.test_mape.is_none());
        assert_eq!(report.rows.len(), 8);
        assert_eq!(
            report.horizon.iter().map(|h| h.label).collect::<Vec<_>>(),
            vec![2008, 2009, 2010]
        );
    }

    #[test]
    fn report_with_two_point_holdout() {
        let (train, hold) = sample().split(6).unwrap();
        let hold = hold.unwrap();
        let model = gm11_fit(&train).unwrap();
        let report = evaluate(&train, &model, Some(&hold), 0).unwrap();
        let apes: Vec<f64> = report.test_rows().map(|r| r.ape).collect();
        assert_eq!(apes.len(), 2);
        assert_abs_diff_eq!(
            report.test_mape.unwrap(),
            (apes[0] + apes[1]) / 2.0,
            epsilon = 1e-12
        );

        let recomputed: Vec<f64> = report.fit_rows().skip(1).map(|r| r.ape).collect();
        let mean = recomputed.iter().sum::<f64>() / recomputed.len() as f64;
        assert_abs_diff_eq!(mean, report.fit_mape, epsilon = 1e-12);
    }

    #[test]
    fn holdout_must_continue_labels() {
        let (train, _) = sample().split(6).unwrap();
        let model = gm11_fit(&train).unwrap();
        let gap = TimeSeries::from_values(2010, vec![1.0, 2.0]).unwrap();
        assert!(matches!(
            evaluate(&train, &model, Some(&gap), 0),
            Err(GreyError::LabelContinuity(_))
        ));
    }
}
