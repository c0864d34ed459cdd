//! Observation sequences and fractional orders.

use serde::{Deserialize, Serialize};

use crate::error::{GreyError, Result};

/// Minimum number of points any grey model fit accepts.
pub const MIN_FIT_LEN: usize = 5;

/// A labeled, strictly positive observation sequence.
///
/// Labels are integer period identifiers (usually years) and must be strictly
/// increasing.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TimeSeries {
    labels: Vec<i64>,
    values: Vec<f64>,
}

impl TimeSeries {
    pub fn new(labels: Vec<i64>, values: Vec<f64>) -> Result<Self> {
        if labels.len() != values.len() {
            return Err(GreyError::LengthMismatch {
                left: labels.len(),
                right: values.len(),
            });
        }
        if values.is_empty() {
            return Err(GreyError::InvalidInput("empty series".into()));
        }
        if let Some(i) = values.iter().position(|v| !(v.is_finite() && *v > 0.0)) {
            return Err(GreyError::InvalidInput(format!(
                "value {} at label {} is not strictly positive",
                values[i], labels[i]
            )));
        }
        if let Some(w) = labels.windows(2).find(|w| w[1] <= w[0]) {
            return Err(GreyError::InvalidInput(format!(
                "labels not strictly increasing ({} then {})",
                w[0], w[1]
            )));
        }
        Ok(Self { labels, values })
    }

    /// Series labeled `first_label, first_label + 1, ...`.
    pub fn from_values(first_label: i64, values: Vec<f64>) -> Result<Self> {
        let labels = (0..values.len() as i64).map(|i| first_label + i).collect();
        Self::new(labels, values)
    }

    pub fn labels(&self) -> &[i64] {
        &self.labels
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Positional split into the first `train_n` points and the remainder.
    /// The holdout is `None` when `train_n` covers the whole series.
    pub fn split(&self, train_n: usize) -> Result<(TimeSeries, Option<TimeSeries>)> {
        if train_n == 0 || train_n > self.len() {
            return Err(GreyError::InvalidInput(format!(
                "train size {train_n} outside 1..={}",
                self.len()
            )));
        }
        let train = TimeSeries {
            labels: self.labels[..train_n].to_vec(),
            values: self.values[..train_n].to_vec(),
        };
        let holdout = (train_n < self.len()).then(|| TimeSeries {
            labels: self.labels[train_n..].to_vec(),
            values: self.values[train_n..].to_vec(),
        });
        Ok((train, holdout))
    }

    /// Spacing between the last two labels, or 1 for a single point.
    pub fn label_step(&self) -> i64 {
        match self.labels.len() {
            0 | 1 => 1,
            n => self.labels[n - 1] - self.labels[n - 2],
        }
    }

    /// The `count` labels that follow the last one at the series' step.
    pub fn continued_labels(&self, count: usize) -> Vec<i64> {
        let last = *self.labels.last().expect("non-empty series");
        let step = self.label_step();
        (1..=count as i64).map(|i| last + i * step).collect()
    }
}

/// A positive fractional order.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FractionalOrder(f64);

impl FractionalOrder {
    /// Any finite order strictly greater than zero.
    pub fn new(value: f64) -> Result<Self> {
        if value.is_finite() && value > 0.0 {
            Ok(Self(value))
        } else {
            Err(GreyError::InvalidOrder {
                value,
                reason: "order must be finite and > 0",
            })
        }
    }

    /// An order in `(0, 1]`, the range the conformable models use.
    pub fn unit(value: f64) -> Result<Self> {
        if value.is_finite() && value > 0.0 && value <= 1.0 {
            Ok(Self(value))
        } else {
            Err(GreyError::InvalidOrder {
                value,
                reason: "order must lie in (0, 1]",
            })
        }
    }

    pub fn get(self) -> f64 {
        self.0
    }

    /// Smallest integer not below the order.
    pub fn ceil(self) -> u32 {
        self.0.ceil() as u32
    }
}

impl std::fmt::Display for FractionalOrder {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_positive_values() {
        assert!(TimeSeries::from_values(2000, vec![1.0, 0.0, 2.0]).is_err());
        assert!(TimeSeries::from_values(2000, vec![1.0, -3.0]).is_err());
        assert!(TimeSeries::from_values(2000, vec![1.0, f64::NAN]).is_err());
    }

    #[test]
    fn rejects_unsorted_labels() {
        assert!(TimeSeries::new(vec![1, 3, 2], vec![1.0, 1.0, 1.0]).is_err());
        assert!(TimeSeries::new(vec![1, 1], vec![1.0, 1.0]).is_err());
        assert!(TimeSeries::new(vec![1], vec![1.0, 1.0]).is_err());
    }

    #[test]
    fn split_and_continue() {
        let s = TimeSeries::from_values(2005, vec![1.0, 2.0, 3.0, 4.0]).unwrap();
        let (train, hold) = s.split(3).unwrap();
        assert_eq!(train.values(), &[1.0, 2.0, 3.0]);
        assert_eq!(hold.unwrap().labels(), &[2008]);
        assert!(s.split(4).unwrap().1.is_none());
        assert!(s.split(5).is_err());
        assert_eq!(train.continued_labels(2), vec![2008, 2009]);
    }

    #[test]
    fn order_ranges() {
        assert!(FractionalOrder::unit(1.0).is_ok());
        assert!(FractionalOrder::unit(0.0).is_err());
        assert!(FractionalOrder::unit(1.2).is_err());
        assert_eq!(FractionalOrder::new(1.5).unwrap().ceil(), 2);
        assert_eq!(FractionalOrder::new(1.0).unwrap().ceil(), 1);
    }
}
