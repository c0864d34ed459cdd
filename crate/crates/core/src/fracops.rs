//! Conformable and classical fractional accumulation and difference
//! operators on finite sequences.
//!
//! Sequences are 1-indexed in the formulas below; the element before the
//! first one is taken as zero, which makes each difference operator the exact
//! left inverse of the matching accumulation.
//!
//! | operator | k-th output |
//! |----------|-------------|
//! | [`cfa`], order α ∈ (0, 1] | Σ_{i≤k} x(i) · i^{α−1} |
//! | [`cfa`], order α ∈ (m, m+1] | Σ_{i≤k} C(k−i+m, k−i) · x(i) · i^{α−m−1} |
//! | [`cfd`], order α ∈ (0, 1] | k^{1−α} · (x(k) − x(k−1)) |
//! | [`classical_fago`], order r | Σ_{i≤k} C(k−i+r−1, k−i) · x(i) |
//! | [`classical_fdiff`], order r | Σ_{i≤k} C(k−i−r−1, k−i) · x(i) |

use serde::{Deserialize, Serialize};

use crate::error::{GreyError, Result};
use crate::series::FractionalOrder;
use crate::specialfn::{accumulation_weight, accumulation_weights};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AccumulationKind {
    Conformable,
    Classical,
}

/// A sequence produced by a fractional accumulation, tagged with how it was made.
#[derive(Debug, Clone, PartialEq)]
pub struct AccumulatedSeries {
    pub values: Vec<f64>,
    pub order: f64,
    pub kind: AccumulationKind,
}

impl AccumulatedSeries {
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

fn non_empty(series: &[f64]) -> Result<()> {
    if series.is_empty() {
        Err(GreyError::InvalidInput("empty sequence".into()))
    } else {
        Ok(())
    }
}

/// Conformable fractional accumulation of any positive order.
pub fn cfa(series: &[f64], alpha: FractionalOrder) -> Result<AccumulatedSeries> {
    non_empty(series)?;
    let a = alpha.get();
    let ceil = alpha.ceil();
    let shift = f64::from(ceil) - a;
    let scaled: Vec<f64> = series
        .iter()
        .enumerate()
        .map(|(i, x)| x / ((i + 1) as f64).powf(shift))
        .collect();

    let values = if ceil == 1 {
        running_sum(&scaled)
    } else {
        let weights: Vec<f64> = (0..series.len())
            .map(|j| accumulation_weight(j, f64::from(ceil)))
            .collect();
        convolve(&scaled, &weights)
    };
    Ok(AccumulatedSeries {
        values,
        order: a,
        kind: AccumulationKind::Conformable,
    })
}

/// Conformable fractional difference of order α ∈ (0, 1].
pub fn cfd(series: &[f64], alpha: FractionalOrder) -> Result<Vec<f64>> {
    non_empty(series)?;
    let a = unit_order(alpha)?;
    let mut prev = 0.0;
    Ok(series
        .iter()
        .enumerate()
        .map(|(i, &x)| {
            let d = ((i + 1) as f64).powf(1.0 - a) * (x - prev);
            prev = x;
            d
        })
        .collect())
}

/// Classical (generalized binomial) fractional accumulation of order `r ≥ 0`.
/// Order 0 is the identity and order 1 the running sum.
pub fn classical_fago(series: &[f64], r: f64) -> Result<AccumulatedSeries> {
    non_empty(series)?;
    if !(r.is_finite() && r >= 0.0) {
        return Err(GreyError::InvalidOrder {
            value: r,
            reason: "accumulation order must be finite and >= 0",
        });
    }
    let values = if r == 1.0 {
        running_sum(series)
    } else {
        convolve(series, &accumulation_weights(series.len(), r))
    };
    Ok(AccumulatedSeries {
        values,
        order: r,
        kind: AccumulationKind::Classical,
    })
}

/// Classical fractional difference of order `r ≥ 0`, the inverse of
/// [`classical_fago`] at the same order.
pub fn classical_fdiff(series: &[f64], r: f64) -> Result<Vec<f64>> {
    non_empty(series)?;
    if !(r.is_finite() && r >= 0.0) {
        return Err(GreyError::InvalidOrder {
            value: r,
            reason: "difference order must be finite and >= 0",
        });
    }
    Ok(convolve(series, &difference_weights(series.len(), r)))
}

/// Coefficients of (1 − z)^r: w_0 = 1, w_j = w_{j−1} · (j − 1 − r) / j.
fn difference_weights(n: usize, r: f64) -> Vec<f64> {
    let mut w = Vec::with_capacity(n);
    let mut c = 1.0;
    for j in 0..n {
        if j > 0 {
            c *= (j as f64 - 1.0 - r) / j as f64;
        }
        w.push(c);
    }
    w
}

/// Order-`r` conformable difference of a conformable accumulation, for
/// k = 2..n. Element `k − 2` of the result holds index `k`.
pub fn hybrid_diff(xq: &AccumulatedSeries, r: FractionalOrder) -> Result<Vec<f64>> {
    if xq.len() < 2 {
        return Err(GreyError::TooShort {
            needed: 2,
            got: xq.len(),
        });
    }
    let r = unit_order(r)?;
    Ok(xq
        .values
        .windows(2)
        .enumerate()
        .map(|(i, w)| ((i + 2) as f64).powf(1.0 - r) * (w[1] - w[0]))
        .collect())
}

fn unit_order(alpha: FractionalOrder) -> Result<f64> {
    let a = alpha.get();
    if a <= 1.0 {
        Ok(a)
    } else {
        Err(GreyError::InvalidOrder {
            value: a,
            reason: "difference order must lie in (0, 1]",
        })
    }
}

fn running_sum(series: &[f64]) -> Vec<f64> {
    series
        .iter()
        .scan(0.0, |acc, &x| {
            *acc += x;
            Some(*acc)
        })
        .collect()
}

/// out(k) = Σ_{i≤k} weights[k − i] · series[i]
fn convolve(series: &[f64], weights: &[f64]) -> Vec<f64> {
    (0..series.len())
        .map(|k| (0..=k).map(|i| weights[k - i] * series[i]).sum())
        .collect()
}
