//! Design matrix assembly and the two-parameter least-squares solve.

use crate::error::{GreyError, Result};
use crate::fracops::AccumulatedSeries;

use super::LinearGreyParams;

/// Largest condition number (of the column-equilibrated normal matrix)
/// accepted before a system is declared singular.
pub const MAX_CONDITION: f64 = 1e12;

/// Linear system `Y ≈ B · [a, b]ᵀ` whose second column of `B` is all ones.
#[derive(Debug, Clone, PartialEq)]
pub struct DesignSystem {
    rows: Vec<[f64; 2]>,
    y: Vec<f64>,
}

impl DesignSystem {
    pub fn new(rows: Vec<[f64; 2]>, y: Vec<f64>) -> Result<Self> {
        if rows.len() != y.len() {
            return Err(GreyError::LengthMismatch {
                left: rows.len(),
                right: y.len(),
            });
        }
        if rows.len() < 2 {
            return Err(GreyError::TooShort {
                needed: 2,
                got: rows.len(),
            });
        }
        if rows.iter().any(|r| r[1] != 1.0) {
            return Err(GreyError::InvalidInput(
                "second design column must be all ones".into(),
            ));
        }
        if rows.iter().any(|r| !r[0].is_finite()) || y.iter().any(|v| !v.is_finite()) {
            return Err(GreyError::InvalidInput("non-finite design entry".into()));
        }
        Ok(Self { rows, y })
    }

    pub fn rows(&self) -> &[[f64; 2]] {
        &self.rows
    }

    pub fn y(&self) -> &[f64] {
        &self.y
    }

    /// Sum of squared residuals `εᵀε` at the given parameters.
    pub fn residual_sum(&self, params: LinearGreyParams) -> f64 {
        self.rows
            .iter()
            .zip(&self.y)
            .map(|(row, y)| {
                let e = y - (row[0] * params.a + row[1] * params.b);
                e * e
            })
            .sum()
    }
}

/// Builds the grey design system from an accumulated series `xq` (k = 1..n)
/// and the difference values `xqr` (k = 2..n).
///
/// Row `k − 1` is `[−(λ·xq(k−1) + (1−λ)·xq(k)), 1]` with target `xqr(k)`.
pub fn build_design(xq: &AccumulatedSeries, xqr: &[f64], lambda: f64) -> Result<DesignSystem> {
    background_design(&xq.values, xqr, lambda)
}

pub(crate) fn background_design(acc: &[f64], targets: &[f64], lambda: f64) -> Result<DesignSystem> {
    if !(0.0..=1.0).contains(&lambda) {
        return Err(GreyError::InvalidInput(format!(
            "background weight {lambda} outside [0, 1]"
        )));
    }
    if acc.len() < 2 {
        return Err(GreyError::TooShort {
            needed: 2,
            got: acc.len(),
        });
    }
    if targets.len() + 1 != acc.len() {
        return Err(GreyError::LengthMismatch {
            left: acc.len() - 1,
            right: targets.len(),
        });
    }
    let rows = acc
        .windows(2)
        .map(|w| [-(lambda * w[0] + (1.0 - lambda) * w[1]), 1.0])
        .collect();
    DesignSystem::new(rows, targets.to_vec())
}

/// Ordinary least squares for `(a, b)`.
///
/// Because the second column is constant this is a simple regression of `Y`
/// on the first column, solved in centered form.
pub fn least_squares(sys: &DesignSystem) -> Result<LinearGreyParams> {
    let m = sys.rows.len() as f64;
    let col: Vec<f64> = sys.rows.iter().map(|r| r[0]).collect();

    let norm = col.iter().map(|v| v * v).sum::<f64>().sqrt();
    let condition = if norm == 0.0 {
        f64::INFINITY
    } else {
        // BᵀB with unit-norm columns is [[1, c], [c, 1]]
        let c = (col.iter().sum::<f64>() / (norm * m.sqrt())).abs().min(1.0);
        (1.0 + c) / (1.0 - c)
    };

    let mean_col = col.iter().sum::<f64>() / m;
    let mean_y = sys.y.iter().sum::<f64>() / m;
    let (mut sxx, mut sxy) = (0.0, 0.0);
    for (c, y) in col.iter().zip(&sys.y) {
        let dc = c - mean_col;
        sxx += dc * dc;
        sxy += dc * (y - mean_y);
    }
    if condition.is_nan() || condition > MAX_CONDITION || sxx == 0.0 {
        return Err(GreyError::Singular { condition });
    }
    let a = sxy / sxx;
    let b = mean_y - a * mean_col;
    Ok(LinearGreyParams { a, b })
}
