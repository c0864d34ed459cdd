//! Quadratic regression on the time index, PR(2).

use nalgebra::{DMatrix, DVector};

use crate::error::{GreyError, Result};
use crate::series::TimeSeries;

use super::{FittedModel, ModelConfig, Params, QuadraticCoeffs};

pub fn pr2_fit(x: &TimeSeries) -> Result<FittedModel> {
    let n = x.len();
    if n < 3 {
        return Err(GreyError::TooShort { needed: 3, got: n });
    }
    let design = DMatrix::from_fn(n, 3, |i, j| ((i + 1) as f64).powi(j as i32));
    let y = DVector::from_column_slice(x.values());
    let coeffs = design
        .svd(true, true)
        .solve(&y, 1e-12)
        .map_err(|e| GreyError::InvalidInput(format!("quadratic fit failed: {e}")))?;
    let coeffs = QuadraticCoeffs {
        c0: coeffs[0],
        c1: coeffs[1],
        c2: coeffs[2],
    };
    Ok(FittedModel {
        config: ModelConfig::pr2(),
        params: Params::Quadratic(coeffs),
        initial_value: x.values()[0],
        n_train: n,
        fitted_restored: (1..=n).map(|t| coeffs.eval(t as f64)).collect(),
    })
}

pub fn pr2_predict(model: &FittedModel, m: usize) -> Result<Vec<f64>> {
    match model.params {
        Params::Quadratic(c) => Ok((1..=m).map(|t| c.eval(t as f64)).collect()),
        Params::Grey(_) => Err(GreyError::InvalidInput("not a quadratic model".into())),
    }
}
