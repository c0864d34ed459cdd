//! Continuous conformable fractional grey model and its r = q = 1 special
//! case, the classical GM(1,1).
//!
//! The whitening equation `T_r x_q(t) + a·x_q(t) = b` reduces, through
//! `T_r f(t) = t^{1−r} f'(t)`, to a separable ODE with the closed form
//!
//! ```text
//! x̂_q(k) = [ b + (a·x(1) − b) · exp(a·(1 − k^r) / r) ] / a
//! ```
//!
//! anchored so that `x̂_q(1) = x(1)`. Parameters come from the discretized
//! equation `k^{1−r}·(x_q(k) − x_q(k−1)) + a·z(k) = b` with the trapezoid
//! background value `z(k)`, and fitted values are restored from the time
//! response with the conformable difference of order q.

use crate::error::{GreyError, Result};
use crate::fracops::{cfa, cfd, hybrid_diff};
use crate::series::{FractionalOrder, TimeSeries};

use super::lsq::{build_design, least_squares};
use super::{check_fit_len, FittedModel, LinearGreyParams, ModelConfig, ModelKind, Params};

/// Closed-form conformable time response at index `k` (k ≥ 1).
pub fn conformable_time_response(params: LinearGreyParams, initial: f64, r: f64, k: usize) -> f64 {
    if k <= 1 {
        return initial;
    }
    let LinearGreyParams { a, b } = params;
    let exponent = a * (1.0 - (k as f64).powf(r)) / r;
    (b + (a * initial - b) * exponent.exp()) / a
}

pub fn ccfgm_fit(x: &TimeSeries, config: &ModelConfig) -> Result<FittedModel> {
    let config = config.validated()?;
    if !matches!(config.kind, ModelKind::Ccfgm | ModelKind::Gm11) {
        return Err(GreyError::InvalidInput(format!(
            "ccfgm_fit called with kind {}",
            config.kind
        )));
    }
    check_fit_len(x)?;

    let xq = cfa(x.values(), FractionalOrder::unit(config.q)?)?;
    let xqr = hybrid_diff(&xq, FractionalOrder::unit(config.r)?)?;
    let params = least_squares(&build_design(&xq, &xqr, config.lambda)?)?.checked()?;

    let mut model = FittedModel {
        config,
        params: Params::Grey(params),
        initial_value: x.values()[0],
        n_train: x.len(),
        fitted_restored: Vec::new(),
    };
    model.fitted_restored = ccfgm_predict(&model, x.len())?;
    Ok(model)
}

/// Time response `x̂_q(k)` of a fitted conformable model.
pub fn ccfgm_time_response(model: &FittedModel, k: usize) -> Result<f64> {
    if k == 0 {
        return Err(GreyError::InvalidInput("time index starts at 1".into()));
    }
    let params = model.grey_params()?.checked()?;
    Ok(conformable_time_response(
        params,
        model.initial_value,
        model.config.r,
        k,
    ))
}

/// Restored values x̂(1..=m).
pub fn ccfgm_predict(model: &FittedModel, m: usize) -> Result<Vec<f64>> {
    if m == 0 {
        return Err(GreyError::InvalidInput(
            "prediction length must be >= 1".into(),
        ));
    }
    let responses = (1..=m)
        .map(|k| ccfgm_time_response(model, k))
        .collect::<Result<Vec<_>>>()?;
    cfd(&responses, FractionalOrder::unit(model.config.q)?)
}

/// GM(1,1): the conformable model at r = q = 1.
pub fn gm11_fit(x: &TimeSeries) -> Result<FittedModel> {
    ccfgm_fit(x, &ModelConfig::gm11())
}

pub fn gm11_predict(model: &FittedModel, m: usize) -> Result<Vec<f64>> {
    ccfgm_predict(model, m)
}
