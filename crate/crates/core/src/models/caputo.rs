//! Grey model with a Caputo derivative of order p ∈ (0, 1).
//!
//! Parameters are estimated on the order-(1−p) classical accumulation; the
//! restored series is the Mittag-Leffler solution
//! `x̂(k) = (x(1) − b/a)·E_p(−a·k^p) + b/a`, with `x̂(1) = x(1)`.

use crate::error::{GreyError, Result};
use crate::fracops::classical_fago;
use crate::series::TimeSeries;
use crate::specialfn::mittag_leffler;

use super::lsq::{background_design, least_squares};
use super::{check_fit_len, FittedModel, LinearGreyParams, ModelConfig, ModelKind, Params};

pub fn caputo_gm_fit(x: &TimeSeries, p: f64) -> Result<FittedModel> {
    fit_with(x, &ModelConfig::caputo_gm(p)?)
}

pub(super) fn fit_with(x: &TimeSeries, config: &ModelConfig) -> Result<FittedModel> {
    let config = config.validated()?;
    if config.kind != ModelKind::CaputoGm {
        return Err(GreyError::InvalidInput(format!(
            "caputo fit called with kind {}",
            config.kind
        )));
    }
    check_fit_len(x)?;

    let acc = classical_fago(x.values(), 1.0 - config.p)?;
    let diffs: Vec<f64> = acc.values.windows(2).map(|w| w[1] - w[0]).collect();
    let params =
        least_squares(&background_design(&acc.values, &diffs, config.lambda)?)?.checked()?;

    let mut model = FittedModel {
        config,
        params: Params::Grey(params),
        initial_value: x.values()[0],
        n_train: x.len(),
        fitted_restored: Vec::new(),
    };
    model.fitted_restored = caputo_gm_predict(&model, x.len())?;
    Ok(model)
}

/// Mittag-Leffler response at index `k` without the k = 1 anchor.
pub fn caputo_response(params: LinearGreyParams, initial: f64, p: f64, k: f64) -> Result<f64> {
    let LinearGreyParams { a, b } = params.checked()?;
    let steady = b / a;
    Ok((initial - steady) * mittag_leffler(p, -a * k.powf(p))? + steady)
}

pub fn caputo_gm_predict(model: &FittedModel, m: usize) -> Result<Vec<f64>> {
    if m == 0 {
        return Err(GreyError::InvalidInput(
            "prediction length must be >= 1".into(),
        ));
    }
    let params = model.grey_params()?;
    let mut out = Vec::with_capacity(m);
    out.push(model.initial_value);
    for k in 2..=m {
        out.push(caputo_response(
            params,
            model.initial_value,
            model.config.p,
            k as f64,
        )?);
    }
    Ok(out)
}
