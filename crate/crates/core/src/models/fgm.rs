//! Fractional-accumulation grey model FGM(1,1): GM(1,1) mechanics on the
//! classical binomial accumulation of the series.

use crate::error::{GreyError, Result};
use crate::fracops::{classical_fago, classical_fdiff};
use crate::series::TimeSeries;

use super::ccfgm::conformable_time_response;
use super::lsq::{background_design, least_squares};
use super::{check_fit_len, FittedModel, ModelConfig, ModelKind, Params};

pub fn fgm_fit(x: &TimeSeries, order: f64) -> Result<FittedModel> {
    fit_with(x, &ModelConfig::fgm(order)?)
}

pub(super) fn fit_with(x: &TimeSeries, config: &ModelConfig) -> Result<FittedModel> {
    let config = config.validated()?;
    if config.kind != ModelKind::Fgm {
        return Err(GreyError::InvalidInput(format!(
            "fgm fit called with kind {}",
            config.kind
        )));
    }
    check_fit_len(x)?;

    let acc = classical_fago(x.values(), config.q)?;
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
    model.fitted_restored = fgm_predict(&model, x.len())?;
    Ok(model)
}

/// Discrete GM(1,1) time response on the accumulated scale, restored with
/// the classical fractional difference.
pub fn fgm_predict(model: &FittedModel, m: usize) -> Result<Vec<f64>> {
    if m == 0 {
        return Err(GreyError::InvalidInput(
            "prediction length must be >= 1".into(),
        ));
    }
    let params = model.grey_params()?.checked()?;
    let responses: Vec<f64> = (1..=m)
        .map(|k| conformable_time_response(params, model.initial_value, 1.0, k))
        .collect();
    classical_fdiff(&responses, model.config.q)
}
