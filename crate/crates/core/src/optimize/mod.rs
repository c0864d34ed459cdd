//! Order tuning: minimize the in-sample MAPE of a grey model over its
//! fractional orders with the whale optimizer.

mod woa;

use serde::Serialize;

use crate::error::{GreyError, Result};
use crate::metrics::{mape, MapeRange};
use crate::models::{fit, ModelConfig, ModelKind, Orders};
use crate::series::TimeSeries;

pub use woa::{woa_minimize, WoaConfig, WoaOutcome};

/// Score given to orders whose fit fails, keeping the objective total.
pub const PENALTY: f64 = 1e9;

/// Lower edge of every order search interval; the conformable response
/// divides by r.
pub const ORDER_FLOOR: f64 = 0.01;

/// Upper edge for the Caputo order, which must stay below 1.
pub const CAPUTO_CEILING: f64 = 0.99;

#[derive(Debug, Clone, PartialEq)]
pub struct TuneResult {
    pub config: ModelConfig,
    /// Fit MAPE (%) at the returned orders.
    pub objective: f64,
    pub evaluations: usize,
    pub seed: u64,
}

impl TuneResult {
    pub fn r_star(&self) -> f64 {
        self.config.r
    }

    pub fn q_star(&self) -> f64 {
        self.config.q
    }

    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct Line<'a> {
            model: &'a str,
            #[serde(flatten)]
            orders: Orders,
            objective: f64,
            evaluations: usize,
            seed: u64,
        }
        serde_json::to_string(&Line {
            model: self.config.kind.name(),
            orders: self.config.orders(),
            objective: self.objective,
            evaluations: self.evaluations,
            seed: self.seed,
        })
        .expect("plain struct serializes")
    }
}

/// Default search box for a tunable kind.
pub fn default_bounds(kind: ModelKind) -> Result<Vec<(f64, f64)>> {
    match kind {
        ModelKind::Ccfgm => Ok(vec![(ORDER_FLOOR, 1.0); 2]),
        ModelKind::Fgm => Ok(vec![(ORDER_FLOOR, 1.0)]),
        ModelKind::CaputoGm => Ok(vec![(ORDER_FLOOR, CAPUTO_CEILING)]),
        other => Err(GreyError::InvalidInput(format!(
            "{other} has no orders to tune"
        ))),
    }
}

fn config_at(kind: ModelKind, point: &[f64], lambda: f64) -> Result<ModelConfig> {
    let config = match kind {
        ModelKind::Ccfgm => ModelConfig::ccfgm(point[0], point[1])?,
        ModelKind::Fgm => ModelConfig::fgm(point[0])?,
        ModelKind::CaputoGm => ModelConfig::caputo_gm(point[0])?,
        other => {
            return Err(GreyError::InvalidInput(format!(
                "{other} has no orders to tune"
            )))
        }
    };
    config.with_lambda(lambda)
}

/// Fit MAPE (first point excluded) of `kind` at the orders in `point`.
pub fn fit_objective(
    train: &TimeSeries,
    kind: ModelKind,
    point: &[f64],
    lambda: f64,
) -> Result<f64> {
    let model = fit(train, &config_at(kind, point, lambda)?)?;
    mape(train.values(), &model.fitted_restored, MapeRange::SkipFirst)
}

/// Tunes the orders of `kind` on the first `train_n` points of `x`.
///
/// CCFGM searches (r, q), FGM its accumulation order and the Caputo model p.
/// Empty `woa.bounds` selects [`default_bounds`].
pub fn tune_orders(
    x: &TimeSeries,
    kind: ModelKind,
    train_n: usize,
    woa: &WoaConfig,
) -> Result<TuneResult> {
    tune_orders_with_lambda(x, kind, train_n, woa, 0.5)
}

pub fn tune_orders_with_lambda(
    x: &TimeSeries,
    kind: ModelKind,
    train_n: usize,
    woa: &WoaConfig,
    lambda: f64,
) -> Result<TuneResult> {
    if train_n > x.len() {
        return Err(GreyError::InvalidInput(format!(
            "train size {train_n} exceeds series length {}",
            x.len()
        )));
    }
    if train_n < crate::series::MIN_FIT_LEN {
        return Err(GreyError::TooShort {
            needed: crate::series::MIN_FIT_LEN,
            got: train_n,
        });
    }
    let (train, _) = x.split(train_n)?;
    let defaults = default_bounds(kind)?;
    let mut config = woa.clone();
    if config.bounds.is_empty() {
        config.bounds = defaults;
    } else if config.bounds.len() != defaults.len() {
        return Err(GreyError::InvalidInput(format!(
            "{kind} tunes {} order(s), got {} bounds",
            defaults.len(),
            config.bounds.len()
        )));
    }

    let outcome = woa_minimize(
        |point| match fit_objective(&train, kind, point, lambda) {
            Ok(v) if v.is_finite() => v,
            _ => PENALTY,
        },
        &config,
    )?;
    if outcome.value >= PENALTY {
        return Err(GreyError::UnusableObjective);
    }
    Ok(TuneResult {
        config: config_at(kind, &outcome.point, lambda)?,
        objective: outcome.value,
        evaluations: outcome.evaluations,
        seed: config.seed,
    })
}
