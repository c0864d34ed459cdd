//! Grey forecasting models and the quadratic regression baseline behind one
//! fit/predict interface.
//!
//! Every model is fitted on a [`TimeSeries`] whose points are indexed
//! k = 1..n; forecasts continue the same index (k = n + 1, n + 2, ...).
//!
//! ```
//! use greycast::models::{fit, ModelConfig};
//! use greycast::TimeSeries;
//!
//! let x = TimeSeries::from_values(2005, vec![27573.0, 27765.0, 30814.0, 31898.0, 33843.0, 36470.0])?;
//! let model = fit(&x, &ModelConfig::ccfgm(0.9, 0.8)?)?;
//! assert_eq!(model.fitted_restored[0], 27573.0);
//! let next_two = &model.predict(8)?[6..];
//! assert_eq!(next_two.len(), 2);
//! # Ok::<(), greycast::GreyError>(())
//! ```

mod caputo;
mod ccfgm;
mod fgm;
mod lsq;
mod pr2;

use serde::{Deserialize, Serialize};

use crate::error::{GreyError, Result};
use crate::series::{TimeSeries, MIN_FIT_LEN};

pub use caputo::{caputo_gm_fit, caputo_gm_predict, caputo_response};
pub use ccfgm::{
    ccfgm_fit, ccfgm_predict, ccfgm_time_response, conformable_time_response, gm11_fit,
    gm11_predict,
};
pub use fgm::{fgm_fit, fgm_predict};
pub use lsq::{build_design, least_squares, DesignSystem, MAX_CONDITION};
pub use pr2::{pr2_fit, pr2_predict};

/// Smallest |a| accepted from a fit; the time responses divide by `a`.
pub const DEGENERACY_EPSILON: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ModelKind {
    Ccfgm,
    Gm11,
    Fgm,
    CaputoGm,
    Pr2,
}

impl ModelKind {
    pub const ALL: [ModelKind; 5] = [
        ModelKind::Ccfgm,
        ModelKind::Gm11,
        ModelKind::Fgm,
        ModelKind::CaputoGm,
        ModelKind::Pr2,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ModelKind::Ccfgm => "ccfgm",
            ModelKind::Gm11 => "gm11",
            ModelKind::Fgm => "fgm",
            ModelKind::CaputoGm => "caputo_gm",
            ModelKind::Pr2 => "pr2",
        }
    }

    pub fn is_grey(self) -> bool {
        self != ModelKind::Pr2
    }
}

impl std::fmt::Display for ModelKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for ModelKind {
    type Err = GreyError;

    fn from_str(s: &str) -> Result<Self> {
        ModelKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| GreyError::InvalidInput(format!("unknown model kind `{s}`")))
    }
}

/// Model family plus its orders.
///
/// * `r` – conformable difference order (CCFGM).
/// * `q` – accumulation order (CCFGM, and the single order of FGM).
/// * `p` – Caputo derivative order (Caputo GM only).
/// * `lambda` – weight of the earlier point in the background value.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ModelConfig {
    pub kind: ModelKind,
    pub r: f64,
    pub q: f64,
    pub p: f64,
    pub lambda: f64,
}

impl ModelConfig {
    const fn base(kind: ModelKind) -> Self {
        Self {
            kind,
            r: 1.0,
            q: 1.0,
            p: 1.0,
            lambda: 0.5,
        }
    }

    pub fn ccfgm(r: f64, q: f64) -> Result<Self> {
        Self {
            r,
            q,
            ..Self::base(ModelKind::Ccfgm)
        }
        .validated()
    }

    pub fn gm11() -> Self {
        Self::base(ModelKind::Gm11)
    }

    pub fn fgm(order: f64) -> Result<Self> {
        Self {
            q: order,
            ..Self::base(ModelKind::Fgm)
        }
        .validated()
    }

    pub fn caputo_gm(p: f64) -> Result<Self> {
        Self {
            p,
            ..Self::base(ModelKind::CaputoGm)
        }
        .validated()
    }

    pub fn pr2() -> Self {
        Self::base(ModelKind::Pr2)
    }

    pub fn with_lambda(self, lambda: f64) -> Result<Self> {
        Self { lambda, ..self }.validated()
    }

    pub fn validated(self) -> Result<Self> {
        let unit = |value: f64, name: &'static str| {
            if value.is_finite() && value > 0.0 && value <= 1.0 {
                Ok(())
            } else {
                Err(GreyError::InvalidOrder {
                    value,
                    reason: name,
                })
            }
        };
        match self.kind {
            ModelKind::Ccfgm => {
                unit(self.r, "r must lie in (0, 1]")?;
                unit(self.q, "q must lie in (0, 1]")?;
            }
            ModelKind::Gm11 => {
                if self.r != 1.0 || self.q != 1.0 {
                    return Err(GreyError::InvalidInput(
                        "gm11 has fixed orders r = q = 1".into(),
                    ));
                }
            }
            ModelKind::Fgm => unit(self.q, "fgm order must lie in (0, 1]")?,
            ModelKind::CaputoGm => {
                if !(self.p > 0.0 && self.p < 1.0) {
                    return Err(GreyError::InvalidOrder {
                        value: self.p,
                        reason: "p must lie in (0, 1)",
                    });
                }
            }
            ModelKind::Pr2 => {}
        }
        if !(0.0..=1.0).contains(&self.lambda) {
            return Err(GreyError::InvalidInput(format!(
                "background weight {} outside [0, 1]",
                self.lambda
            )));
        }
        Ok(self)
    }

    /// The orders that matter for this kind, for reporting.
    pub fn orders(&self) -> Orders {
        match self.kind {
            ModelKind::Ccfgm | ModelKind::Gm11 => Orders {
                r: Some(self.r),
                q: Some(self.q),
                p: None,
            },
            ModelKind::Fgm => Orders {
                r: None,
                q: Some(self.q),
                p: None,
            },
            ModelKind::CaputoGm => Orders {
                r: None,
                q: None,
                p: Some(self.p),
            },
            ModelKind::Pr2 => Orders::default(),
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize, Deserialize)]
pub struct Orders {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub q: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p: Option<f64>,
}

/// Development coefficient `a` and grey input `b`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LinearGreyParams {
    pub a: f64,
    pub b: f64,
}

impl LinearGreyParams {
    pub(crate) fn checked(self) -> Result<Self> {
        if !(self.a.is_finite() && self.b.is_finite()) || self.a.abs() <= DEGENERACY_EPSILON {
            Err(GreyError::Degenerate { a: self.a })
        } else {
            Ok(self)
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuadraticCoeffs {
    pub c0: f64,
    pub c1: f64,
    pub c2: f64,
}

impl QuadraticCoeffs {
    pub fn eval(&self, t: f64) -> f64 {
        self.c0 + t * (self.c1 + t * self.c2)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Params {
    Grey(LinearGreyParams),
    Quadratic(QuadraticCoeffs),
}

impl Params {
    pub fn grey(&self) -> Option<LinearGreyParams> {
        match self {
            Params::Grey(p) => Some(*p),
            Params::Quadratic(_) => None,
        }
    }
}

/// A fitted model. Immutable once built.
#[derive(Debug, Clone, PartialEq)]
pub struct FittedModel {
    pub config: ModelConfig,
    pub params: Params,
    /// First observation x(1), the anchor of every grey time response.
    pub initial_value: f64,
    pub n_train: usize,
    /// Restored in-sample values for k = 1..n_train.
    pub fitted_restored: Vec<f64>,
}

impl FittedModel {
    /// Assembles a grey model from known parameters, for simulation.
    /// `fitted_restored` is filled by predicting `n_train` points.
    pub fn from_grey_params(
        config: ModelConfig,
        params: LinearGreyParams,
        initial_value: f64,
        n_train: usize,
    ) -> Result<Self> {
        let config = config.validated()?;
        if !config.kind.is_grey() {
            return Err(GreyError::InvalidInput("pr2 has no grey parameters".into()));
        }
        let mut model = FittedModel {
            config,
            params: Params::Grey(params.checked()?),
            initial_value,
            n_train,
            fitted_restored: Vec::new(),
        };
        model.fitted_restored = model.predict(n_train)?;
        Ok(model)
    }

    pub fn kind(&self) -> ModelKind {
        self.config.kind
    }

    pub(crate) fn grey_params(&self) -> Result<LinearGreyParams> {
        self.params.grey().ok_or_else(|| {
            GreyError::InvalidInput(format!("{} has no grey parameters", self.kind()))
        })
    }

    /// Restored values for k = 1..m; entries past `n_train` are forecasts.
    pub fn predict(&self, m: usize) -> Result<Vec<f64>> {
        if m == 0 {
            return Err(GreyError::InvalidInput(
                "prediction length must be >= 1".into(),
            ));
        }
        match self.kind() {
            ModelKind::Ccfgm | ModelKind::Gm11 => ccfgm_predict(self, m),
            ModelKind::Fgm => fgm_predict(self, m),
            ModelKind::CaputoGm => caputo_gm_predict(self, m),
            ModelKind::Pr2 => pr2_predict(self, m),
        }
    }
}

/// Fits any model kind.
pub fn fit(x: &TimeSeries, config: &ModelConfig) -> Result<FittedModel> {
    let config = config.validated()?;
    match config.kind {
        ModelKind::Ccfgm | ModelKind::Gm11 => ccfgm_fit(x, &config),
        ModelKind::Fgm => fgm::fit_with(x, &config),
        ModelKind::CaputoGm => caputo::fit_with(x, &config),
        ModelKind::Pr2 => pr2_fit(x),
    }
}

pub(crate) fn check_fit_len(x: &TimeSeries) -> Result<()> {
    if x.len() < MIN_FIT_LEN {
        Err(GreyError::TooShort {
            needed: MIN_FIT_LEN,
            got: x.len(),
        })
    } else {
        Ok(())
    }
}
