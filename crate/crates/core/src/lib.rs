//! Small-sample grey forecasting with conformable fractional accumulation.
//!
//! The centre of the crate is the continuous conformable fractional grey
//! model CCFGM(1,1): the series is accumulated with a conformable operator
//! of order `q`, a first-order whitening equation with a conformable
//! derivative of order `r` is fitted by least squares, and its closed-form
//! time response is differenced back to the original scale. GM(1,1), the
//! binomial-accumulation FGM(1,1), a Caputo-derivative grey model and a
//! quadratic regression are available for comparison, and the orders can be
//! tuned with a seeded whale optimizer.
//!
//! ```
//! use greycast::dataio::bundled_dataset;
//! use greycast::metrics::evaluate;
//! use greycast::models::{fit, ModelConfig};
//!
//! let data = bundled_dataset("energy")?;
//! let (train, holdout) = data.split()?;
//! let model = fit(&train, &ModelConfig::ccfgm(1.0, 0.94)?)?;
//! let report = evaluate(&train, &model, holdout.as_ref(), 0)?;
//! assert!(report.fit_mape < 1.5);
//! # Ok::<(), greycast::GreyError>(())
//! ```
//!
//! A longer walkthrough lives in the `book/` directory of the repository;
//! its Rust snippets are compiled and run as doc-tests of this crate.

pub mod bench;
pub mod dataio;
pub mod error;
pub mod fracops;
pub mod metrics;
pub mod models;
pub mod optimize;
pub mod series;
pub mod specialfn;

pub use error::{GreyError, Result};
pub use series::{FractionalOrder, TimeSeries};

// Runs the guide's code listings as doc-tests.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/accumulation.md")]
    mod accumulation {}
    #[doc = include_str!("../../../book/src/ccfgm.md")]
    mod ccfgm {}
    #[doc = include_str!("../../../book/src/comparators.md")]
    mod comparators {}
    #[doc = include_str!("../../../book/src/special-functions.md")]
    mod special_functions {}
    #[doc = include_str!("../../../book/src/tuning.md")]
    mod tuning {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
    #[doc = include_str!("../../../README.md")]
    mod readme {}
}
