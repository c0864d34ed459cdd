//! Whale optimization algorithm for bounded continuous minimization.
//!
//! Each iteration first scores every agent (clamped into the box) and
//! updates the leader, then moves every agent by one of three rules:
//!
//! * encircling the leader, `X ← X* − A·|C·X* − X|`, when `p < 0.5` and `|A| < 1`;
//! * searching around a random agent, `X ← Xr − A·|C·Xr − X|`, when `p < 0.5` and `|A| ≥ 1`;
//! * a logarithmic spiral, `X ← |X* − X|·e^{bl}·cos(2πl) + X*`, otherwise,
//!
//! with `A = 2a·r₁ − a`, `C = 2r₂`, `l ∈ [−1, 1]` and `a` falling linearly
//! from 2 to 0 over the run. Random draws come from a seeded ChaCha stream in
//! a fixed order, so a seed fully determines the run.

use std::f64::consts::PI;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{GreyError, Result};

#[derive(Debug, Clone, PartialEq)]
pub struct WoaConfig {
    pub agents: usize,
    pub iterations: usize,
    pub seed: u64,
    /// Closed interval per dimension.
    pub bounds: Vec<(f64, f64)>,
    pub spiral_b: f64,
}

impl WoaConfig {
    pub fn new(bounds: Vec<(f64, f64)>, seed: u64) -> Self {
        Self {
            agents: 30,
            iterations: 100,
            seed,
            bounds,
            spiral_b: 1.0,
        }
    }

    fn validate(&self) -> Result<()> {
        if self.agents < 2 {
            return Err(GreyError::InvalidInput(
                "WOA needs at least 2 agents".into(),
            ));
        }
        if self.iterations == 0 {
            return Err(GreyError::InvalidInput(
                "WOA needs at least 1 iteration".into(),
            ));
        }
        if self.bounds.is_empty() {
            return Err(GreyError::InvalidInput(
                "WOA needs at least one dimension".into(),
            ));
        }
        if self
            .bounds
            .iter()
            .any(|&(lo, hi)| !(lo.is_finite() && hi.is_finite() && lo < hi))
        {
            return Err(GreyError::InvalidInput(
                "WOA bounds must be finite with lo < hi".into(),
            ));
        }
        if !self.spiral_b.is_finite() {
            return Err(GreyError::InvalidInput(
                "spiral constant must be finite".into(),
            ));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct WoaOutcome {
    pub point: Vec<f64>,
    pub value: f64,
    pub evaluations: usize,
    /// Best value after each iteration.
    pub history: Vec<f64>,
}

/// Minimizes `objective` over the configured box.
///
/// Non-finite objective values count as +∞. Fails only when every probe was
/// non-finite.
pub fn woa_minimize<F>(mut objective: F, config: &WoaConfig) -> Result<WoaOutcome>
where
    F: FnMut(&[f64]) -> f64,
{
    config.validate()?;
    let dim = config.bounds.len();
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);

    let mut agents: Vec<Vec<f64>> = (0..config.agents)
        .map(|_| {
            config
                .bounds
                .iter()
                .map(|&(lo, hi)| lo + rng.random::<f64>() * (hi - lo))
                .collect()
        })
        .collect();

    let mut best_point: Option<Vec<f64>> = None;
    let mut best_value = f64::INFINITY;
    let mut evaluations = 0;
    let mut history = Vec::with_capacity(config.iterations);

    for t in 0..config.iterations {
        for agent in agents.iter_mut() {
            clamp(agent, &config.bounds);
            let v = objective(agent);
            evaluations += 1;
            let v = if v.is_finite() { v } else { f64::INFINITY };
            if v < best_value || best_point.is_none() {
                best_value = v;
                best_point = Some(agent.clone());
            }
        }
        history.push(best_value);

        let leader = best_point.clone().expect("at least one agent scored");
        let a = 2.0 - 2.0 * t as f64 / config.iterations as f64;
        for i in 0..agents.len() {
            let r1: f64 = rng.random();
            let r2: f64 = rng.random();
            let p: f64 = rng.random();
            let l: f64 = rng.random_range(-1.0..=1.0);
            let partner = rng.random_range(0..agents.len());
            let big_a = 2.0 * a * r1 - a;
            let big_c = 2.0 * r2;

            let next: Vec<f64> = if p < 0.5 {
                let target = if big_a.abs() < 1.0 {
                    &leader
                } else {
                    &agents[partner]
                };
                (0..dim)
                    .map(|d| {
                        let dist = (big_c * target[d] - agents[i][d]).abs();
                        target[d] - big_a * dist
                    })
                    .collect()
            } else {
                let spiral = (config.spiral_b * l).exp() * (2.0 * PI * l).cos();
                (0..dim)
                    .map(|d| (leader[d] - agents[i][d]).abs() * spiral + leader[d])
                    .collect()
            };
            agents[i] = next;
        }
    }

    if !best_value.is_finite() {
        return Err(GreyError::UnusableObjective);
    }
    Ok(WoaOutcome {
        point: best_point.expect("scored"),
        value: best_value,
        evaluations,
        history,
    })
}

fn clamp(point: &mut [f64], bounds: &[(f64, f64)]) {
    for (x, &(lo, hi)) in point.iter_mut().zip(bounds) {
        *x = if x.is_nan() { lo } else { x.clamp(lo, hi) };
    }
}
