//! Seeded Monte Carlo estimate of `C(G)` as a mean waiting time.
//!
//! The generator is `ChaCha8Rng::seed_from_u64(seed)` from `rand_chacha`,
//! and elements are drawn as uniform indices into the element table. Each
//! trial keeps the set of sieves that still contain every sample drawn so
//! far and stops when that set becomes empty.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::bitset::Bitset;
use crate::error::{Error, Result};
use crate::exact::SieveSystem;

/// Hard cap on draws per trial.
pub const TRIAL_DRAW_CAP: u64 = 1_000_000;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct McReport {
    pub trials: u64,
    pub mean: f64,
    pub variance: f64,
    pub ci95: (f64, f64),
    pub seed: u64,
    pub max_waiting_time: u64,
}

impl McReport {
    /// `√(variance / trials)`
    pub fn std_error(&self) -> f64 {
        (self.variance / self.trials as f64).sqrt()
    }
}

/// Runs one waiting-time trial, returning the number of draws.
pub fn waiting_time<R: Rng>(s: &SieveSystem, rng: &mut R) -> Result<u64> {
    let n = s.order();
    if n == 1 || s.is_empty() {
        return Ok(0);
    }
    let mut alive = Bitset::full(s.len());
    let mut draws = 0u64;
    while !alive.is_empty() {
        if draws == TRIAL_DRAW_CAP {
            return Err(Error::TrialCapExceeded(TRIAL_DRAW_CAP));
        }
        let e = rng.random_range(0..n);
        alive.intersect_with(s.signature_of(e));
        draws += 1;
    }
    Ok(draws)
}

pub fn mc_estimate(s: &SieveSystem, trials: u64, seed: u64) -> Result<McReport> {
    assert!(trials >= 1, "at least one trial is required");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut sum = 0f64;
    let mut sum_sq = 0f64;
    let mut max_waiting_time = 0;
    for _ in 0..trials {
        let t = waiting_time(s, &mut rng)?;
        max_waiting_time = max_waiting_time.max(t);
        let t = t as f64;
        sum += t;
        sum_sq += t * t;
    }
    let n = trials as f64;
    let mean = sum / n;
    let variance = if trials > 1 {
        ((sum_sq - n * mean * mean) / (n - 1.0)).max(0.0)
    } else {
        0.0
    };
    let half = 1.96 * (variance / n).sqrt();
    Ok(McReport {
        trials,
        mean,
        variance,
        ci95: (mean - half, mean + half),
        seed,
        max_waiting_time,
    })
}
