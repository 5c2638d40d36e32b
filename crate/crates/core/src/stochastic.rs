//! Monte-Carlo estimate of the covariance of a random walk with
//! independent, equal-variance increments. Up to `sigma^2` it is `A_n`.
//!
//! Floating point is used here and nowhere else in the crate.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{usage, Error, Result};

pub const DEFAULT_CHUNKS: usize = 8;

/// Unit-variance, zero-mean increment law; scaled by `sigma` on use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Dist {
    /// `±1` with equal probability.
    Rademacher,
    /// Uniform on `[-sqrt(3), sqrt(3)]`.
    Uniform,
    Gaussian,
}

impl Dist {
    fn draw<R: Rng>(self, rng: &mut R) -> f64 {
        match self {
            Dist::Rademacher => {
                if rng.random::<bool>() {
                    1.0
                } else {
                    -1.0
                }
            }
            Dist::Uniform => {
                let half_width = 3f64.sqrt();
                rng.random_range(-half_width..half_width)
            }
            Dist::Gaussian => StandardNormal.sample(rng),
        }
    }
}

impl fmt::Display for Dist {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Dist::Rademacher => "rademacher",
            Dist::Uniform => "uniform",
            Dist::Gaussian => "gaussian",
        })
    }
}

impl FromStr for Dist {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "rademacher" => Ok(Dist::Rademacher),
            "uniform" => Ok(Dist::Uniform),
            "gaussian" => Ok(Dist::Gaussian),
            _ => usage(format!("unknown distribution {s:?}")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SimConfig {
    /// Process length.
    pub n: usize,
    /// Number of sample paths.
    pub m: usize,
    /// Increment standard deviation.
    pub sigma: f64,
    pub seed: u64,
    pub dist: Dist,
    /// Number of independent substreams; results are reproducible for a
    /// fixed `(seed, chunks)`.
    pub chunks: usize,
}

impl Default for SimConfig {
    fn default() -> Self {
        SimConfig {
            n: 8,
            m: 200_000,
            sigma: 1.0,
            seed: 42,
            dist: Dist::Gaussian,
            chunks: DEFAULT_CHUNKS,
        }
    }
}

impl SimConfig {
    pub fn validate(&self) -> Result<()> {
        if self.n < 1 {
            return usage("n must be at least 1");
        }
        if self.m < 2 {
            return usage("m must be at least 2");
        }
        if !(self.sigma.is_finite() && self.sigma > 0.0) {
            return usage(format!("sigma must be positive and finite, got {}", self.sigma));
        }
        if self.chunks < 1 {
            return usage("chunks must be at least 1");
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CovEstimate {
    /// `n x n` empirical covariance, row-major rows.
    pub matrix: Vec<Vec<f64>>,
    pub m: usize,
    pub config: SimConfig,
}

/// Simulates `m` paths `X_t = e_1 + ... + e_t` and returns
/// `(1/m) sum_paths X_i X_j`. Increments have mean exactly zero, so the
/// estimator is not centred.
pub fn simulate_covariance(cfg: &SimConfig) -> Result<CovEstimate> {
    cfg.validate()?;
    let n = cfg.n;
    let chunks = cfg.chunks.min(cfg.m);
    let base = cfg.m / chunks;
    let extra = cfg.m % chunks;

    let partials: Vec<Vec<f64>> = (0..chunks)
        .into_par_iter()
        .map(|chunk| {
            let paths = base + usize::from(chunk < extra);
            let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
            rng.set_stream(chunk as u64);
            accumulate_chunk(&mut rng, cfg, paths)
        })
        .collect();

    // merge in chunk order so the sum does not depend on scheduling
    let mut upper = vec![0.0; n * (n + 1) / 2];
    for part in &partials {
        for (acc, v) in upper.iter_mut().zip(part) {
            *acc += v;
        }
    }

    let inv_m = 1.0 / cfg.m as f64;
    // row r of the packed upper triangle starts at r*n - r(r-1)/2
    let packed = |i: usize, j: usize| {
        let (r, c) = (i.min(j), i.max(j));
        upper[r * n - r * r.saturating_sub(1) / 2 + (c - r)] * inv_m
    };
    let matrix = (0..n)
        .map(|i| (0..n).map(|j| packed(i, j)).collect())
        .collect();
    Ok(CovEstimate {
        matrix,
        m: cfg.m,
        config: cfg.clone(),
    })
}

/// Upper-triangle sums of `X_i X_j` over `paths` paths.
fn accumulate_chunk<R: Rng>(rng: &mut R, cfg: &SimConfig, paths: usize) -> Vec<f64> {
    let n = cfg.n;
    let mut upper = vec![0.0; n * (n + 1) / 2];
    let mut walk = vec![0.0; n];
    for _ in 0..paths {
        let mut x = 0.0;
        for w in walk.iter_mut() {
            x += cfg.sigma * cfg.dist.draw(rng);
            *w = x;
        }
        let mut idx = 0;
        for i in 0..n {
            let xi = walk[i];
            for xj in &walk[i..] {
                upper[idx] += xi * xj;
                idx += 1;
            }
        }
    }
    upper
}

/// `max_ij |cov_ij / sigma^2 - min(i, j)|`.
pub fn covariance_deviation(est: &CovEstimate) -> f64 {
    let scale = est.config.sigma * est.config.sigma;
    est.matrix
        .iter()
        .enumerate()
        .flat_map(|(i, row)| {
            row.iter()
                .enumerate()
                .map(move |(j, v)| (v / scale - (i.min(j) + 1) as f64).abs())
        })
        .fold(0.0, f64::max)
}
