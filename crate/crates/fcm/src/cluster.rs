//! The fuzzy c-means core: alternating membership/center updates driven by
//! a seeded generator, with multiple restarts keeping the best objective.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::FcmError;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FitOptions {
    pub clusters: usize,
    pub fuzzifier: f64,
    pub tolerance: f64,
    pub max_iter: usize,
    pub seed: u64,
    pub restarts: usize,
}

impl Default for FitOptions {
    fn default() -> Self {
        FitOptions {
            clusters: 3,
            fuzzifier: 2.0,
            tolerance: 1e-9,
            max_iter: 300,
            seed: 1,
            restarts: 20,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClusterModel {
    pub centers: Vec<Vec<f64>>,
    /// n x C membership matrix; every row sums to 1.
    pub memberships: Vec<Vec<f64>>,
    pub fuzzifier: f64,
    pub objective: f64,
    pub iterations: usize,
    pub seed: u64,
    pub converged: bool,
    /// Objective value after every iteration, non-increasing.
    pub objective_history: Vec<f64>,
}

impl ClusterModel {
    /// Hard assignment by largest membership.
    pub fn hard_assignments(&self) -> Vec<usize> {
        self.memberships
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .max_by(|a, b| a.1.partial_cmp(b.1).unwrap())
                    .map(|(i, _)| i)
                    .unwrap()
            })
            .collect()
    }
}

fn validate(data: &[Vec<f64>], opts: &FitOptions) -> Result<(), FcmError> {
    if opts.clusters < 2 {
        return Err(FcmError::BadOptions("need at least 2 clusters".into()));
    }
    if data.len() < opts.clusters {
        return Err(FcmError::DegenerateData(format!(
            "{} rows cannot form {} clusters",
            data.len(),
            opts.clusters
        )));
    }
    if opts.fuzzifier <= 1.0 {
        return Err(FcmError::BadOptions("fuzzifier must exceed 1".into()));
    }
    let k = data[0].len();
    if k == 0 || data.iter().any(|r| r.len() != k) {
        return Err(FcmError::DegenerateData("empty or ragged rows".into()));
    }
    Ok(())
}

/// One run from the given seed.
pub fn fit(data: &[Vec<f64>], opts: &FitOptions) -> Result<ClusterModel, FcmError> {
    validate(data, opts)?;
    let n = data.len();
    let c = opts.clusters;
    let k = data[0].len();
    let m = opts.fuzzifier;
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);

    // random memberships, normalized per row
    let mut u: Vec<Vec<f64>> = (0..n)
        .map(|_| {
            let row: Vec<f64> = (0..c).map(|_| rng.gen_range(1e-6..1.0)).collect();
            let s: f64 = row.iter().sum();
            row.into_iter().map(|v| v / s).collect()
        })
        .collect();

    let mut centers = vec![vec![0.0; k]; c];
    let mut history = Vec::new();
    let mut converged = false;
    let mut iterations = 0;

    for iter in 0..opts.max_iter {
        iterations = iter + 1;
        // centers from fuzzified memberships
        for (j, center) in centers.iter_mut().enumerate() {
            let mut weight = 0.0;
            center.iter_mut().for_each(|v| *v = 0.0);
            for (row, x) in u.iter().zip(data) {
                let w = row[j].powf(m);
                weight += w;
                for (cv, xv) in center.iter_mut().zip(x) {
                    *cv += w * xv;
                }
            }
            center.iter_mut().for_each(|v| *v /= weight.max(1e-300));
        }

        // squared distances and objective
        let mut objective = 0.0;
        let d2: Vec<Vec<f64>> = data
            .iter()
            .zip(&u)
            .map(|(x, urow)| {
                centers
                    .iter()
                    .enumerate()
                    .map(|(j, cj)| {
                        let d = x
                            .iter()
                            .zip(cj)
                            .map(|(a, b)| (a - b) * (a - b))
                            .sum::<f64>()
                            .max(1e-300);
                        objective += urow[j].powf(m) * d;
                        d
                    })
                    .collect()
            })
            .collect();
        history.push(objective);

        // membership update: u ~ dist^(-2/(m-1)), with d2 already squared
        let exp = 2.0 / (m - 1.0);
        for (urow, drow) in u.iter_mut().zip(&d2) {
            let inv: Vec<f64> = drow.iter().map(|d| (1.0 / d).powf(exp / 2.0)).collect();
            let s: f64 = inv.iter().sum();
            for (uv, iv) in urow.iter_mut().zip(&inv) {
                *uv = iv / s;
            }
        }

        if history.len() >= 2 {
            let delta = (history[history.len() - 2] - objective).abs();
            if delta < opts.tolerance {
                converged = true;
                break;
            }
        }
    }

    Ok(ClusterModel {
        centers,
        memberships: u,
        fuzzifier: m,
        objective: *history.last().unwrap(),
        iterations,
        seed: opts.seed,
        converged,
        objective_history: history,
    })
}

/// Run `opts.restarts` seeds (`seed`, `seed+1`, ...) and keep the model with
/// the lowest objective.
pub fn fit_restarts(data: &[Vec<f64>], opts: &FitOptions) -> Result<ClusterModel, FcmError> {
    validate(data, opts)?;
    let mut best: Option<ClusterModel> = None;
    for r in 0..opts.restarts.max(1) {
        let run = FitOptions {
            seed: opts.seed + r as u64,
            ..*opts
        };
        let model = fit(data, &run)?;
        if best.as_ref().is_none_or(|b| model.objective < b.objective) {
            best = Some(model);
        }
    }
    Ok(best.unwrap())
}
