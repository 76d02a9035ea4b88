//! Fuzzy c-means clustering of script complexity features, with
//! reference-based evaluation and a 2-D principal-component projection.

mod cluster;
mod evaluate;
mod normalize;
mod project;

pub use cluster::{fit, fit_restarts, ClusterModel, FitOptions};
pub use evaluate::{evaluate, ClassMetrics, EvaluationReport};
pub use normalize::{shape_embed, zscore, Normalized};
pub use project::{project_2d, symmetric_eigen, Projection};

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FcmError {
    #[error("degenerate data: {0}")]
    DegenerateData(String),
    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("bad options: {0}")]
    BadOptions(String),
}

/// Preprocessing applied before clustering.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub enum Normalization {
    /// Column z-scores only. Distances stay dominated by script size, which
    /// merges the small-script classes; kept for comparison runs.
    ZScore,
    /// z-score, row unit-norm, z-score again: the scale-free embedding that
    /// separates the script classes.
    #[default]
    SphereZScore,
}

/// Normalize and cluster in one step, keeping the best of the restarts.
pub fn cluster_features(
    data: &[Vec<f64>],
    normalization: Normalization,
    opts: &FitOptions,
) -> Result<(ClusterModel, Normalized), FcmError> {
    let normalized = match normalization {
        Normalization::ZScore => zscore(data)?,
        Normalization::SphereZScore => shape_embed(data)?,
    };
    let model = fit_restarts(&normalized.data, opts)?;
    Ok((model, normalized))
}
