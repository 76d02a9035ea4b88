//! Feature-space preprocessing ahead of clustering.
//!
//! Raw complexity features span nine orders of magnitude, so Euclidean
//! distances on them are dominated by sheer script size. `zscore`
//! standardizes columns; `shape_embed` additionally projects each sample to
//! the unit sphere and re-standardizes, which removes the size axis and
//! leaves the relative feature profile. The sphere embedding is what lets
//! the clusterer recover the script classes.

use crate::FcmError;

/// Column-wise z-score standardization (sample standard deviation).
/// Constant columns cannot be standardized; they are dropped and reported.
pub struct Normalized {
    pub data: Vec<Vec<f64>>,
    /// Names or indices of dropped constant columns.
    pub dropped: Vec<usize>,
}

pub fn zscore(data: &[Vec<f64>]) -> Result<Normalized, FcmError> {
    let n = data.len();
    if n < 2 {
        return Err(FcmError::DegenerateData(format!(
            "need at least 2 rows, got {n}"
        )));
    }
    let k = data[0].len();
    if data.iter().any(|r| r.len() != k) {
        return Err(FcmError::DegenerateData("ragged rows".to_string()));
    }
    let mut keep = Vec::new();
    let mut dropped = Vec::new();
    let mut stats = Vec::new();
    for j in 0..k {
        let mean = data.iter().map(|r| r[j]).sum::<f64>() / n as f64;
        let var = data.iter().map(|r| (r[j] - mean).powi(2)).sum::<f64>() / (n as f64 - 1.0);
        if var > 0.0 {
            keep.push(j);
            stats.push((mean, var.sqrt()));
        } else {
            dropped.push(j);
        }
    }
    if keep.is_empty() {
        return Err(FcmError::DegenerateData(
            "all features are constant".to_string(),
        ));
    }
    let out = data
        .iter()
        .map(|row| {
            keep.iter()
                .zip(&stats)
                .map(|(j, (mean, sd))| (row[*j] - mean) / sd)
                .collect()
        })
        .collect();
    Ok(Normalized { data: out, dropped })
}

/// Scale-free shape embedding: z-score columns, normalize each row to unit
/// length, then z-score the sphere coordinates.
pub fn shape_embed(data: &[Vec<f64>]) -> Result<Normalized, FcmError> {
    let first = zscore(data)?;
    let unit: Vec<Vec<f64>> = first
        .data
        .iter()
        .map(|row| {
            let norm = row.iter().map(|v| v * v).sum::<f64>().sqrt();
            if norm > 0.0 {
                row.iter().map(|v| v / norm).collect()
            } else {
                row.clone()
            }
        })
        .collect();
    let second = zscore(&unit)?;
    Ok(Normalized {
        data: second.data,
        dropped: first.dropped,
    })
}
