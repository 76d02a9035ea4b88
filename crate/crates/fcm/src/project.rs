//! 2-D principal-component projection of z-scored feature data, for
//! plotting cluster structure.

use serde::{Deserialize, Serialize};

use crate::normalize::zscore;
use crate::FcmError;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Projection {
    /// n x 2 coordinates in the top-2 principal directions.
    pub coords: Vec<[f64; 2]>,
    /// Fraction of total variance captured by each of the two components.
    pub explained: [f64; 2],
}

/// Cyclic Jacobi eigendecomposition of a symmetric matrix. Returns
/// (eigenvalues, eigenvectors-as-columns) sorted by descending eigenvalue.
#[allow(clippy::needless_range_loop)]
pub fn symmetric_eigen(a: &[Vec<f64>]) -> (Vec<f64>, Vec<Vec<f64>>) {
    let n = a.len();
    let mut m: Vec<Vec<f64>> = a.to_vec();
    let mut v = vec![vec![0.0; n]; n];
    for (i, row) in v.iter_mut().enumerate() {
        row[i] = 1.0;
    }
    for _sweep in 0..100 {
        let mut off = 0.0;
        for i in 0..n {
            for j in (i + 1)..n {
                off += m[i][j] * m[i][j];
            }
        }
        if off < 1e-22 {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                if m[p][q].abs() < 1e-300 {
                    continue;
                }
                let theta = (m[q][q] - m[p][p]) / (2.0 * m[p][q]);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let (mkp, mkq) = (m[k][p], m[k][q]);
                    m[k][p] = c * mkp - s * mkq;
                    m[k][q] = s * mkp + c * mkq;
                }
                for k in 0..n {
                    let (mpk, mqk) = (m[p][k], m[q][k]);
                    m[p][k] = c * mpk - s * mqk;
                    m[q][k] = s * mpk + c * mqk;
                }
                for row in v.iter_mut() {
                    let (vp, vq) = (row[p], row[q]);
                    row[p] = c * vp - s * vq;
                    row[q] = s * vp + c * vq;
                }
            }
        }
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| m[j][j].partial_cmp(&m[i][i]).unwrap());
    let values: Vec<f64> = order.iter().map(|&i| m[i][i]).collect();
    let vectors: Vec<Vec<f64>> = order
        .iter()
        .map(|&col| v.iter().map(|row| row[col]).collect())
        .collect();
    (values, vectors)
}

/// Project rows onto the top-2 principal components of their z-scored
/// covariance. Sign convention: the largest-magnitude loading of each
/// component is made positive, so output is deterministic.
#[allow(clippy::needless_range_loop)]
pub fn project_2d(data: &[Vec<f64>]) -> Result<Projection, FcmError> {
    let z = zscore(data)?;
    let n = z.data.len();
    let k = z.data[0].len();

    let mut cov = vec![vec![0.0; k]; k];
    for row in &z.data {
        for i in 0..k {
            for j in i..k {
                cov[i][j] += row[i] * row[j];
            }
        }
    }
    for i in 0..k {
        for j in i..k {
            cov[i][j] /= n as f64 - 1.0;
            cov[j][i] = cov[i][j];
        }
    }

    let (values, mut vectors) = symmetric_eigen(&cov);
    let total: f64 = values.iter().map(|v| v.max(0.0)).sum();
    let mut explained = [0.0; 2];
    for (idx, e) in explained.iter_mut().enumerate() {
        if idx < values.len() && total > 0.0 {
            *e = values[idx].max(0.0) / total;
        }
    }

    for vec_ in vectors.iter_mut().take(2) {
        let lead = vec_
            .iter()
            .cloned()
            .fold(0.0f64, |acc, v| if v.abs() > acc.abs() { v } else { acc });
        if lead < 0.0 {
            for v in vec_.iter_mut() {
                *v = -*v;
            }
        }
    }

    let coords = z
        .data
        .iter()
        .map(|row| {
            let mut point = [0.0; 2];
            for (slot, axis) in point.iter_mut().zip(&vectors) {
                *slot = row.iter().zip(axis).map(|(a, b)| a * b).sum();
            }
            point
        })
        .collect();
    Ok(Projection { coords, explained })
}
