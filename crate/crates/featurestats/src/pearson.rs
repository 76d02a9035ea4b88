//! Pearson correlation coefficient and per-class correlation matrices.

use serde::{Deserialize, Serialize};

use crate::{FeatureMatrix, StatsError};

/// rho(X, Y) = Cov(X, Y) / sqrt(Var(X) * Var(Y)), population moments.
pub fn pearson(x: &[f64], y: &[f64]) -> Result<f64, StatsError> {
    if x.len() != y.len() {
        return Err(StatsError::LengthMismatch {
            left: x.len(),
            right: y.len(),
        });
    }
    if x.len() < 2 {
        return Err(StatsError::InsufficientRows {
            needed: 2,
            got: x.len(),
        });
    }
    let n = x.len() as f64;
    let mx = x.iter().sum::<f64>() / n;
    let my = y.iter().sum::<f64>() / n;
    let mut cov = 0.0;
    let mut vx = 0.0;
    let mut vy = 0.0;
    for (a, b) in x.iter().zip(y) {
        let (da, db) = (a - mx, b - my);
        cov += da * db;
        vx += da * da;
        vy += db * db;
    }
    if vx == 0.0 || vy == 0.0 {
        return Err(StatsError::DegenerateVariance {
            name: if vx == 0.0 { "x" } else { "y" }.to_string(),
        });
    }
    Ok((cov / (vx * vy).sqrt()).clamp(-1.0, 1.0))
}

/// Symmetric correlation matrix over the features of one class.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CorrelationMatrix {
    pub feature_names: Vec<String>,
    pub values: Vec<Vec<f64>>,
}

/// A cell that could not be computed because a feature is constant within
/// the class; it was mapped to 0 off-diagonal (1 on the diagonal).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorrelationWarning {
    pub feature: String,
}

impl CorrelationMatrix {
    /// Mean of each column, optionally skipping the diagonal cell.
    pub fn column_means(&self, exclude_diagonal: bool) -> Vec<f64> {
        let k = self.feature_names.len();
        (0..k)
            .map(|j| {
                let (sum, cnt) = (0..k)
                    .filter(|i| !(exclude_diagonal && *i == j))
                    .fold((0.0, 0u32), |(s, c), i| (s + self.values[i][j], c + 1));
                if cnt == 0 {
                    0.0
                } else {
                    sum / f64::from(cnt)
                }
            })
            .collect()
    }

    /// Render as CSV: a header of feature names, then one row per feature
    /// with its name in the first column.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("feature,");
        out.push_str(&self.feature_names.join(","));
        out.push('\n');
        for (name, row) in self.feature_names.iter().zip(&self.values) {
            out.push_str(name);
            for v in row {
                out.push(',');
                out.push_str(&format!("{v}"));
            }
            out.push('\n');
        }
        out
    }
}

/// Correlate every pair of features within one class. Each cell is computed
/// once and mirrored, so the result is exactly symmetric. Constant features
/// yield 0 off-diagonal with a warning instead of failing.
pub fn class_correlation(
    matrix: &FeatureMatrix,
) -> Result<(CorrelationMatrix, Vec<CorrelationWarning>), StatsError> {
    if matrix.rows.len() < 2 {
        return Err(StatsError::InsufficientRows {
            needed: 2,
            got: matrix.rows.len(),
        });
    }
    let k = matrix.feature_names.len();
    let columns: Vec<Vec<f64>> = (0..k).map(|i| matrix.column(i)).collect();
    let mut values = vec![vec![0.0; k]; k];
    let mut degenerate = vec![false; k];
    for (i, col) in columns.iter().enumerate() {
        values[i][i] = 1.0;
        let mean = col.iter().sum::<f64>() / col.len() as f64;
        degenerate[i] = col.iter().all(|v| *v == mean);
    }
    for i in 0..k {
        for j in (i + 1)..k {
            let rho = match pearson(&columns[i], &columns[j]) {
                Ok(r) => r,
                Err(StatsError::DegenerateVariance { .. }) => 0.0,
                Err(e) => return Err(e),
            };
            values[i][j] = rho;
            values[j][i] = rho;
        }
    }
    let warnings = matrix
        .feature_names
        .iter()
        .zip(&degenerate)
        .filter(|(_, d)| **d)
        .map(|(name, _)| CorrelationWarning {
            feature: name.clone(),
        })
        .collect();
    Ok((
        CorrelationMatrix {
            feature_names: matrix.feature_names.clone(),
            values,
        },
        warnings,
    ))
}
