//! Correlation analysis over feature matrices: Pearson coefficients,
//! per-class correlation matrices, and selection of the features most
//! distinctive of the mining-script class.

mod pearson;
mod select;

pub use pearson::{class_correlation, pearson, CorrelationMatrix, CorrelationWarning};
pub use select::{select_features, FeatureSelection, SelectOptions, SelectionStrategy};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StatsError {
    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("degenerate variance in '{name}'")]
    DegenerateVariance { name: String },
    #[error("need at least {needed} rows, got {got}")]
    InsufficientRows { needed: usize, got: usize },
    #[error("schema mismatch: {0}")]
    SchemaMismatch(String),
}

/// A rectangular matrix of rows over named feature columns.
#[derive(Debug, Clone, PartialEq)]
pub struct FeatureMatrix {
    pub feature_names: Vec<String>,
    pub rows: Vec<Vec<f64>>,
}

impl FeatureMatrix {
    pub fn new(feature_names: Vec<String>, rows: Vec<Vec<f64>>) -> Result<Self, StatsError> {
        for row in &rows {
            if row.len() != feature_names.len() {
                return Err(StatsError::SchemaMismatch(format!(
                    "row has {} values for {} features",
                    row.len(),
                    feature_names.len()
                )));
            }
        }
        Ok(FeatureMatrix {
            feature_names,
            rows,
        })
    }

    pub fn column(&self, idx: usize) -> Vec<f64> {
        self.rows.iter().map(|r| r[idx]).collect()
    }
}
