//! Selection of features distinctive to the mining-script class by
//! comparing per-class correlation column means.

use serde::{Deserialize, Serialize};

use crate::{CorrelationMatrix, StatsError};

/// How the per-feature class means are turned into a selection. Only the
/// conjunctive reading ships today; the enum leaves room for alternates
/// without breaking the API.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub enum SelectionStrategy {
    /// Select feature k when both gaps from the mining-script class beat the
    /// malicious-to-benign gap:
    /// `Cmean[k] - Mmean[k] > Mmean[k] - Bmean[k]` and
    /// `Cmean[k] - Bmean[k] > Mmean[k] - Bmean[k]`.
    #[default]
    ConjunctiveMeanGap,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SelectOptions {
    pub strategy: SelectionStrategy,
    /// When set, column means skip the diagonal cell.
    pub exclude_diagonal: bool,
}

impl Default for SelectOptions {
    fn default() -> Self {
        SelectOptions {
            strategy: SelectionStrategy::ConjunctiveMeanGap,
            exclude_diagonal: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FeatureSelection {
    pub selected: Vec<String>,
    pub feature_names: Vec<String>,
    pub cmean: Vec<f64>,
    pub mmean: Vec<f64>,
    pub bmean: Vec<f64>,
    pub options: SelectOptions,
}

/// Compare the column means of the mining-script (`c`), malicious (`m`) and
/// benign (`b`) correlation matrices and keep the features satisfying the
/// strategy's condition. All three matrices must share the same feature
/// schema.
pub fn select_features(
    c: &CorrelationMatrix,
    m: &CorrelationMatrix,
    b: &CorrelationMatrix,
    options: SelectOptions,
) -> Result<FeatureSelection, StatsError> {
    if c.feature_names != m.feature_names || c.feature_names != b.feature_names {
        return Err(StatsError::SchemaMismatch(
            "feature names differ across class matrices".to_string(),
        ));
    }
    let cmean = c.column_means(options.exclude_diagonal);
    let mmean = m.column_means(options.exclude_diagonal);
    let bmean = b.column_means(options.exclude_diagonal);
    let selected = c
        .feature_names
        .iter()
        .enumerate()
        .filter(|(k, _)| match options.strategy {
            SelectionStrategy::ConjunctiveMeanGap => {
                let gap_mb = mmean[*k] - bmean[*k];
                cmean[*k] - mmean[*k] > gap_mb && cmean[*k] - bmean[*k] > gap_mb
            }
        })
        .map(|(_, name)| name.clone())
        .collect();
    Ok(FeatureSelection {
        selected,
        feature_names: c.feature_names.clone(),
        cmean,
        mmean,
        bmean,
        options,
    })
}
