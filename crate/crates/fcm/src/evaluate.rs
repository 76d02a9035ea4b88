//! Reference-based evaluation of a clustering: confusion matrix under the
//! trace-maximizing cluster-to-class mapping, plus rate metrics.
//!
//! Two metric families are reported. The textbook family derives false
//! positive/negative rates from the confusion matrix in the usual
//! one-vs-rest sense. The survey family mirrors how the reference results
//! table tabulates them: per-class "FPR" is the miss rate (share of the
//! class assigned elsewhere), per-class "FNR" is the false discovery rate
//! (share of the cluster that does not belong), per-class AR is recall, and
//! totals are unweighted class means except accuracy, which is overall.

use serde::{Deserialize, Serialize};

use crate::{ClusterModel, FcmError};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClassMetrics {
    pub class: String,
    /// Recall, percent: the survey table's per-class accuracy.
    pub accuracy_pct: f64,
    /// Share of this class assigned to another cluster, percent.
    pub miss_rate_pct: f64,
    /// Share of this cluster's members that belong to another class, percent.
    pub false_discovery_pct: f64,
    /// Textbook one-vs-rest false positive rate, percent.
    pub fpr_pct: f64,
    /// Textbook one-vs-rest false negative rate, percent.
    pub fnr_pct: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EvaluationReport {
    pub classes: Vec<String>,
    /// Rows are true classes, columns are mapped predicted classes.
    pub confusion: Vec<Vec<u64>>,
    /// Overall accuracy, percent: 100 * trace / n.
    pub accuracy_pct: f64,
    pub per_class: Vec<ClassMetrics>,
    /// Unweighted class mean of miss rates (survey-style total FPR).
    pub total_miss_rate_pct: f64,
    /// Unweighted class mean of false discovery rates (survey-style total FNR).
    pub total_false_discovery_pct: f64,
    pub total_fpr_pct: f64,
    pub total_fnr_pct: f64,
    /// cluster index -> class index.
    pub cluster_to_class: Vec<usize>,
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 1 {
        return vec![vec![0]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for slot in 0..n {
            let mut q: Vec<usize> = p.iter().map(|v| if *v >= slot { v + 1 } else { *v }).collect();
            q.push(slot);
            out.push(q);
        }
    }
    out
}

/// Evaluate hard assignments against reference labels. Class names are the
/// distinct labels in first-appearance order. The cluster-to-class mapping
/// is chosen exhaustively to maximize the confusion-matrix trace.
pub fn evaluate(model: &ClusterModel, labels: &[String]) -> Result<EvaluationReport, FcmError> {
    if labels.len() != model.memberships.len() {
        return Err(FcmError::LengthMismatch {
            left: labels.len(),
            right: model.memberships.len(),
        });
    }
    let mut classes: Vec<String> = Vec::new();
    for l in labels {
        if !classes.contains(l) {
            classes.push(l.clone());
        }
    }
    let c = model.centers.len();
    if classes.len() != c {
        return Err(FcmError::BadOptions(format!(
            "{} classes for {} clusters",
            classes.len(),
            c
        )));
    }
    let y: Vec<usize> = labels
        .iter()
        .map(|l| classes.iter().position(|c| c == l).unwrap())
        .collect();
    let hard = model.hard_assignments();

    // raw counts: cluster x class
    let mut raw = vec![vec![0u64; c]; c];
    for (cluster, class) in hard.iter().zip(&y) {
        raw[*cluster][*class] += 1;
    }

    let mut best_perm = None;
    let mut best_trace = 0u64;
    for perm in permutations(c) {
        let trace: u64 = (0..c).map(|cluster| raw[cluster][perm[cluster]]).sum();
        if best_perm.is_none() || trace > best_trace {
            best_trace = trace;
            best_perm = Some(perm);
        }
    }
    let mapping = best_perm.unwrap();

    // confusion: true class rows, mapped predicted columns
    let mut confusion = vec![vec![0u64; c]; c];
    for (cluster, class) in hard.iter().zip(&y) {
        confusion[*class][mapping[*cluster]] += 1;
    }

    let n: u64 = labels.len() as u64;
    let accuracy_pct = 100.0 * best_trace as f64 / n as f64;

    let mut per_class = Vec::new();
    for k in 0..c {
        let class_total: u64 = confusion[k].iter().sum();
        let predicted_total: u64 = (0..c).map(|i| confusion[i][k]).sum();
        let tp = confusion[k][k];
        let fp = predicted_total - tp;
        let fneg = class_total - tp;
        let negatives = n - class_total;
        per_class.push(ClassMetrics {
            class: classes[k].clone(),
            accuracy_pct: pct(tp, class_total),
            miss_rate_pct: pct(fneg, class_total),
            false_discovery_pct: pct(fp, predicted_total),
            fpr_pct: pct(fp, negatives),
            fnr_pct: pct(fneg, class_total),
        });
    }
    let mean = |f: fn(&ClassMetrics) -> f64| -> f64 {
        per_class.iter().map(f).sum::<f64>() / per_class.len() as f64
    };

    Ok(EvaluationReport {
        classes,
        confusion,
        accuracy_pct,
        total_miss_rate_pct: mean(|m| m.miss_rate_pct),
        total_false_discovery_pct: mean(|m| m.false_discovery_pct),
        total_fpr_pct: mean(|m| m.fpr_pct),
        total_fnr_pct: mean(|m| m.fnr_pct),
        per_class,
        cluster_to_class: mapping,
    })
}

fn pct(num: u64, den: u64) -> f64 {
    if den == 0 {
        0.0
    } else {
        100.0 * num as f64 / den as f64
    }
}
