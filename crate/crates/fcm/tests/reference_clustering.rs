//! Clustering the 28-row reference table must recover the script classes.

use fcm::{cluster_features, evaluate, FitOptions, Normalization};
use jsmetrics::fixture::{FEATURE_TABLE, LABEL_BENIGN};

fn fixture_data() -> (Vec<Vec<f64>>, Vec<String>) {
    let data = FEATURE_TABLE.iter().map(|r| r.values.to_vec()).collect();
    let labels = FEATURE_TABLE.iter().map(|r| r.label.to_string()).collect();
    (data, labels)
}

#[test]
fn sphere_embedding_reproduces_reference_confusion_matrix() {
    let (data, labels) = fixture_data();
    let opts = FitOptions {
        clusters: 3,
        fuzzifier: 2.0,
        restarts: 20,
        seed: 1,
        ..Default::default()
    };
    let (model, _) = cluster_features(&data, Normalization::SphereZScore, &opts).unwrap();
    let report = evaluate(&model, &labels).unwrap();

    // 27 of 28 correct: malicious and mining classes are clean, one benign
    // row lands in the mining cluster
    assert!((report.accuracy_pct - 100.0 * 27.0 / 28.0).abs() < 1e-9);
    let order: Vec<&str> = report.classes.iter().map(|s| s.as_str()).collect();
    assert_eq!(order, vec!["cryptojacking", "malicious", "benign"]);
    assert_eq!(
        report.confusion,
        vec![vec![8, 0, 0], vec![0, 10, 0], vec![1, 0, 9]]
    );
}

#[test]
fn misassigned_row_is_the_smallest_benign_sample() {
    let (data, labels) = fixture_data();
    let opts = FitOptions {
        restarts: 20,
        ..Default::default()
    };
    let (model, _) = cluster_features(&data, Normalization::SphereZScore, &opts).unwrap();
    let report = evaluate(&model, &labels).unwrap();
    let hard = model.hard_assignments();
    let mapped: Vec<usize> = hard.iter().map(|h| report.cluster_to_class[*h]).collect();
    let class_of = |l: &str| report.classes.iter().position(|c| c == l).unwrap();
    for (i, row) in FEATURE_TABLE.iter().enumerate() {
        let expected = class_of(row.label);
        if row.name == "Louis Browns" {
            assert_eq!(report.classes[mapped[i]], "cryptojacking");
        } else {
            assert_eq!(mapped[i], expected, "row {}", row.name);
        }
    }
    let _ = LABEL_BENIGN;
}

#[test]
fn plain_zscore_is_size_dominated_and_underperforms() {
    let (data, labels) = fixture_data();
    let opts = FitOptions {
        restarts: 20,
        ..Default::default()
    };
    let (model, _) = cluster_features(&data, Normalization::ZScore, &opts).unwrap();
    let report = evaluate(&model, &labels).unwrap();
    assert!(report.accuracy_pct < 70.0);
}

#[test]
fn result_is_reproducible_and_fast() {
    let (data, labels) = fixture_data();
    let opts = FitOptions {
        restarts: 20,
        ..Default::default()
    };
    let start = std::time::Instant::now();
    let (a, _) = cluster_features(&data, Normalization::SphereZScore, &opts).unwrap();
    let (b, _) = cluster_features(&data, Normalization::SphereZScore, &opts).unwrap();
    assert!(start.elapsed().as_secs_f64() < 1.0);
    assert_eq!(a, b);
    let _ = evaluate(&a, &labels).unwrap();
}
