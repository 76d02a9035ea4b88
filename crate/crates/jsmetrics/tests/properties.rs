//! Grammar-wide invariants checked over generated programs.

use jsmetrics::gen::generate_program;
use jsmetrics::{build_cfg_summary, compute_features, count_lines, tokenize_and_count};

const CASES: u64 = 1000;

fn rel_eq(a: f64, b: f64, rel: f64) -> bool {
    (a - b).abs() <= rel * a.abs().max(b.abs()).max(1.0)
}

#[test]
fn halstead_identities_hold_on_generated_programs() {
    for seed in 0..CASES {
        let p = generate_program(seed);
        let f = compute_features(&p.source).unwrap();
        assert!(rel_eq(f.eta, f.eta1 + f.eta2, 1e-9), "seed {seed}");
        assert!(rel_eq(f.e_h, f.d * f.v, 1e-9), "seed {seed}");
        assert!(rel_eq(f.t_h, f.e_h / 18.0, 1e-9), "seed {seed}");
        assert!(rel_eq(f.b, f.e_h.powf(2.0 / 3.0) / 3000.0, 1e-9), "seed {seed}");
        assert!(f.eta1 <= f.n1 && f.eta2 <= f.n2, "seed {seed}");
    }
}

#[test]
fn cyclomatic_matches_decision_count_oracle() {
    for seed in 0..CASES {
        let p = generate_program(seed);
        let m = build_cfg_summary(&p.source).unwrap().cyclomatic();
        assert_eq!(
            m,
            p.expected_cyclomatic(),
            "seed {seed}\n{}",
            p.source
        );
    }
}

#[test]
fn appending_a_branch_increments_m_by_exactly_one() {
    for seed in 0..CASES {
        let p = generate_program(seed);
        let before = build_cfg_summary(&p.source).unwrap();
        let tok_before = tokenize_and_count(&p.source).unwrap();
        let extended = format!("{}\nif (x) {{}}", p.source);
        let after = build_cfg_summary(&extended).unwrap();
        let tok_after = tokenize_and_count(&extended).unwrap();
        assert_eq!(after.cyclomatic(), before.cyclomatic() + 1, "seed {seed}");
        assert!(tok_after.n1 >= tok_before.n1 && tok_after.n2 >= tok_before.n2);
        assert!(tok_after.eta1 >= tok_before.eta1 && tok_after.eta2 >= tok_before.eta2);
        assert!(after.nodes >= before.nodes && after.edges >= before.edges);
    }
}

#[test]
fn concatenation_is_additive_in_totals_subadditive_in_distincts() {
    for seed in 0..300 {
        let p1 = generate_program(seed);
        let p2 = generate_program(seed + 10_000);
        // generated sources are newline-terminated, so plain concatenation
        // is a clean line-wise join
        let joined = format!("{}{}", p1.source, p2.source);

        let t1 = tokenize_and_count(&p1.source).unwrap();
        let t2 = tokenize_and_count(&p2.source).unwrap();
        let tj = tokenize_and_count(&joined).unwrap();
        assert_eq!(tj.n1, t1.n1 + t2.n1, "seed {seed}");
        assert_eq!(tj.n2, t1.n2 + t2.n2, "seed {seed}");
        assert!(tj.eta1 <= t1.eta1 + t2.eta1, "seed {seed}");
        assert!(tj.eta2 <= t1.eta2 + t2.eta2, "seed {seed}");

        let l1 = count_lines(&p1.source).unwrap();
        let l2 = count_lines(&p2.source).unwrap();
        let lj = count_lines(&joined).unwrap();
        // both sources end with a newline, so raw lines add exactly
        assert_eq!(lj.physical, l1.physical + l2.physical, "seed {seed}");
        assert_eq!(lj.sloc, l1.sloc + l2.sloc, "seed {seed}");
        assert_eq!(lj.logical, l1.logical + l2.logical, "seed {seed}");
    }
}

#[test]
fn feature_extraction_is_deterministic() {
    for seed in 0..100 {
        let p = generate_program(seed);
        assert_eq!(
            compute_features(&p.source).unwrap(),
            compute_features(&p.source).unwrap()
        );
    }
}
