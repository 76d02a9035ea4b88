//! Site-scale revenue against the recorded traffic tables, at the reference
//! visitor hash rate of 20 hashes/second.

use econ::fixtures::{DATASET_SITES, TOP_SITES};
use econ::{site_monthly_revenue, EconParams};

const VISITOR_HPS: f64 = 20.0;

#[test]
fn dataset_sites_reproduce_recorded_revenue_to_a_tenth_of_a_dollar() {
    let params = EconParams::default();
    for site in DATASET_SITES {
        let usd = site_monthly_revenue(
            site.visits_per_month,
            site.avg_visit_secs,
            VISITOR_HPS,
            &params,
        );
        // these figures are printed to 0.1 USD and the model reproduces
        // them essentially exactly (truncation in the source aside)
        assert!(
            (usd - site.recorded_usd).abs() <= 0.1,
            "{}: computed {usd}, recorded {}",
            site.site,
            site.recorded_usd
        );
    }
}

#[test]
fn top_sites_reproduce_recorded_revenue_within_tolerance_and_quantum() {
    let params = EconParams::default();
    for site in TOP_SITES {
        let usd = site_monthly_revenue(
            site.visits_per_month,
            site.avg_visit_secs,
            VISITOR_HPS,
            &params,
        );
        let tolerance = 0.03 * site.recorded_usd + site.recorded_half_quantum_usd;
        assert!(
            (usd - site.recorded_usd).abs() <= tolerance,
            "{}: computed {usd}, recorded {} (tolerance {tolerance})",
            site.site,
            site.recorded_usd
        );
    }
}

#[test]
fn revenue_is_linear_in_every_factor() {
    let params = EconParams::default();
    let base = site_monthly_revenue(1e9, 300.0, 20.0, &params);
    assert!((site_monthly_revenue(2e9, 300.0, 20.0, &params) - 2.0 * base).abs() < 1e-9 * base);
    assert!((site_monthly_revenue(1e9, 600.0, 20.0, &params) - 2.0 * base).abs() < 1e-9 * base);
    assert!((site_monthly_revenue(1e9, 300.0, 40.0, &params) - 2.0 * base).abs() < 1e-9 * base);
    assert_eq!(site_monthly_revenue(0.0, 300.0, 20.0, &params), 0.0);
}

#[test]
fn google_scale_is_about_two_and_a_half_million() {
    let params = EconParams::default();
    let usd = site_monthly_revenue(47.09e9, 443.0, 20.0, &params);
    assert!((usd - 2.41e6).abs() / 2.41e6 < 0.01);
}
