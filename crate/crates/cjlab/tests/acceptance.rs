//! Acceptance suite: one test per reproduction criterion, each printing a
//! PASS/FAIL line with the measured numbers.
//!
//! Criterion 2 is expected to fail in part: several recorded profit/loss
//! cells of the reference device table are arithmetically inconsistent
//! with the model's own published inputs (details printed by the test and
//! analyzed in the repository notes). The cells are asserted faithfully
//! rather than loosened to force a green run.

use econ::fixtures::{DATASET_SITES, RECORDED_SESSIONS, TOP_SITES};
use jsmetrics::fixture::FEATURE_TABLE;
use jsmetrics::gen::generate_program;

fn pass(line: &str) {
    println!("PASS {line}");
}

// ---------------------------------------------------------------------------

#[test]
fn criterion_1_clustering_reproduction() {
    let started = std::time::Instant::now();
    let data: Vec<Vec<f64>> = FEATURE_TABLE.iter().map(|r| r.values.to_vec()).collect();
    let labels: Vec<String> = FEATURE_TABLE.iter().map(|r| r.label.to_string()).collect();
    let opts = fcm::FitOptions {
        clusters: 3,
        fuzzifier: 2.0,
        restarts: 20,
        seed: 1,
        ..Default::default()
    };
    let (model, _) = fcm::cluster_features(&data, fcm::Normalization::SphereZScore, &opts).unwrap();
    let report = fcm::evaluate(&model, &labels).unwrap();
    let elapsed = started.elapsed();

    let malicious_idx = report.classes.iter().position(|c| c == "malicious").unwrap();
    let malicious_correct = report.confusion[malicious_idx][malicious_idx];

    let line = format!(
        "criterion 1 (clustering): accuracy {:.2}% (need >= 92.8), malicious {}/10, {:?}",
        report.accuracy_pct, malicious_correct, elapsed
    );
    assert!(
        report.accuracy_pct >= 92.8,
        "accuracy {:.2}% below 92.8%",
        report.accuracy_pct
    );
    assert_eq!(malicious_correct, 10, "malicious class must be clean");
    assert!(elapsed.as_secs_f64() < 1.0, "took {elapsed:?}");
    pass(&line);
}

// ---------------------------------------------------------------------------

#[test]
fn criterion_2_economics_reproduction() {
    let params = econ::EconParams::default();
    let mut failures: Vec<String> = Vec::new();

    // half the print quantum of a two-significant-figure recorded value
    let quantum = |x: f64| 0.5 * 10f64.powf(x.abs().log10().floor() - 1.0);

    println!("device   alpha  P computed    P recorded   dP%      L computed    L recorded   dL%");
    for rec in RECORDED_SESSIONS {
        let device = econ::fixtures::device_by_name(rec.device).unwrap();
        let report = econ::session_report(&device, rec.alpha, &params).unwrap();
        let p = report.computed.profit_usd;
        let l = report.computed.loss_usd;
        println!(
            "{:8} {:4}  {:.4e}    {:.1e}     {:+6.1}  {:.4e}    {:.1e}     {:+6.1}",
            rec.device,
            rec.alpha,
            p,
            rec.profit_usd,
            100.0 * (p - rec.profit_usd) / rec.profit_usd,
            l,
            rec.loss_usd,
            100.0 * (l - rec.loss_usd) / rec.loss_usd,
        );
        if (p - rec.profit_usd).abs() > 0.05 * rec.profit_usd + quantum(rec.profit_usd) {
            failures.push(format!("{} alpha {}: P off by {:+.1}%", rec.device, rec.alpha,
                100.0 * (p - rec.profit_usd) / rec.profit_usd));
        }
        if (l - rec.loss_usd).abs() > 0.05 * rec.loss_usd + quantum(rec.loss_usd) {
            failures.push(format!("{} alpha {}: L off by {:+.1}%", rec.device, rec.alpha,
                100.0 * (l - rec.loss_usd) / rec.loss_usd));
        }
        assert!(l - p > 0.0, "loss-profit gap must be positive in every row");
    }

    // the worked example fixes its own inputs, including the published
    // rounded recharge time of 0.015 h/%
    let worked = econ::DeviceProfile {
        name: "worked-example".into(),
        power_watts: 65.0,
        recharge_hours_per_pct: 0.015,
        session_minutes: 85.0,
        start_battery_pct: 100.0,
        baseline_end_battery_pct: 82.0,
        throttle_points: vec![econ::ThrottlePoint {
            alpha: 0.1,
            hash_rate_hps: 21.0,
            end_battery_pct: 10.0,
        }],
    };
    let p = econ::session_profit(21.0, 85.0 * 60.0, &params).usd;
    let l = econ::session_loss(&worked, 0.1, &params);
    println!(
        "worked example: P {p:.4e} vs 6.38e-4 ({:+.2}%), L {l:.4e} vs 4.5e-3 ({:+.2}%), L/P {:.2}",
        100.0 * (p - 6.38e-4) / 6.38e-4,
        100.0 * (l - 4.5e-3) / 4.5e-3,
        l / p
    );
    if (p - 6.38e-4).abs() > 0.02 * 6.38e-4 {
        failures.push(format!(
            "worked example: P {:+.2}% from 6.38e-4 exceeds 2%",
            100.0 * (p - 6.38e-4) / 6.38e-4
        ));
    }
    if (l - 4.5e-3).abs() > 0.02 * 4.5e-3 {
        failures.push(format!(
            "worked example: L {:+.2}% from 4.5e-3 exceeds 2%",
            100.0 * (l - 4.5e-3) / 4.5e-3
        ));
    }

    if failures.is_empty() {
        pass("criterion 2 (economics): all 9 rows within 5%, worked example within 2%, gap positive");
    } else {
        println!(
            "FAIL criterion 2 (economics): {} cells cannot be reproduced from the recorded \
             inputs; gap positivity and the remaining cells hold:",
            failures.len()
        );
        for f in &failures {
            println!("  - {f}");
        }
        panic!(
            "criterion 2: {} recorded cells are inconsistent with the published inputs: {}",
            failures.len(),
            failures.join("; ")
        );
    }
}

// ---------------------------------------------------------------------------

#[test]
fn criterion_3_ad_comparison_reproduction() {
    let params = econ::EconParams::default();
    let mut worst: f64 = 0.0;
    for table in [&TOP_SITES[..], &DATASET_SITES[..]] {
        for site in table {
            let usd =
                econ::site_monthly_revenue(site.visits_per_month, site.avg_visit_secs, 20.0, &params);
            let tolerance = 0.03 * site.recorded_usd + site.recorded_half_quantum_usd;
            let delta = (usd - site.recorded_usd).abs();
            worst = worst.max(100.0 * delta / site.recorded_usd);
            assert!(
                delta <= tolerance,
                "{}: computed {usd:.4}, recorded {}, beyond 3% plus print quantum",
                site.site,
                site.recorded_usd
            );
        }
    }
    pass(&format!(
        "criterion 3 (ad comparison): 20/20 site rows within 3% plus print quantum (worst {worst:.2}%)"
    ));
}

// ---------------------------------------------------------------------------

#[test]
fn criterion_4_time_to_one_xmr() {
    let params = econ::EconParams::default();
    let needed = econ::hashes_for_one_xmr(&params);
    assert!(
        (needed - 3.455e10).abs() / 3.455e10 < 1e-3,
        "hashes for one coin: {needed:.4e}"
    );
    let years = econ::time_to_one_xmr(21.0, &params).unwrap();
    assert!((years - 52.0).abs() <= 1.0, "{years:.1} years at 21 h/s");

    // recorded divergences are flagged deltas, not failures
    let mut flagged = 0;
    for rec in RECORDED_SESSIONS {
        let device = econ::fixtures::device_by_name(rec.device).unwrap();
        let h = device.hash_rate(rec.alpha);
        let computed = econ::time_to_one_xmr(h, &params).unwrap();
        let delta = 100.0 * (computed - rec.time_to_one_xmr_years) / rec.time_to_one_xmr_years;
        if delta.abs() > 5.0 {
            flagged += 1;
            println!(
                "  flagged: {} alpha {} -> {computed:.0} years computed vs {} recorded ({delta:+.0}%)",
                rec.device, rec.alpha, rec.time_to_one_xmr_years
            );
        }
    }
    pass(&format!(
        "criterion 4 (time to one coin): {needed:.4e} hashes, 21 h/s -> {years:.1} years; {flagged} recorded cells flagged as divergent"
    ));
}

// ---------------------------------------------------------------------------

#[test]
fn criterion_5_protocol_scenarios() {
    let started = std::time::Instant::now();

    // full direct session at alpha = 0.5
    let direct = mineproto::run_scenario(&mineproto::ScenarioConfig {
        topology: mineproto::Topology::Direct,
        throttle: 0.5,
        target: "ffffff00".into(),
        max_shares: Some(3),
        seed: 21,
        ..Default::default()
    })
    .unwrap();
    assert!(direct.miner.error.is_none(), "{:?}", direct.miner.error);
    let state = mineproto::validate_log(&direct.miner.entries, &direct.miner.site_key).unwrap();
    assert!(direct.miner.shares_accepted >= 1);
    assert_eq!(state.accepted_hashes, 256 * direct.miner.shares_accepted);
    assert_eq!(direct.credited_hashes, 256 * direct.miner.shares_accepted);

    // relay circumvention: content sees it, the blacklist does not
    let relay = mineproto::run_scenario(&mineproto::ScenarioConfig {
        topology: mineproto::Topology::Relay,
        throttle: 0.5,
        target: "ffffff00".into(),
        max_shares: Some(2),
        seed: 22,
        ..Default::default()
    })
    .unwrap();
    assert_eq!(relay.content_verdict.status, mineproto::Status::Cryptojacking);
    assert_eq!(relay.blacklist_verdict.status, mineproto::Status::Clean);

    let elapsed = started.elapsed();
    assert!(elapsed.as_secs_f64() < 10.0, "took {elapsed:?}");
    pass(&format!(
        "criterion 5 (protocol): direct session valid, {} shares x 256 credited, relay split verdicts, {:?}",
        direct.miner.shares_accepted, elapsed
    ));
}

// ---------------------------------------------------------------------------

#[test]
fn criterion_6_keyless_sessions_stay_suspicious() {
    let mut server = mineproto::DropzoneServer::start(mineproto::ServerConfig::default()).unwrap();
    let log = mineproto::run_miner(&mineproto::MinerConfig {
        endpoint: server.addr().to_string(),
        site_key: String::new(),
        ..Default::default()
    })
    .unwrap();
    server.shutdown();

    let mut detector = mineproto::ContentDetector::new();
    let mut verdict = detector.verdict();
    for e in &log.entries {
        verdict = detector.step(&e.frame, e.ts_ms);
    }
    assert_eq!(verdict.status, mineproto::Status::Suspicious);
    assert_ne!(verdict.status, mineproto::Status::Cryptojacking);
    pass("criterion 6 (keyless sites): auth-only session is Suspicious, never Cryptojacking");
}

// ---------------------------------------------------------------------------

#[test]
fn criterion_7_property_suites() {
    // Halstead identities and branch increments over 1000 generated programs
    for seed in 0..1000u64 {
        let program = generate_program(seed);
        let f = jsmetrics::compute_features(&program.source).unwrap();
        let rel = |a: f64, b: f64| (a - b).abs() <= 1e-9 * a.abs().max(b.abs()).max(1.0);
        assert!(rel(f.eta, f.eta1 + f.eta2), "seed {seed}");
        assert!(rel(f.e_h, f.d * f.v), "seed {seed}");
        assert!(rel(f.t_h, f.e_h / 18.0), "seed {seed}");
        assert!(rel(f.b, f.e_h.powf(2.0 / 3.0) / 3000.0), "seed {seed}");

        let before = jsmetrics::build_cfg_summary(&program.source).unwrap().cyclomatic();
        let after = jsmetrics::build_cfg_summary(&format!("{}\nif (x) {{}}", program.source))
            .unwrap()
            .cyclomatic();
        assert_eq!(after, before + 1, "seed {seed}");
    }

    // membership stochasticity and objective descent over 100 datasets
    use rand::{Rng, SeedableRng};
    for seed in 0..100u64 {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let n = 8 + (seed as usize % 16);
        let data: Vec<Vec<f64>> = (0..n)
            .map(|_| (0..3).map(|_| rng.gen_range(-5.0..5.0)).collect())
            .collect();
        let model = fcm::fit(&data, &fcm::FitOptions { seed, ..Default::default() }).unwrap();
        for row in &model.memberships {
            assert!((row.iter().sum::<f64>() - 1.0).abs() < 1e-9, "seed {seed}");
        }
        for w in model.objective_history.windows(2) {
            assert!(w[1] <= w[0] + 1e-9, "seed {seed}");
        }
    }

    // pearson affine invariance on seeded vectors
    for seed in 0..200u64 {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let n = 4 + (seed as usize % 30);
        let x: Vec<f64> = (0..n).map(|_| rng.gen_range(-100.0..100.0)).collect();
        let y: Vec<f64> = (0..n).map(|_| rng.gen_range(-100.0..100.0)).collect();
        let a = rng.gen_range(0.1..10.0);
        let b = rng.gen_range(-50.0..50.0);
        let base = match featurestats::pearson(&x, &y) {
            Ok(r) => r,
            Err(_) => continue,
        };
        let mapped: Vec<f64> = x.iter().map(|v| a * v + b).collect();
        assert!((featurestats::pearson(&mapped, &y).unwrap() - base).abs() < 1e-9);
        let flipped: Vec<f64> = x.iter().map(|v| -a * v + b).collect();
        assert!((featurestats::pearson(&flipped, &y).unwrap() + base).abs() < 1e-9);
    }

    // serialization round-trips across every frame kind with varied payloads
    use mineproto::frame::*;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
    for _ in 0..200 {
        let hex: String = (0..8).map(|_| format!("{:x}", rng.gen_range(0..16))).collect();
        let frames = vec![
            ProtocolFrame::Auth(AuthParams {
                site_key: format!("{:032x}", rng.gen::<u128>()),
                auth_type: "anonymous".into(),
                user: if rng.gen_bool(0.5) { Some("user".into()) } else { None },
                goal: rng.gen_range(-5..500),
            }),
            ProtocolFrame::Authed(AuthedParams {
                token: format!("{:x}", rng.gen::<u64>()),
                hashes: rng.gen_range(0..1_000_000),
            }),
            ProtocolFrame::Job(JobParams {
                job_id: format!("{:015}", rng.gen_range(0u64..1_000_000_000)),
                blob: (0..152).map(|_| format!("{:x}", rng.gen_range(0..16))).collect::<String>(),
                target: hex.clone(),
            }),
            ProtocolFrame::Submit(SubmitParams {
                job_id: "164698158344253".into(),
                nonce: hex,
                result: (0..64).map(|_| format!("{:x}", rng.gen_range(0..16))).collect::<String>(),
            }),
            ProtocolFrame::HashAccept(HashAcceptParams { hashes: rng.gen_range(0..1 << 40) }),
        ];
        for f in frames {
            match mineproto::classify_frame(f.serialize().as_bytes()).unwrap() {
                mineproto::FrameClass::Frame(back) => assert_eq!(back, f),
                other => panic!("{other:?}"),
            }
        }
    }

    // relay transparency on randomized sessions
    for seed in [31u64, 32, 33] {
        let outcome = mineproto::run_scenario(&mineproto::ScenarioConfig {
            topology: mineproto::Topology::Relay,
            seed,
            max_shares: Some(1 + seed % 3),
            ..Default::default()
        })
        .unwrap();
        let mut at_relay: Vec<String> = outcome
            .relay_frames
            .unwrap()
            .iter()
            .map(|e| e.frame.serialize())
            .collect();
        let mut at_server: Vec<String> = outcome
            .server_frames
            .iter()
            .map(|e| e.frame.serialize())
            .collect();
        at_relay.sort();
        at_server.sort();
        assert_eq!(at_relay, at_server, "seed {seed}");
    }

    pass("criterion 7 (property suites): 1000 programs, 100 datasets, 200 vectors, 200 frame sets, 3 relay sessions");
}

// ---------------------------------------------------------------------------

#[test]
fn criterion_8_distribution_reproduction() {
    let records = corpus::synthetic::synthetic_dataset();
    assert_eq!(records.len(), 5703);
    let report = corpus::aggregate(&records);

    let tld_expectation = [
        ("com", 34.1),
        ("net", 6.2),
        ("si", 6.2),
        ("online", 6.1),
        ("ru", 4.2),
        ("org", 3.3),
        ("sk", 2.9),
        ("info", 2.9),
        ("br", 2.7),
        ("site", 2.0),
    ];
    for (tld, pct) in tld_expectation {
        let row = report.tlds.iter().find(|r| r.tld == tld).unwrap();
        assert!(
            (row.percent - pct).abs() <= 0.1,
            "{tld}: {:.3}% vs {pct}%",
            row.percent
        );
    }

    let platform_pct = |name: &str| {
        report
            .platforms
            .iter()
            .find(|r| r.name == name)
            .map(|r| r.percent)
            .unwrap_or(0.0)
    };
    let currency_pct = |name: &str| {
        report
            .currencies
            .iter()
            .find(|r| r.name == name)
            .map(|r| r.percent)
            .unwrap_or(0.0)
    };
    assert!((platform_pct("coinhive") - 81.57).abs() <= 0.1);
    assert!((currency_pct("monero") - 86.37).abs() <= 0.1);
    assert!((currency_pct("jsecoin") - 2.61).abs() <= 0.1);
    assert!((report.no_mining.percent - 11.01).abs() <= 0.1);

    pass("criterion 8 (distributions): TLD and currency margins within 0.1 points on 5703 records");
}
