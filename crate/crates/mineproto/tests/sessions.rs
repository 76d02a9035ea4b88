//! End-to-end sessions over real sockets: dropzone + miner, with and
//! without the relay, and both detectors.

use mineproto::{
    credit_per_share, parse_target, run_miner, run_scenario, validate_log, DropzoneServer,
    FrameKind, MinerConfig, ProtocolFrame, ScenarioConfig, ServerConfig, Status, Topology,
};

fn server(target: &str) -> DropzoneServer {
    DropzoneServer::start(ServerConfig {
        bind: "127.0.0.1:0".into(),
        target: target.into(),
        seed: 42,
    })
    .unwrap()
}

fn miner_config(endpoint: String) -> MinerConfig {
    MinerConfig {
        endpoint,
        site_key: "0123456789abcdef0123456789abcdef".into(),
        throttle: 0.5,
        hash_budget: 500_000,
        max_shares: Some(3),
        max_duration_ms: None,
        slice_ms: 5,
        seed: 4,
    }
}

#[test]
fn direct_session_credits_256_per_share_at_the_easy_target() {
    let mut srv = server("ffffff00");
    let log = run_miner(&miner_config(srv.addr().to_string())).unwrap();
    assert!(log.error.is_none(), "{:?}", log.error);
    assert!(log.shares_accepted >= 1, "no shares found in budget");
    // every accepted share credits exactly floor(2^32 / 0x00ffffff) = 256
    assert_eq!(log.accepted_hashes, 256 * log.shares_accepted);
    assert_eq!(
        srv.balance(&log.site_key),
        credit_per_share(parse_target("ffffff00").unwrap()) * log.shares_accepted
    );
    // the log replays cleanly through the state machine
    let state = validate_log(&log.entries, &log.site_key).unwrap();
    assert_eq!(state.accepted_hashes, log.accepted_hashes);
    srv.shutdown();
}

#[test]
fn first_authed_for_a_fresh_key_reports_zero() {
    let mut srv = server("ffffff00");
    let log = run_miner(&miner_config(srv.addr().to_string())).unwrap();
    let authed = log
        .entries
        .iter()
        .find(|e| e.frame.kind() == FrameKind::Authed)
        .unwrap();
    match &authed.frame {
        ProtocolFrame::Authed(p) => assert_eq!(p.hashes, 0),
        _ => unreachable!(),
    }
    srv.shutdown();
}

#[test]
fn parallel_sessions_accumulate_into_the_same_key_balance() {
    let mut srv = server("ffffffff");
    let addr = srv.addr().to_string();
    let mk = |seed: u64| MinerConfig {
        seed,
        max_shares: Some(2),
        ..miner_config(addr.clone())
    };
    let a = std::thread::spawn({
        let cfg = mk(1);
        move || run_miner(&cfg).unwrap()
    });
    let b = std::thread::spawn({
        let cfg = mk(2);
        move || run_miner(&cfg).unwrap()
    });
    let (la, lb) = (a.join().unwrap(), b.join().unwrap());
    assert_eq!(
        srv.balance(&la.site_key),
        la.shares_accepted + lb.shares_accepted
    );
    srv.shutdown();
}

#[test]
fn maximal_target_accepts_the_first_nonce() {
    let mut srv = server("ffffffff");
    let mut cfg = miner_config(srv.addr().to_string());
    cfg.max_shares = Some(1);
    let log = run_miner(&cfg).unwrap();
    assert_eq!(log.hashes_tried, 1, "first nonce must be a share");
    assert_eq!(log.shares_accepted, 1);
    assert_eq!(log.accepted_hashes, 1);
    srv.shutdown();
}

#[test]
fn fully_throttled_miner_never_submits() {
    let mut srv = server("ffffffff");
    let mut cfg = miner_config(srv.addr().to_string());
    cfg.throttle = 1.0;
    let log = run_miner(&cfg).unwrap();
    assert_eq!(log.hashes_tried, 0);
    assert_eq!(log.shares_submitted, 0);
    // it still authenticated and received work
    let kinds: Vec<FrameKind> = log.entries.iter().map(|e| e.frame.kind()).collect();
    assert_eq!(kinds, vec![FrameKind::Auth, FrameKind::Authed, FrameKind::Job]);
    srv.shutdown();
}

#[test]
fn keyless_session_stops_at_auth() {
    let mut srv = server("ffffff00");
    let mut cfg = miner_config(srv.addr().to_string());
    cfg.site_key = String::new();
    let log = run_miner(&cfg).unwrap();
    let kinds: Vec<FrameKind> = log.entries.iter().map(|e| e.frame.kind()).collect();
    assert_eq!(kinds, vec![FrameKind::Auth]);
    assert!(log.error.is_some());
    assert_eq!(srv.balance(""), 0);
    srv.shutdown();
}

#[test]
fn relay_scenario_is_transparent_and_splits_the_detectors() {
    let outcome = run_scenario(&ScenarioConfig {
        topology: Topology::Relay,
        ..Default::default()
    })
    .unwrap();

    // content inspection at the relay sees the protocol and flags it
    assert_eq!(outcome.content_verdict.status, Status::Cryptojacking);
    assert!(outcome.content_verdict.evidence.len() >= 3);
    // the blacklist holds the dropzone, but the miner talked to the relay
    assert_eq!(outcome.blacklist_verdict.status, Status::Clean);
    assert_ne!(outcome.miner_endpoint, outcome.dropzone_addr);

    // byte transparency: the relay observed exactly the frames the server
    // handled (as multisets of serialized frames)
    let mut at_relay: Vec<String> = outcome
        .relay_frames
        .as_ref()
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
    assert_eq!(at_relay, at_server);

    // and the credited balance matches what the miner saw
    assert_eq!(outcome.credited_hashes, outcome.miner.accepted_hashes);
}

#[test]
fn direct_scenario_trips_the_blacklist() {
    let outcome = run_scenario(&ScenarioConfig {
        topology: Topology::Direct,
        ..Default::default()
    })
    .unwrap();
    assert_eq!(outcome.blacklist_verdict.status, Status::Cryptojacking);
    assert_eq!(outcome.content_verdict.status, Status::Cryptojacking);
    assert_eq!(outcome.miner_endpoint, outcome.dropzone_addr);
}

#[test]
fn relayed_credits_match_direct_credits_for_the_same_work() {
    let direct = run_scenario(&ScenarioConfig {
        topology: Topology::Direct,
        seed: 5,
        ..Default::default()
    })
    .unwrap();
    let relayed = run_scenario(&ScenarioConfig {
        topology: Topology::Relay,
        seed: 5,
        ..Default::default()
    })
    .unwrap();
    assert_eq!(direct.credited_hashes, relayed.credited_hashes);
    assert!(direct.credited_hashes > 0);
}

#[test]
fn throttle_scales_busy_fraction_roughly_nine_to_one() {
    // an effectively unreachable target keeps share I/O out of the busy
    // measurement: pure hash/sleep duty cycling for a bounded wall time
    let measure = |alpha: f64| {
        let mut srv = server("01000000");
        let cfg = MinerConfig {
            endpoint: srv.addr().to_string(),
            site_key: "0123456789abcdef0123456789abcdef".into(),
            throttle: alpha,
            hash_budget: u64::MAX,
            max_shares: None,
            max_duration_ms: Some(800),
            slice_ms: 8,
            seed: 3,
        };
        let log = run_miner(&cfg).unwrap();
        srv.shutdown();
        log.busy_secs / (log.busy_secs + log.idle_secs)
    };
    let busy_01 = measure(0.1);
    let busy_09 = measure(0.9);
    let ratio = busy_01 / busy_09;
    assert!(
        (ratio - 9.0).abs() <= 0.9,
        "busy fractions {busy_01:.3}/{busy_09:.3}, ratio {ratio:.2}"
    );
}
