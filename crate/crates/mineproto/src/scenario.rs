//! Declarative simulation scenarios: a dropzone with a miner wired either
//! straight to it or through a relay, with both detector families run on
//! what they would each see.

use serde::{Deserialize, Serialize};

use crate::detector::{blacklist_detector, ContentDetector, DetectionVerdict};
use crate::miner::{run_miner, MinerConfig, SessionLog};
use crate::proxy::RelayProxy;
use crate::server::{DropzoneServer, ServerConfig};
use crate::state::LogEntry;
use crate::ProtoError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Topology {
    /// Miner connects straight to the dropzone.
    Direct,
    /// Miner connects to a local relay that forwards to the dropzone.
    Relay,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ScenarioConfig {
    pub topology: Topology,
    pub site_key: String,
    pub throttle: f64,
    pub target: String,
    pub hash_budget: u64,
    pub max_shares: Option<u64>,
    pub seed: u64,
    /// Extra blacklist entries beyond the dropzone itself (the dropzone
    /// address is always listed, mirroring a public miner blocklist).
    #[serde(default)]
    pub extra_blacklist: Vec<String>,
}

impl Default for ScenarioConfig {
    fn default() -> Self {
        ScenarioConfig {
            topology: Topology::Direct,
            site_key: "0123456789abcdef0123456789abcdef".into(),
            throttle: 0.5,
            target: "ffffff00".into(),
            hash_budget: 400_000,
            max_shares: Some(3),
            seed: 11,
            extra_blacklist: Vec::new(),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ScenarioOutcome {
    pub topology: Topology,
    pub dropzone_addr: String,
    /// What the miner actually connected to (the relay, if present).
    pub miner_endpoint: String,
    pub miner: SessionLog,
    pub server_frames: Vec<LogEntry>,
    pub relay_frames: Option<Vec<LogEntry>>,
    /// Content detector folded over the frames at the observation point
    /// (the relay when present, else the miner's own wire).
    pub content_verdict: DetectionVerdict,
    /// Blacklist detector applied to the miner's endpoint.
    pub blacklist_verdict: DetectionVerdict,
    pub credited_hashes: u64,
}

pub fn run_scenario(config: &ScenarioConfig) -> Result<ScenarioOutcome, ProtoError> {
    let mut server = DropzoneServer::start(ServerConfig {
        bind: "127.0.0.1:0".into(),
        target: config.target.clone(),
        seed: config.seed,
    })?;
    let dropzone_addr = server.addr().to_string();

    let mut relay = match config.topology {
        Topology::Direct => None,
        Topology::Relay => Some(RelayProxy::start("127.0.0.1:0", server.addr())?),
    };
    let miner_endpoint = relay
        .as_ref()
        .map(|r| r.addr().to_string())
        .unwrap_or_else(|| dropzone_addr.clone());

    let miner = run_miner(&MinerConfig {
        endpoint: miner_endpoint.clone(),
        site_key: config.site_key.clone(),
        throttle: config.throttle,
        hash_budget: config.hash_budget,
        max_shares: config.max_shares,
        max_duration_ms: None,
        slice_ms: 10,
        seed: config.seed.wrapping_add(1),
    })?;

    // let in-flight bytes drain before snapshotting logs
    std::thread::sleep(std::time::Duration::from_millis(50));

    let mut blacklist = vec![dropzone_addr.clone()];
    blacklist.extend(config.extra_blacklist.iter().cloned());
    let blacklist_verdict = blacklist_detector(&miner_endpoint, &blacklist);

    let relay_frames = relay.as_mut().map(|r| {
        let f = r.frame_log();
        r.shutdown();
        f
    });
    let observed = relay_frames.as_ref().unwrap_or(&miner.entries);
    let mut detector = ContentDetector::new();
    let mut content_verdict = detector.verdict();
    for e in observed {
        content_verdict = detector.step(&e.frame, e.ts_ms);
    }

    let credited_hashes = server.balance(&config.site_key);
    let server_frames = server.frame_log();
    server.shutdown();

    Ok(ScenarioOutcome {
        topology: config.topology,
        dropzone_addr,
        miner_endpoint,
        miner,
        server_frames,
        relay_frames,
        content_verdict,
        blacklist_verdict,
        credited_hashes,
    })
}
