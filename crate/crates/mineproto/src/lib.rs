//! Simulation of the in-browser mining WebSocket protocol: typed frames, a
//! dropzone server, a throttled miner client, a transparent relay, and the
//! blacklist/content detector pair. Wire format is one JSON text frame per
//! line over TCP.

pub mod detector;
pub mod frame;
pub mod miner;
pub mod proxy;
pub mod scenario;
pub mod server;
pub mod share;
pub mod state;

pub use detector::{blacklist_detector, parse_blacklist, ContentDetector, DetectionVerdict, DetectorKind, Status};
pub use frame::{classify_frame, expected_byte_length, Direction, FrameClass, FrameKind, ProtocolFrame};
pub use miner::{run_miner, MinerConfig, SessionLog};
pub use proxy::RelayProxy;
pub use scenario::{run_scenario, ScenarioConfig, ScenarioOutcome, Topology};
pub use server::{DropzoneServer, ServerConfig};
pub use share::{credit_per_share, format_target, parse_target, Sha256Hasher, ShareHasher};
pub use state::{log_from_jsonl, log_to_jsonl, validate_log, LogEntry, Phase, SessionState};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProtoError {
    #[error("malformed frame: {0}")]
    Malformed(String),
    #[error("illegal transition: {frame} in phase {phase}")]
    IllegalTransition { phase: String, frame: String },
    #[error("bad target '{0}'")]
    BadTarget(String),
    #[error("bind failed: {0}")]
    Bind(String),
    #[error("connect failed: {0}")]
    Connect(String),
    #[error("io: {0}")]
    Io(String),
}
