//! Session state machine and frame logs.

use serde::{Deserialize, Serialize};

use crate::frame::{Direction, FrameKind, ProtocolFrame};
use crate::ProtoError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Phase {
    Idle,
    AuthSent,
    Authed,
    JobIssued,
    Mining,
    Credited,
}

/// One miner session as seen from either endpoint. Legal flow:
/// Idle -> AuthSent -> Authed -> JobIssued -> (Mining -> Credited ->
/// JobIssued ...), with submits allowed repeatedly inside a round.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SessionState {
    pub phase: Phase,
    pub accepted_hashes: u64,
    pub site_key: String,
    pub throttle: f64,
}

impl SessionState {
    pub fn new(site_key: impl Into<String>, throttle: f64) -> Self {
        SessionState {
            phase: Phase::Idle,
            accepted_hashes: 0,
            site_key: site_key.into(),
            throttle,
        }
    }

    /// Advance on one observed frame. Frames must carry their fixed
    /// direction; anything out of order is a protocol violation.
    pub fn observe(&mut self, frame: &ProtocolFrame) -> Result<(), ProtoError> {
        let kind = frame.kind();
        let next = match (self.phase, kind) {
            (Phase::Idle, FrameKind::Auth) => Phase::AuthSent,
            (Phase::AuthSent, FrameKind::Authed) => Phase::Authed,
            (Phase::Authed, FrameKind::Job) | (Phase::Credited, FrameKind::Job) => {
                Phase::JobIssued
            }
            // a job stays active across accepted shares, so submits are
            // legal again right after a credit
            (Phase::JobIssued, FrameKind::Submit)
            | (Phase::Mining, FrameKind::Submit)
            | (Phase::Credited, FrameKind::Submit) => Phase::Mining,
            (Phase::Mining, FrameKind::HashAccept) => Phase::Credited,
            (phase, kind) => {
                return Err(ProtoError::IllegalTransition {
                    phase: format!("{phase:?}"),
                    frame: format!("{kind:?}"),
                })
            }
        };
        if let ProtocolFrame::HashAccept(p) = frame {
            if p.hashes < self.accepted_hashes {
                return Err(ProtoError::IllegalTransition {
                    phase: format!("{:?}", self.phase),
                    frame: "HashAccept with shrinking balance".to_string(),
                });
            }
            self.accepted_hashes = p.hashes;
        }
        self.phase = next;
        Ok(())
    }
}

/// One line of a session log: monotonic timestamp, who sent it, the frame.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LogEntry {
    pub ts_ms: f64,
    pub direction: Direction,
    pub frame: ProtocolFrame,
}

/// Serialize entries as JSONL, one frame per line.
pub fn log_to_jsonl(entries: &[LogEntry]) -> String {
    let mut out = String::new();
    for e in entries {
        out.push_str(&serde_json::to_string(e).expect("log entries serialize"));
        out.push('\n');
    }
    out
}

pub fn log_from_jsonl(text: &str) -> Result<Vec<LogEntry>, ProtoError> {
    text.lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| serde_json::from_str(l).map_err(|e| ProtoError::Malformed(e.to_string())))
        .collect()
}

/// Replay a frame log through the state machine, checking order, frame
/// directions, and timestamp monotonicity. Returns the final state.
pub fn validate_log(entries: &[LogEntry], site_key: &str) -> Result<SessionState, ProtoError> {
    let mut state = SessionState::new(site_key, 0.0);
    let mut last_ts = f64::NEG_INFINITY;
    for e in entries {
        if e.ts_ms < last_ts {
            return Err(ProtoError::Malformed(format!(
                "timestamp regression at {}",
                e.ts_ms
            )));
        }
        last_ts = e.ts_ms;
        if e.direction != e.frame.direction() {
            return Err(ProtoError::Malformed(format!(
                "frame {:?} logged with wrong direction",
                e.frame.kind()
            )));
        }
        state.observe(&e.frame)?;
    }
    Ok(state)
}
