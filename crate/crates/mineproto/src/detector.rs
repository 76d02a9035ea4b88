//! The two detector families: endpoint blacklisting (defeated by relays)
//! and content inspection of the frames themselves.

use serde::{Deserialize, Serialize};

use crate::frame::{FrameKind, ProtocolFrame};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Clean,
    Suspicious,
    Cryptojacking,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DetectorKind {
    Blacklist,
    Content,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Evidence {
    pub kind: FrameKind,
    pub ts_ms: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DetectionVerdict {
    pub status: Status,
    pub evidence: Vec<Evidence>,
    pub detector: DetectorKind,
}

/// Stateful fold over observed frames. An `auth` alone is only suspicious:
/// keyless pages open the socket and authenticate without ever mining, so
/// flagging on sight of the connection is a false positive. The
/// mining verdict requires the auth/authed/job exchange to complete;
/// submits and accepts only strengthen the evidence.
#[derive(Debug, Clone, Default)]
pub struct ContentDetector {
    seen_auth: bool,
    seen_authed: bool,
    seen_job: bool,
    evidence: Vec<Evidence>,
}

impl ContentDetector {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn step(&mut self, frame: &ProtocolFrame, ts_ms: f64) -> DetectionVerdict {
        let kind = frame.kind();
        match kind {
            FrameKind::Auth => self.seen_auth = true,
            FrameKind::Authed => self.seen_authed = true,
            FrameKind::Job => self.seen_job = true,
            FrameKind::Submit | FrameKind::HashAccept => {}
        }
        self.evidence.push(Evidence { kind, ts_ms });
        self.verdict()
    }

    pub fn verdict(&self) -> DetectionVerdict {
        let status = if self.seen_auth && self.seen_authed && self.seen_job {
            Status::Cryptojacking
        } else if self.seen_auth {
            Status::Suspicious
        } else {
            Status::Clean
        };
        DetectionVerdict {
            status,
            evidence: self.evidence.clone(),
            detector: DetectorKind::Content,
        }
    }
}

/// Normalize an endpoint ("scheme://host:port/path", "host:port", or bare
/// host) down to its host and optional port.
fn endpoint_host(endpoint: &str) -> (&str, Option<&str>) {
    let rest = endpoint
        .split_once("://")
        .map(|(_, r)| r)
        .unwrap_or(endpoint);
    let authority = rest.split(['/', '?']).next().unwrap_or(rest);
    match authority.rsplit_once(':') {
        Some((host, port)) if port.chars().all(|c| c.is_ascii_digit()) && !port.is_empty() => {
            (host, Some(port))
        }
        _ => (authority, None),
    }
}

/// One blacklist pattern matches an endpoint when it equals the host, the
/// full host:port, or is a parent domain of the host.
fn pattern_matches(pattern: &str, host: &str, port: Option<&str>) -> bool {
    let (phost, pport) = endpoint_host(pattern);
    if let (Some(pp), Some(hp)) = (pport, port) {
        if pp != hp {
            return false;
        }
    } else if pport.is_some() {
        return false;
    }
    host == phost || host.ends_with(&format!(".{phost}"))
}

/// Flag an endpoint if and only if it matches the list. Purely a function
/// of the endpoint identity: traffic relayed through an unlisted host is
/// invisible to it by construction.
pub fn blacklist_detector(endpoint: &str, blacklist: &[String]) -> DetectionVerdict {
    let (host, port) = endpoint_host(endpoint);
    let hit = blacklist
        .iter()
        .any(|p| pattern_matches(p.trim(), host, port));
    DetectionVerdict {
        status: if hit {
            Status::Cryptojacking
        } else {
            Status::Clean
        },
        evidence: Vec::new(),
        detector: DetectorKind::Blacklist,
    }
}

/// Parse a newline-delimited blacklist file body.
pub fn parse_blacklist(text: &str) -> Vec<String> {
    text.lines()
        .map(|l| l.trim())
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| l.to_string())
        .collect()
}
