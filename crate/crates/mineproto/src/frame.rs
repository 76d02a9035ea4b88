//! Typed frames of the miner/dropzone WebSocket protocol and their JSON
//! wire format: one text frame per message, top-level `type` and `params`.

use serde::{Deserialize, Serialize};

use crate::ProtoError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Direction {
    ClientToServer,
    ServerToClient,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AuthParams {
    pub site_key: String,
    #[serde(rename = "type")]
    pub auth_type: String,
    pub user: Option<String>,
    pub goal: i64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AuthedParams {
    pub token: String,
    pub hashes: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JobParams {
    pub job_id: String,
    pub blob: String,
    pub target: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SubmitParams {
    pub job_id: String,
    pub nonce: String,
    pub result: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HashAcceptParams {
    pub hashes: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", content = "params", rename_all = "snake_case")]
pub enum ProtocolFrame {
    Auth(AuthParams),
    Authed(AuthedParams),
    Job(JobParams),
    Submit(SubmitParams),
    HashAccept(HashAcceptParams),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FrameKind {
    Auth,
    Authed,
    Job,
    Submit,
    HashAccept,
}

impl ProtocolFrame {
    pub fn kind(&self) -> FrameKind {
        match self {
            ProtocolFrame::Auth(_) => FrameKind::Auth,
            ProtocolFrame::Authed(_) => FrameKind::Authed,
            ProtocolFrame::Job(_) => FrameKind::Job,
            ProtocolFrame::Submit(_) => FrameKind::Submit,
            ProtocolFrame::HashAccept(_) => FrameKind::HashAccept,
        }
    }

    /// The protocol fixes who sends each frame kind.
    pub fn direction(&self) -> Direction {
        match self.kind() {
            FrameKind::Auth | FrameKind::Submit => Direction::ClientToServer,
            FrameKind::Authed | FrameKind::Job | FrameKind::HashAccept => {
                Direction::ServerToClient
            }
        }
    }

    pub fn serialize(&self) -> String {
        serde_json::to_string(self).expect("frame serialization cannot fail")
    }

    pub fn byte_length(&self) -> usize {
        self.serialize().len()
    }
}

/// Typical serialized sizes (bytes) of canonical frames, recorded as
/// metadata; real sizes vary with key and token contents, so consumers
/// should treat these as centers of a +/-15% band.
pub fn expected_byte_length(kind: FrameKind) -> usize {
    match kind {
        FrameKind::Auth => 112,
        FrameKind::Authed => 50,
        FrameKind::Job => 234,
        FrameKind::Submit => 156,
        FrameKind::HashAccept => 48,
    }
}

/// Outcome of classifying an arbitrary payload.
#[derive(Debug, Clone, PartialEq)]
pub enum FrameClass {
    Frame(ProtocolFrame),
    /// Parseable or not, the payload is not of this protocol.
    NotProtocol,
}

/// Classify a payload: a JSON object with a recognized `type` and a
/// schema-complete `params` object is a frame; a recognized `type` with a
/// missing, extra, or mistyped parameter is `Malformed`; everything else is
/// `NotProtocol`.
pub fn classify_frame(payload: &[u8]) -> Result<FrameClass, ProtoError> {
    let value: serde_json::Value = match serde_json::from_slice(payload) {
        Ok(v) => v,
        Err(_) => return Ok(FrameClass::NotProtocol),
    };
    let kind = match value.get("type").and_then(|t| t.as_str()) {
        Some(k) => k.to_string(),
        None => return Ok(FrameClass::NotProtocol),
    };
    if !matches!(kind.as_str(), "auth" | "authed" | "job" | "submit" | "hash_accept") {
        return Ok(FrameClass::NotProtocol);
    }
    match serde_json::from_value::<ProtocolFrame>(value) {
        Ok(frame) => Ok(FrameClass::Frame(frame)),
        Err(e) => Err(ProtoError::Malformed(format!("{kind}: {e}"))),
    }
}
