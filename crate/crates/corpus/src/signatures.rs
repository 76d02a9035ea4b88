//! Signature database for recognizing mining-script templates in HTML.
//!
//! Signatures ship as versioned, serializable config rather than hard-coded
//! patterns; the embedded defaults cover the eight platform templates seen
//! in the studied corpus. Within one page, platforms are tried in database
//! order and the first match wins.

use regex::Regex;
use serde::{Deserialize, Serialize};

use crate::record::{Currency, Platform};
use crate::CorpusError;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PlatformSignature {
    pub platform: Platform,
    pub currency: Currency,
    /// Substrings matched against `<script src=...>` URLs and inline code.
    pub script_markers: Vec<String>,
    /// Regex over inline script text recognizing the miner constructor.
    pub constructor_pattern: String,
    /// Regex whose first capture group is the site key.
    pub key_pattern: String,
    /// Regex whose first capture group is the throttle value.
    pub throttle_pattern: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SignatureDb {
    pub version: String,
    pub platforms: Vec<PlatformSignature>,
}

pub(crate) struct CompiledSignature {
    pub platform: Platform,
    pub currency: Currency,
    pub script_markers: Vec<String>,
    pub constructor: Regex,
    pub key: Regex,
    pub throttle: Regex,
}

impl SignatureDb {
    pub fn from_json(text: &str) -> Result<SignatureDb, CorpusError> {
        serde_json::from_str(text).map_err(|e| CorpusError::BadSignatureDb(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("signature db serializes")
    }

    pub(crate) fn compile(&self) -> Result<Vec<CompiledSignature>, CorpusError> {
        self.platforms
            .iter()
            .map(|p| {
                let compile = |pat: &str| {
                    Regex::new(pat).map_err(|e| {
                        CorpusError::BadSignatureDb(format!("{:?}: {e}", p.platform))
                    })
                };
                Ok(CompiledSignature {
                    platform: p.platform,
                    currency: p.currency,
                    script_markers: p.script_markers.clone(),
                    constructor: compile(&p.constructor_pattern)?,
                    key: compile(&p.key_pattern)?,
                    throttle: compile(&p.throttle_pattern)?,
                })
            })
            .collect()
    }
}

/// The bundled database, shipped as a versioned JSON file so signatures
/// can churn without code changes.
pub fn default_signature_db() -> SignatureDb {
    SignatureDb::from_json(include_str!("../signatures/default.json"))
        .expect("bundled signature database is valid")
}
