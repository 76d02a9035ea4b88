//! Share arithmetic: target encoding, digest, validity, and credit.
//!
//! The job target is the hex encoding of four little-endian bytes; the
//! numeric target is therefore `u32::from_le_bytes` of the decoded bytes,
//! so the easiest target string "ffffff00" denotes 0x00ffffff and credits
//! floor(2^32 / 0x00ffffff) = 256 hashes per accepted share. A share is
//! valid when the leading four digest bytes, read the same little-endian
//! way, do not exceed the numeric target.

use sha2::{Digest, Sha256};

use crate::ProtoError;

/// Decode an 8-hex-char little-endian target string to its numeric value.
pub fn parse_target(target: &str) -> Result<u32, ProtoError> {
    if target.len() != 8 || !target.chars().all(|c| c.is_ascii_hexdigit()) {
        return Err(ProtoError::BadTarget(target.to_string()));
    }
    let mut bytes = [0u8; 4];
    for (i, byte) in bytes.iter_mut().enumerate() {
        *byte = u8::from_str_radix(&target[2 * i..2 * i + 2], 16)
            .map_err(|_| ProtoError::BadTarget(target.to_string()))?;
    }
    let value = u32::from_le_bytes(bytes);
    if value == 0 {
        return Err(ProtoError::BadTarget(target.to_string()));
    }
    Ok(value)
}

/// Encode a numeric target back to its little-endian hex string.
pub fn format_target(value: u32) -> String {
    value
        .to_le_bytes()
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect()
}

/// Hashes credited for one accepted share at the given numeric target.
pub fn credit_per_share(target: u32) -> u64 {
    (1u64 << 32) / u64::from(target)
}

/// The proof-of-work digest is pluggable; protocol fidelity does not
/// depend on which hash backs it.
pub trait ShareHasher: Send + Sync {
    fn digest(&self, blob: &str, nonce: &str) -> [u8; 32];
}

/// Default digest: SHA-256 over the blob and nonce strings.
#[derive(Debug, Clone, Copy, Default)]
pub struct Sha256Hasher;

impl ShareHasher for Sha256Hasher {
    fn digest(&self, blob: &str, nonce: &str) -> [u8; 32] {
        let mut h = Sha256::new();
        h.update(blob.as_bytes());
        h.update(nonce.as_bytes());
        h.finalize().into()
    }
}

/// Leading four digest bytes as a little-endian integer.
pub fn digest_value(digest: &[u8; 32]) -> u32 {
    u32::from_le_bytes([digest[0], digest[1], digest[2], digest[3]])
}

pub fn is_valid_share(digest: &[u8; 32], target: u32) -> bool {
    digest_value(digest) <= target
}

pub fn hex_digest(digest: &[u8; 32]) -> String {
    digest.iter().map(|b| format!("{b:02x}")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn easy_target_decodes_to_difficulty_256() {
        let t = parse_target("ffffff00").unwrap();
        assert_eq!(t, 0x00ff_ffff);
        assert_eq!(credit_per_share(t), 256);
    }

    #[test]
    fn maximal_target_accepts_everything_at_credit_one() {
        let t = parse_target("ffffffff").unwrap();
        assert_eq!(t, u32::MAX);
        assert_eq!(credit_per_share(t), 1);
        assert!(is_valid_share(&[0xff; 32], t));
    }

    #[test]
    fn target_round_trips_through_its_encoding() {
        for t in ["ffffff00", "ffffffff", "80000000", "a1b2c3d4"] {
            let v = parse_target(t).unwrap();
            assert_eq!(format_target(v), t);
        }
    }

    #[test]
    fn bad_targets_are_rejected() {
        assert!(parse_target("xyz").is_err());
        assert!(parse_target("ffffff0").is_err());
        assert!(parse_target("00000000").is_err());
    }

    #[test]
    fn digest_is_deterministic_and_validity_matches_leading_bytes() {
        let h = Sha256Hasher;
        let d1 = h.digest("aabb", "cfe539d3");
        let d2 = h.digest("aabb", "cfe539d3");
        assert_eq!(d1, d2);
        assert_eq!(hex_digest(&d1).len(), 64);
        let value = digest_value(&d1);
        assert!(is_valid_share(&d1, value));
        if value > 0 {
            assert!(!is_valid_share(&d1, value - 1));
        }
    }

    #[test]
    fn hard_targets_credit_more_per_share() {
        // twice as hard, twice the credit
        let easy = parse_target("ffffff00").unwrap();
        let hard = easy / 2;
        assert_eq!(credit_per_share(hard), 512);
    }

    #[test]
    fn little_endian_reading_is_applied_uniformly() {
        // "80000000" is the byte sequence 80 00 00 00, i.e. the tiny value
        // 0x80, a very hard target: 2^32 / 128 hashes per share. Reading it
        // big-endian (2^31, credit 2) would break the difficulty-256
        // meaning of "ffffff00", so the little-endian rule wins everywhere.
        let t = parse_target("80000000").unwrap();
        assert_eq!(t, 0x80);
        assert_eq!(credit_per_share(t), 1 << 25);
    }
}
