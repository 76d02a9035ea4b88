//! The miner client: authenticates, receives a job, duty-cycles nonce
//! search according to the throttle parameter, and submits valid shares.

use std::io::{BufRead, BufReader, Write};
use std::net::TcpStream;
use std::time::{Duration, Instant};

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::frame::{AuthParams, FrameClass, ProtocolFrame, SubmitParams};
use crate::share::{hex_digest, is_valid_share, parse_target, Sha256Hasher, ShareHasher};
use crate::state::LogEntry;
use crate::ProtoError;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MinerConfig {
    pub endpoint: String,
    pub site_key: String,
    /// Throttle alpha in [0, 1]: fraction of the duty cycle left idle.
    /// At 1.0 the miner performs no work at all.
    pub throttle: f64,
    /// Stop after this many digest evaluations.
    pub hash_budget: u64,
    /// Optionally stop earlier after this many accepted shares.
    pub max_shares: Option<u64>,
    /// Optionally stop once this much wall time has elapsed.
    pub max_duration_ms: Option<u64>,
    /// Length of one busy slice in milliseconds.
    pub slice_ms: u64,
    pub seed: u64,
}

impl Default for MinerConfig {
    fn default() -> Self {
        MinerConfig {
            endpoint: String::new(),
            site_key: "0123456789abcdef0123456789abcdef".into(),
            throttle: 0.5,
            hash_budget: 200_000,
            max_shares: Some(4),
            max_duration_ms: None,
            slice_ms: 10,
            seed: 99,
        }
    }
}

/// Ordered record of one miner session.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SessionLog {
    pub endpoint: String,
    pub site_key: String,
    pub throttle: f64,
    pub entries: Vec<LogEntry>,
    pub hashes_tried: u64,
    pub shares_submitted: u64,
    pub shares_accepted: u64,
    /// Final credited balance reported by the server, 0 if never credited.
    pub accepted_hashes: u64,
    pub busy_secs: f64,
    pub idle_secs: f64,
    /// A session-level failure (connection refused, server hung up early).
    pub error: Option<String>,
}

pub fn run_miner(config: &MinerConfig) -> Result<SessionLog, ProtoError> {
    let started = Instant::now();
    let mut log = SessionLog {
        endpoint: config.endpoint.clone(),
        site_key: config.site_key.clone(),
        throttle: config.throttle,
        entries: Vec::new(),
        hashes_tried: 0,
        shares_submitted: 0,
        shares_accepted: 0,
        accepted_hashes: 0,
        busy_secs: 0.0,
        idle_secs: 0.0,
        error: None,
    };

    let stream = TcpStream::connect(&config.endpoint)
        .map_err(|e| ProtoError::Connect(format!("{}: {e}", config.endpoint)))?;
    let mut writer = stream.try_clone().map_err(|e| ProtoError::Io(e.to_string()))?;
    let mut reader = BufReader::new(stream);

    let record = |log: &mut SessionLog, frame: &ProtocolFrame| {
        log.entries.push(LogEntry {
            ts_ms: started.elapsed().as_secs_f64() * 1e3,
            direction: frame.direction(),
            frame: frame.clone(),
        });
    };

    let auth = ProtocolFrame::Auth(AuthParams {
        site_key: config.site_key.clone(),
        auth_type: "anonymous".into(),
        user: None,
        goal: 0,
    });
    let mut line = auth.serialize();
    line.push('\n');
    writer
        .write_all(line.as_bytes())
        .map_err(|e| ProtoError::Io(e.to_string()))?;
    record(&mut log, &auth);

    let read_frame = |reader: &mut BufReader<TcpStream>| -> Result<Option<ProtocolFrame>, ProtoError> {
        let mut buf = String::new();
        let n = reader
            .read_line(&mut buf)
            .map_err(|e| ProtoError::Io(e.to_string()))?;
        if n == 0 {
            return Ok(None);
        }
        match crate::frame::classify_frame(buf.trim_end().as_bytes())? {
            FrameClass::Frame(f) => Ok(Some(f)),
            FrameClass::NotProtocol => Err(ProtoError::Malformed(buf)),
        }
    };

    // authed
    match read_frame(&mut reader)? {
        Some(f @ ProtocolFrame::Authed(_)) => {
            if let ProtocolFrame::Authed(p) = &f {
                log.accepted_hashes = p.hashes;
            }
            record(&mut log, &f);
        }
        Some(other) => {
            record(&mut log, &other);
            log.error = Some("expected authed".into());
            return Ok(log);
        }
        None => {
            log.error = Some("server closed before authed".into());
            return Ok(log);
        }
    }

    // job
    let (job_id, blob, target) = match read_frame(&mut reader)? {
        Some(f @ ProtocolFrame::Job(_)) => {
            let (id, blob, target) = match &f {
                ProtocolFrame::Job(p) => (p.job_id.clone(), p.blob.clone(), p.target.clone()),
                _ => unreachable!(),
            };
            record(&mut log, &f);
            (id, blob, target)
        }
        Some(other) => {
            record(&mut log, &other);
            log.error = Some("expected job".into());
            return Ok(log);
        }
        None => {
            log.error = Some("server closed before job".into());
            return Ok(log);
        }
    };
    let target_value = parse_target(&target)?;

    let hasher = Sha256Hasher;
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let slice = Duration::from_millis(config.slice_ms.max(1));
    let alpha = config.throttle.clamp(0.0, 1.0);

    let deadline = config
        .max_duration_ms
        .map(|ms| started + Duration::from_millis(ms));
    let expired = |now: Instant| deadline.is_some_and(|d| now >= d);

    'mining: while alpha < 1.0 && log.hashes_tried < config.hash_budget {
        if expired(Instant::now()) {
            break;
        }
        let slice_start = Instant::now();
        while slice_start.elapsed() < slice {
            if log.hashes_tried >= config.hash_budget {
                break;
            }
            let nonce = format!("{:08x}", rng.gen::<u32>());
            let digest = hasher.digest(&blob, &nonce);
            log.hashes_tried += 1;
            if is_valid_share(&digest, target_value) {
                let submit = ProtocolFrame::Submit(SubmitParams {
                    job_id: job_id.clone(),
                    nonce,
                    result: hex_digest(&digest),
                });
                let mut line = submit.serialize();
                line.push('\n');
                if writer.write_all(line.as_bytes()).is_err() {
                    log.error = Some("write failed mid-session".into());
                    break 'mining;
                }
                record(&mut log, &submit);
                log.shares_submitted += 1;
                match read_frame(&mut reader)? {
                    Some(f @ ProtocolFrame::HashAccept(_)) => {
                        if let ProtocolFrame::HashAccept(p) = &f {
                            log.accepted_hashes = p.hashes;
                        }
                        log.shares_accepted += 1;
                        record(&mut log, &f);
                    }
                    Some(other) => {
                        record(&mut log, &other);
                        log.error = Some("expected hash_accept".into());
                        break 'mining;
                    }
                    None => {
                        log.error = Some("server closed after submit".into());
                        break 'mining;
                    }
                }
                if log.shares_accepted >= log_max_shares(config) {
                    break 'mining;
                }
            }
        }
        let busy = slice_start.elapsed();
        log.busy_secs += busy.as_secs_f64();
        if alpha > 0.0 {
            let pause = busy.mul_f64(alpha / (1.0 - alpha).max(1e-9));
            std::thread::sleep(pause);
            log.idle_secs += pause.as_secs_f64();
        }
    }
    Ok(log)
}

fn log_max_shares(config: &MinerConfig) -> u64 {
    config.max_shares.unwrap_or(u64::MAX)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unreachable_endpoint_is_a_connect_error() {
        let cfg = MinerConfig {
            endpoint: "127.0.0.1:1".into(),
            ..Default::default()
        };
        assert!(matches!(run_miner(&cfg), Err(ProtoError::Connect(_))));
    }
}
