//! The dropzone: a TCP server speaking one JSON frame per line. It
//! authenticates sessions, issues jobs, verifies submitted shares, and
//! credits a shared per-site-key ledger.

use std::collections::HashMap;
use std::io::{BufRead, BufReader, Write};
use std::net::{SocketAddr, TcpListener, TcpStream};
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::sync::{Arc, Mutex};
use std::thread::JoinHandle;
use std::time::Instant;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::frame::{
    AuthedParams, FrameClass, HashAcceptParams, JobParams, ProtocolFrame,
};
use crate::share::{credit_per_share, hex_digest, is_valid_share, parse_target, Sha256Hasher, ShareHasher};
use crate::state::LogEntry;
use crate::ProtoError;

#[derive(Debug, Clone)]
pub struct ServerConfig {
    /// Bind address; use port 0 for an ephemeral port.
    pub bind: String,
    /// Little-endian hex target issued with every job.
    pub target: String,
    pub seed: u64,
}

impl Default for ServerConfig {
    fn default() -> Self {
        ServerConfig {
            bind: "127.0.0.1:0".into(),
            target: "ffffff00".into(),
            seed: 7,
        }
    }
}

type Ledger = Arc<Mutex<HashMap<String, u64>>>;
type FrameLog = Arc<Mutex<Vec<LogEntry>>>;

pub struct DropzoneServer {
    addr: SocketAddr,
    ledger: Ledger,
    frames: FrameLog,
    shutdown: Arc<AtomicBool>,
    accept_thread: Option<JoinHandle<()>>,
}

struct Shared {
    ledger: Ledger,
    frames: FrameLog,
    target_value: u32,
    target_hex: String,
    job_counter: AtomicU64,
    seed: u64,
    started: Instant,
    hasher: Sha256Hasher,
}

impl DropzoneServer {
    pub fn start(config: ServerConfig) -> Result<Self, ProtoError> {
        let target_value = parse_target(&config.target)?;
        let listener = TcpListener::bind(&config.bind)
            .map_err(|e| ProtoError::Bind(format!("{}: {e}", config.bind)))?;
        let addr = listener.local_addr().map_err(|e| ProtoError::Bind(e.to_string()))?;
        let shutdown = Arc::new(AtomicBool::new(false));
        let shared = Arc::new(Shared {
            ledger: Arc::new(Mutex::new(HashMap::new())),
            frames: Arc::new(Mutex::new(Vec::new())),
            target_value,
            target_hex: config.target.clone(),
            job_counter: AtomicU64::new(0),
            seed: config.seed,
            started: Instant::now(),
            hasher: Sha256Hasher,
        });
        let ledger = shared.ledger.clone();
        let frames = shared.frames.clone();

        let stop = shutdown.clone();
        let accept_thread = std::thread::spawn(move || {
            let mut sessions: Vec<JoinHandle<()>> = Vec::new();
            for stream in listener.incoming() {
                if stop.load(Ordering::SeqCst) {
                    break;
                }
                match stream {
                    Ok(s) => {
                        let shared = shared.clone();
                        sessions.push(std::thread::spawn(move || {
                            let _ = serve_session(s, &shared);
                        }));
                    }
                    Err(_) => break,
                }
            }
            for s in sessions {
                let _ = s.join();
            }
        });

        Ok(DropzoneServer {
            addr,
            ledger,
            frames,
            shutdown,
            accept_thread: Some(accept_thread),
        })
    }

    pub fn addr(&self) -> SocketAddr {
        self.addr
    }

    /// Current credited balance for a site key.
    pub fn balance(&self, site_key: &str) -> u64 {
        *self.ledger.lock().unwrap().get(site_key).unwrap_or(&0)
    }

    /// Every frame the server has received or sent, across sessions.
    pub fn frame_log(&self) -> Vec<LogEntry> {
        self.frames.lock().unwrap().clone()
    }

    pub fn shutdown(&mut self) {
        self.shutdown.store(true, Ordering::SeqCst);
        // poke the accept loop awake
        let _ = TcpStream::connect(self.addr);
        if let Some(t) = self.accept_thread.take() {
            let _ = t.join();
        }
    }
}

impl Drop for DropzoneServer {
    fn drop(&mut self) {
        self.shutdown();
    }
}

fn log_frame(shared: &Shared, frame: &ProtocolFrame) {
    shared.frames.lock().unwrap().push(LogEntry {
        ts_ms: shared.started.elapsed().as_secs_f64() * 1e3,
        direction: frame.direction(),
        frame: frame.clone(),
    });
}

fn send(stream: &mut TcpStream, shared: &Shared, frame: &ProtocolFrame) -> std::io::Result<()> {
    let mut line = frame.serialize();
    line.push('\n');
    stream.write_all(line.as_bytes())?;
    log_frame(shared, frame);
    Ok(())
}

/// Drive one session to completion. Any protocol violation ends it.
fn serve_session(stream: TcpStream, shared: &Shared) -> Result<(), ProtoError> {
    let mut writer = stream.try_clone().map_err(|e| ProtoError::Io(e.to_string()))?;
    let reader = BufReader::new(stream);
    let mut lines = reader.lines();

    // first frame must be auth
    let first = match lines.next() {
        Some(Ok(l)) => l,
        _ => return Ok(()),
    };
    let auth = match crate::frame::classify_frame(first.as_bytes()) {
        Ok(FrameClass::Frame(f @ ProtocolFrame::Auth(_))) => f,
        _ => return Ok(()), // violation: close silently
    };
    log_frame(shared, &auth);
    let site_key = match &auth {
        ProtocolFrame::Auth(p) => p.site_key.clone(),
        _ => unreachable!(),
    };
    // a keyless page can open the socket and authenticate, but the server
    // cannot attribute work to anyone, so it never answers with authed
    if site_key.is_empty() {
        return Ok(());
    }

    let balance = *shared.ledger.lock().unwrap().entry(site_key.clone()).or_insert(0);
    send(
        &mut writer,
        shared,
        &ProtocolFrame::Authed(AuthedParams { token: String::new(), hashes: balance }),
    )
    .map_err(|e| ProtoError::Io(e.to_string()))?;

    // issue a job
    let job_idx = shared.job_counter.fetch_add(1, Ordering::SeqCst);
    let mut rng = ChaCha8Rng::seed_from_u64(shared.seed ^ job_idx.wrapping_mul(0x9E3779B97F4A7C15));
    let blob: String = (0..152)
        .map(|_| char::from_digit(rng.gen_range(0..16), 16).unwrap())
        .collect();
    let job_id = format!("{:015}", shared.seed.wrapping_mul(31).wrapping_add(job_idx * 97) % 1_000_000_000_000_000);
    let job = JobParams {
        job_id: job_id.clone(),
        blob: blob.clone(),
        target: shared.target_hex.clone(),
    };
    send(&mut writer, shared, &ProtocolFrame::Job(job))
        .map_err(|e| ProtoError::Io(e.to_string()))?;

    let credit = credit_per_share(shared.target_value);
    for line in lines {
        let line = match line {
            Ok(l) => l,
            Err(_) => break,
        };
        let frame = match crate::frame::classify_frame(line.as_bytes()) {
            Ok(FrameClass::Frame(f @ ProtocolFrame::Submit(_))) => f,
            _ => break, // violation closes the session
        };
        log_frame(shared, &frame);
        let submit = match &frame {
            ProtocolFrame::Submit(p) => p,
            _ => unreachable!(),
        };
        if submit.job_id != job_id {
            break;
        }
        let digest = shared.hasher.digest(&blob, &submit.nonce);
        if hex_digest(&digest) != submit.result || !is_valid_share(&digest, shared.target_value) {
            break;
        }
        let new_balance = {
            let mut ledger = shared.ledger.lock().unwrap();
            let b = ledger.entry(site_key.clone()).or_insert(0);
            *b += credit;
            *b
        };
        send(
            &mut writer,
            shared,
            &ProtocolFrame::HashAccept(HashAcceptParams { hashes: new_balance }),
        )
        .map_err(|e| ProtoError::Io(e.to_string()))?;
    }
    Ok(())
}
