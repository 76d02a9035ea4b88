//! Byte-transparent bidirectional relay. Forwards raw bytes untouched in
//! both directions while keeping its own frame log of the traffic it sees,
//! which is what a content inspector attached at the relay would observe.

use std::io::{Read, Write};
use std::net::{SocketAddr, TcpListener, TcpStream};
use std::sync::atomic::{AtomicBool, Ordering};
use std::sync::{Arc, Mutex};
use std::thread::JoinHandle;
use std::time::Instant;

use crate::frame::{Direction, FrameClass};
use crate::state::LogEntry;
use crate::ProtoError;

pub struct RelayProxy {
    addr: SocketAddr,
    frames: Arc<Mutex<Vec<LogEntry>>>,
    shutdown: Arc<AtomicBool>,
    accept_thread: Option<JoinHandle<()>>,
}

impl RelayProxy {
    pub fn start(listen: &str, upstream: SocketAddr) -> Result<Self, ProtoError> {
        let listener =
            TcpListener::bind(listen).map_err(|e| ProtoError::Bind(format!("{listen}: {e}")))?;
        let addr = listener.local_addr().map_err(|e| ProtoError::Bind(e.to_string()))?;
        let frames: Arc<Mutex<Vec<LogEntry>>> = Arc::new(Mutex::new(Vec::new()));
        let shutdown = Arc::new(AtomicBool::new(false));
        let started = Instant::now();

        let stop = shutdown.clone();
        let log = frames.clone();
        let accept_thread = std::thread::spawn(move || {
            let mut pumps: Vec<JoinHandle<()>> = Vec::new();
            for stream in listener.incoming() {
                if stop.load(Ordering::SeqCst) {
                    break;
                }
                let client = match stream {
                    Ok(s) => s,
                    Err(_) => break,
                };
                let server = match TcpStream::connect(upstream) {
                    Ok(s) => s,
                    Err(_) => continue, // upstream unreachable: drop client
                };
                let (c2s_c, c2s_s) = (client.try_clone(), server.try_clone());
                if let (Ok(cc), Ok(ss)) = (c2s_c, c2s_s) {
                    let log_up = log.clone();
                    pumps.push(std::thread::spawn(move || {
                        pump(cc, ss, Direction::ClientToServer, log_up, started);
                    }));
                }
                let log_down = log.clone();
                pumps.push(std::thread::spawn(move || {
                    pump(server, client, Direction::ServerToClient, log_down, started);
                }));
            }
            for p in pumps {
                let _ = p.join();
            }
        });

        Ok(RelayProxy {
            addr,
            frames,
            shutdown,
            accept_thread: Some(accept_thread),
        })
    }

    pub fn addr(&self) -> SocketAddr {
        self.addr
    }

    /// Frames observed flowing through the relay, both directions.
    pub fn frame_log(&self) -> Vec<LogEntry> {
        self.frames.lock().unwrap().clone()
    }

    pub fn shutdown(&mut self) {
        self.shutdown.store(true, Ordering::SeqCst);
        let _ = TcpStream::connect(self.addr);
        if let Some(t) = self.accept_thread.take() {
            let _ = t.join();
        }
    }
}

impl Drop for RelayProxy {
    fn drop(&mut self) {
        self.shutdown();
    }
}

/// Copy bytes from `from` into `to` verbatim, opportunistically parsing
/// newline-delimited frames for the observation log.
fn pump(
    mut from: TcpStream,
    mut to: TcpStream,
    direction: Direction,
    log: Arc<Mutex<Vec<LogEntry>>>,
    started: Instant,
) {
    let mut buf = [0u8; 4096];
    let mut line = Vec::new();
    loop {
        let n = match from.read(&mut buf) {
            Ok(0) | Err(_) => break,
            Ok(n) => n,
        };
        if to.write_all(&buf[..n]).is_err() {
            break;
        }
        for &b in &buf[..n] {
            if b == b'\n' {
                if let Ok(FrameClass::Frame(f)) = crate::frame::classify_frame(&line) {
                    log.lock().unwrap().push(LogEntry {
                        ts_ms: started.elapsed().as_secs_f64() * 1e3,
                        direction,
                        frame: f,
                    });
                }
                line.clear();
            } else {
                line.push(b);
            }
        }
    }
    let _ = to.shutdown(std::net::Shutdown::Both);
}
