use std::future::Future;
use std::net::SocketAddr;
use std::sync::Arc;
use std::time::Duration;

use tokio::net::{TcpListener, TcpStream};
use tokio::task::JoinHandle;
use tracing::{debug, info, warn};

use super::frame::{read_frame, write_frame};
use super::message::{ErrorCode, Message};
use super::WireError;
use crate::protocol::{Decision, ProtocolError, RegistrationEvidence, VerifierState};

pub async fn bind(addr: &str) -> Result<TcpListener, WireError> {
    TcpListener::bind(addr).await.map_err(|source| WireError::BindFailure { addr: addr.to_owned(), source })
}

/// Accepts connections until `shutdown` resolves. Connection errors are
/// logged and never stop the loop.
pub async fn serve(
    state: Arc<VerifierState>,
    listener: TcpListener,
    shutdown: impl Future<Output = ()>,
) -> Result<(), WireError> {
    tokio::pin!(shutdown);
    if let Ok(addr) = listener.local_addr() {
        info!(%addr, operator_pk = %hex::encode(state.operator_pk().to_bytes()), "listening");
    }
    loop {
        tokio::select! {
            _ = &mut shutdown => {
                info!("shutting down");
                return Ok(());
            }
            accepted = listener.accept() => match accepted {
                Ok((stream, peer)) => {
                    let state = state.clone();
                    tokio::spawn(async move {
                        if let Err(e) = handle_connection(state, stream, peer).await {
                            debug!(%peer, error = %e, "connection ended with error");
                        }
                    });
                }
                Err(e) => warn!(error = %e, "accept failed"),
            }
        }
    }
}

/// Periodically evicts aged replay-cache entries.
pub fn spawn_sweeper(state: Arc<VerifierState>, every: Duration) -> JoinHandle<()> {
    tokio::spawn(async move {
        let mut ticker = tokio::time::interval(every);
        loop {
            ticker.tick().await;
            if let Ok(now) = state.now() {
                let evicted = state.sweep_cache(now);
                if evicted > 0 {
                    debug!(evicted, "replay cache swept");
                }
            }
        }
    })
}

async fn handle_connection(
    state: Arc<VerifierState>,
    mut stream: TcpStream,
    peer: SocketAddr,
) -> Result<(), WireError> {
    loop {
        let frame = match read_frame(&mut stream).await {
            Ok(f) => f,
            Err(WireError::Closed) => return Ok(()),
            Err(WireError::FrameTooLarge(n)) => {
                warn!(%peer, declared = n, "oversized frame");
                let reply = Message::err(ErrorCode::FRAME_TOO_LARGE, format!("declared {n} bytes"));
                return write_frame(&mut stream, &reply.encode()).await;
            }
            Err(e) => return Err(e),
        };
        let msg = match Message::decode(&frame) {
            Ok(m) => m,
            Err(WireError::UnsupportedVersion(v)) => {
                warn!(%peer, version = v, "unsupported protocol version");
                let reply = Message::err(ErrorCode::UNSUPPORTED_VERSION, format!("version {v}"));
                return write_frame(&mut stream, &reply.encode()).await;
            }
            Err(e) => {
                warn!(%peer, "malformed frame");
                let reply = Message::err(ErrorCode::MALFORMED, e.to_string());
                return write_frame(&mut stream, &reply.encode()).await;
            }
        };
        let (reply, keep_open) = dispatch(&state, msg, peer).await;
        write_frame(&mut stream, &reply.encode()).await?;
        if !keep_open {
            return Ok(());
        }
    }
}

async fn dispatch(state: &Arc<VerifierState>, msg: Message, peer: SocketAddr) -> (Message, bool) {
    match msg {
        Message::RegisterReq { evidence } => {
            let evidence = match RegistrationEvidence::new(evidence) {
                Ok(e) => e,
                Err(_) => {
                    info!(%peer, outcome = ErrorCode::EVIDENCE_TOO_LARGE, "register");
                    return (Message::err(ErrorCode::EVIDENCE_TOO_LARGE, "evidence too large"), true);
                }
            };
            match state.register(&evidence, &mut rand::rngs::OsRng) {
                Ok(cred) => {
                    info!(%peer, t_exp = cred.t_exp, outcome = "issued", "register");
                    (Message::RegisterResp(cred), true)
                }
                Err(ProtocolError::RequirementsNotMet) => {
                    info!(%peer, outcome = ErrorCode::REQUIREMENTS_NOT_MET, "register");
                    (Message::err(ErrorCode::REQUIREMENTS_NOT_MET, "registration evidence rejected"), true)
                }
                Err(e) => {
                    warn!(%peer, error = %e, "register failed");
                    (Message::err(ErrorCode::INTERNAL, e.to_string()), true)
                }
            }
        }
        Message::AuthReq(req) => {
            let c = req.c;
            let st = state.clone();
            // The pairing check is CPU-bound; keep it off the I/O threads.
            let decision = tokio::task::spawn_blocking(move || st.authenticate(&req)).await;
            match decision {
                Ok(Ok(Decision::Granted(session_id))) => {
                    info!(%peer, c, outcome = "granted", session = %session_id.to_hex(), "authenticate");
                    (Message::AuthGranted { session_id }, true)
                }
                Ok(Ok(Decision::Rejected(reason))) => {
                    info!(%peer, c, outcome = reason.code(), "authenticate");
                    (Message::AuthRejected { code: reason.code().to_owned() }, true)
                }
                Ok(Err(e)) => {
                    warn!(%peer, error = %e, "authenticate failed");
                    (Message::err(ErrorCode::INTERNAL, e.to_string()), true)
                }
                Err(e) => {
                    warn!(%peer, error = %e, "verifier task failed");
                    (Message::err(ErrorCode::INTERNAL, "verifier task failed"), false)
                }
            }
        }
        other => {
            warn!(%peer, r#type = other.type_name(), "unexpected message");
            (Message::err(ErrorCode::UNEXPECTED, format!("{} is not a request", other.type_name())), false)
        }
    }
}
