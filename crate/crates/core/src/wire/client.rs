use thiserror::Error;
use tokio::net::TcpStream;

use super::frame::{read_frame, write_frame};
use super::message::Message;
use super::WireError;
use crate::circuit::AuthCircuitLayout;
use crate::proofsys::ProvingKey;
use crate::protocol::{authenticate_prove, AuthRequest, Clock, Credential, ProtocolError, SessionId, SystemClock};

#[derive(Debug, Error)]
pub enum ClientError {
    #[error("transport: {0}")]
    Transport(#[from] WireError),
    #[error("server error {code}: {detail}")]
    ServerRejected { code: String, detail: String },
    #[error("issued credential does not verify under the operator key")]
    InvalidIssuedCredential,
    #[error("authentication rejected: {0}")]
    Rejected(String),
    #[error("unexpected reply {0}")]
    UnexpectedReply(&'static str),
    #[error(transparent)]
    Protocol(#[from] ProtocolError),
}

impl From<std::io::Error> for ClientError {
    fn from(e: std::io::Error) -> Self {
        ClientError::Transport(WireError::Io(e))
    }
}

/// Sends one already-encoded payload and decodes the reply. Used to replay
/// captured frames byte for byte.
pub async fn send_raw(addr: &str, payload: &[u8]) -> Result<Message, ClientError> {
    let mut stream = TcpStream::connect(addr).await?;
    write_frame(&mut stream, payload).await?;
    let reply = read_frame(&mut stream).await?;
    Ok(Message::decode(&reply)?)
}

pub async fn exchange(addr: &str, msg: &Message) -> Result<Message, ClientError> {
    send_raw(addr, &msg.encode()).await
}

fn server_error(reply: Message) -> ClientError {
    match reply {
        Message::Err { code, detail } => ClientError::ServerRejected { code, detail },
        other => ClientError::UnexpectedReply(other.type_name()),
    }
}

/// Registers with `evidence` and checks the operator's signature locally
/// before accepting the credential.
pub async fn client_register(addr: &str, evidence: &[u8]) -> Result<Credential, ClientError> {
    match exchange(addr, &Message::RegisterReq { evidence: evidence.to_vec() }).await? {
        Message::RegisterResp(cred) => {
            if !cred.signature_valid() {
                return Err(ClientError::InvalidIssuedCredential);
            }
            Ok(cred)
        }
        other => Err(server_error(other)),
    }
}

pub async fn send_auth_request(addr: &str, req: &AuthRequest) -> Result<SessionId, ClientError> {
    match exchange(addr, &Message::AuthReq(req.clone())).await? {
        Message::AuthGranted { session_id } => Ok(session_id),
        Message::AuthRejected { code } => Err(ClientError::Rejected(code)),
        other => Err(server_error(other)),
    }
}

/// Proves against the local clock and presents the proof. Proving runs on
/// the calling thread.
pub async fn client_authenticate(
    addr: &str,
    cred: &Credential,
    layout: &AuthCircuitLayout,
    params: &ProvingKey,
) -> Result<SessionId, ClientError> {
    let now = SystemClock.now().map_err(ProtocolError::from)?;
    client_authenticate_at(addr, cred, now, layout, params).await
}

pub async fn client_authenticate_at(
    addr: &str,
    cred: &Credential,
    now: u64,
    layout: &AuthCircuitLayout,
    params: &ProvingKey,
) -> Result<SessionId, ClientError> {
    let req = authenticate_prove(cred, now, layout, params, &mut rand::rngs::OsRng)?;
    send_auth_request(addr, &req).await
}
