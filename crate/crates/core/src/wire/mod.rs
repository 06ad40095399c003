//! Framed message exchange between the operator daemon and user clients.
//!
//! Each frame is a 4-byte big-endian length followed by one JSON object with
//! sorted keys and no whitespace. Binary values are lowercase hex. Every
//! message has a `"type"` and `"v": 1`.

mod client;
mod frame;
mod message;
mod server;

pub use client::{
    client_authenticate, client_authenticate_at, client_register, exchange, send_auth_request, send_raw, ClientError,
};
pub use frame::{read_frame, write_frame, MAX_FRAME_LEN};
pub use message::{ErrorCode, Message, PROTOCOL_VERSION};
pub use server::{bind, serve, spawn_sweeper};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum WireError {
    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),
    #[error("cannot bind {addr}: {source}")]
    BindFailure { addr: String, source: std::io::Error },
    #[error("frame of {0} bytes exceeds the limit")]
    FrameTooLarge(usize),
    #[error("connection closed")]
    Closed,
    #[error("unsupported protocol version {0}")]
    UnsupportedVersion(u64),
    #[error("malformed message: {0}")]
    Malformed(String),
}

impl WireError {
    pub(crate) fn malformed(msg: impl Into<String>) -> Self {
        WireError::Malformed(msg.into())
    }
}
