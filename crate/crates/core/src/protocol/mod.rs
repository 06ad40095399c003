//! Service registration and session authentication.
//!
//! Registration: the operator checks the user's evidence through a pluggable
//! policy, samples a fresh token, and signs `Poseidon(token, t_exp)`. The
//! token is handed to the user and not retained.
//!
//! Authentication: the user proves knowledge of a signed token bound to the
//! current minute bucket `c`; the verifier runs cheap checks first, then the
//! pairing check, then the replay cache.

mod challenge;
mod clock;
mod config;
mod credential;
mod policy;
mod prover;
mod replay;
mod verifier;

pub use challenge::{derive_challenge, Challenge, BUCKET_SECONDS};
pub use clock::{Clock, ClockError, MockClock, SystemClock};
pub use config::{ConfigError, ReplayPolicy, VerifierConfig};
pub use credential::{
    quantize_expiry, Credential, CredentialFormatError, CREDENTIAL_FILE_LEN, CREDENTIAL_MAGIC, DAY_SECONDS,
};
pub use policy::{AcceptAll, RegistrationEvidence, RegistrationPolicy, SharedSecretPolicy, MAX_EVIDENCE_LEN};
pub use prover::{authenticate_prove, AuthRequest};
pub use replay::{CacheOutcome, ReplayCache, SessionId};
pub use verifier::{issue_credential, Decision, RejectReason, VerifierState, VerifierStats};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum ProtocolError {
    #[error("registration requirements not met")]
    RequirementsNotMet,
    #[error("registration evidence exceeds {MAX_EVIDENCE_LEN} bytes")]
    EvidenceTooLarge,
    #[error(transparent)]
    Clock(#[from] ClockError),
    #[error("validity period overflows the clock")]
    InvalidValidity,
    #[error("token sampling failed: {0}")]
    Rng(String),
    #[error("malformed credential: {0}")]
    MalformedCredential(String),
    #[error("proving failed: {0}")]
    ProvingFailure(String),
}
