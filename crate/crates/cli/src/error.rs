use sans_core::circuit::CircuitError;
use sans_core::proofsys::{FormatError, ProofSysError};
use sans_core::protocol::{ConfigError, CredentialFormatError, ProtocolError, RejectReason};
use sans_core::wire::{ClientError, WireError};
use thiserror::Error;

/// Process exit codes, one per error class.
pub mod exit {
    pub const OK: u8 = 0;
    pub const INTERNAL: u8 = 1;
    pub const USAGE: u8 = 2;
    pub const IO: u8 = 3;
    pub const MALFORMED_ARTIFACT: u8 = 4;
    pub const FINGERPRINT_MISMATCH: u8 = 5;
    pub const SETUP_MISMATCH: u8 = 6;
    pub const CONFIG: u8 = 7;
    pub const REQUIREMENTS_NOT_MET: u8 = 8;
    pub const INVALID_ISSUED_CREDENTIAL: u8 = 9;
    pub const WRONG_OPERATOR_KEY: u8 = 10;
    pub const STALE_CHALLENGE: u8 = 11;
    pub const EXPIRED: u8 = 12;
    pub const ZERO_OUTPUT: u8 = 13;
    pub const INVALID_PROOF: u8 = 14;
    pub const REPLAY_DETECTED: u8 = 15;
    pub const TRANSPORT: u8 = 20;
    pub const SERVER_ERROR: u8 = 21;
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("malformed {what}: {detail}")]
    Malformed { what: &'static str, detail: String },
    #[error("artifact was built for a different circuit")]
    FingerprintMismatch,
    #[error("proving and verifying keys come from different setups")]
    SetupMismatch,
    #[error(transparent)]
    Config(#[from] ConfigError),
    #[error("registration requirements not met")]
    RequirementsNotMet,
    #[error("issued credential does not verify under the operator key")]
    InvalidIssuedCredential,
    #[error("rejected: {0}")]
    Rejected(RejectReason),
    #[error("rejected with unknown code {0}")]
    RejectedOther(String),
    #[error("transport: {0}")]
    Transport(String),
    #[error("server error {code}: {detail}")]
    Server { code: String, detail: String },
    #[error("{0}")]
    Internal(String),
}

impl CliError {
    pub fn io(path: &std::path::Path, source: std::io::Error) -> Self {
        CliError::Io { path: path.display().to_string(), source }
    }

    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => exit::USAGE,
            CliError::Io { .. } => exit::IO,
            CliError::Malformed { .. } => exit::MALFORMED_ARTIFACT,
            CliError::FingerprintMismatch => exit::FINGERPRINT_MISMATCH,
            CliError::SetupMismatch => exit::SETUP_MISMATCH,
            CliError::Config(_) => exit::CONFIG,
            CliError::RequirementsNotMet => exit::REQUIREMENTS_NOT_MET,
            CliError::InvalidIssuedCredential => exit::INVALID_ISSUED_CREDENTIAL,
            CliError::Rejected(r) => reject_exit_code(*r),
            CliError::RejectedOther(_) | CliError::Server { .. } => exit::SERVER_ERROR,
            CliError::Transport(_) => exit::TRANSPORT,
            CliError::Internal(_) => exit::INTERNAL,
        }
    }

    /// Short machine-readable name for `--json` output.
    pub fn code(&self) -> String {
        match self {
            CliError::Usage(_) => "usage".into(),
            CliError::Io { .. } => "io".into(),
            CliError::Malformed { .. } => "malformed".into(),
            CliError::FingerprintMismatch => "fingerprint_mismatch".into(),
            CliError::SetupMismatch => "setup_mismatch".into(),
            CliError::Config(_) => "config".into(),
            CliError::RequirementsNotMet => "requirements_not_met".into(),
            CliError::InvalidIssuedCredential => "invalid_issued_credential".into(),
            CliError::Rejected(r) => r.code().into(),
            CliError::RejectedOther(c) => c.clone(),
            CliError::Transport(_) => "transport".into(),
            CliError::Server { code, .. } => code.clone(),
            CliError::Internal(_) => "internal".into(),
        }
    }
}

pub fn reject_exit_code(r: RejectReason) -> u8 {
    match r {
        RejectReason::WrongOperatorKey => exit::WRONG_OPERATOR_KEY,
        RejectReason::StaleChallenge => exit::STALE_CHALLENGE,
        RejectReason::Expired => exit::EXPIRED,
        RejectReason::ZeroOutput => exit::ZERO_OUTPUT,
        RejectReason::InvalidProof => exit::INVALID_PROOF,
        RejectReason::ReplayDetected => exit::REPLAY_DETECTED,
    }
}

impl From<ProofSysError> for CliError {
    fn from(e: ProofSysError) -> Self {
        match e {
            ProofSysError::FingerprintMismatch => CliError::FingerprintMismatch,
            ProofSysError::SetupMismatch => CliError::SetupMismatch,
            ProofSysError::Format(f) => f.into(),
            ProofSysError::MalformedProof => CliError::Malformed { what: "proof", detail: e.to_string() },
            other => CliError::Internal(other.to_string()),
        }
    }
}

impl From<FormatError> for CliError {
    fn from(e: FormatError) -> Self {
        match e {
            FormatError::FingerprintMismatch => CliError::FingerprintMismatch,
            other => CliError::Malformed { what: "artifact", detail: other.to_string() },
        }
    }
}

impl From<CredentialFormatError> for CliError {
    fn from(e: CredentialFormatError) -> Self {
        CliError::Malformed { what: "credential", detail: e.to_string() }
    }
}

impl From<CircuitError> for CliError {
    fn from(e: CircuitError) -> Self {
        CliError::Internal(e.to_string())
    }
}

impl From<ProtocolError> for CliError {
    fn from(e: ProtocolError) -> Self {
        match e {
            ProtocolError::RequirementsNotMet => CliError::RequirementsNotMet,
            ProtocolError::MalformedCredential(d) => CliError::Malformed { what: "credential", detail: d },
            ProtocolError::EvidenceTooLarge => CliError::Usage(e.to_string()),
            other => CliError::Internal(other.to_string()),
        }
    }
}

impl From<WireError> for CliError {
    fn from(e: WireError) -> Self {
        match e {
            WireError::Malformed(d) => CliError::Malformed { what: "message", detail: d },
            other => CliError::Transport(other.to_string()),
        }
    }
}

impl From<ClientError> for CliError {
    fn from(e: ClientError) -> Self {
        match e {
            ClientError::Transport(w) => CliError::Transport(w.to_string()),
            ClientError::ServerRejected { code, .. } if code == "requirements_not_met" => CliError::RequirementsNotMet,
            ClientError::ServerRejected { code, detail } => CliError::Server { code, detail },
            ClientError::InvalidIssuedCredential => CliError::InvalidIssuedCredential,
            ClientError::Rejected(code) => match RejectReason::from_code(&code) {
                Some(r) => CliError::Rejected(r),
                None => CliError::RejectedOther(code),
            },
            ClientError::UnexpectedReply(t) => CliError::Transport(format!("unexpected reply {t}")),
            ClientError::Protocol(p) => p.into(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reject_codes_are_distinct() {
        let mut codes: Vec<u8> = RejectReason::ALL.iter().map(|r| reject_exit_code(*r)).collect();
        codes.extend([
            exit::INTERNAL,
            exit::USAGE,
            exit::IO,
            exit::MALFORMED_ARTIFACT,
            exit::FINGERPRINT_MISMATCH,
            exit::SETUP_MISMATCH,
            exit::CONFIG,
            exit::REQUIREMENTS_NOT_MET,
            exit::INVALID_ISSUED_CREDENTIAL,
            exit::TRANSPORT,
            exit::SERVER_ERROR,
        ]);
        let n = codes.len();
        codes.sort();
        codes.dedup();
        assert_eq!(codes.len(), n);
        assert!(!codes.contains(&exit::OK));
    }
}
