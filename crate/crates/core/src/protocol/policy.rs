use subtle::ConstantTimeEq;

use super::ProtocolError;

pub const MAX_EVIDENCE_LEN: usize = 64 * 1024;

/// The opaque `req` a user presents at registration.
#[derive(Clone, PartialEq, Eq)]
pub struct RegistrationEvidence(Vec<u8>);

impl RegistrationEvidence {
    pub fn new(bytes: Vec<u8>) -> Result<Self, ProtocolError> {
        if bytes.len() > MAX_EVIDENCE_LEN {
            return Err(ProtocolError::EvidenceTooLarge);
        }
        Ok(RegistrationEvidence(bytes))
    }

    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }
}

impl std::fmt::Debug for RegistrationEvidence {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "RegistrationEvidence({} bytes)", self.0.len())
    }
}

/// Decides whether registration evidence meets the service requirements.
pub trait RegistrationPolicy: Send + Sync {
    fn accepts(&self, evidence: &RegistrationEvidence) -> bool;
}

/// Accepts everything. Only for tests and closed deployments.
#[derive(Debug, Default, Clone, Copy)]
pub struct AcceptAll;

impl RegistrationPolicy for AcceptAll {
    fn accepts(&self, _: &RegistrationEvidence) -> bool {
        true
    }
}

/// Accepts evidence equal to a pre-shared registration secret.
pub struct SharedSecretPolicy {
    secret: Vec<u8>,
}

impl SharedSecretPolicy {
    pub fn new(secret: impl Into<Vec<u8>>) -> Self {
        SharedSecretPolicy { secret: secret.into() }
    }
}

impl RegistrationPolicy for SharedSecretPolicy {
    fn accepts(&self, evidence: &RegistrationEvidence) -> bool {
        !self.secret.is_empty() && bool::from(evidence.as_bytes().ct_eq(&self.secret))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shared_secret() {
        let p = SharedSecretPolicy::new("open sesame");
        assert!(p.accepts(&RegistrationEvidence::new(b"open sesame".to_vec()).unwrap()));
        assert!(!p.accepts(&RegistrationEvidence::new(b"open sesam".to_vec()).unwrap()));
        assert!(!SharedSecretPolicy::new("").accepts(&RegistrationEvidence::new(vec![]).unwrap()));
    }

    #[test]
    fn evidence_size_bound() {
        assert!(RegistrationEvidence::new(vec![0; MAX_EVIDENCE_LEN]).is_ok());
        assert!(matches!(
            RegistrationEvidence::new(vec![0; MAX_EVIDENCE_LEN + 1]),
            Err(ProtocolError::EvidenceTooLarge)
        ));
    }
}
