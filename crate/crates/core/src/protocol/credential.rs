use thiserror::Error;

use crate::primitives::{
    poseidon_hash, verify, FieldElement, Point, PrimitivesError, Signature, Token, FIELD_ELEMENT_LEN, SIGNATURE_LEN,
};

pub const DAY_SECONDS: u64 = 86_400;
pub const CREDENTIAL_MAGIC: &[u8; 8] = b"SANSCRED";
pub const CREDENTIAL_VERSION: u16 = 1;
/// magic + version + token + t_exp + signature + public key.
pub const CREDENTIAL_FILE_LEN: usize = 8 + 2 + 2 * FIELD_ELEMENT_LEN + SIGNATURE_LEN + Point::ENCODED_LEN;

/// The user's secret authentication material.
#[derive(Clone, PartialEq, Eq)]
pub struct Credential {
    pub token: Token,
    /// Expiry, Unix seconds at 00:00:00 UTC.
    pub t_exp: u64,
    pub signature: Signature,
    pub operator_pk: Point,
}

impl std::fmt::Debug for Credential {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Credential")
            .field("t_exp", &self.t_exp)
            .field("operator_pk", &self.operator_pk)
            .finish_non_exhaustive()
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CredentialFormatError {
    #[error("bad credential magic")]
    BadMagic,
    #[error("unsupported credential version {0}")]
    UnsupportedVersion(u16),
    #[error("credential file must be {CREDENTIAL_FILE_LEN} bytes, got {0}")]
    BadLength(usize),
    #[error("token does not fit in 31 bytes")]
    TokenOutOfRange,
    #[error("expiry does not fit in 64 bits")]
    ExpiryOutOfRange,
    #[error(transparent)]
    Primitive(#[from] PrimitivesError),
}

/// Start of the UTC day containing `now + validity`, pushed to the next
/// midnight if that is not strictly after `now`.
pub fn quantize_expiry(now: u64, validity_seconds: u64) -> Option<u64> {
    let day_start = now.checked_add(validity_seconds)? / DAY_SECONDS * DAY_SECONDS;
    if day_start > now {
        Some(day_start)
    } else {
        day_start.checked_add(DAY_SECONDS)
    }
}

impl Credential {
    /// The signed message `Poseidon(token, t_exp)`.
    pub fn message(&self) -> FieldElement {
        poseidon_hash(&[self.token.value(), FieldElement::from_u64(self.t_exp)]).expect("arity 2")
    }

    /// Whether the operator's signature verifies.
    pub fn signature_valid(&self) -> bool {
        verify(&self.operator_pk, &self.message(), &self.signature).unwrap_or(false)
    }

    pub fn is_expired(&self, now: u64) -> bool {
        now >= self.t_exp
    }

    pub fn to_bytes(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(CREDENTIAL_FILE_LEN);
        out.extend_from_slice(CREDENTIAL_MAGIC);
        out.extend_from_slice(&CREDENTIAL_VERSION.to_le_bytes());
        out.extend_from_slice(&self.token.value().to_bytes());
        out.extend_from_slice(&FieldElement::from_u64(self.t_exp).to_bytes());
        out.extend_from_slice(&self.signature.to_bytes());
        out.extend_from_slice(&self.operator_pk.to_bytes());
        out
    }

    pub fn from_bytes(bytes: &[u8]) -> Result<Self, CredentialFormatError> {
        if bytes.len() < CREDENTIAL_MAGIC.len() || &bytes[..8] != CREDENTIAL_MAGIC {
            return Err(CredentialFormatError::BadMagic);
        }
        if bytes.len() < 10 {
            return Err(CredentialFormatError::BadLength(bytes.len()));
        }
        let version = u16::from_le_bytes([bytes[8], bytes[9]]);
        if version != CREDENTIAL_VERSION {
            return Err(CredentialFormatError::UnsupportedVersion(version));
        }
        if bytes.len() != CREDENTIAL_FILE_LEN {
            return Err(CredentialFormatError::BadLength(bytes.len()));
        }
        let mut at = 10;
        let mut take = |n: usize| {
            let s = &bytes[at..at + n];
            at += n;
            s
        };
        let token = FieldElement::from_bytes(take(FIELD_ELEMENT_LEN))?;
        let token = Token::from_field(token).ok_or(CredentialFormatError::TokenOutOfRange)?;
        let t_exp = FieldElement::from_bytes(take(FIELD_ELEMENT_LEN))?
            .to_u64()
            .ok_or(CredentialFormatError::ExpiryOutOfRange)?;
        let signature = Signature::from_bytes(take(SIGNATURE_LEN))?;
        let operator_pk = Point::from_bytes(take(Point::ENCODED_LEN))?;
        Ok(Credential { token, t_exp, signature, operator_pk })
    }
}
