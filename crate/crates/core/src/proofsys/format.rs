//! Versioned binary container for keys and proofs.
//!
//! ```text
//! offset  size  field
//! 0       4     magic "SANS"
//! 4       2     format version, u16 little-endian (currently 1)
//! 6       1     curve id (1 = BN254)
//! 7       1     artifact kind (1 = proving key, 2 = verifying key, 3 = proof)
//! 8       32    circuit fingerprint
//! 40      8     payload length, u64 little-endian
//! 48      n     payload
//! ```

use thiserror::Error;

pub const MAGIC: &[u8; 4] = b"SANS";
pub const FORMAT_VERSION: u16 = 1;
pub const CURVE_BN254: u8 = 1;
pub const HEADER_LEN: usize = 48;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArtifactKind {
    ProvingKey = 1,
    VerifyingKey = 2,
    Proof = 3,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FormatError {
    #[error("bad magic")]
    BadMagic,
    #[error("unsupported format version {0}")]
    UnsupportedVersion(u16),
    #[error("unsupported curve id {0}")]
    UnsupportedCurve(u8),
    #[error("wrong artifact kind {0}")]
    WrongKind(u8),
    #[error("circuit fingerprint mismatch")]
    FingerprintMismatch,
    #[error("truncated data")]
    TruncatedData,
    #[error("{0} trailing bytes after payload")]
    TrailingData(usize),
    #[error("malformed payload")]
    Malformed,
}

pub fn encode(kind: ArtifactKind, fingerprint: &[u8; 32], payload: &[u8]) -> Vec<u8> {
    let mut out = Vec::with_capacity(HEADER_LEN + payload.len());
    out.extend_from_slice(MAGIC);
    out.extend_from_slice(&FORMAT_VERSION.to_le_bytes());
    out.push(CURVE_BN254);
    out.push(kind as u8);
    out.extend_from_slice(fingerprint);
    out.extend_from_slice(&(payload.len() as u64).to_le_bytes());
    out.extend_from_slice(payload);
    out
}

/// Validates the header and returns `(fingerprint, payload)`.
pub fn decode<'a>(
    bytes: &'a [u8],
    kind: ArtifactKind,
    expected: Option<&[u8; 32]>,
) -> Result<([u8; 32], &'a [u8]), FormatError> {
    if bytes.len() < MAGIC.len() {
        return Err(FormatError::TruncatedData);
    }
    if &bytes[..4] != MAGIC {
        return Err(FormatError::BadMagic);
    }
    if bytes.len() < HEADER_LEN {
        return Err(FormatError::TruncatedData);
    }
    let version = u16::from_le_bytes([bytes[4], bytes[5]]);
    if version != FORMAT_VERSION {
        return Err(FormatError::UnsupportedVersion(version));
    }
    if bytes[6] != CURVE_BN254 {
        return Err(FormatError::UnsupportedCurve(bytes[6]));
    }
    if bytes[7] != kind as u8 {
        return Err(FormatError::WrongKind(bytes[7]));
    }
    let mut fingerprint = [0u8; 32];
    fingerprint.copy_from_slice(&bytes[8..40]);
    if expected.is_some_and(|e| *e != fingerprint) {
        return Err(FormatError::FingerprintMismatch);
    }
    let len = u64::from_le_bytes(bytes[40..48].try_into().expect("8 bytes"));
    let body = &bytes[HEADER_LEN..];
    match (body.len() as u64).cmp(&len) {
        std::cmp::Ordering::Less => Err(FormatError::TruncatedData),
        std::cmp::Ordering::Greater => Err(FormatError::TrailingData((body.len() as u64 - len) as usize)),
        std::cmp::Ordering::Equal => Ok((fingerprint, body)),
    }
}
