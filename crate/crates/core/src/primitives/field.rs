use std::fmt;
use std::str::FromStr;

use ark_bn254::Fr;
use ark_ff::{BigInteger, PrimeField, Zero};

use super::PrimitivesError;

/// Length of the canonical little-endian field element encoding.
pub const FIELD_ELEMENT_LEN: usize = 32;

/// An element of the BN254 scalar field, the native field of the proof system.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct FieldElement(pub(crate) Fr);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(ark_ff::MontFp!("0"));
    pub const ONE: FieldElement = FieldElement(ark_ff::MontFp!("1"));

    pub fn from_u64(v: u64) -> Self {
        FieldElement(Fr::from(v))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// Returns the value as `u64` when it fits.
    pub fn to_u64(&self) -> Option<u64> {
        let big = self.0.into_bigint();
        if big.0[1..].iter().all(|limb| *limb == 0) {
            Some(big.0[0])
        } else {
            None
        }
    }

    /// Canonical 32-byte little-endian encoding.
    pub fn to_bytes(&self) -> [u8; FIELD_ELEMENT_LEN] {
        let mut out = [0u8; FIELD_ELEMENT_LEN];
        out.copy_from_slice(&self.0.into_bigint().to_bytes_le());
        out
    }

    /// Decodes the canonical encoding, rejecting values not below the modulus.
    pub fn from_bytes(bytes: &[u8]) -> Result<Self, PrimitivesError> {
        if bytes.len() != FIELD_ELEMENT_LEN {
            return Err(PrimitivesError::BadLength(bytes.len()));
        }
        let fe = Fr::from_le_bytes_mod_order(bytes);
        if fe.into_bigint().to_bytes_le() != bytes {
            return Err(PrimitivesError::NonCanonical);
        }
        Ok(FieldElement(fe))
    }

    /// Interprets arbitrary bytes as a little-endian integer reduced mod r.
    pub fn from_le_bytes_mod_order(bytes: &[u8]) -> Self {
        FieldElement(Fr::from_le_bytes_mod_order(bytes))
    }

    /// The field modulus as little-endian bytes.
    pub fn modulus_bytes() -> [u8; FIELD_ELEMENT_LEN] {
        let mut out = [0u8; FIELD_ELEMENT_LEN];
        out.copy_from_slice(&Fr::MODULUS.to_bytes_le());
        out
    }

    pub fn inner(&self) -> Fr {
        self.0
    }
}

impl From<Fr> for FieldElement {
    fn from(v: Fr) -> Self {
        FieldElement(v)
    }
}

impl From<FieldElement> for Fr {
    fn from(v: FieldElement) -> Self {
        v.0
    }
}

impl From<u64> for FieldElement {
    fn from(v: u64) -> Self {
        FieldElement::from_u64(v)
    }
}

impl std::ops::Add for FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: Self) -> Self {
        FieldElement(self.0 + rhs.0)
    }
}

impl std::ops::Sub for FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: Self) -> Self {
        FieldElement(self.0 - rhs.0)
    }
}

impl std::ops::Mul for FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: Self) -> Self {
        FieldElement(self.0 * rhs.0)
    }
}

/// Decimal integer representation.
impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0.into_bigint())
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FieldElement({})", self)
    }
}

/// Parses a decimal integer without leading zeros; values at or above the
/// modulus are rejected.
impl FromStr for FieldElement {
    type Err = PrimitivesError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
            return Err(PrimitivesError::NonCanonical);
        }
        let fe = Fr::from_str(s).map_err(|_| PrimitivesError::NonCanonical)?;
        // Fr::from_str reduces silently; insist on the canonical spelling.
        if fe.to_string() != s {
            return Err(PrimitivesError::NonCanonical);
        }
        Ok(FieldElement(fe))
    }
}
