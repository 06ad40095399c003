use crate::primitives::FieldElement;

/// Width of one challenge bucket: the minute, seconds dropped.
pub const BUCKET_SECONDS: u64 = 60;

/// A minute-bucket index since the Unix epoch, used as public challenge `c`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Challenge(pub u64);

impl Challenge {
    pub fn bucket(&self) -> u64 {
        self.0
    }

    pub fn as_field(&self) -> FieldElement {
        FieldElement::from_u64(self.0)
    }

    /// Absolute distance in buckets.
    pub fn distance(&self, other: &Challenge) -> u64 {
        self.0.abs_diff(other.0)
    }
}

pub fn derive_challenge(unix_seconds: u64) -> Challenge {
    Challenge(unix_seconds / BUCKET_SECONDS)
}
