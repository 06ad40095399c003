use rand::{CryptoRng, RngCore};

use super::{FieldElement, PrimitivesError};

/// Random bytes per token; 31 bytes embed in one field element without bias.
pub const TOKEN_BYTES: usize = 31;

/// The user's secret authentication token.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Token(FieldElement);

impl Token {
    /// Accepts only values below 2^248.
    pub fn from_field(value: FieldElement) -> Option<Self> {
        (value.to_bytes()[TOKEN_BYTES] == 0).then_some(Token(value))
    }

    pub fn value(&self) -> FieldElement {
        self.0
    }
}

// Tokens are secret; never print them.
impl std::fmt::Debug for Token {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str("Token(..)")
    }
}

pub fn sample_token<R: RngCore + CryptoRng + ?Sized>(rng: &mut R) -> Result<Token, PrimitivesError> {
    let mut bytes = [0u8; 32];
    rng.try_fill_bytes(&mut bytes[..TOKEN_BYTES]).map_err(|e| PrimitivesError::RngFailure(e.to_string()))?;
    let value = FieldElement::from_bytes(&bytes).expect("2^248 is below the modulus");
    Ok(Token(value))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha20Rng;

    #[test]
    fn samples_are_distinct_and_bounded() {
        let mut rng = ChaCha20Rng::seed_from_u64(11);
        let mut seen = std::collections::HashSet::new();
        for _ in 0..10_000 {
            let t = sample_token(&mut rng).unwrap();
            let enc = t.value().to_bytes();
            assert_eq!(enc.len(), 32);
            assert_eq!(enc[31], 0);
            assert!(seen.insert(enc));
        }
    }

    struct FailingRng;
    impl RngCore for FailingRng {
        fn next_u32(&mut self) -> u32 {
            0
        }
        fn next_u64(&mut self) -> u64 {
            0
        }
        fn fill_bytes(&mut self, _: &mut [u8]) {}
        fn try_fill_bytes(&mut self, _: &mut [u8]) -> Result<(), rand::Error> {
            Err(rand::Error::new("entropy source unavailable"))
        }
    }
    impl CryptoRng for FailingRng {}

    #[test]
    fn rng_failure_is_reported() {
        assert!(matches!(sample_token(&mut FailingRng), Err(PrimitivesError::RngFailure(_))));
    }

    #[test]
    fn token_range_check() {
        let big = FieldElement::from_le_bytes_mod_order(&[0xff; 32]);
        assert!(Token::from_field(big).is_none());
        assert!(Token::from_field(FieldElement::from_u64(9)).is_some());
    }
}
