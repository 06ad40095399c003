//! EdDSA over Baby Jubjub with a Poseidon challenge, cheap to re-verify inside
//! the authentication circuit.
//!
//! * keys: `h = SHA-512(seed)`, `sk = (h[..32] mod (l - 1)) + 1`, `pk = sk * B`
//! * nonce: `r = SHA-512(h[32..] || M) mod l` (deterministic)
//! * challenge: `k = Poseidon(Poseidon(R.x, R.y, pk.x, pk.y), M)`
//! * verification: `s * B == R + k * pk`

use ark_ff::{BigInteger, PrimeField};
use sha2::{Digest, Sha512};
use zeroize::Zeroize;

use super::babyjubjub::{Point, Scalar};
use super::poseidon::{hash2, hash4};
use super::{FieldElement, PrimitivesError, FIELD_ELEMENT_LEN};

pub const SIGNATURE_LEN: usize = Point::ENCODED_LEN + FIELD_ELEMENT_LEN;

pub struct SigningKeypair {
    secret: Scalar,
    prefix: [u8; 32],
    pub pk: Point,
}

impl SigningKeypair {
    pub fn public_key(&self) -> Point {
        self.pk
    }
}

impl Drop for SigningKeypair {
    fn drop(&mut self) {
        self.secret.zeroize();
        self.prefix.zeroize();
    }
}

impl std::fmt::Debug for SigningKeypair {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("SigningKeypair").field("pk", &self.pk).finish_non_exhaustive()
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Signature {
    pub r: Point,
    /// Always below the subgroup order when produced by [`sign`] or decoded.
    pub s: FieldElement,
}

impl Signature {
    pub fn to_bytes(&self) -> [u8; SIGNATURE_LEN] {
        let mut out = [0u8; SIGNATURE_LEN];
        out[..Point::ENCODED_LEN].copy_from_slice(&self.r.to_bytes());
        out[Point::ENCODED_LEN..].copy_from_slice(&self.s.to_bytes());
        out
    }

    pub fn from_bytes(bytes: &[u8]) -> Result<Self, PrimitivesError> {
        if bytes.len() != SIGNATURE_LEN {
            return Err(PrimitivesError::BadLength(bytes.len()));
        }
        let r = Point::from_bytes(&bytes[..Point::ENCODED_LEN])?;
        let s = FieldElement::from_bytes(&bytes[Point::ENCODED_LEN..]).map_err(|_| PrimitivesError::MalformedScalar)?;
        if scalar_of(&s).is_none() {
            return Err(PrimitivesError::MalformedScalar);
        }
        Ok(Signature { r, s })
    }
}

fn scalar_of(s: &FieldElement) -> Option<Scalar> {
    let bytes = s.to_bytes();
    let k = Scalar::from_le_bytes_mod_order(&bytes);
    (k.into_bigint().to_bytes_le() == bytes).then_some(k)
}

fn field_of(k: &Scalar) -> FieldElement {
    FieldElement::from_le_bytes_mod_order(&k.into_bigint().to_bytes_le())
}

/// Derives a keypair from a 32-byte seed.
pub fn keygen(seed: &[u8; 32]) -> SigningKeypair {
    let mut h: [u8; 64] = Sha512::digest(seed).into();
    let mut order_minus_one = Scalar::MODULUS;
    order_minus_one.sub_with_borrow(&1u64.into());
    // Reduce the low half into [1, l - 1].
    let wide = num_reduce(&h[..32], &order_minus_one);
    let secret = wide + Scalar::from(1u64);
    let mut prefix = [0u8; 32];
    prefix.copy_from_slice(&h[32..]);
    h.zeroize();
    let pk = Point::base().mul_scalar(&secret);
    SigningKeypair { secret, prefix, pk }
}

/// `LE(bytes) mod m` for a 256-bit input and a modulus below the scalar order.
fn num_reduce(bytes: &[u8], m: &<Scalar as PrimeField>::BigInt) -> Scalar {
    // Long division by repeated conditional subtraction, bit by bit from the top.
    let mut rem = <Scalar as PrimeField>::BigInt::from(0u64);
    for byte in bytes.iter().rev() {
        for bit in (0..8).rev() {
            rem.mul2();
            if (byte >> bit) & 1 == 1 {
                rem.add_with_carry(&1u64.into());
            }
            if rem >= *m {
                rem.sub_with_borrow(m);
            }
        }
    }
    Scalar::from_bigint(rem).expect("remainder below modulus")
}

/// Fiat-Shamir challenge `Poseidon(Poseidon(R.x, R.y, pk.x, pk.y), msg)`.
pub fn signature_challenge(r: &Point, pk: &Point, msg: &FieldElement) -> FieldElement {
    hash2(hash4(r.x, r.y, pk.x, pk.y), *msg)
}

pub fn sign(kp: &SigningKeypair, msg: &FieldElement) -> Signature {
    let mut hasher = Sha512::new();
    hasher.update(kp.prefix);
    hasher.update(msg.to_bytes());
    let mut digest: [u8; 64] = hasher.finalize().into();
    let mut nonce = Scalar::from_le_bytes_mod_order(&digest);
    digest.zeroize();
    let r = Point::base().mul_scalar(&nonce);
    let k = signature_challenge(&r, &kp.pk, msg);
    let k = Scalar::from_le_bytes_mod_order(&k.to_bytes());
    let s = nonce + k * kp.secret;
    nonce.zeroize();
    Signature { r, s: field_of(&s) }
}

/// Checks `s * B == R + k * pk`. Off-curve or small-order `pk`/`R` are errors;
/// an unreduced `s` or a failed equation is `Ok(false)`.
pub fn verify(pk: &Point, msg: &FieldElement, sig: &Signature) -> Result<bool, PrimitivesError> {
    if !pk.is_on_curve() || !pk.is_in_subgroup() {
        return Err(PrimitivesError::MalformedPoint("public key"));
    }
    if !sig.r.is_on_curve() || !sig.r.is_in_subgroup() {
        return Err(PrimitivesError::MalformedPoint("signature R"));
    }
    let Some(s) = scalar_of(&sig.s) else {
        return Ok(false);
    };
    let k = signature_challenge(&sig.r, pk, msg);
    let lhs = Point::base().mul_scalar(&s);
    let rhs = sig.r.add(&pk.mul_field(&k));
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha20Rng;

    fn seed(i: u8) -> [u8; 32] {
        [i; 32]
    }

    #[test]
    fn keygen_is_deterministic() {
        let a = keygen(&seed(1));
        let b = keygen(&seed(1));
        assert_eq!(a.pk, b.pk);
        assert!(a.pk.is_on_curve() && a.pk.is_in_subgroup());
    }

    #[test]
    fn distinct_seeds_distinct_keys() {
        let mut rng = ChaCha20Rng::seed_from_u64(3);
        let mut seen = std::collections::HashSet::new();
        for _ in 0..1000 {
            let s: [u8; 32] = rng.gen();
            // Skip the subgroup check; keygen already multiplies the base.
            assert!(seen.insert(keygen(&s).pk.to_bytes()));
        }
    }

    #[test]
    fn sign_verify_and_tamper() {
        let kp = keygen(&seed(9));
        let m = FieldElement::from_u64(12345);
        let sig = sign(&kp, &m);
        assert!(verify(&kp.pk, &m, &sig).unwrap());
        assert_eq!(sign(&kp, &m), sig, "nonce must be deterministic");

        let bumped = Signature { s: sig.s + FieldElement::ONE, ..sig };
        assert!(!verify(&kp.pk, &m, &bumped).unwrap());
        assert!(!verify(&kp.pk, &FieldElement::from_u64(12346), &sig).unwrap());
    }

    #[test]
    fn cross_key_matrix() {
        let keys: Vec<_> = (0..4).map(|i| keygen(&seed(100 + i))).collect();
        let m = FieldElement::from_u64(77);
        let sigs: Vec<_> = keys.iter().map(|k| sign(k, &m)).collect();
        for (i, k) in keys.iter().enumerate() {
            for (j, s) in sigs.iter().enumerate() {
                assert_eq!(verify(&k.pk, &m, s).unwrap(), i == j);
            }
        }
    }

    #[test]
    fn encoding_round_trip_and_scalar_bound() {
        let kp = keygen(&seed(5));
        let sig = sign(&kp, &FieldElement::from_u64(1));
        let bytes = sig.to_bytes();
        assert_eq!(bytes.len(), 96);
        assert_eq!(Signature::from_bytes(&bytes).unwrap(), sig);

        let order: FieldElement = super::super::SUBGROUP_ORDER_DEC.parse().unwrap();
        let mut bad = bytes;
        bad[64..].copy_from_slice(&order.to_bytes());
        assert_eq!(Signature::from_bytes(&bad), Err(PrimitivesError::MalformedScalar));
        let unreduced = Signature { s: order, ..sig };
        assert!(!verify(&kp.pk, &FieldElement::from_u64(1), &unreduced).unwrap());
    }

    #[test]
    fn off_curve_key_is_an_error() {
        let kp = keygen(&seed(2));
        let m = FieldElement::from_u64(4);
        let sig = sign(&kp, &m);
        let off = Point { x: kp.pk.x + FieldElement::ONE, y: kp.pk.y };
        assert!(matches!(verify(&off, &m, &sig), Err(PrimitivesError::MalformedPoint(_))));
    }
}
