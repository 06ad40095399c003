//! SANS: self-sovereign, unlinkable authentication for network-slice access.
//!
//! A slice operator issues each user a signed, expiring secret token. To open a
//! session the user proves, with a Groth16 zk-SNARK over BN254, that they hold a
//! token carrying a valid operator signature. The proof is bound to a per-minute
//! public challenge, so two sessions cannot be linked and a captured request
//! cannot be replayed.
//!
//! Layers, bottom up:
//!
//! * [`primitives`]: field encoding, Poseidon, Baby Jubjub EdDSA, token sampling.
//! * [`circuit`]: the authentication statement as a rank-1 constraint system.
//! * [`proofsys`]: per-operator trusted setup, proving and verification.
//! * [`protocol`]: registration and session authentication, verifier policy,
//!   replay cache.
//! * [`wire`]: length-prefixed framing, canonical JSON messages, daemon and client.

pub mod circuit;
pub mod primitives;
pub mod proofsys;
pub mod protocol;
pub mod wire;

pub use primitives::FieldElement;
