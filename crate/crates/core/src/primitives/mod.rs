//! Native cryptography: everything the circuit re-checks, computed outside it.

mod babyjubjub;
mod eddsa;
mod field;
mod poseidon;
#[rustfmt::skip]
mod poseidon_constants;
mod token;

pub use babyjubjub::{Point, SUBGROUP_ORDER_DEC};
pub use eddsa::{keygen, sign, signature_challenge, verify, Signature, SigningKeypair, SIGNATURE_LEN};
pub use field::{FieldElement, FIELD_ELEMENT_LEN};
pub use poseidon::{poseidon_hash, PoseidonParams, MAX_ARITY};
pub use token::{sample_token, Token, TOKEN_BYTES};

pub(crate) use babyjubjub::{base_powers as babyjubjub_base_powers, curve_a, curve_d};
pub(crate) use poseidon::params_for_width;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PrimitivesError {
    #[error("poseidon input list is empty")]
    EmptyInput,
    #[error("poseidon arity {0} exceeds the supported maximum of {MAX_ARITY}")]
    ArityTooLarge(usize),
    #[error("field element encoding must be {FIELD_ELEMENT_LEN} bytes, got {0}")]
    BadLength(usize),
    #[error("field element encoding is not canonical (value >= modulus)")]
    NonCanonical,
    #[error("malformed curve point: {0}")]
    MalformedPoint(&'static str),
    #[error("signature scalar is not reduced modulo the subgroup order")]
    MalformedScalar,
    #[error("random number generator failure: {0}")]
    RngFailure(String),
}
