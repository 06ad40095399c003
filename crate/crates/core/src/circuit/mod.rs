//! The session-authentication statement as a rank-1 constraint system.
//!
//! Public inputs, in order: `c, pk_x, pk_y, t_exp, out`.
//! Private inputs: `token, r_x, r_y, s`.
//!
//! ```text
//! M   = Poseidon(token, t_exp)
//! b   = [ s*B == R + Poseidon(Poseidon(R, pk), M) * pk ]     (0 or 1)
//! out = b * Poseidon(c, token)
//! ```
//!
//! An invalid signature still yields a satisfiable assignment, with `out = 0`;
//! the verifier rejects zero outputs. Expiry is checked natively by the
//! verifier because `t_exp` is public.

mod auth;
pub mod gadgets;
pub mod r1cs;

pub use auth::{
    assign_witness, build_circuit, satisfied, AuthCircuitLayout, WitnessAssignment, PRIVATE_INPUTS, PUBLIC_INPUTS,
};
pub use r1cs::{Builder, ConstraintSystem, DimensionMismatch, LinearCombination, Wire};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CircuitError {
    #[error("circuit parameters unavailable: {0}")]
    ParameterUnavailable(String),
    #[error("malformed credential: {0}")]
    MalformedCredential(&'static str),
    #[error(transparent)]
    DimensionMismatch(#[from] DimensionMismatch),
}
