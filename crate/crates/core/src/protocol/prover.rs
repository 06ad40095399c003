use rand::{CryptoRng, RngCore};

use super::challenge::derive_challenge;
use super::credential::Credential;
use super::ProtocolError;
use crate::circuit::{assign_witness, AuthCircuitLayout};
use crate::primitives::{FieldElement, Point};
use crate::proofsys::{prove, Proof, ProvingKey};

/// What the user sends to authenticate: `(π, c, t_exp, pk, out)`.
#[derive(Debug, Clone, PartialEq)]
pub struct AuthRequest {
    pub proof: Proof,
    pub c: u64,
    pub t_exp: u64,
    pub operator_pk: Point,
    pub out: FieldElement,
}

impl AuthRequest {
    /// Public inputs in circuit order: `c, pk.x, pk.y, t_exp, out`.
    pub fn public_inputs(&self) -> [FieldElement; 5] {
        [
            FieldElement::from_u64(self.c),
            self.operator_pk.x,
            self.operator_pk.y,
            FieldElement::from_u64(self.t_exp),
            self.out,
        ]
    }
}

/// Builds an authentication request for the bucket containing `now`.
///
/// Expired credentials and bad signatures are not filtered here; the verifier
/// rejects them (an invalid signature yields `out = 0`).
pub fn authenticate_prove<R: RngCore + CryptoRng + ?Sized>(
    cred: &Credential,
    now: u64,
    layout: &AuthCircuitLayout,
    params: &ProvingKey,
    rng: &mut R,
) -> Result<AuthRequest, ProtocolError> {
    let c = derive_challenge(now);
    let witness = assign_witness(cred, c.as_field()).map_err(|e| ProtocolError::MalformedCredential(e.to_string()))?;
    let out = *witness.public_inputs().last().expect("out is the last public input");
    let proof = prove(params, layout, &witness, rng).map_err(|e| ProtocolError::ProvingFailure(e.to_string()))?;
    Ok(AuthRequest { proof, c: c.bucket(), t_exp: cred.t_exp, operator_pk: cred.operator_pk, out })
}
