//! Groth16 over BN254: per-operator setup, proving, verification, and the
//! versioned on-disk formats for keys and proofs.
//!
//! Proving and verification are delegated to `ark-groth16`; the circuit is
//! replayed from [`crate::circuit::ConstraintSystem`] into arkworks on demand.

mod adapter;
pub mod format;

use ark_bn254::{Bn254, Fr, G1Projective, G2Projective};
use ark_ff::UniformRand;
use ark_groth16::{Groth16, PreparedVerifyingKey};
use ark_serialize::{CanonicalDeserialize, CanonicalSerialize, Compress, Validate};
use rand::{CryptoRng, RngCore, SeedableRng};
use rand_chacha::ChaCha20Rng;
use thiserror::Error;
use zeroize::Zeroize;

use crate::circuit::{AuthCircuitLayout, WitnessAssignment};
use crate::primitives::FieldElement;
use adapter::R1csAdapter;
pub use format::{ArtifactKind, FormatError, CURVE_BN254, FORMAT_VERSION, HEADER_LEN, MAGIC};

/// Encoded size of every proof: compressed G1 + G2 + G1.
pub const PROOF_LEN: usize = 128;

#[derive(Debug, Error)]
pub enum ProofSysError {
    #[error("random number generator failure: {0}")]
    RngFailure(String),
    #[error("circuit fingerprint mismatch")]
    FingerprintMismatch,
    #[error("proving and verifying keys come from different setup runs")]
    SetupMismatch,
    #[error("malformed proof encoding")]
    MalformedProof,
    #[error("expected {expected} public inputs, got {got}")]
    PublicInputCount { expected: usize, got: usize },
    #[error("witness has {got} wires, circuit needs {expected}")]
    WitnessShape { expected: usize, got: usize },
    #[error("constraint synthesis failed: {0}")]
    Synthesis(String),
    #[error(transparent)]
    Format(FormatError),
}

impl From<FormatError> for ProofSysError {
    fn from(e: FormatError) -> Self {
        match e {
            FormatError::FingerprintMismatch => ProofSysError::FingerprintMismatch,
            other => ProofSysError::Format(other),
        }
    }
}

/// The prover's half of the common reference string.
#[derive(Clone, PartialEq)]
pub struct ProvingKey {
    pub(crate) inner: ark_groth16::ProvingKey<Bn254>,
    pub(crate) fingerprint: [u8; 32],
}

/// The verifier's half of the common reference string.
#[derive(Clone)]
pub struct VerifyingKey {
    pub(crate) inner: ark_groth16::VerifyingKey<Bn254>,
    prepared: PreparedVerifyingKey<Bn254>,
    pub(crate) fingerprint: [u8; 32],
}

impl PartialEq for VerifyingKey {
    fn eq(&self, other: &Self) -> bool {
        self.inner == other.inner && self.fingerprint == other.fingerprint
    }
}

impl std::fmt::Debug for ProvingKey {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "ProvingKey({})", hex::encode(&self.fingerprint[..8]))
    }
}

impl std::fmt::Debug for VerifyingKey {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "VerifyingKey({})", hex::encode(&self.fingerprint[..8]))
    }
}

impl ProvingKey {
    pub fn fingerprint(&self) -> [u8; 32] {
        self.fingerprint
    }

    pub fn verifying_key(&self) -> VerifyingKey {
        VerifyingKey::new(self.inner.vk.clone(), self.fingerprint)
    }

    pub fn to_bytes(&self) -> Vec<u8> {
        let mut payload = Vec::new();
        self.inner.serialize_uncompressed(&mut payload).expect("serializing into a Vec cannot fail");
        format::encode(ArtifactKind::ProvingKey, &self.fingerprint, &payload)
    }

    /// Decodes a `.pk` file; `expected` pins the circuit fingerprint.
    ///
    /// Group elements are not subgroup-checked: a corrupted proving key can
    /// only produce proofs that fail verification.
    pub fn from_bytes(bytes: &[u8], expected: Option<&[u8; 32]>) -> Result<Self, ProofSysError> {
        let (fingerprint, payload) = format::decode(bytes, ArtifactKind::ProvingKey, expected)?;
        let inner = ark_groth16::ProvingKey::deserialize_with_mode(payload, Compress::No, Validate::No)
            .map_err(|_| FormatError::Malformed)?;
        Ok(ProvingKey { inner, fingerprint })
    }
}

impl VerifyingKey {
    fn new(inner: ark_groth16::VerifyingKey<Bn254>, fingerprint: [u8; 32]) -> Self {
        let prepared = ark_groth16::prepare_verifying_key(&inner);
        VerifyingKey { inner, prepared, fingerprint }
    }

    pub fn fingerprint(&self) -> [u8; 32] {
        self.fingerprint
    }

    pub fn num_public_inputs(&self) -> usize {
        self.inner.gamma_abc_g1.len() - 1
    }

    pub fn to_bytes(&self) -> Vec<u8> {
        let mut payload = Vec::new();
        self.inner.serialize_compressed(&mut payload).expect("serializing into a Vec cannot fail");
        format::encode(ArtifactKind::VerifyingKey, &self.fingerprint, &payload)
    }

    pub fn from_bytes(bytes: &[u8], expected: Option<&[u8; 32]>) -> Result<Self, ProofSysError> {
        let (fingerprint, payload) = format::decode(bytes, ArtifactKind::VerifyingKey, expected)?;
        let inner = ark_groth16::VerifyingKey::deserialize_compressed(payload).map_err(|_| FormatError::Malformed)?;
        Ok(VerifyingKey::new(inner, fingerprint))
    }
}

/// Output of one trusted-setup run.
#[derive(Clone, Debug)]
pub struct ProvingArtifacts {
    pub proving_key: ProvingKey,
    pub verifying_key: VerifyingKey,
}

impl ProvingArtifacts {
    /// Pairs two separately loaded halves, checking they belong together.
    pub fn from_parts(proving_key: ProvingKey, verifying_key: VerifyingKey) -> Result<Self, ProofSysError> {
        if proving_key.fingerprint != verifying_key.fingerprint {
            return Err(ProofSysError::FingerprintMismatch);
        }
        if proving_key.inner.vk != verifying_key.inner {
            return Err(ProofSysError::SetupMismatch);
        }
        Ok(ProvingArtifacts { proving_key, verifying_key })
    }

    pub fn fingerprint(&self) -> [u8; 32] {
        self.proving_key.fingerprint
    }
}

/// A Groth16 proof: (A, B, C).
#[derive(Clone, PartialEq, Debug)]
pub struct Proof(pub(crate) ark_groth16::Proof<Bn254>);

impl Proof {
    pub fn to_bytes(&self) -> [u8; PROOF_LEN] {
        let mut out = Vec::with_capacity(PROOF_LEN);
        self.0.serialize_compressed(&mut out).expect("serializing into a Vec cannot fail");
        out.try_into().expect("compressed proof is 128 bytes")
    }

    /// Decodes and validates (on-curve, subgroup) a 128-byte proof.
    pub fn from_bytes(bytes: &[u8]) -> Result<Self, ProofSysError> {
        if bytes.len() != PROOF_LEN {
            return Err(ProofSysError::MalformedProof);
        }
        let p = ark_groth16::Proof::deserialize_compressed(bytes).map_err(|_| ProofSysError::MalformedProof)?;
        Ok(Proof(p))
    }

    /// `.proof` file: header bound to the circuit fingerprint, then the proof.
    pub fn to_file_bytes(&self, fingerprint: &[u8; 32]) -> Vec<u8> {
        format::encode(ArtifactKind::Proof, fingerprint, &self.to_bytes())
    }

    pub fn from_file_bytes(bytes: &[u8], expected: Option<&[u8; 32]>) -> Result<(Self, [u8; 32]), ProofSysError> {
        let (fingerprint, payload) = format::decode(bytes, ArtifactKind::Proof, expected)?;
        Ok((Proof::from_bytes(payload)?, fingerprint))
    }
}

fn ark_rng<R: RngCore + ?Sized>(rng: &mut R) -> Result<ChaCha20Rng, ProofSysError> {
    let mut seed = [0u8; 32];
    rng.try_fill_bytes(&mut seed).map_err(|e| ProofSysError::RngFailure(e.to_string()))?;
    let out = ChaCha20Rng::from_seed(seed);
    seed.zeroize();
    Ok(out)
}

/// Toxic waste of one setup run; wiped on drop.
struct Trapdoor {
    alpha: Fr,
    beta: Fr,
    gamma: Fr,
    delta: Fr,
}

impl Drop for Trapdoor {
    fn drop(&mut self) {
        self.alpha.zeroize();
        self.beta.zeroize();
        self.gamma.zeroize();
        self.delta.zeroize();
    }
}

/// Runs a fresh single-party trusted setup for `layout`.
///
/// The trapdoor is sampled here, used once, and zeroized before returning; no
/// API exposes it.
pub fn setup<R: RngCore + CryptoRng + ?Sized>(
    layout: &AuthCircuitLayout,
    rng: &mut R,
) -> Result<ProvingArtifacts, ProofSysError> {
    let mut inner_rng = ark_rng(rng)?;
    let trapdoor = Trapdoor {
        alpha: Fr::rand(&mut inner_rng),
        beta: Fr::rand(&mut inner_rng),
        gamma: Fr::rand(&mut inner_rng),
        delta: Fr::rand(&mut inner_rng),
    };
    let g1 = G1Projective::rand(&mut inner_rng);
    let g2 = G2Projective::rand(&mut inner_rng);
    let pk = Groth16::<Bn254>::generate_parameters_with_qap(
        R1csAdapter::shape(layout.constraint_system()),
        trapdoor.alpha,
        trapdoor.beta,
        trapdoor.gamma,
        trapdoor.delta,
        g1,
        g2,
        &mut inner_rng,
    )
    .map_err(|e| ProofSysError::Synthesis(e.to_string()))?;
    drop(trapdoor);
    // Overwrite the generator state the trapdoor was derived from.
    inner_rng = ChaCha20Rng::from_seed([0u8; 32]);
    let _ = inner_rng.next_u32();

    let fingerprint = layout.fingerprint();
    let verifying_key = VerifyingKey::new(pk.vk.clone(), fingerprint);
    Ok(ProvingArtifacts { proving_key: ProvingKey { inner: pk, fingerprint }, verifying_key })
}

/// Produces a randomized proof for `witness`.
///
/// An unsatisfying witness still yields a proof object; it will not verify.
pub fn prove<R: RngCore + CryptoRng + ?Sized>(
    params: &ProvingKey,
    layout: &AuthCircuitLayout,
    witness: &WitnessAssignment,
    rng: &mut R,
) -> Result<Proof, ProofSysError> {
    if params.fingerprint != layout.fingerprint() {
        return Err(ProofSysError::FingerprintMismatch);
    }
    let cs = layout.constraint_system();
    if witness.public.len() != cs.num_public() || witness.private.len() != cs.num_private() {
        return Err(ProofSysError::WitnessShape {
            expected: cs.num_public() + cs.num_private(),
            got: witness.public.len() + witness.private.len(),
        });
    }
    let mut inner_rng = ark_rng(rng)?;
    let circuit = R1csAdapter::with_values(cs, witness.public_fr(), witness.private_fr());
    let proof = Groth16::<Bn254>::create_random_proof_with_reduction(circuit, &params.inner, &mut inner_rng)
        .map_err(|e| ProofSysError::Synthesis(e.to_string()))?;
    Ok(Proof(proof))
}

/// Checks the Groth16 pairing equation for `public_inputs` (layout order).
pub fn verify(params: &VerifyingKey, public_inputs: &[FieldElement], proof: &Proof) -> Result<bool, ProofSysError> {
    let expected = params.num_public_inputs();
    if public_inputs.len() != expected {
        return Err(ProofSysError::PublicInputCount { expected, got: public_inputs.len() });
    }
    let inputs: Vec<Fr> = public_inputs.iter().map(|x| x.inner()).collect();
    Groth16::<Bn254>::verify_proof(&params.prepared, &proof.0, &inputs)
        .map_err(|e| ProofSysError::Synthesis(e.to_string()))
}

/// Runs `f` on a dedicated pool of `threads` workers, capping the prover's
/// internal parallelism.
pub fn with_thread_budget<T: Send>(threads: usize, f: impl FnOnce() -> T + Send) -> T {
    match rayon::ThreadPoolBuilder::new().num_threads(threads.max(1)).build() {
        Ok(pool) => pool.install(f),
        Err(_) => f(),
    }
}
