#![allow(dead_code)]

use std::sync::OnceLock;

use rand::SeedableRng;
use rand_chacha::ChaCha20Rng;
use sans_core::circuit::{build_circuit, AuthCircuitLayout};
use sans_core::primitives::{keygen, SigningKeypair};
use sans_core::proofsys::{setup, ProvingArtifacts};
use sans_core::protocol::{issue_credential, Credential, DAY_SECONDS};

/// 2020-06-15T12:34:56Z
pub const NOW: u64 = 1_592_224_496;

pub fn layout() -> &'static AuthCircuitLayout {
    static L: OnceLock<AuthCircuitLayout> = OnceLock::new();
    L.get_or_init(|| build_circuit().expect("circuit builds"))
}

pub fn artifacts() -> &'static ProvingArtifacts {
    static A: OnceLock<ProvingArtifacts> = OnceLock::new();
    A.get_or_init(|| setup(layout(), &mut rng(1)).expect("setup"))
}

/// A second, independent setup of the same circuit.
pub fn other_artifacts() -> &'static ProvingArtifacts {
    static A: OnceLock<ProvingArtifacts> = OnceLock::new();
    A.get_or_init(|| setup(layout(), &mut rng(2)).expect("setup"))
}

pub fn rng(seed: u64) -> ChaCha20Rng {
    ChaCha20Rng::seed_from_u64(seed)
}

pub fn operator() -> SigningKeypair {
    keygen(&[0x5a; 32])
}

pub fn credential(seed: u64) -> Credential {
    issue_credential(&operator(), 30 * DAY_SECONDS, NOW, &mut rng(1000 + seed)).expect("issue")
}

pub fn verifier_with(
    clock: std::sync::Arc<sans_core::protocol::MockClock>,
    config: sans_core::protocol::VerifierConfig,
    artifacts: &ProvingArtifacts,
) -> sans_core::protocol::VerifierState {
    let config = sans_core::protocol::VerifierConfig { registration_policy: "accept-all".into(), ..config };
    sans_core::protocol::VerifierState::new(artifacts.verifying_key.clone(), operator(), config)
        .expect("config")
        .with_clock(clock)
}

pub fn verifier(clock: std::sync::Arc<sans_core::protocol::MockClock>) -> sans_core::protocol::VerifierState {
    verifier_with(clock, Default::default(), artifacts())
}
