mod common;

use common::{artifacts, credential, layout, other_artifacts, rng};
use sans_core::circuit::{assign_witness, satisfied};
use sans_core::primitives::FieldElement;
use sans_core::proofsys::format::{decode, ArtifactKind, FormatError, HEADER_LEN};
use sans_core::proofsys::{prove, verify, Proof, ProofSysError, ProvingArtifacts, ProvingKey, VerifyingKey, PROOF_LEN};
use sans_core::protocol::derive_challenge;

fn honest() -> (sans_core::circuit::WitnessAssignment, Proof) {
    let cred = credential(0);
    let w = assign_witness(&cred, derive_challenge(common::NOW).as_field()).unwrap();
    let proof = prove(&artifacts().proving_key, layout(), &w, &mut rng(7)).unwrap();
    (w, proof)
}

#[test]
fn honest_proof_verifies_and_has_fixed_size() {
    let (w, proof) = honest();
    let vk = &artifacts().verifying_key;
    assert!(verify(vk, w.public_inputs(), &proof).unwrap());
    assert_eq!(proof.to_bytes().len(), PROOF_LEN);
    assert_eq!(Proof::from_bytes(&proof.to_bytes()).unwrap(), proof);
}

#[test]
fn every_public_input_is_bound() {
    let (w, proof) = honest();
    let vk = &artifacts().verifying_key;
    for i in 0..w.public_inputs().len() {
        let mut inputs = w.public_inputs().to_vec();
        inputs[i] = inputs[i] + FieldElement::ONE;
        assert!(!verify(vk, &inputs, &proof).unwrap(), "slot {i}");
    }
    let mut swapped = w.public_inputs().to_vec();
    swapped.swap(0, 3);
    assert!(!verify(vk, &swapped, &proof).unwrap());
    assert!(matches!(
        verify(vk, &w.public_inputs()[..4], &proof),
        Err(ProofSysError::PublicInputCount { expected: 5, got: 4 })
    ));
}

#[test]
fn cross_setup_proofs_fail() {
    let (w, proof) = honest();
    assert!(!verify(&other_artifacts().verifying_key, w.public_inputs(), &proof).unwrap());
    assert!(matches!(
        ProvingArtifacts::from_parts(artifacts().proving_key.clone(), other_artifacts().verifying_key.clone()),
        Err(ProofSysError::SetupMismatch)
    ));
}

#[test]
fn unsatisfying_witness_never_verifies() {
    let cred = credential(1);
    let mut w = assign_witness(&cred, derive_challenge(common::NOW).as_field()).unwrap();
    let token = layout().wire("token").unwrap();
    let v = w.get(token).unwrap();
    w.set(token, v + FieldElement::ONE);
    assert!(!satisfied(layout(), &w).unwrap());
    let proof = prove(&artifacts().proving_key, layout(), &w, &mut rng(3)).unwrap();
    assert!(!verify(&artifacts().verifying_key, w.public_inputs(), &proof).unwrap());
}

#[test]
fn proofs_are_randomized() {
    let cred = credential(2);
    let w = assign_witness(&cred, derive_challenge(common::NOW).as_field()).unwrap();
    let a = prove(&artifacts().proving_key, layout(), &w, &mut rng(10)).unwrap();
    let b = prove(&artifacts().proving_key, layout(), &w, &mut rng(11)).unwrap();
    assert_ne!(a.to_bytes(), b.to_bytes());
    assert!(verify(&artifacts().verifying_key, w.public_inputs(), &b).unwrap());
}

#[test]
fn key_files_round_trip_and_reject_truncation() {
    let a = artifacts();
    let fp = layout().fingerprint();
    let vk_bytes = a.verifying_key.to_bytes();
    let vk = VerifyingKey::from_bytes(&vk_bytes, Some(&fp)).unwrap();
    assert_eq!(vk.to_bytes(), vk_bytes);
    for cut in (0..vk_bytes.len()).step_by(7).chain([vk_bytes.len() - 1]) {
        assert!(VerifyingKey::from_bytes(&vk_bytes[..cut], Some(&fp)).is_err(), "cut {cut}");
    }
    let mut wrong = fp;
    wrong[0] ^= 1;
    assert!(matches!(VerifyingKey::from_bytes(&vk_bytes, Some(&wrong)), Err(ProofSysError::FingerprintMismatch)));

    let pk_bytes = a.proving_key.to_bytes();
    let pk = ProvingKey::from_bytes(&pk_bytes, Some(&fp)).unwrap();
    assert!(pk == a.proving_key);
    for cut in [0, 3, HEADER_LEN - 1, HEADER_LEN, HEADER_LEN + 1, pk_bytes.len() / 2, pk_bytes.len() - 1] {
        assert!(ProvingKey::from_bytes(&pk_bytes[..cut], Some(&fp)).is_err(), "cut {cut}");
    }
    let mut long = pk_bytes.clone();
    long.push(0);
    assert!(ProvingKey::from_bytes(&long, Some(&fp)).is_err());
    assert!(matches!(decode(&vk_bytes, ArtifactKind::ProvingKey, None), Err(FormatError::WrongKind(2))));
}

#[test]
fn proof_file_round_trip() {
    let (_, proof) = honest();
    let fp = layout().fingerprint();
    let bytes = proof.to_file_bytes(&fp);
    assert_eq!(bytes.len(), HEADER_LEN + PROOF_LEN);
    let (back, got) = Proof::from_file_bytes(&bytes, Some(&fp)).unwrap();
    assert_eq!(back, proof);
    assert_eq!(got, fp);
    for cut in 0..bytes.len() {
        assert!(Proof::from_file_bytes(&bytes[..cut], Some(&fp)).is_err(), "cut {cut}");
    }
    let mut garbage = proof.to_bytes();
    garbage[5] ^= 0xff;
    // Either an invalid encoding or a valid but wrong proof.
    if let Ok(p) = Proof::from_bytes(&garbage) {
        assert_ne!(p, proof);
    }
}
