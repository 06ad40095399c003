//! Poseidon and EdDSA against vectors produced by an independent Python
//! implementation, plus a second Rust Poseidon implementation.

use std::str::FromStr;

use ark_bn254::Fr;
use ark_ff::PrimeField;
use light_poseidon::{Poseidon, PoseidonHasher};
use sans_core::primitives::{
    keygen, poseidon_hash, sign, signature_challenge, verify, FieldElement, Point, Signature, Token,
};
use sans_core::protocol::{derive_challenge, Credential};
use serde::Deserialize;

#[derive(Deserialize)]
struct Vectors {
    poseidon: Vec<PoseidonVector>,
    eddsa: Vec<EddsaVector>,
}

#[derive(Deserialize)]
struct PoseidonVector {
    inputs: Vec<String>,
    digest: String,
}

#[derive(Deserialize)]
struct EddsaVector {
    seed: String,
    pk: [String; 2],
    token: String,
    t_exp: u64,
    msg: String,
    r: [String; 2],
    s: String,
    challenge_c: u64,
    out: String,
}

fn vectors() -> Vectors {
    serde_json::from_str(include_str!("data/reference_vectors.json")).unwrap()
}

fn fe(s: &str) -> FieldElement {
    FieldElement::from_str(s).unwrap()
}

fn to_ark(x: &FieldElement) -> Fr {
    Fr::from_le_bytes_mod_order(&x.to_bytes())
}

#[test]
fn poseidon_matches_reference_vectors() {
    let v = vectors();
    for arity in 1..=4 {
        assert!(v.poseidon.iter().filter(|p| p.inputs.len() == arity).count() >= 10);
    }
    for p in &v.poseidon {
        let inputs: Vec<_> = p.inputs.iter().map(|s| fe(s)).collect();
        assert_eq!(poseidon_hash(&inputs).unwrap(), fe(&p.digest), "inputs {:?}", p.inputs);
    }
}

#[test]
fn poseidon_matches_light_poseidon() {
    let v = vectors();
    for p in &v.poseidon {
        let inputs: Vec<_> = p.inputs.iter().map(|s| fe(s)).collect();
        let ark_inputs: Vec<Fr> = inputs.iter().map(to_ark).collect();
        let mut hasher = Poseidon::<Fr>::new_circom(inputs.len()).unwrap();
        let expected = hasher.hash(&ark_inputs).unwrap();
        assert_eq!(to_ark(&poseidon_hash(&inputs).unwrap()), expected);
    }
}

#[test]
fn eddsa_matches_reference_vectors() {
    let v = vectors();
    assert!(v.eddsa.len() >= 10);
    for e in &v.eddsa {
        let seed: [u8; 32] = hex::decode(&e.seed).unwrap().try_into().unwrap();
        let kp = keygen(&seed);
        let pk = Point::from_coordinates(fe(&e.pk[0]), fe(&e.pk[1])).unwrap();
        assert_eq!(kp.public_key(), pk);

        let token = Token::from_field(fe(&e.token)).unwrap();
        let msg = poseidon_hash(&[token.value(), FieldElement::from_u64(e.t_exp)]).unwrap();
        assert_eq!(msg, fe(&e.msg));

        let sig = sign(&kp, &msg);
        let r = Point::from_coordinates(fe(&e.r[0]), fe(&e.r[1])).unwrap();
        assert_eq!(sig, Signature { r, s: fe(&e.s) });
        assert!(verify(&pk, &msg, &sig).unwrap());

        let cred = Credential { token, t_exp: e.t_exp, signature: sig, operator_pk: pk };
        assert!(cred.signature_valid());

        let c = derive_challenge(e.challenge_c * 60 + 30).as_field();
        assert_eq!(poseidon_hash(&[c, token.value()]).unwrap(), fe(&e.out));
    }
}

#[test]
fn reference_signatures_reject_other_messages() {
    let v = vectors();
    for e in &v.eddsa {
        let pk = Point::from_coordinates(fe(&e.pk[0]), fe(&e.pk[1])).unwrap();
        let r = Point::from_coordinates(fe(&e.r[0]), fe(&e.r[1])).unwrap();
        let sig = Signature { r, s: fe(&e.s) };
        let msg = fe(&e.msg);
        assert!(!verify(&pk, &(msg + FieldElement::ONE), &sig).unwrap());
        let k = signature_challenge(&r, &pk, &msg);
        assert_ne!(k, FieldElement::ZERO);
    }
}
