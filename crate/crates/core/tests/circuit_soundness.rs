mod common;

use common::{credential, layout, rng, NOW};
use proptest::prelude::*;
use rand::Rng;
use sans_core::circuit::{assign_witness, build_circuit, satisfied, Wire, PRIVATE_INPUTS, PUBLIC_INPUTS};
use sans_core::primitives::{poseidon_hash, FieldElement, Signature};
use sans_core::protocol::{derive_challenge, issue_credential, DAY_SECONDS};

/// Regression pin for the layout.
const CONSTRAINT_COUNT: usize = 6596;

#[test]
fn constraint_count_is_pinned_and_deterministic() {
    let l = layout();
    assert_eq!(l.constraint_count(), CONSTRAINT_COUNT);
    assert!(l.constraint_count() > 0 && l.constraint_count() < 30_000);
    let again = build_circuit().unwrap();
    assert_eq!(again.constraint_count(), l.constraint_count());
    assert_eq!(again.fingerprint(), l.fingerprint());
    assert_eq!(l.public_input_names(), PUBLIC_INPUTS);
    for name in PRIVATE_INPUTS.iter().chain(&["b"]) {
        assert!(matches!(l.wire(name), Some(Wire::Private(_))), "{name}");
    }
    let d = l.describe();
    assert!(d.contains(&format!("constraints: {CONSTRAINT_COUNT}")));
    assert!(d.contains("public inputs: c, pk_x, pk_y, t_exp, out"));
}

#[test]
fn honest_assignment_outputs_token_hash() {
    let cred = credential(0);
    let c = derive_challenge(NOW).as_field();
    let w = assign_witness(&cred, c).unwrap();
    assert!(satisfied(layout(), &w).unwrap());
    assert_eq!(w.get(layout().wire("b").unwrap()), Some(FieldElement::ONE));
    let out = *w.public_inputs().last().unwrap();
    assert_eq!(out, poseidon_hash(&[c, cred.token.value()]).unwrap());
    assert_ne!(out, FieldElement::ZERO);
}

#[test]
fn bad_signature_gives_zero_output() {
    let mut cred = credential(1);
    cred.signature = Signature { s: cred.signature.s + FieldElement::ONE, ..cred.signature };
    let w = assign_witness(&cred, derive_challenge(NOW).as_field()).unwrap();
    assert!(satisfied(layout(), &w).unwrap());
    assert_eq!(w.get(layout().wire("b").unwrap()), Some(FieldElement::ZERO));
    assert_eq!(*w.public_inputs().last().unwrap(), FieldElement::ZERO);

    // Forcing b = 1 (and out to the honest hash) breaks the constraints.
    let mut forged = w.clone();
    forged.set(layout().wire("b").unwrap(), FieldElement::ONE);
    let c = derive_challenge(NOW).as_field();
    forged.set(layout().wire("out").unwrap(), poseidon_hash(&[c, cred.token.value()]).unwrap());
    assert!(!satisfied(layout(), &forged).unwrap());
}

#[test]
fn token_plus_one_is_unsatisfied() {
    let cred = credential(2);
    let mut w = assign_witness(&cred, derive_challenge(NOW).as_field()).unwrap();
    let token = layout().wire("token").unwrap();
    let v = w.get(token).unwrap();
    w.set(token, v + FieldElement::ONE);
    assert!(!satisfied(layout(), &w).unwrap());
}

#[test]
fn b_wire_must_be_boolean() {
    let cred = credential(3);
    let w = assign_witness(&cred, derive_challenge(NOW).as_field()).unwrap();
    let b = layout().wire("b").unwrap();
    for v in [2u64, 3, 1 << 40] {
        let mut bad = w.clone();
        bad.set(b, FieldElement::from_u64(v));
        assert!(!satisfied(layout(), &bad).unwrap());
    }
    let mut neg = w.clone();
    neg.set(b, FieldElement::ZERO - FieldElement::ONE);
    assert!(!satisfied(layout(), &neg).unwrap());
}

#[test]
fn perturbing_a_private_input_breaks_or_changes_output() {
    let op = common::operator();
    let mut r = rng(99);
    let names = PRIVATE_INPUTS;
    for trial in 0..60 {
        let now = NOW + r.gen_range(0..10 * DAY_SECONDS);
        let cred = issue_credential(&op, r.gen_range(60..400 * DAY_SECONDS), now, &mut r).unwrap();
        let c = derive_challenge(now).as_field();
        let honest = assign_witness(&cred, c).unwrap();
        let out = *honest.public_inputs().last().unwrap();
        let name = names[trial % names.len()];
        let wire = layout().wire(name).unwrap();
        let delta = FieldElement::from_u64(r.gen_range(1..u64::MAX));
        let mut w = honest.clone();
        w.set(wire, w.get(wire).unwrap() + delta);
        let still = satisfied(layout(), &w).unwrap();
        assert!(!still || *w.public_inputs().last().unwrap() != out, "trial {trial} wire {name}");
    }
}

#[test]
fn public_input_perturbations_are_unsatisfied() {
    let cred = credential(4);
    let w = assign_witness(&cred, derive_challenge(NOW).as_field()).unwrap();
    for name in PUBLIC_INPUTS {
        let wire = layout().wire(name).unwrap();
        let mut bad = w.clone();
        bad.set(wire, w.get(wire).unwrap() + FieldElement::ONE);
        assert!(!satisfied(layout(), &bad).unwrap(), "{name}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn honest_witnesses_satisfy(seed in any::<u64>(), bucket in 0u64..(1 << 30)) {
        let cred = issue_credential(&common::operator(), DAY_SECONDS, NOW, &mut rng(seed)).unwrap();
        let w = assign_witness(&cred, FieldElement::from_u64(bucket)).unwrap();
        prop_assert!(satisfied(layout(), &w).unwrap());
    }
}
