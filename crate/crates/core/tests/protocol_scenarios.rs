mod common;

use std::collections::HashSet;
use std::sync::Arc;

use common::{artifacts, layout, rng, verifier, verifier_with, NOW};
use sans_core::primitives::{keygen, FieldElement, Signature};
use sans_core::protocol::{
    authenticate_prove, derive_challenge, Decision, MockClock, ProtocolError, RegistrationEvidence, RejectReason,
    ReplayPolicy, SharedSecretPolicy, VerifierConfig, VerifierState, BUCKET_SECONDS, DAY_SECONDS,
};

fn evidence(b: &[u8]) -> RegistrationEvidence {
    RegistrationEvidence::new(b.to_vec()).unwrap()
}

fn setup_user(seed: u64) -> (Arc<MockClock>, VerifierState, sans_core::protocol::Credential) {
    let clock = Arc::new(MockClock::new(NOW));
    let v = verifier(clock.clone());
    let cred = v.register(&evidence(b"ok"), &mut rng(seed)).unwrap();
    (clock, v, cred)
}

fn prove_at(cred: &sans_core::protocol::Credential, now: u64, seed: u64) -> sans_core::protocol::AuthRequest {
    authenticate_prove(cred, now, layout(), &artifacts().proving_key, &mut rng(seed)).unwrap()
}

#[test]
fn registration_policy_gates_issuance() {
    let clock = Arc::new(MockClock::new(NOW));
    let v = verifier(clock).with_policy(Box::new(SharedSecretPolicy::new("open sesame")));
    assert!(matches!(v.register(&evidence(b"wrong"), &mut rng(1)), Err(ProtocolError::RequirementsNotMet)));
    let cred = v.register(&evidence(b"open sesame"), &mut rng(1)).unwrap();
    assert!(cred.signature_valid());
    assert!(cred.t_exp > NOW);
    assert_eq!(cred.t_exp % DAY_SECONDS, 0);
    assert_eq!(v.stats().registrations, 1);
    assert!(RegistrationEvidence::new(vec![0; 64 * 1024 + 1]).is_err());
}

#[test]
fn issued_tokens_are_distinct() {
    let clock = Arc::new(MockClock::new(NOW));
    let v = verifier(clock);
    let mut r = rng(5);
    let tokens: HashSet<_> = (0..1000).map(|_| v.register(&evidence(b""), &mut r).unwrap().token.value()).collect();
    assert_eq!(tokens.len(), 1000);
}

#[test]
fn honest_request_is_granted() {
    let (_, v, cred) = setup_user(1);
    let req = prove_at(&cred, NOW, 2);
    assert_eq!(req.c, derive_challenge(NOW).bucket());
    let d = v.authenticate(&req).unwrap();
    let Decision::Granted(session) = d else { panic!("{d:?}") };
    assert_eq!(v.is_session_active(&session), Some(true));
    assert_eq!(v.stats().proof_verifications, 1);
    assert_eq!(v.stats().granted, 1);
}

#[test]
fn replay_rejects_both() {
    let (_, v, cred) = setup_user(2);
    let req = prove_at(&cred, NOW, 3);
    let Decision::Granted(first) = v.authenticate(&req).unwrap() else { panic!() };
    assert_eq!(v.authenticate(&req).unwrap(), Decision::Rejected(RejectReason::ReplayDetected));
    assert_eq!(v.is_session_active(&first), Some(false));
    assert_eq!(v.stats().sessions_terminated, 1);

    // A fresh proof in the same bucket has the same out.
    let again = prove_at(&cred, NOW + 1, 4);
    assert_eq!(again.out, req.out);
    assert_ne!(again.proof, req.proof);
    assert_eq!(v.authenticate(&again).unwrap(), Decision::Rejected(RejectReason::ReplayDetected));
}

#[test]
fn reject_incoming_policy_keeps_first_session() {
    let clock = Arc::new(MockClock::new(NOW));
    let cfg = VerifierConfig { replay_policy: ReplayPolicy::RejectIncoming, ..Default::default() };
    let v = verifier_with(clock, cfg, artifacts());
    let cred = v.register(&evidence(b""), &mut rng(3)).unwrap();
    let req = prove_at(&cred, NOW, 1);
    let Decision::Granted(first) = v.authenticate(&req).unwrap() else { panic!() };
    assert_eq!(v.authenticate(&req).unwrap(), Decision::Rejected(RejectReason::ReplayDetected));
    assert_eq!(v.is_session_active(&first), Some(true));
}

#[test]
fn different_buckets_grant_with_distinct_outputs() {
    let (clock, v, cred) = setup_user(4);
    let a = prove_at(&cred, NOW, 1);
    assert!(v.authenticate(&a).unwrap().is_granted());
    clock.advance(BUCKET_SECONDS);
    let b = prove_at(&cred, NOW + BUCKET_SECONDS, 2);
    assert_ne!(a.out, b.out);
    assert!(v.authenticate(&b).unwrap().is_granted());
}

#[test]
fn stale_challenge_skips_pairing() {
    let (clock, v, cred) = setup_user(5);
    let req = prove_at(&cred, NOW - 10 * BUCKET_SECONDS, 1);
    assert_eq!(v.authenticate(&req).unwrap(), Decision::Rejected(RejectReason::StaleChallenge));
    assert_eq!(v.stats().proof_verifications, 0);
    clock.set(NOW + 20 * BUCKET_SECONDS);
    let future = prove_at(&cred, NOW + 40 * BUCKET_SECONDS, 2);
    assert_eq!(v.authenticate(&future).unwrap(), Decision::Rejected(RejectReason::StaleChallenge));
    assert_eq!(v.stats().proof_verifications, 0);
}

#[test]
fn skew_window_is_one_bucket_each_way() {
    let cred = setup_user(6).2;
    let bucket_start = derive_challenge(NOW).bucket() * BUCKET_SECONDS;
    let req = prove_at(&cred, bucket_start, 1);
    for (offset, ok) in [(-2i64, false), (-1, true), (0, true), (1, true), (2, false)] {
        let now = (bucket_start as i64 + offset * BUCKET_SECONDS as i64) as u64 + 30;
        let v = verifier(Arc::new(MockClock::new(now)));
        assert_eq!(v.authenticate(&req).unwrap().is_granted(), ok, "offset {offset}");
    }
}

#[test]
fn expired_credential_is_proved_but_rejected() {
    let (clock, v, cred) = setup_user(7);
    let after = cred.t_exp + 5;
    clock.set(after);
    let req = prove_at(&cred, after, 1);
    assert_eq!(v.authenticate(&req).unwrap(), Decision::Rejected(RejectReason::Expired));
    assert_eq!(v.stats().proof_verifications, 0);
    // Exactly at t_exp counts as expired.
    clock.set(cred.t_exp);
    let at = prove_at(&cred, cred.t_exp, 2);
    assert_eq!(v.authenticate(&at).unwrap(), Decision::Rejected(RejectReason::Expired));
}

#[test]
fn wrong_operator_key_is_checked_first() {
    let (_, _, cred) = setup_user(8);
    let req = prove_at(&cred, NOW, 1);
    let other = VerifierState::new(
        artifacts().verifying_key.clone(),
        keygen(&[9; 32]),
        VerifierConfig { registration_policy: "accept-all".into(), ..Default::default() },
    )
    .unwrap()
    .with_clock(Arc::new(MockClock::new(NOW)));
    assert_eq!(other.authenticate(&req).unwrap(), Decision::Rejected(RejectReason::WrongOperatorKey));
    assert_eq!(other.stats().proof_verifications, 0);
}

#[test]
fn bad_signature_yields_zero_output() {
    let (_, v, mut cred) = setup_user(9);
    cred.signature = Signature { s: cred.signature.s + FieldElement::ONE, ..cred.signature };
    let req = prove_at(&cred, NOW, 1);
    assert_eq!(req.out, FieldElement::ZERO);
    assert_eq!(v.authenticate(&req).unwrap(), Decision::Rejected(RejectReason::ZeroOutput));
    assert_eq!(v.stats().proof_verifications, 0);
}

#[test]
fn tampered_requests_fail_the_proof() {
    let (_, v, cred) = setup_user(10);
    let req = prove_at(&cred, NOW, 1);
    let mut out = req.clone();
    out.out = out.out + FieldElement::ONE;
    assert_eq!(v.authenticate(&out).unwrap(), Decision::Rejected(RejectReason::InvalidProof));
    let mut c = req.clone();
    c.c += 1;
    assert_eq!(v.authenticate(&c).unwrap(), Decision::Rejected(RejectReason::InvalidProof));
    let mut t = req.clone();
    t.t_exp += DAY_SECONDS;
    assert_eq!(v.authenticate(&t).unwrap(), Decision::Rejected(RejectReason::InvalidProof));
    assert_eq!(v.stats().proof_verifications, 3);
    assert_eq!(v.cache_len(), 0, "failed proofs never reach the cache");
    assert!(v.authenticate(&req).unwrap().is_granted());
}

#[test]
fn cross_setup_proof_is_invalid() {
    let clock = Arc::new(MockClock::new(NOW));
    let v = verifier_with(clock, Default::default(), common::other_artifacts());
    let cred = v.register(&evidence(b""), &mut rng(11)).unwrap();
    let req = prove_at(&cred, NOW, 1);
    assert_eq!(v.authenticate(&req).unwrap(), Decision::Rejected(RejectReason::InvalidProof));
}

#[test]
fn sweep_then_replay_is_still_stale() {
    let (clock, v, cred) = setup_user(12);
    let req = prove_at(&cred, NOW, 1);
    assert!(v.authenticate(&req).unwrap().is_granted());
    assert_eq!(v.sweep_cache(NOW), 0);
    assert_eq!(v.sweep_cache(NOW + BUCKET_SECONDS), 0);
    let later = NOW + 2 * BUCKET_SECONDS;
    assert_eq!(v.sweep_cache(later), 1);
    assert_eq!(v.sweep_cache(later), 0);
    assert_eq!(v.cache_len(), 0);
    clock.set(later);
    assert_eq!(v.authenticate(&req).unwrap(), Decision::Rejected(RejectReason::StaleChallenge));
}

#[test]
fn concurrent_presentations_grant_once() {
    let (_, v, cred) = setup_user(13);
    let req = prove_at(&cred, NOW, 1);
    let v = Arc::new(v);
    let handles: Vec<_> = (0..8)
        .map(|_| {
            let (v, req) = (v.clone(), req.clone());
            std::thread::spawn(move || v.authenticate(&req).unwrap())
        })
        .collect();
    let decisions: Vec<_> = handles.into_iter().map(|h| h.join().unwrap()).collect();
    assert_eq!(decisions.iter().filter(|d| d.is_granted()).count(), 1);
    assert_eq!(v.cache_len(), 1);
}

#[test]
fn operator_state_holds_no_user_secrets() {
    let (_, v, cred) = setup_user(14);
    let req = prove_at(&cred, NOW, 1);
    v.authenticate(&req).unwrap();
    let token = cred.token.value().to_string();
    let token_hex = hex::encode(cred.token.value().to_bytes());
    for dump in [format!("{v:?}"), format!("{cred:?}"), format!("{req:?}")] {
        assert!(!dump.contains(&token) && !dump.contains(&token_hex), "{dump}");
    }
}
