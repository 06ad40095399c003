use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;

use rand::{CryptoRng, RngCore};

use super::challenge::{derive_challenge, Challenge};
use super::clock::{Clock, SystemClock};
use super::config::{ConfigError, VerifierConfig};
use super::credential::{quantize_expiry, Credential};
use super::policy::{RegistrationEvidence, RegistrationPolicy};
use super::prover::AuthRequest;
use super::replay::{CacheOutcome, ReplayCache, SessionId};
use super::ProtocolError;
use crate::primitives::{poseidon_hash, sample_token, sign, FieldElement, Point, SigningKeypair};
use crate::proofsys::{verify, VerifyingKey};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RejectReason {
    WrongOperatorKey,
    StaleChallenge,
    Expired,
    ZeroOutput,
    InvalidProof,
    ReplayDetected,
}

impl RejectReason {
    pub const ALL: [RejectReason; 6] = [
        RejectReason::WrongOperatorKey,
        RejectReason::StaleChallenge,
        RejectReason::Expired,
        RejectReason::ZeroOutput,
        RejectReason::InvalidProof,
        RejectReason::ReplayDetected,
    ];

    pub fn code(&self) -> &'static str {
        match self {
            RejectReason::WrongOperatorKey => "wrong_operator_key",
            RejectReason::StaleChallenge => "stale_challenge",
            RejectReason::Expired => "expired",
            RejectReason::ZeroOutput => "zero_output",
            RejectReason::InvalidProof => "invalid_proof",
            RejectReason::ReplayDetected => "replay_detected",
        }
    }

    pub fn from_code(code: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|r| r.code() == code)
    }
}

impl std::fmt::Display for RejectReason {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.code())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Decision {
    Granted(SessionId),
    Rejected(RejectReason),
}

impl Decision {
    pub fn is_granted(&self) -> bool {
        matches!(self, Decision::Granted(_))
    }

    pub fn reason(&self) -> Option<RejectReason> {
        match self {
            Decision::Rejected(r) => Some(*r),
            Decision::Granted(_) => None,
        }
    }
}

/// Counter snapshot.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct VerifierStats {
    pub registrations: u64,
    pub proof_verifications: u64,
    pub granted: u64,
    pub rejected: u64,
    pub sessions_terminated: u64,
}

#[derive(Default)]
struct Counters {
    registrations: AtomicU64,
    proof_verifications: AtomicU64,
    granted: AtomicU64,
    rejected: AtomicU64,
    sessions_terminated: AtomicU64,
}

/// Signs a fresh credential expiring at the quantized `now + validity`.
pub fn issue_credential<R: RngCore + CryptoRng + ?Sized>(
    keypair: &SigningKeypair,
    validity_seconds: u64,
    now: u64,
    rng: &mut R,
) -> Result<Credential, ProtocolError> {
    let t_exp = quantize_expiry(now, validity_seconds).ok_or(ProtocolError::InvalidValidity)?;
    let token = sample_token(rng).map_err(|e| ProtocolError::Rng(e.to_string()))?;
    let msg = poseidon_hash(&[token.value(), FieldElement::from_u64(t_exp)]).expect("arity 2");
    Ok(Credential { token, t_exp, signature: sign(keypair, &msg), operator_pk: keypair.public_key() })
}

/// Operator-side state: signing key, verifying key, policy and replay cache.
pub struct VerifierState {
    vk: VerifyingKey,
    keypair: SigningKeypair,
    config: VerifierConfig,
    policy: Box<dyn RegistrationPolicy>,
    clock: Arc<dyn Clock>,
    cache: ReplayCache,
    counters: Counters,
}

impl std::fmt::Debug for VerifierState {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("VerifierState")
            .field("operator_pk", &self.keypair.pk)
            .field("config", &self.config)
            .field("cache_len", &self.cache.len())
            .finish_non_exhaustive()
    }
}

impl VerifierState {
    /// Uses the system clock and the registration policy named in `config`.
    pub fn new(vk: VerifyingKey, keypair: SigningKeypair, config: VerifierConfig) -> Result<Self, ConfigError> {
        let policy = config.build_policy()?;
        let cache = ReplayCache::new(config.skew_tolerance_buckets.saturating_add(1), config.replay_policy);
        Ok(VerifierState {
            vk,
            keypair,
            config,
            policy,
            clock: Arc::new(SystemClock),
            cache,
            counters: Counters::default(),
        })
    }

    pub fn with_clock(mut self, clock: Arc<dyn Clock>) -> Self {
        self.clock = clock;
        self
    }

    pub fn with_policy(mut self, policy: Box<dyn RegistrationPolicy>) -> Self {
        self.policy = policy;
        self
    }

    pub fn operator_pk(&self) -> Point {
        self.keypair.pk
    }

    pub fn config(&self) -> &VerifierConfig {
        &self.config
    }

    pub fn now(&self) -> Result<u64, ProtocolError> {
        Ok(self.clock.now()?)
    }

    /// Checks `evidence` and issues a credential valid for the configured
    /// period. Nothing about the user is kept.
    pub fn register<R: RngCore + CryptoRng + ?Sized>(
        &self,
        evidence: &RegistrationEvidence,
        rng: &mut R,
    ) -> Result<Credential, ProtocolError> {
        self.register_for(evidence, self.config.validity_seconds, rng)
    }

    pub fn register_for<R: RngCore + CryptoRng + ?Sized>(
        &self,
        evidence: &RegistrationEvidence,
        validity_seconds: u64,
        rng: &mut R,
    ) -> Result<Credential, ProtocolError> {
        if !self.policy.accepts(evidence) {
            return Err(ProtocolError::RequirementsNotMet);
        }
        let now = self.clock.now()?;
        let cred = issue_credential(&self.keypair, validity_seconds, now, rng)?;
        self.counters.registrations.fetch_add(1, Ordering::Relaxed);
        Ok(cred)
    }

    /// Decides `req` against the current clock.
    pub fn authenticate(&self, req: &AuthRequest) -> Result<Decision, ProtocolError> {
        let now = self.clock.now()?;
        Ok(self.authenticate_at(req, now))
    }

    /// Decides `req` as of `now`. Cheap checks run before the pairing check,
    /// and the replay cache is only touched by proofs that verify.
    pub fn authenticate_at(&self, req: &AuthRequest, now: u64) -> Decision {
        let decision = self.decide(req, now);
        let counter = if decision.is_granted() { &self.counters.granted } else { &self.counters.rejected };
        counter.fetch_add(1, Ordering::Relaxed);
        decision
    }

    fn decide(&self, req: &AuthRequest, now: u64) -> Decision {
        use RejectReason::*;
        if req.operator_pk != self.keypair.pk {
            return Decision::Rejected(WrongOperatorKey);
        }
        let current = derive_challenge(now);
        if Challenge(req.c).distance(&current) > self.config.skew_tolerance_buckets {
            return Decision::Rejected(StaleChallenge);
        }
        if now >= req.t_exp {
            return Decision::Rejected(Expired);
        }
        if req.out.is_zero() {
            return Decision::Rejected(ZeroOutput);
        }
        self.counters.proof_verifications.fetch_add(1, Ordering::Relaxed);
        if !matches!(verify(&self.vk, &req.public_inputs(), &req.proof), Ok(true)) {
            return Decision::Rejected(InvalidProof);
        }
        let session = SessionId::random();
        match self.cache.check_and_insert(req.out, req.c, current.bucket(), session) {
            CacheOutcome::Inserted => Decision::Granted(session),
            CacheOutcome::Duplicate { terminated } => {
                if terminated.is_some() {
                    self.counters.sessions_terminated.fetch_add(1, Ordering::Relaxed);
                }
                Decision::Rejected(ReplayDetected)
            }
        }
    }

    /// `Some(false)` once a replay has terminated the session; `None` after
    /// its cache entry has aged out.
    pub fn is_session_active(&self, id: &SessionId) -> Option<bool> {
        self.cache.session_active(id)
    }

    pub fn sweep_cache(&self, now: u64) -> usize {
        self.cache.sweep(derive_challenge(now).bucket())
    }

    pub fn cache_len(&self) -> usize {
        self.cache.len()
    }

    pub fn stats(&self) -> VerifierStats {
        let c = &self.counters;
        VerifierStats {
            registrations: c.registrations.load(Ordering::Relaxed),
            proof_verifications: c.proof_verifications.load(Ordering::Relaxed),
            granted: c.granted.load(Ordering::Relaxed),
            rejected: c.rejected.load(Ordering::Relaxed),
            sessions_terminated: c.sessions_terminated.load(Ordering::Relaxed),
        }
    }
}
