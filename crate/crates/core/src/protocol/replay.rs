//! Windowed set of granted circuit outputs.
//!
//! `out = Poseidon(c, token)` is deterministic per (token, bucket), so a second
//! presentation within the acceptance window is either a replay or a shared
//! credential. Entries are keyed by `out` and remember the request's bucket;
//! once a bucket is older than the skew window the challenge check rejects it
//! anyway and the entry can go.

use std::collections::HashMap;
use std::sync::Mutex;

use rand::RngCore;

use super::config::ReplayPolicy;
use crate::primitives::FieldElement;

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct SessionId(pub [u8; 16]);

impl SessionId {
    pub fn random() -> Self {
        let mut b = [0u8; 16];
        rand::rngs::OsRng.fill_bytes(&mut b);
        SessionId(b)
    }

    pub fn to_hex(&self) -> String {
        hex::encode(self.0)
    }

    pub fn from_hex(s: &str) -> Option<Self> {
        let mut b = [0u8; 16];
        hex::decode_to_slice(s, &mut b).ok()?;
        (hex::encode(b) == s).then_some(SessionId(b))
    }
}

impl std::fmt::Debug for SessionId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "SessionId({})", self.to_hex())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CacheOutcome {
    Inserted,
    /// `terminated` names the earlier session if this call ended it.
    Duplicate {
        terminated: Option<SessionId>,
    },
}

#[derive(Debug)]
struct Entry {
    bucket: u64,
    session: SessionId,
    active: bool,
}

#[derive(Debug, Default)]
struct Inner {
    entries: HashMap<FieldElement, Entry>,
    sessions: HashMap<SessionId, FieldElement>,
    last_sweep: Option<u64>,
}

impl Inner {
    fn sweep(&mut self, now_bucket: u64, horizon: u64) -> usize {
        let before = self.entries.len();
        let sessions = &mut self.sessions;
        self.entries.retain(|_, e| {
            let keep = now_bucket.saturating_sub(e.bucket) < horizon;
            if !keep {
                sessions.remove(&e.session);
            }
            keep
        });
        self.last_sweep = Some(now_bucket);
        before - self.entries.len()
    }
}

#[derive(Debug)]
pub struct ReplayCache {
    inner: Mutex<Inner>,
    horizon: u64,
    policy: ReplayPolicy,
}

impl ReplayCache {
    /// `horizon` is the retention in buckets (skew tolerance + 1).
    pub fn new(horizon: u64, policy: ReplayPolicy) -> Self {
        ReplayCache { inner: Mutex::new(Inner::default()), horizon: horizon.max(1), policy }
    }

    pub fn horizon(&self) -> u64 {
        self.horizon
    }

    fn lock(&self) -> std::sync::MutexGuard<'_, Inner> {
        self.inner.lock().unwrap_or_else(|p| p.into_inner())
    }

    /// Atomically records `out` for a new session unless already present.
    /// Expired entries are swept first whenever the bucket has advanced.
    pub fn check_and_insert(
        &self,
        out: FieldElement,
        request_bucket: u64,
        now_bucket: u64,
        session: SessionId,
    ) -> CacheOutcome {
        let mut inner = self.lock();
        if !matches!(inner.last_sweep, Some(b) if b >= now_bucket) {
            inner.sweep(now_bucket, self.horizon);
        }
        if let Some(entry) = inner.entries.get_mut(&out) {
            let terminated = match self.policy {
                ReplayPolicy::RejectBoth if entry.active => {
                    entry.active = false;
                    Some(entry.session)
                }
                _ => None,
            };
            return CacheOutcome::Duplicate { terminated };
        }
        inner.entries.insert(out, Entry { bucket: request_bucket, session, active: true });
        inner.sessions.insert(session, out);
        CacheOutcome::Inserted
    }

    /// Drops entries whose bucket is at least `horizon` buckets old.
    pub fn sweep(&self, now_bucket: u64) -> usize {
        self.lock().sweep(now_bucket, self.horizon)
    }

    pub fn len(&self) -> usize {
        self.lock().entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// `Some(true)` while granted and not terminated; `None` once forgotten.
    pub fn session_active(&self, id: &SessionId) -> Option<bool> {
        let inner = self.lock();
        let out = inner.sessions.get(id)?;
        inner.entries.get(out).map(|e| e.active)
    }

    /// Oldest bucket still held, for invariant checks.
    pub fn oldest_bucket(&self) -> Option<u64> {
        self.lock().entries.values().map(|e| e.bucket).min()
    }
}
