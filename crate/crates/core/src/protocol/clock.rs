use std::sync::atomic::{AtomicU64, Ordering};
use std::time::{SystemTime, UNIX_EPOCH};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("clock unavailable: {0}")]
pub struct ClockError(pub String);

/// Source of Unix time in seconds.
pub trait Clock: Send + Sync {
    fn now(&self) -> Result<u64, ClockError>;
}

#[derive(Debug, Default, Clone, Copy)]
pub struct SystemClock;

impl Clock for SystemClock {
    fn now(&self) -> Result<u64, ClockError> {
        SystemTime::now().duration_since(UNIX_EPOCH).map(|d| d.as_secs()).map_err(|e| ClockError(e.to_string()))
    }
}

/// Settable clock for tests.
#[derive(Debug, Default)]
pub struct MockClock(AtomicU64);

impl MockClock {
    pub fn new(now: u64) -> Self {
        MockClock(AtomicU64::new(now))
    }

    pub fn set(&self, now: u64) {
        self.0.store(now, Ordering::SeqCst);
    }

    pub fn advance(&self, secs: u64) {
        self.0.fetch_add(secs, Ordering::SeqCst);
    }
}

impl Clock for MockClock {
    fn now(&self) -> Result<u64, ClockError> {
        Ok(self.0.load(Ordering::SeqCst))
    }
}
