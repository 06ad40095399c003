use std::path::Path;

use serde::Deserialize;
use thiserror::Error;

use super::policy::{AcceptAll, RegistrationPolicy, SharedSecretPolicy};

/// What to do when an `out` value is presented a second time.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ReplayPolicy {
    /// Reject the newcomer and terminate the session already granted.
    #[default]
    RejectBoth,
    /// Only reject the newcomer.
    RejectIncoming,
}

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("reading config: {0}")]
    Io(#[from] std::io::Error),
    #[error("parsing config: {0}")]
    Parse(#[from] toml::de::Error),
    #[error("invalid value for {key}: {value}")]
    Invalid { key: &'static str, value: String },
}

/// Operator configuration, from a TOML file and/or `SANS_*` environment variables.
///
/// ```toml
/// skew_tolerance_buckets = 1
/// validity_seconds = 2592000
/// replay_policy = "reject-both"        # or "reject-incoming"
/// registration_policy = "shared-secret" # or "accept-all"
/// registration_secret = "..."
/// ```
#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct VerifierConfig {
    pub skew_tolerance_buckets: u64,
    pub validity_seconds: u64,
    pub replay_policy: ReplayPolicy,
    pub registration_policy: String,
    pub registration_secret: Option<String>,
}

impl Default for VerifierConfig {
    fn default() -> Self {
        VerifierConfig {
            skew_tolerance_buckets: 1,
            validity_seconds: 30 * 24 * 3600,
            replay_policy: ReplayPolicy::RejectBoth,
            registration_policy: "shared-secret".into(),
            registration_secret: None,
        }
    }
}

impl VerifierConfig {
    pub fn from_toml_str(s: &str) -> Result<Self, ConfigError> {
        Ok(toml::from_str(s)?)
    }

    pub fn from_file(path: &Path) -> Result<Self, ConfigError> {
        Self::from_toml_str(&std::fs::read_to_string(path)?)
    }

    /// Overrides fields from `SANS_SKEW_TOLERANCE_BUCKETS`, `SANS_VALIDITY_SECONDS`,
    /// `SANS_REPLAY_POLICY`, `SANS_REGISTRATION_POLICY`, `SANS_REGISTRATION_SECRET`.
    pub fn apply_env(self) -> Result<Self, ConfigError> {
        self.apply_vars(|k| std::env::var(k).ok())
    }

    pub fn apply_vars(mut self, var: impl Fn(&str) -> Option<String>) -> Result<Self, ConfigError> {
        let num = |key: &'static str, v: String| v.parse::<u64>().map_err(|_| ConfigError::Invalid { key, value: v });
        if let Some(v) = var("SANS_SKEW_TOLERANCE_BUCKETS") {
            self.skew_tolerance_buckets = num("SANS_SKEW_TOLERANCE_BUCKETS", v)?;
        }
        if let Some(v) = var("SANS_VALIDITY_SECONDS") {
            self.validity_seconds = num("SANS_VALIDITY_SECONDS", v)?;
        }
        if let Some(v) = var("SANS_REPLAY_POLICY") {
            self.replay_policy = match v.as_str() {
                "reject-both" => ReplayPolicy::RejectBoth,
                "reject-incoming" => ReplayPolicy::RejectIncoming,
                _ => return Err(ConfigError::Invalid { key: "SANS_REPLAY_POLICY", value: v }),
            };
        }
        if let Some(v) = var("SANS_REGISTRATION_POLICY") {
            self.registration_policy = v;
        }
        if let Some(v) = var("SANS_REGISTRATION_SECRET") {
            self.registration_secret = Some(v);
        }
        Ok(self)
    }

    pub fn build_policy(&self) -> Result<Box<dyn RegistrationPolicy>, ConfigError> {
        match self.registration_policy.as_str() {
            "accept-all" => Ok(Box::new(AcceptAll)),
            "shared-secret" => match &self.registration_secret {
                Some(s) if !s.is_empty() => Ok(Box::new(SharedSecretPolicy::new(s.as_bytes()))),
                _ => Err(ConfigError::Invalid {
                    key: "registration_secret",
                    value: "missing for shared-secret policy".into(),
                }),
            },
            other => Err(ConfigError::Invalid { key: "registration_policy", value: other.into() }),
        }
    }
}
