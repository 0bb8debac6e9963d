//! Desk-scale guards, overridable from the environment.

use std::env;

pub const DEFAULT_BIND: &str = "127.0.0.1:8080";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest order `n`.
    pub max_order: usize,
    /// Largest `|λ|`.
    pub max_weight: u32,
    /// Largest sample count per request.
    pub max_samples: usize,
    /// Largest number of de Casteljau paths enumerated.
    pub max_paths: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Self { max_order: 12, max_weight: 40, max_samples: 4096, max_paths: 20_000 }
    }
}

impl Limits {
    /// Reads `MUNTZ_MAX_ORDER`, `MUNTZ_MAX_WEIGHT`, `MUNTZ_MAX_SAMPLES` and
    /// `MUNTZ_MAX_PATHS`; unset or unparsable values keep the defaults.
    pub fn from_env() -> Self {
        fn var<T: std::str::FromStr>(name: &str, fallback: T) -> T {
            env::var(name).ok().and_then(|v| v.trim().parse().ok()).unwrap_or(fallback)
        }
        let d = Self::default();
        Self {
            max_order: var("MUNTZ_MAX_ORDER", d.max_order),
            max_weight: var("MUNTZ_MAX_WEIGHT", d.max_weight),
            max_samples: var("MUNTZ_MAX_SAMPLES", d.max_samples),
            max_paths: var("MUNTZ_MAX_PATHS", d.max_paths),
        }
    }
}

/// `MUNTZ_BIND`, defaulting to the loopback port 8080.
pub fn bind_from_env() -> String {
    env::var("MUNTZ_BIND").unwrap_or_else(|_| DEFAULT_BIND.to_string())
}
