//! Size guards for the exhaustive analyses.

use thiserror::Error;

/// Bounds on market size for the brute-force engines. Enumerating all
/// matchings costs n! and full strict classification costs roughly (n!)^2,
/// so the two have separate defaults.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleLimits {
    /// Largest n for matching enumeration, greedy classification, and
    /// single-matching strict checks. Default 8 (40,320 matchings).
    pub enumerate_max: usize,
    /// Largest n for strict classification of every matching. Default 6.
    pub strict_max: usize,
}

impl Default for OracleLimits {
    fn default() -> Self {
        OracleLimits {
            enumerate_max: 8,
            strict_max: 6,
        }
    }
}

impl OracleLimits {
    /// Overrides both bounds with one ceiling.
    pub fn with_max_n(max_n: usize) -> Self {
        OracleLimits {
            enumerate_max: max_n,
            strict_max: max_n,
        }
    }
}

/// The market exceeds the configured exhaustive-search bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("market size {n} exceeds the exhaustive-search bound {max}")]
pub struct InstanceTooLarge {
    pub n: usize,
    pub max: usize,
}
