//! Size guards for the exponential searches.

use crate::error::{Error, Result};

/// Largest `n` for triangulation enumeration (Catalan growth).
pub const MAX_ENUMERATE_N: usize = 14;
/// Largest `n` for an unrestricted saturated-blocker search.
pub const MAX_EXHAUSTIVE_N: usize = 8;
/// Largest `n` for a saturated-blocker search at one fixed size.
pub const MAX_FIXED_SIZE_N: usize = 9;
/// Largest `n` for sweeping every minimum-sized parameterization.
pub const MAX_MIN_BLOCKER_N: usize = 12;

/// Setting this variable to `1` (or `true`) disables every guard.
pub const OVERRIDE_VAR: &str = "TRIBLOCK_UNGUARDED";

/// Whether guards are enforced.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Guard {
    pub enforce: bool,
}

impl Default for Guard {
    fn default() -> Self {
        Guard { enforce: true }
    }
}

impl Guard {
    pub fn unguarded() -> Self {
        Guard { enforce: false }
    }

    /// Reads [`OVERRIDE_VAR`] from the environment.
    pub fn from_env() -> Self {
        let off = std::env::var(OVERRIDE_VAR)
            .map(|v| matches!(v.as_str(), "1" | "true" | "yes"))
            .unwrap_or(false);
        Guard { enforce: !off }
    }

    pub fn check(self, what: &'static str, n: usize, limit: usize) -> Result<()> {
        if self.enforce && n > limit {
            Err(Error::Capacity { what, n, limit })
        } else {
            Ok(())
        }
    }
}
