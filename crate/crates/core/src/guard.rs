use crate::error::{Error, Result};

/// Enumeration over all nonempty subsets of `C` is tracked with `u64` masks;
/// no guard can be raised past this.
pub const HARD_LIMIT: usize = 32;

/// Size limits for the operations that enumerate all `2^|C| - 1` subsets.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Guards {
    /// Theory, freedom, Hasse and decomposition checks.
    pub enumeration: usize,
    /// Enumeration of compatible atoms.
    pub omega: usize,
    /// Congruence-closure oracle.
    pub oracle: usize,
    /// Upper bound on the memory of an enumerated atom set.
    pub omega_bytes: u128,
}

impl Default for Guards {
    fn default() -> Self {
        Guards {
            enumeration: 16,
            omega: 20,
            oracle: 12,
            omega_bytes: 1 << 30,
        }
    }
}

impl Guards {
    /// Every limit set to `n` (clamped to [`HARD_LIMIT`]).
    pub fn uniform(n: usize) -> Self {
        let n = n.min(HARD_LIMIT);
        Guards {
            enumeration: n,
            omega: n,
            oracle: n,
            ..Guards::default()
        }
    }

    pub fn check_enumeration(&self, what: &'static str, size: usize) -> Result<()> {
        check(what, size, self.enumeration)
    }

    pub fn check_oracle(&self, size: usize) -> Result<()> {
        check("congruence closure", size, self.oracle)
    }

    pub fn check_omega(&self, size: usize, bytes_per_atom: usize) -> Result<()> {
        check("compatible-atom enumeration", size, self.omega)?;
        let bytes = ((1u128 << size) - 1) * bytes_per_atom as u128;
        if bytes > self.omega_bytes {
            return Err(Error::MemoryGuard {
                what: "compatible-atom enumeration",
                bytes,
                limit: self.omega_bytes,
            });
        }
        Ok(())
    }
}

fn check(what: &'static str, size: usize, limit: usize) -> Result<()> {
    let limit = limit.min(HARD_LIMIT);
    if size > limit {
        return Err(Error::Guard { what, size, limit });
    }
    Ok(())
}
