use crate::error::{Error, Result};

/// Resource caps for exhaustive constructions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest alphabet a monster may have.
    pub max_letters: u128,
    /// Largest number of states a subset construction may materialize.
    pub max_states: u128,
    /// Largest transition table (states × letters) a construction may allocate.
    pub max_cells: u128,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_letters: 1_000_000,
            max_states: 1 << 22,
            max_cells: 1 << 27,
        }
    }
}

impl Limits {
    /// No caps at all. Only sensible for tiny instances.
    pub const fn unbounded() -> Self {
        Limits {
            max_letters: u128::MAX,
            max_states: u128::MAX,
            max_cells: u128::MAX,
        }
    }

    pub(crate) fn check_letters(&self, required: u128) -> Result<()> {
        check("letter", required, self.max_letters)
    }

    pub(crate) fn check_states(&self, required: u128) -> Result<()> {
        check("state", required, self.max_states)
    }

    pub(crate) fn check_cells(&self, required: u128) -> Result<()> {
        check("transition table", required, self.max_cells)
    }
}

fn check(what: &'static str, required: u128, limit: u128) -> Result<()> {
    if required > limit {
        Err(Error::LimitExceeded {
            what,
            required,
            limit,
        })
    } else {
        Ok(())
    }
}

/// `base^exp`, saturating at `u128::MAX`.
pub(crate) fn saturating_pow(base: u128, exp: u32) -> u128 {
    let mut acc: u128 = 1;
    for _ in 0..exp {
        acc = acc.saturating_mul(base);
    }
    acc
}
