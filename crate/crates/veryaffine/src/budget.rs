//! Step budget for the polynomial division and Groebner engines.
//!
//! Every reduction step and every processed critical pair consumes one unit.
//! Exceeding the budget aborts the computation with an error instead of
//! spinning forever on an accidentally hard input. The default limit is far
//! above anything the verification pipeline needs, so hitting it signals a
//! genuine problem.

/// Generous default step limit used by the command line tools. The largest
/// verification shipped here stays under 40 thousand steps.
pub const DEFAULT_STEP_LIMIT: u64 = 10_000_000;

/// Error returned when a computation exceeds its step budget.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BudgetExhausted {
    pub limit: u64,
}

impl core::fmt::Display for BudgetExhausted {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "step budget of {} exhausted", self.limit)
    }
}

/// Counts work and enforces an optional limit.
#[derive(Clone, Debug)]
pub struct Budget {
    limit: Option<u64>,
    used: u64,
}

impl Budget {
    pub fn limited(limit: u64) -> Self {
        Budget { limit: Some(limit), used: 0 }
    }

    pub fn unlimited() -> Self {
        Budget { limit: None, used: 0 }
    }

    /// Consumes one step.
    pub fn step(&mut self) -> Result<(), BudgetExhausted> {
        self.used += 1;
        match self.limit {
            Some(limit) if self.used > limit => Err(BudgetExhausted { limit }),
            _ => Ok(()),
        }
    }

    /// Steps consumed so far.
    pub fn used(&self) -> u64 {
        self.used
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::limited(DEFAULT_STEP_LIMIT)
    }
}
