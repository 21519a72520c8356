//! Named check results assembled by the verification pipeline.
//!
//! A check never aborts the run: each one carries a stable name, a pass or
//! fail status, and a witness string with the values that were compared.
//! Reports are plain data so the command line layer can render them as text
//! or JSON without re-deriving anything.

use alloc::string::String;
use alloc::vec::Vec;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "lowercase"))]
pub enum CheckStatus {
    Pass,
    Fail,
}

/// One named verification with its evidence.
#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Check {
    pub name: String,
    pub status: CheckStatus,
    pub witness: String,
}

impl Check {
    pub fn new(name: impl Into<String>, ok: bool, witness: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            status: if ok { CheckStatus::Pass } else { CheckStatus::Fail },
            witness: witness.into(),
        }
    }

    pub fn passed(&self) -> bool {
        self.status == CheckStatus::Pass
    }
}

/// True when every check passed.
pub fn all_passed(checks: &[Check]) -> bool {
    checks.iter().all(Check::passed)
}

/// Count of failed checks.
pub fn failures(checks: &[Check]) -> usize {
    checks.iter().filter(|c| !c.passed()).count()
}

/// Keeps the checks whose name starts with `prefix`.
pub fn with_prefix<'a>(checks: &'a [Check], prefix: &str) -> Vec<&'a Check> {
    checks.iter().filter(|c| c.name.starts_with(prefix)).collect()
}
