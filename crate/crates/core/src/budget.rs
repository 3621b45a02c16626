//! Enumeration budgets: hard caps on exhaustive sweeps, overridable at run time.

use crate::error::{Error, Result};

/// Largest number of codewords enumerated for a weight profile.
pub const CODEWORD_BUDGET: u128 = 1 << 24;

/// Largest syndrome space swept for coset leaders.
pub const SYNDROME_BUDGET: u128 = 1 << 26;

/// Environment variable that replaces both budgets.
pub const BUDGET_ENV: &str = "GROUPOID_BUDGET";

fn from_env() -> Option<u128> {
    std::env::var(BUDGET_ENV).ok()?.trim().parse().ok()
}

pub fn codeword_budget() -> u128 {
    from_env().unwrap_or(CODEWORD_BUDGET)
}

pub fn syndrome_budget() -> u128 {
    from_env().unwrap_or(SYNDROME_BUDGET)
}

/// Fails with [`Error::BudgetExceeded`] when `needed > budget`.
pub fn check(what: &'static str, needed: u128, budget: u128) -> Result<()> {
    if needed > budget {
        Err(Error::BudgetExceeded {
            what,
            needed,
            budget,
        })
    } else {
        Ok(())
    }
}

/// `q^e`, saturating.
pub fn power(q: u8, e: usize) -> u128 {
    (0..e).fold(1u128, |acc, _| acc.saturating_mul(q as u128))
}
