//! Execution context: enumeration budget and sequential/parallel switch.

use crate::error::{CatError, Result};

/// How sweeps over independent tuples are executed.
///
/// `Parallel` only has an effect when the crate is built with the
/// `parallel` feature (the default); otherwise it degrades to sequential
/// execution.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Exec {
    Sequential,
    Parallel,
}

/// Budget and execution mode threaded through every enumeration-driven
/// operation. The default budget of 10^6 keeps oracles tractable while
/// making refusals explicit.
#[derive(Debug, Clone, Copy)]
pub struct Ctx {
    pub budget: u64,
    pub exec: Exec,
}

pub const DEFAULT_BUDGET: u64 = 1_000_000;

impl Default for Ctx {
    fn default() -> Self {
        Ctx {
            budget: DEFAULT_BUDGET,
            exec: Exec::Parallel,
        }
    }
}

impl Ctx {
    pub fn new(budget: u64, exec: Exec) -> Self {
        Ctx { budget, exec }
    }

    pub fn sequential() -> Self {
        Ctx {
            budget: DEFAULT_BUDGET,
            exec: Exec::Sequential,
        }
    }

    pub fn with_budget(self, budget: u64) -> Self {
        Ctx { budget, ..self }
    }

    /// Fails with a budget error when `required` exceeds the budget.
    pub fn admit(&self, required: u128) -> Result<()> {
        if required > self.budget as u128 {
            Err(CatError::Budget {
                required,
                budget: self.budget,
            })
        } else {
            Ok(())
        }
    }
}
