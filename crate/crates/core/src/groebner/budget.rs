use std::time::{Duration, Instant};

use crate::error::{Error, Result};

/// Optional wall-clock and step limits for a Gröbner computation.
///
/// A step is one reduction of a leading term. Exhausting either limit aborts
/// the computation with [`Error::BudgetExceeded`].
#[derive(Debug, Clone, Copy, Default)]
pub struct Budget {
    deadline: Option<Instant>,
    max_steps: Option<u64>,
}

impl Budget {
    pub fn unlimited() -> Budget {
        Budget::default()
    }

    pub fn with_time(limit: Duration) -> Budget {
        Budget {
            deadline: Some(Instant::now() + limit),
            max_steps: None,
        }
    }

    pub fn with_deadline(deadline: Instant) -> Budget {
        Budget {
            deadline: Some(deadline),
            max_steps: None,
        }
    }

    pub fn with_steps(max_steps: u64) -> Budget {
        Budget {
            deadline: None,
            max_steps: Some(max_steps),
        }
    }

    pub fn is_unlimited(&self) -> bool {
        self.deadline.is_none() && self.max_steps.is_none()
    }

    pub(crate) fn check(&self, steps: u64) -> Result<()> {
        if let Some(max) = self.max_steps {
            if steps > max {
                return Err(Error::BudgetExceeded);
            }
        }
        if let Some(d) = self.deadline {
            if Instant::now() >= d {
                return Err(Error::BudgetExceeded);
            }
        }
        Ok(())
    }
}

/// Step counter shared by one computation.
#[derive(Debug)]
pub(crate) struct Meter<'a> {
    budget: &'a Budget,
    pub steps: u64,
}

impl<'a> Meter<'a> {
    pub fn new(budget: &'a Budget) -> Self {
        Meter { budget, steps: 0 }
    }

    #[inline]
    pub fn tick(&mut self) -> Result<()> {
        self.steps += 1;
        if self.budget.is_unlimited() {
            return Ok(());
        }
        if self.steps & 0x3ff == 0 || self.budget.max_steps.is_some() {
            self.budget.check(self.steps)?;
        }
        Ok(())
    }

    pub fn check(&self) -> Result<()> {
        self.budget.check(self.steps)
    }
}
