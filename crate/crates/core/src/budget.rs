//! Work limits for the search-heavy routines.

use alloc::sync::Arc;
use core::fmt;
use core::sync::atomic::{AtomicBool, Ordering};

use crate::error::{Error, Result};

pub type ProgressFn = dyn Fn(&str, u64) + Send + Sync;

/// Limits shared by automorphism search, orbit enumeration and the subalgebra
/// induction. Cloning is cheap; the interrupt flag and progress hook are shared.
#[derive(Clone)]
pub struct Budget {
    /// Maximum number of search nodes (backtrack candidates, orbit images).
    pub max_nodes: u64,
    /// Maximum number of subspaces held in orbit tables at once.
    pub max_orbit_storage: usize,
    interrupt: Option<Arc<AtomicBool>>,
    progress: Option<Arc<ProgressFn>>,
}

impl Default for Budget {
    fn default() -> Self {
        Self {
            max_nodes: 100_000_000,
            max_orbit_storage: 20_000_000,
            interrupt: None,
            progress: None,
        }
    }
}

impl fmt::Debug for Budget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Budget")
            .field("max_nodes", &self.max_nodes)
            .field("max_orbit_storage", &self.max_orbit_storage)
            .field("interruptible", &self.interrupt.is_some())
            .finish()
    }
}

impl Budget {
    pub fn unlimited() -> Self {
        Self {
            max_nodes: u64::MAX,
            max_orbit_storage: usize::MAX,
            ..Self::default()
        }
    }

    pub fn with_nodes(mut self, max_nodes: u64) -> Self {
        self.max_nodes = max_nodes;
        self
    }

    pub fn with_orbit_storage(mut self, max: usize) -> Self {
        self.max_orbit_storage = max;
        self
    }

    /// Computations poll `flag` and stop with [`Error::Interrupted`] once it is set.
    pub fn with_interrupt(mut self, flag: Arc<AtomicBool>) -> Self {
        self.interrupt = Some(flag);
        self
    }

    pub fn with_progress(mut self, hook: Arc<ProgressFn>) -> Self {
        self.progress = Some(hook);
        self
    }

    pub fn interrupted(&self) -> bool {
        self.interrupt
            .as_ref()
            .is_some_and(|f| f.load(Ordering::Relaxed))
    }

    pub fn report(&self, stage: &str, count: u64) {
        if let Some(p) = &self.progress {
            p(stage, count);
        }
    }

    pub(crate) fn meter(&self) -> Meter<'_> {
        Meter {
            budget: self,
            nodes: 0,
        }
    }

    pub(crate) fn check_storage(&self, used: usize) -> Result<()> {
        if used > self.max_orbit_storage {
            Err(Error::StorageExceeded {
                limit: self.max_orbit_storage,
            })
        } else {
            Ok(())
        }
    }
}

/// Counts nodes against a [`Budget`].
pub struct Meter<'a> {
    budget: &'a Budget,
    nodes: u64,
}

impl Meter<'_> {
    #[inline]
    pub fn tick(&mut self) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.budget.max_nodes {
            return Err(Error::BudgetExceeded {
                limit: self.budget.max_nodes,
            });
        }
        if self.nodes & 0xfff == 0 && self.budget.interrupted() {
            return Err(Error::Interrupted);
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn node_limit_is_enforced() {
        let b = Budget::default().with_nodes(3);
        let mut m = b.meter();
        for _ in 0..3 {
            m.tick().unwrap();
        }
        assert_eq!(m.tick(), Err(Error::BudgetExceeded { limit: 3 }));
    }

    #[test]
    fn interrupt_flag_stops_meter() {
        let flag = Arc::new(AtomicBool::new(true));
        let b = Budget::default().with_interrupt(flag);
        let mut m = b.meter();
        let err = (0..10_000).find_map(|_| m.tick().err());
        assert_eq!(err, Some(Error::Interrupted));
    }
}
