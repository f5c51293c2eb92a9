use std::sync::atomic::{AtomicU64, Ordering};

/// Default node budget for the exhaustive searches.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

/// Shared node counter for a search.
///
/// Exhaustion is deterministic only when the search runs on one thread; with
/// several workers the set of visited nodes before exhaustion depends on
/// scheduling.
#[derive(Debug)]
pub struct Budget {
    limit: u64,
    used: AtomicU64,
}

impl Budget {
    pub fn new(limit: u64) -> Self {
        Budget {
            limit,
            used: AtomicU64::new(0),
        }
    }

    pub fn unlimited() -> Self {
        Budget::new(u64::MAX)
    }

    /// Charges `n` nodes. Returns false once the limit has been passed.
    #[inline]
    pub fn charge(&self, n: u64) -> bool {
        let before = self.used.fetch_add(n, Ordering::Relaxed);
        before.saturating_add(n) <= self.limit
    }

    #[inline]
    pub fn exhausted(&self) -> bool {
        self.used.load(Ordering::Relaxed) > self.limit
    }

    pub fn used(&self) -> u64 {
        self.used.load(Ordering::Relaxed).min(self.limit.saturating_add(1))
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::new(DEFAULT_BUDGET)
    }
}

/// An exact value or a lower bound reached when the budget ran out.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Bound {
    Exact(usize),
    AtLeast(usize),
}

impl Bound {
    pub fn exact(&self) -> Option<usize> {
        match *self {
            Bound::Exact(v) => Some(v),
            Bound::AtLeast(_) => None,
        }
    }

    pub fn value(&self) -> usize {
        match *self {
            Bound::Exact(v) | Bound::AtLeast(v) => v,
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Bound::Exact(_))
    }
}

impl std::fmt::Display for Bound {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Bound::Exact(v) => write!(f, "{v}"),
            Bound::AtLeast(v) => write!(f, ">={v}"),
        }
    }
}
