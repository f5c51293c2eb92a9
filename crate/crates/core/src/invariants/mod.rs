//! Helly-type invariants of finite convexity spaces and finite families.
//!
//! Every search here returns the canonically least witness, so parallel and
//! sequential runs agree. Searches that exhaust their [`Budget`] report a
//! lower bound instead of an exact value.
//!
//! [`Budget`]: crate::budget::Budget

mod colorful;
mod family;
mod helly;
mod radon;
mod subsets;
mod tverberg;

pub mod oracle;

pub use colorful::{
    colorful_helly_number, colorful_obstruction, merge_last_two, minimal_nonintersecting_families,
    ColorfulResult, Pool,
};
pub use family::{
    fractional_helly_profile, pq_property, pq_report, transversal, FractionalHellyProfile, PqReport,
    PqResult, TransversalResult,
};
pub use helly::{helly_number, is_helly_independent, HellyResult};
pub use radon::{radon_number, radon_partition, radon_free_set_of_size, RadonResult};
pub use tverberg::{tverberg_number, tverberg_partition, TverbergResult};

use crate::error::{Error, Result};
use crate::pointset::PointSet;

/// A finite multiset of ground points, stored as `(point, multiplicity)`
/// pairs sorted by point.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiSubset {
    ground_size: usize,
    elements: Vec<(usize, usize)>,
}

impl MultiSubset {
    pub fn new(ground_size: usize, mut elements: Vec<(usize, usize)>) -> Result<Self> {
        elements.retain(|&(_, m)| m > 0);
        elements.sort_unstable();
        for w in elements.windows(2) {
            if w[0].0 == w[1].0 {
                return Err(Error::InvalidParameter(format!("point {} listed twice", w[0].0)));
            }
        }
        if let Some(&(p, _)) = elements.iter().find(|(p, _)| *p >= ground_size) {
            return Err(Error::ElementOutOfRange {
                element: p,
                ground_size,
            });
        }
        Ok(MultiSubset { ground_size, elements })
    }

    pub fn from_points(ground_size: usize, points: &[usize]) -> Result<Self> {
        let mut counts = std::collections::BTreeMap::new();
        for &p in points {
            *counts.entry(p).or_insert(0usize) += 1;
        }
        MultiSubset::new(ground_size, counts.into_iter().collect())
    }

    pub fn from_set(set: &PointSet) -> Self {
        MultiSubset {
            ground_size: set.ground_size(),
            elements: set.iter().map(|p| (p, 1)).collect(),
        }
    }

    pub fn ground_size(&self) -> usize {
        self.ground_size
    }

    pub fn elements(&self) -> &[(usize, usize)] {
        &self.elements
    }

    /// Total size counting multiplicity.
    pub fn total(&self) -> usize {
        self.elements.iter().map(|&(_, m)| m).sum()
    }

    pub fn support(&self) -> PointSet {
        PointSet::raw(
            self.ground_size,
            self.elements.iter().fold(0u64, |acc, &(p, _)| acc | 1 << p),
        )
    }

    /// Points listed with repetition, in increasing order.
    pub fn positions(&self) -> Vec<usize> {
        self.elements
            .iter()
            .flat_map(|&(p, m)| std::iter::repeat_n(p, m))
            .collect()
    }
}

impl std::fmt::Display for MultiSubset {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{{")?;
        for (i, p) in self.positions().iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "}}")
    }
}
