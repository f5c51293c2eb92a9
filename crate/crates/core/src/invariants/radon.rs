use super::subsets::{hereditary_of_size, largest_hereditary, local_hull_table};
use super::MultiSubset;
use crate::budget::{Bound, Budget};
use crate::error::{Error, Result};
use crate::pointset::PointSet;
use crate::space::ConvexitySpace;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RadonResult {
    /// `r(X, C)`, or a lower bound if the budget ran out.
    pub value: Bound,
    pub multiset_mode: bool,
    /// Canonically least largest set without a Radon partition.
    pub free_set: PointSet,
    /// A Radon partition of a (multi)set of size `value` extending
    /// `free_set`. `None` only when no such (multi)set exists or the budget
    /// ran out.
    pub witness_partition: Option<(MultiSubset, MultiSubset)>,
}

/// Radon number of a finite space.
///
/// Having a Radon partition is inherited by supersets, so `r` is one more
/// than the largest partition-free set. In multiset mode a repeated point
/// always yields the partition `({x}, rest)`, so partition-free multisets are
/// sets and both modes give the same value; they differ only in the witness
/// offered when the whole ground set is partition-free.
pub fn radon_number(space: &ConvexitySpace, allow_multisets: bool, budget: &Budget) -> RadonResult {
    let n = space.ground_size();
    let (best, exhausted) = largest_hereditary(n, 1, budget, |pts| is_free_with_last(space, pts));
    let free_set = PointSet::raw(n, to_mask(&best));
    let size = best.len();
    let value = if exhausted {
        Bound::AtLeast(size + 1)
    } else {
        Bound::Exact(size + 1)
    };
    let witness_partition = if !value.is_exact() {
        None
    } else if let Some(extra) = free_set.complement().first() {
        radon_partition(space, &MultiSubset::from_set(&free_set.with(extra)))
    } else if allow_multisets {
        let mut pts = free_set.to_vec();
        pts.push(pts[0]);
        MultiSubset::from_points(n, &pts)
            .ok()
            .and_then(|m| radon_partition(space, &m))
    } else {
        None
    };
    RadonResult {
        value,
        multiset_mode: allow_multisets,
        free_set,
        witness_partition,
    }
}

/// The canonically least Radon-partition-free set of exactly `size` points,
/// if one exists. [`Error::CapExceeded`] if the budget ran out before the
/// search could decide.
pub fn radon_free_set_of_size(space: &ConvexitySpace, size: usize, budget: &Budget) -> Result<Option<PointSet>> {
    let n = space.ground_size();
    hereditary_of_size(n, 1, size, budget, |pts| is_free_with_last(space, pts))
        .map(|hit| hit.map(|pts| PointSet::raw(n, to_mask(&pts))))
        .map_err(|()| Error::CapExceeded(format!("budget of {} nodes ran out", budget.limit())))
}

/// No bipartition of `points` that puts the last point with the first part
/// has intersecting hulls. Bipartitions of the prefix were checked earlier.
fn is_free_with_last(space: &ConvexitySpace, points: &[usize]) -> bool {
    let t = points.len();
    let table = local_hull_table(space, points);
    let full = (1usize << t) - 1;
    let top = 1usize << (t - 1);
    (0..full).filter(|a| a & top != 0).all(|a| table[a] & table[full ^ a] == 0)
}

/// A Radon partition of `multiset`, if one exists.
///
/// A repeated point `x` gives `({x}, rest)`. Otherwise the first bipartition
/// in increasing mask order (with the least point on the first side) is
/// returned.
pub fn radon_partition(space: &ConvexitySpace, multiset: &MultiSubset) -> Option<(MultiSubset, MultiSubset)> {
    let n = space.ground_size();
    if let Some(&(x, _)) = multiset.elements().iter().find(|&&(_, m)| m > 1) {
        let mut rest = multiset.positions();
        let at = rest.iter().position(|&p| p == x).expect("present");
        rest.remove(at);
        return Some((
            MultiSubset::from_points(n, &[x]).expect("in range"),
            MultiSubset::from_points(n, &rest).expect("in range"),
        ));
    }
    let points = multiset.positions();
    let t = points.len();
    if t < 2 {
        return None;
    }
    let table = local_hull_table(space, &points);
    let full = (1usize << t) - 1;
    (1..full)
        .filter(|a| a & 1 == 1)
        .find(|&a| table[a] & table[full ^ a] != 0)
        .map(|a| {
            let pick = |mask: usize| -> Vec<usize> {
                (0..t).filter(|i| mask >> i & 1 == 1).map(|i| points[i]).collect()
            };
            (
                MultiSubset::from_points(n, &pick(a)).expect("in range"),
                MultiSubset::from_points(n, &pick(full ^ a)).expect("in range"),
            )
        })
}

fn to_mask(points: &[usize]) -> u64 {
    points.iter().fold(0u64, |acc, &p| acc | 1 << p)
}
