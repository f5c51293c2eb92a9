//! Unpruned brute-force versions of the invariant searches.
//!
//! These scan every convex set for each hull and every (multi)set of each
//! size, so they are only for cross-checking on small spaces.

use itertools::Itertools;

use crate::pointset::{full_mask, PointSet};
use crate::space::ConvexitySpace;

/// Least `s` such that every (multi)set of `s` points has a Radon partition.
///
/// Having a partition is inherited by supersets, so the first size at which
/// every (multi)set has one is the answer.
pub fn naive_radon_number(space: &ConvexitySpace, allow_multisets: bool) -> usize {
    naive_tverberg_number(space, 2, allow_multisets)
}

/// Least `s` such that every (multi)set of `s` points splits into `k`
/// nonempty parts with a common hull point. Parts are tried as all `k^s`
/// labelings.
pub fn naive_tverberg_number(space: &ConvexitySpace, k: usize, allow_multisets: bool) -> usize {
    let n = space.ground_size();
    let top = if allow_multisets { (k - 1) * n + 1 } else { n + 1 };
    for s in 1..=top {
        let every = if allow_multisets {
            (0..n)
                .combinations_with_replacement(s)
                .all(|pts| has_naive_partition(space, &pts, k))
        } else if s > n {
            true
        } else {
            (0..n).combinations(s).all(|pts| has_naive_partition(space, &pts, k))
        };
        if every {
            return s;
        }
    }
    top
}

fn has_naive_partition(space: &ConvexitySpace, points: &[usize], k: usize) -> bool {
    let s = points.len();
    if s < k {
        return false;
    }
    std::iter::repeat_n(0..k, s).multi_cartesian_product().any(|labels| {
        let mut parts = vec![0u64; k];
        for (i, &l) in labels.iter().enumerate() {
            parts[l] |= 1 << points[i];
        }
        let mut sizes = vec![0usize; k];
        for &l in &labels {
            sizes[l] += 1;
        }
        sizes.iter().all(|&c| c > 0)
            && parts
                .iter()
                .fold(full_mask(space.ground_size()), |acc, &p| acc & space.hull_by_definition(p))
                != 0
    })
}

/// Largest minimally non-intersecting family, found through Helly-independent
/// point sets and checked size by size with definitional hulls.
pub fn naive_helly_number(space: &ConvexitySpace) -> usize {
    let n = space.ground_size();
    let mut best = 0;
    for s in 1..=n {
        let found = (0..n).combinations(s).any(|pts| {
            let all = pts.iter().fold(0u64, |acc, &p| acc | 1 << p);
            pts.iter()
                .fold(full_mask(n), |acc, &p| acc & space.hull_by_definition(all & !(1 << p)))
                == 0
        });
        if !found {
            break;
        }
        best = s;
    }
    best
}

/// Whether the family has empty intersection while each member's removal
/// leaves a nonempty one.
pub fn is_minimally_nonintersecting(ground_size: usize, family: &[PointSet]) -> bool {
    let full = full_mask(ground_size);
    let meet = |skip: Option<usize>| {
        family
            .iter()
            .enumerate()
            .filter(|&(i, _)| Some(i) != skip)
            .fold(full, |acc, (_, s)| acc & s.bits())
    };
    !family.is_empty() && meet(None) == 0 && (0..family.len()).all(|i| meet(Some(i)) != 0)
}

/// Each family is nonempty and non-intersecting, and every rainbow selection
/// intersects.
pub fn is_obstruction(ground_size: usize, families: &[Vec<PointSet>]) -> bool {
    let full = full_mask(ground_size);
    let each = families
        .iter()
        .all(|f| !f.is_empty() && f.iter().fold(full, |acc, s| acc & s.bits()) == 0);
    each && families
        .iter()
        .map(|f| f.iter())
        .multi_cartesian_product()
        .all(|pick| pick.iter().fold(full, |acc, s| acc & s.bits()) != 0)
}

/// Colorful Helly number from minimally non-intersecting families listed by
/// plain enumeration of member subsets, checking every rainbow selection of
/// every multiset of families.
pub fn naive_colorful_helly_number(space: &ConvexitySpace) -> usize {
    let n = space.ground_size();
    let h = naive_helly_number(space);
    let nonempty: Vec<PointSet> = space.sets().iter().filter(|s| !s.is_empty()).copied().collect();
    let mut fams: Vec<Vec<PointSet>> = Vec::new();
    for size in 1..=h {
        for f in nonempty.iter().copied().combinations(size) {
            if is_minimally_nonintersecting(n, &f) {
                fams.push(f);
            }
        }
    }
    let mut m = 1;
    loop {
        let exists = (0..fams.len()).combinations_with_replacement(m).any(|pick| {
            let chosen: Vec<Vec<PointSet>> = pick.iter().map(|&i| fams[i].clone()).collect();
            is_obstruction(n, &chosen)
        });
        if !exists {
            return m;
        }
        m += 1;
    }
}

/// Whether any `m` non-intersecting families of distinct nonempty convex sets
/// have all rainbow selections intersecting, with no minimality assumed.
/// Exponential in `|C|`; meant for spaces with a handful of sets.
pub fn naive_obstruction_exists(space: &ConvexitySpace, m: usize) -> bool {
    let n = space.ground_size();
    let nonempty: Vec<PointSet> = space.sets().iter().filter(|s| !s.is_empty()).copied().collect();
    let fams: Vec<Vec<PointSet>> = nonempty
        .iter()
        .copied()
        .powerset()
        .filter(|f| !f.is_empty() && f.iter().fold(full_mask(n), |acc, s| acc & s.bits()) == 0)
        .collect();
    (0..fams.len()).combinations_with_replacement(m).any(|pick| {
        let chosen: Vec<Vec<PointSet>> = pick.iter().map(|&i| fams[i].clone()).collect();
        is_obstruction(n, &chosen)
    })
}

/// Fewest parts in a partition of the family into intersecting subfamilies,
/// by trying every labeling.
pub fn naive_partition_transversal(family: &[PointSet]) -> usize {
    let Some(first) = family.first() else {
        return 0;
    };
    let full = full_mask(first.ground_size());
    (1..=family.len())
        .find(|&t| {
            std::iter::repeat_n(0..t, family.len())
                .multi_cartesian_product()
                .any(|labels| {
                    (0..t).all(|part| {
                        labels
                            .iter()
                            .zip(family)
                            .filter(|&(&l, _)| l == part)
                            .fold(full, |acc, (_, s)| acc & s.bits())
                            != 0
                    })
                })
        })
        .unwrap_or(family.len())
}
