use super::subsets::{largest_hereditary, local_hull_table};
use super::MultiSubset;
use crate::budget::{Bound, Budget};
use crate::error::{Error, Result};
use crate::space::ConvexitySpace;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TverbergResult {
    pub k: usize,
    /// `t_k(X, C)`, or a lower bound if the budget ran out.
    pub value: Bound,
    pub multiset_mode: bool,
    /// Lexicographically least largest (multi)set with no Tverberg
    /// `k`-partition.
    pub free_multiset: MultiSubset,
    /// A Tverberg `k`-partition of `free_multiset` plus one more point, when
    /// such a (multi)set exists and the value is exact.
    pub witness_partition: Option<Vec<MultiSubset>>,
}

/// Tverberg number `t_k`.
///
/// Having a Tverberg `k`-partition is inherited by larger multisets (add the
/// extra points to any part), so `t_k` is one more than the largest free
/// multiset. A point repeated `k` times gives a partition on its own, so in
/// multiset mode multiplicities are searched up to `k − 1`; in set mode every
/// point appears at most once.
pub fn tverberg_number(space: &ConvexitySpace, k: usize, allow_multisets: bool, budget: &Budget) -> Result<TverbergResult> {
    if k < 2 {
        return Err(Error::InvalidParameter(format!("Tverberg needs k >= 2, got {k}")));
    }
    let n = space.ground_size();
    let max_mult = if allow_multisets { k - 1 } else { 1 };
    let (best, exhausted) = largest_hereditary(n, max_mult, budget, |pts| find_partition(space, pts, k).is_none());
    let free_multiset = MultiSubset::from_points(n, &best)?;
    let value = if exhausted {
        Bound::AtLeast(best.len() + 1)
    } else {
        Bound::Exact(best.len() + 1)
    };
    let extra = (0..n).find(|&p| {
        let count = best.iter().filter(|&&q| q == p).count();
        if allow_multisets {
            count < k
        } else {
            count == 0
        }
    });
    let witness_partition = match (value.is_exact(), extra) {
        (true, Some(p)) => {
            let mut pts = best.clone();
            pts.push(p);
            tverberg_partition(space, &MultiSubset::from_points(n, &pts)?, k)?
        }
        _ => None,
    };
    Ok(TverbergResult {
        k,
        value,
        multiset_mode: allow_multisets,
        free_multiset,
        witness_partition,
    })
}

/// A partition of `multiset` into `k` nonempty parts whose hulls share a
/// point, if one exists.
pub fn tverberg_partition(space: &ConvexitySpace, multiset: &MultiSubset, k: usize) -> Result<Option<Vec<MultiSubset>>> {
    if k < 2 {
        return Err(Error::InvalidParameter(format!("Tverberg needs k >= 2, got {k}")));
    }
    if multiset.ground_size() != space.ground_size() {
        return Err(Error::GroundMismatch {
            expected: space.ground_size(),
            found: multiset.ground_size(),
        });
    }
    let points = multiset.positions();
    if points.len() > 20 {
        return Err(Error::CapExceeded(format!("Tverberg partition of {} points", points.len())));
    }
    let n = space.ground_size();
    Ok(find_partition(space, &points, k).map(|parts| {
        parts
            .into_iter()
            .map(|local| {
                let pick: Vec<usize> = (0..points.len()).filter(|i| local >> i & 1 == 1).map(|i| points[i]).collect();
                MultiSubset::from_points(n, &pick).expect("in range")
            })
            .collect()
    }))
}

/// Local masks of a Tverberg `k`-partition of the positions in `points`.
///
/// For each candidate common point `c`, counts the most disjoint position
/// sets whose hull contains `c`. Containing `c` is inherited by supersets, so
/// `k` such sets extend to a partition by giving the leftovers to the first.
fn find_partition(space: &ConvexitySpace, points: &[usize], k: usize) -> Option<Vec<usize>> {
    let t = points.len();
    if t < k {
        return None;
    }
    let table = local_hull_table(space, points);
    let full = (1usize << t) - 1;
    let mut candidates = table[full];
    while candidates != 0 {
        let c = candidates.trailing_zeros();
        candidates &= candidates - 1;
        let good = |mask: usize| table[mask] >> c & 1 == 1;
        // best[s]: most disjoint good subsets inside s; choice[s]: the good
        // subset holding the lowest bit of s in an optimal packing, or 0.
        let mut best = vec![0u8; full + 1];
        let mut choice = vec![0usize; full + 1];
        for s in 1..=full {
            let low = s & s.wrapping_neg();
            best[s] = best[s ^ low];
            let rest = s ^ low;
            let mut sub = rest;
            loop {
                let a = sub | low;
                if good(a) {
                    let v = 1 + best[s ^ a];
                    if v > best[s] {
                        best[s] = v;
                        choice[s] = a;
                    }
                }
                if sub == 0 {
                    break;
                }
                sub = (sub - 1) & rest;
            }
        }
        if usize::from(best[full]) >= k {
            let mut parts = Vec::with_capacity(k);
            let mut s = full;
            while parts.len() < k {
                let low = s & s.wrapping_neg();
                if choice[s] == 0 {
                    s ^= low;
                } else {
                    parts.push(choice[s]);
                    s ^= choice[s];
                }
            }
            let used = parts.iter().fold(0, |acc, &p| acc | p);
            parts[0] |= full & !used;
            parts.sort_unstable_by_key(|&p| p.trailing_zeros());
            return Some(parts);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::*;
    use crate::invariants::oracle::naive_tverberg_number;
    use crate::invariants::radon_number;

    fn t(space: &ConvexitySpace, k: usize, multi: bool) -> TverbergResult {
        tverberg_number(space, k, multi, &Budget::unlimited()).unwrap()
    }

    #[test]
    fn powerset_needs_a_point_k_times() {
        for n in 1..=3 {
            let s = powerset_space(n).unwrap();
            for k in 2..=3 {
                let res = t(&s, k, true);
                assert_eq!(res.value, Bound::Exact((k - 1) * n + 1));
                let parts = res.witness_partition.unwrap();
                assert_eq!(parts.len(), k);
            }
        }
    }

    #[test]
    fn frozen_brute_force_values() {
        assert_eq!(t(&interval_space(5).unwrap(), 3, true).value, Bound::Exact(5));
        assert_eq!(t(&powerset_space(2).unwrap(), 3, true).value, Bound::Exact(5));
        let g22 = grid_box_space(&GridBoxSpec::new(vec![2, 2]).unwrap()).unwrap();
        assert_eq!(t(&g22, 3, true).value, Bound::Exact(5));
    }

    #[test]
    fn t2_is_radon() {
        for s in [
            interval_space(6).unwrap(),
            grid_box_space(&GridBoxSpec::new(vec![3, 3]).unwrap()).unwrap(),
            powerset_space(4).unwrap(),
            lattice_window_space(&LatticeWindowSpec::new(vec![3, 2]).unwrap()).unwrap(),
        ] {
            for multi in [false, true] {
                let r = radon_number(&s, multi, &Budget::unlimited()).value;
                assert_eq!(t(&s, 2, multi).value, r);
            }
        }
    }

    #[test]
    fn agrees_with_naive_oracle() {
        for s in [
            interval_space(4).unwrap(),
            grid_box_space(&GridBoxSpec::new(vec![2, 2]).unwrap()).unwrap(),
            powerset_space(2).unwrap(),
        ] {
            for k in 2..=3 {
                for multi in [false, true] {
                    assert_eq!(t(&s, k, multi).value.exact(), Some(naive_tverberg_number(&s, k, multi)));
                }
            }
        }
    }

    #[test]
    fn witness_parts_share_a_point() {
        let s = interval_space(5).unwrap();
        let res = t(&s, 3, true);
        let parts = res.witness_partition.unwrap();
        let common = parts
            .iter()
            .fold(u64::MAX, |acc, p| acc & s.hull_mask(p.support().bits()));
        assert_ne!(common, 0);
        assert_eq!(parts.iter().map(|p| p.total()).sum::<usize>(), 5);
        assert!(parts.iter().all(|p| p.total() > 0));
    }
}
