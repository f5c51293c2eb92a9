use super::subsets::{largest_hereditary, local_hull_table};
use crate::budget::{Bound, Budget};
use crate::pointset::{sort_canonical, PointSet};
use crate::space::ConvexitySpace;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HellyResult {
    /// `h(X, C)`, or a lower bound if the budget ran out.
    pub value: Bound,
    /// Canonically least largest Helly-independent point set.
    pub independent_set: PointSet,
    /// A minimally non-intersecting family of `value` distinct convex sets,
    /// in canonical order: the hulls of the independent set minus one point.
    pub witness_family: Vec<PointSet>,
}

/// Helly number: the largest minimally non-intersecting family of convex
/// sets.
///
/// Such families of size `n` correspond to point sets `P` of size `n` with
/// `∩_{p∈P} hull(P∖{p}) = ∅`: pick `p_K` in the intersection of all members
/// except `K`, and conversely take the hulls `hull(P∖{p})`. This property of
/// `P` is inherited by nonempty subsets, so a depth-first search over point
/// sets finds the maximum. Because `hull(∅) = ∅`, the family `{∅}` always
/// qualifies and the value is at least 1.
pub fn helly_number(space: &ConvexitySpace, budget: &Budget) -> HellyResult {
    let n = space.ground_size();
    let (best, exhausted) = largest_hereditary(n, 1, budget, |pts| independent_points(space, pts));
    let independent_set = PointSet::from_elements(n, best.iter().copied()).expect("in range");
    let value = if exhausted {
        Bound::AtLeast(best.len())
    } else {
        Bound::Exact(best.len())
    };
    let witness_family = helly_witness_family(space, &best);
    HellyResult {
        value,
        independent_set,
        witness_family,
    }
}

/// Whether `set` is Helly independent: the hulls of `set` minus one point
/// have empty common intersection.
pub fn is_helly_independent(space: &ConvexitySpace, set: &PointSet) -> bool {
    !set.is_empty() && independent_points(space, &set.to_vec())
}

fn independent_points(space: &ConvexitySpace, points: &[usize]) -> bool {
    let table = local_hull_table(space, points);
    let full = table.len() - 1;
    (0..points.len()).fold(u64::MAX, |acc, i| acc & table[full ^ (1 << i)]) == 0
}

fn helly_witness_family(space: &ConvexitySpace, points: &[usize]) -> Vec<PointSet> {
    let n = space.ground_size();
    let all = points.iter().fold(0u64, |acc, &p| acc | 1 << p);
    let mut masks: Vec<u64> = points.iter().map(|&p| space.hull_mask(all & !(1 << p))).collect();
    sort_canonical(&mut masks);
    masks.into_iter().map(|m| PointSet::raw(n, m)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::*;
    use crate::invariants::oracle::{is_minimally_nonintersecting, naive_helly_number};

    fn h(space: &ConvexitySpace) -> HellyResult {
        helly_number(space, &Budget::unlimited())
    }

    #[test]
    fn named_values() {
        assert_eq!(h(&interval_space(6).unwrap()).value, Bound::Exact(2));
        assert_eq!(h(&grid_box_space(&GridBoxSpec::new(vec![4, 4]).unwrap()).unwrap()).value, Bound::Exact(2));
        assert_eq!(h(&lattice_window_space(&LatticeWindowSpec::new(vec![3, 3]).unwrap()).unwrap()).value, Bound::Exact(4));
        for n in 1..=4 {
            assert_eq!(h(&powerset_space(n).unwrap()).value, Bound::Exact(n));
        }
        let trivial = ConvexitySpace::new(3, vec![PointSet::empty(3).unwrap(), PointSet::full(3).unwrap()]).unwrap();
        let res = h(&trivial);
        assert_eq!(res.value, Bound::Exact(1));
        assert_eq!(res.witness_family, vec![PointSet::empty(3).unwrap()]);
    }

    #[test]
    fn witness_is_minimally_nonintersecting() {
        let s = lattice_window_space(&LatticeWindowSpec::new(vec![3, 3]).unwrap()).unwrap();
        let res = h(&s);
        assert_eq!(res.witness_family.len(), 4);
        assert!(res.witness_family.iter().all(|k| s.is_convex(k)));
        assert!(is_minimally_nonintersecting(s.ground_size(), &res.witness_family));
        assert!(is_helly_independent(&s, &res.independent_set));
    }

    #[test]
    fn agrees_with_naive_oracle() {
        for s in [
            interval_space(5).unwrap(),
            grid_box_space(&GridBoxSpec::new(vec![2, 3]).unwrap()).unwrap(),
            lattice_window_space(&LatticeWindowSpec::new(vec![2, 3]).unwrap()).unwrap(),
            powerset_space(3).unwrap(),
        ] {
            assert_eq!(h(&s).value.exact(), Some(naive_helly_number(&s)));
        }
    }
}
