use crate::budget::Budget;
use crate::par;
use crate::space::ConvexitySpace;

/// Largest point list (points nondecreasing, each repeated at most
/// `max_mult` times) all of whose prefixes satisfy `keep`, which must be
/// inherited by sub-multisets. Ties go to the lexicographically least list.
///
/// Returns the best list and whether the budget ran out first.
pub(crate) fn largest_hereditary<P>(n: usize, max_mult: usize, budget: &Budget, keep: P) -> (Vec<usize>, bool)
where
    P: Fn(&[usize]) -> bool + Sync,
{
    let per_root = par::map_indices(n, |root| {
        let mut best = vec![root];
        let mut points = vec![root];
        if keep(&points) {
            extend(n, max_mult, &mut points, budget, &keep, &mut |pts: &[usize]| {
                if pts.len() > best.len() {
                    best = pts.to_vec();
                }
                false
            });
            Some(best)
        } else {
            None
        }
    });
    let best = per_root
        .into_iter()
        .flatten()
        .fold(Vec::new(), |acc, b| if b.len() > acc.len() { b } else { acc });
    (best, budget.exhausted())
}

/// The lexicographically least list of exactly `size` points satisfying
/// `keep` in the sense of [`largest_hereditary`]. `Err(())` if the budget ran
/// out before the answer was known.
pub(crate) fn hereditary_of_size<P>(
    n: usize,
    max_mult: usize,
    size: usize,
    budget: &Budget,
    keep: P,
) -> Result<Option<Vec<usize>>, ()>
where
    P: Fn(&[usize]) -> bool + Sync,
{
    if size == 0 {
        return Ok(Some(Vec::new()));
    }
    let hit = par::find_first(n, |root| {
        let mut points = vec![root];
        if !keep(&points) {
            return None;
        }
        let mut found = None;
        extend(n, max_mult, &mut points, budget, &keep, &mut |pts: &[usize]| {
            if pts.len() == size {
                found = Some(pts.to_vec());
                true
            } else {
                false
            }
        });
        found
    });
    match hit {
        Some(v) => Ok(Some(v)),
        None if budget.exhausted() => Err(()),
        None => Ok(None),
    }
}

/// Depth-first extension in lexicographic order. Each visited list is passed
/// to `visit`, which returns true to stop everything.
fn extend<P, V>(n: usize, max_mult: usize, points: &mut Vec<usize>, budget: &Budget, keep: &P, visit: &mut V) -> bool
where
    P: Fn(&[usize]) -> bool,
    V: FnMut(&[usize]) -> bool,
{
    if visit(points) {
        return true;
    }
    let last = *points.last().expect("nonempty");
    let run = points.iter().rev().take_while(|&&p| p == last).count();
    let start = if run < max_mult { last } else { last + 1 };
    for y in start..n {
        if !budget.charge(1) {
            return true;
        }
        points.push(y);
        if keep(points) && extend(n, max_mult, points, budget, keep, visit) {
            return true;
        }
        points.pop();
    }
    false
}

/// Hulls of every subset of `points`, indexed by local bit masks.
///
/// Built with a superset-AND transform over the meet generators, so the cost
/// is `O(t·2^t + |G|)` for `t` points.
pub(crate) fn local_hull_table(space: &ConvexitySpace, points: &[usize]) -> Vec<u64> {
    let t = points.len();
    let full = crate::pointset::full_mask(space.ground_size());
    let mut table = vec![full; 1usize << t];
    for &g in space.meet_generators() {
        let local = points
            .iter()
            .enumerate()
            .filter(|(_, &p)| g >> p & 1 == 1)
            .fold(0usize, |acc, (i, _)| acc | 1 << i);
        table[local] &= g;
    }
    for bit in 0..t {
        let b = 1usize << bit;
        for mask in 0..table.len() {
            if mask & b == 0 {
                table[mask] &= table[mask | b];
            }
        }
    }
    table
}
