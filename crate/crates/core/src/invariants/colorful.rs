use crate::budget::{Bound, Budget};
use crate::par;
use crate::pointset::{full_mask, sort_canonical, PointSet};
use crate::space::ConvexitySpace;

/// Which convex sets may appear in the families searched for obstructions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Pool {
    /// Every convex set other than `∅` and `X`.
    Full,
    /// Only the nonempty meet generators.
    ///
    /// Replacing each member `K` of each family by all generators containing
    /// `K` keeps every rainbow selection intersecting and keeps each family
    /// non-intersecting, so obstructions exist over this pool exactly when
    /// they exist over the full one.
    Generators,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColorfulResult {
    /// `h_c(X, C)`, or a lower bound if the budget ran out.
    pub value: Bound,
    /// Families `F_1, …, F_{value−1}`, each minimally non-intersecting, with
    /// every rainbow selection intersecting. Empty when the value is 1.
    pub obstruction: Vec<Vec<PointSet>>,
    /// Number of minimally non-intersecting families in the pool.
    pub family_count: usize,
}

/// Colorful Helly number.
///
/// An obstruction at `m` is a sequence of `m` non-intersecting families
/// whose rainbow selections all intersect. Shrinking each family to a
/// minimally non-intersecting subfamily keeps it an obstruction, and merging
/// the last two families into their pairwise intersections turns an
/// obstruction at `m + 1` into one at `m` (see [`merge_last_two`]). So `h_c`
/// is one more than the longest obstruction built from minimally
/// non-intersecting families. Family order is irrelevant, so only
/// nondecreasing sequences of family indices are searched, and the search
/// state is the set of inclusion-minimal rainbow partial intersections.
pub fn colorful_helly_number(space: &ConvexitySpace, pool: Pool, budget: &Budget) -> ColorfulResult {
    let n = space.ground_size();
    let fams = mnif_masks(space, pool, n, budget);
    let per_root = par::map_indices(fams.len(), |root| {
        let mut best = Vec::new();
        let mut seq = Vec::new();
        let start = vec![full_mask(n)];
        deepen(&fams, root, root + 1, &start, &mut seq, budget, None, &mut best);
        best
    });
    let best = per_root
        .into_iter()
        .fold(Vec::new(), |acc, b| if b.len() > acc.len() { b } else { acc });
    let value = if budget.exhausted() {
        Bound::AtLeast(best.len() + 1)
    } else {
        Bound::Exact(best.len() + 1)
    };
    ColorfulResult {
        value,
        obstruction: to_families(n, &fams, &best),
        family_count: fams.len(),
    }
}

/// The lexicographically least obstruction of length exactly `m` built from
/// minimally non-intersecting families of `pool`, if any.
pub fn colorful_obstruction(space: &ConvexitySpace, m: usize, pool: Pool, budget: &Budget) -> Option<Vec<Vec<PointSet>>> {
    let n = space.ground_size();
    if m == 0 {
        return Some(Vec::new());
    }
    let fams = mnif_masks(space, pool, n, budget);
    par::find_first(fams.len(), |root| {
        let mut best = Vec::new();
        let mut seq = Vec::new();
        deepen(&fams, root, root + 1, &[full_mask(n)], &mut seq, budget, Some(m), &mut best);
        (best.len() == m).then_some(best)
    })
    .map(|seq| to_families(n, &fams, &seq))
}

/// Replaces the last two families by the distinct pairwise intersections of
/// their members. Applied to an obstruction of length `m + 1` in an
/// intersection-closed space, this yields an obstruction of length `m`.
pub fn merge_last_two(families: &[Vec<PointSet>]) -> Vec<Vec<PointSet>> {
    if families.len() < 2 {
        return families.to_vec();
    }
    let (head, tail) = families.split_at(families.len() - 2);
    let ground = tail[0].first().or(tail[1].first()).map_or(0, |s| s.ground_size());
    let mut merged: Vec<u64> = tail[0]
        .iter()
        .flat_map(|a| tail[1].iter().map(move |b| a.bits() & b.bits()))
        .collect();
    sort_canonical(&mut merged);
    merged.dedup();
    let mut out = head.to_vec();
    out.push(merged.into_iter().map(|m| PointSet::raw(ground, m)).collect());
    out
}

/// Minimally non-intersecting families of at most `max_size` distinct
/// members of `pool`, in lexicographic order of member positions.
pub fn minimal_nonintersecting_families(
    space: &ConvexitySpace,
    pool: Pool,
    max_size: usize,
    budget: &Budget,
) -> Vec<Vec<PointSet>> {
    let n = space.ground_size();
    mnif_masks(space, pool, max_size, budget)
        .into_iter()
        .map(|f| f.into_iter().map(|m| PointSet::raw(n, m)).collect())
        .collect()
}

fn pool_masks(space: &ConvexitySpace, pool: Pool) -> Vec<u64> {
    let full = full_mask(space.ground_size());
    let mut masks: Vec<u64> = match pool {
        Pool::Full => space.sets().iter().map(|s| s.bits()).collect(),
        Pool::Generators => space.meet_generators().to_vec(),
    };
    masks.retain(|&m| m != 0 && m != full);
    sort_canonical(&mut masks);
    masks
}

fn mnif_masks(space: &ConvexitySpace, pool: Pool, max_size: usize, budget: &Budget) -> Vec<Vec<u64>> {
    let masks = pool_masks(space, pool);
    let full = full_mask(space.ground_size());
    let per_root = par::map_indices(masks.len(), |root| {
        let mut out = Vec::new();
        let mut members = vec![masks[root]];
        grow_mnif(&masks, full, max_size, root, &mut members, budget, &mut out);
        out
    });
    per_root.into_iter().flatten().collect()
}

fn grow_mnif(
    masks: &[u64],
    full: u64,
    max_size: usize,
    last: usize,
    members: &mut Vec<u64>,
    budget: &Budget,
    out: &mut Vec<Vec<u64>>,
) {
    if members.len() >= max_size {
        return;
    }
    for j in last + 1..masks.len() {
        if !budget.charge(1) {
            return;
        }
        members.push(masks[j]);
        // A member containing the intersection of the others stays redundant
        // in every extension, so such branches cannot end minimal.
        let redundant = (0..members.len()).any(|i| {
            let others = members
                .iter()
                .enumerate()
                .filter(|&(q, _)| q != i)
                .fold(full, |acc, (_, &m)| acc & m);
            others & !members[i] == 0
        });
        if !redundant {
            let meet = members.iter().fold(full, |acc, &m| acc & m);
            if meet == 0 {
                out.push(members.clone());
            } else {
                grow_mnif(masks, full, max_size, j, members, budget, out);
            }
        }
        members.pop();
    }
}

/// Extends `seq` (which ends before family `next`) while every rainbow
/// partial intersection stays nonempty. `rainbow` holds the inclusion-minimal
/// ones. Records the first longest sequence in `best`; stops once `target`
/// is reached.
#[allow(clippy::too_many_arguments)]
fn deepen(
    fams: &[Vec<u64>],
    next: usize,
    limit: usize,
    rainbow: &[u64],
    seq: &mut Vec<usize>,
    budget: &Budget,
    target: Option<usize>,
    best: &mut Vec<usize>,
) -> bool {
    for f in next..limit.min(fams.len()) {
        if !budget.charge(1) {
            return true;
        }
        let mut grown: Vec<u64> = Vec::with_capacity(rainbow.len() * fams[f].len());
        let mut dead = false;
        'outer: for &r in rainbow {
            for &k in &fams[f] {
                let meet = r & k;
                if meet == 0 {
                    dead = true;
                    break 'outer;
                }
                grown.push(meet);
            }
        }
        if dead {
            continue;
        }
        let grown = minimal_elements(grown);
        seq.push(f);
        if seq.len() > best.len() {
            *best = seq.clone();
        }
        let done = target.is_some_and(|t| seq.len() >= t)
            || deepen(fams, f, fams.len(), &grown, seq, budget, target, best);
        seq.pop();
        if done {
            return true;
        }
    }
    false
}

fn minimal_elements(mut sets: Vec<u64>) -> Vec<u64> {
    sets.sort_unstable_by_key(|s| s.count_ones());
    sets.dedup();
    let mut kept: Vec<u64> = Vec::with_capacity(sets.len());
    for s in sets {
        if !kept.iter().any(|&k| k & !s == 0) {
            kept.push(s);
        }
    }
    kept
}

fn to_families(n: usize, fams: &[Vec<u64>], seq: &[usize]) -> Vec<Vec<PointSet>> {
    seq.iter()
        .map(|&i| fams[i].iter().map(|&m| PointSet::raw(n, m)).collect())
        .collect()
}
