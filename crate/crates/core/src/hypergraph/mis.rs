use super::Hypergraph;
use crate::error::{Error, Result};
use crate::pointset::{sort_canonical, PointSet};

/// Default cap on the number of maximal independent sets returned.
pub const DEFAULT_MIS_CAP: usize = 1 << 16;

const MAX_VERTICES: usize = 24;

/// All maximal independent sets, in canonical order.
pub fn maximal_independent_sets(h: &Hypergraph) -> Result<Vec<PointSet>> {
    maximal_independent_sets_with_cap(h, DEFAULT_MIS_CAP)
}

/// As [`maximal_independent_sets`], failing once more than `cap` sets are
/// found.
///
/// Vertices are decided in order. Including a vertex must not complete an
/// edge; excluding one must leave some edge through it whose other vertices
/// are not yet excluded, since otherwise the vertex could never be blocked.
/// Every output is re-checked by [`is_maximal_independent`].
pub fn maximal_independent_sets_with_cap(h: &Hypergraph, cap: usize) -> Result<Vec<PointSet>> {
    let n = h.vertex_count();
    if n > MAX_VERTICES {
        return Err(Error::CapExceeded(format!(
            "maximal independent sets need at most {MAX_VERTICES} vertices, got {n}"
        )));
    }
    let mut out = Vec::new();
    let mut search = Search {
        h,
        cap,
        out: &mut out,
    };
    if !search.run(0, 0, 0) {
        return Err(Error::CapExceeded(format!("more than {cap} maximal independent sets")));
    }
    for &m in &out {
        if !is_maximal_independent(h, m) {
            return Err(Error::Inconsistent(format!("{m:#b} failed the maximality re-check")));
        }
    }
    sort_canonical(&mut out);
    Ok(out.into_iter().map(|m| PointSet::raw(n, m)).collect())
}

/// Independent verifier: no edge inside `set`, and every other vertex
/// completes an edge with `set`.
pub fn is_maximal_independent(h: &Hypergraph, set: u64) -> bool {
    let edges = h.edge_masks();
    edges.iter().all(|&e| e & !set != 0)
        && (0..h.vertex_count())
            .filter(|&v| set >> v & 1 == 0)
            .all(|v| edges.iter().any(|&e| e & !(set | 1 << v) == 0))
}

struct Search<'a> {
    h: &'a Hypergraph,
    cap: usize,
    out: &'a mut Vec<u64>,
}

impl Search<'_> {
    /// Returns false when the cap is exceeded.
    fn run(&mut self, v: usize, chosen: u64, excluded: u64) -> bool {
        let n = self.h.vertex_count();
        if v == n {
            if self.h.is_independent(chosen) && blocked_all(self.h, chosen, excluded) {
                self.out.push(chosen);
                return self.out.len() <= self.cap;
            }
            return true;
        }
        let with = chosen | 1 << v;
        if self.h.is_independent(with) && !self.run(v + 1, with, excluded) {
            return false;
        }
        let without = excluded | 1 << v;
        if still_blockable(self.h, without) {
            return self.run(v + 1, chosen, without);
        }
        true
    }
}

fn still_blockable(h: &Hypergraph, excluded: u64) -> bool {
    let mut rest = excluded;
    while rest != 0 {
        let v = rest.trailing_zeros();
        rest &= rest - 1;
        let bit = 1u64 << v;
        if !h.edge_masks().iter().any(|&e| e & bit != 0 && e & excluded == bit) {
            return false;
        }
    }
    true
}

fn blocked_all(h: &Hypergraph, chosen: u64, excluded: u64) -> bool {
    let mut rest = excluded;
    while rest != 0 {
        let v = rest.trailing_zeros();
        rest &= rest - 1;
        if !h.edge_masks().iter().any(|&e| e & !(chosen | 1 << v) == 0) {
            return false;
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn masks(sets: &[PointSet]) -> Vec<Vec<usize>> {
        sets.iter().map(|s| s.to_vec()).collect()
    }

    fn brute(h: &Hypergraph) -> Vec<u64> {
        let mut v: Vec<u64> = (0..1u64 << h.vertex_count()).filter(|&s| is_maximal_independent(h, s)).collect();
        sort_canonical(&mut v);
        v
    }

    #[test]
    fn small_examples() {
        let e = Hypergraph::new(2, 2, vec![vec![0, 1]]).unwrap();
        assert_eq!(masks(&maximal_independent_sets(&e).unwrap()), vec![vec![0], vec![1]]);
        let c5 = Hypergraph::cycle(5).unwrap();
        assert_eq!(
            masks(&maximal_independent_sets(&c5).unwrap()),
            vec![vec![0, 2], vec![0, 3], vec![1, 3], vec![1, 4], vec![2, 4]]
        );
        let t = Hypergraph::new(3, 3, vec![vec![0, 1, 2]]).unwrap();
        assert_eq!(masks(&maximal_independent_sets(&t).unwrap()), vec![vec![0, 1], vec![0, 2], vec![1, 2]]);
    }

    #[test]
    fn matches_brute_force() {
        let hs = [
            Hypergraph::cycle(7).unwrap(),
            Hypergraph::path(6).unwrap(),
            Hypergraph::complete(3, 5).unwrap(),
            Hypergraph::new(3, 6, vec![vec![0, 1, 2], vec![2, 3, 4], vec![1, 4, 5], vec![0, 3, 5]]).unwrap(),
            Hypergraph::matching(2, 3).unwrap(),
        ];
        for h in &hs {
            let got: Vec<u64> = maximal_independent_sets(h).unwrap().iter().map(|s| s.bits()).collect();
            assert_eq!(got, brute(h), "{h}");
        }
    }

    #[test]
    fn isolated_vertices_join_every_set() {
        let h = Hypergraph::new(2, 3, vec![vec![0, 1]]).unwrap();
        assert_eq!(masks(&maximal_independent_sets(&h).unwrap()), vec![vec![0, 2], vec![1, 2]]);
    }

    #[test]
    fn cap_is_enforced() {
        let h = Hypergraph::matching(2, 4).unwrap();
        assert!(maximal_independent_sets_with_cap(&h, 15).is_err());
        assert_eq!(maximal_independent_sets_with_cap(&h, 16).unwrap().len(), 16);
    }
}
