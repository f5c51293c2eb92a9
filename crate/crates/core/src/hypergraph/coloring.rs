use std::collections::HashSet;

use super::Hypergraph;
use crate::error::{Error, Result};
use crate::pointset::PointSet;

const MAX_COLOR_VERTICES: usize = 20;
const MAX_CLIQUE_VERTICES: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    pub chromatic_number: usize,
    /// Color of each vertex, in `0..chromatic_number`.
    pub colors: Vec<usize>,
}

/// Exact chromatic number with a proper coloring: no color class contains an
/// edge. Part counts are tried in increasing order, each by backtracking with
/// colors introduced in order.
pub fn chromatic_number(h: &Hypergraph) -> Result<Coloring> {
    let n = h.vertex_count();
    if n > MAX_COLOR_VERTICES {
        return Err(Error::CapExceeded(format!(
            "chromatic number needs at most {MAX_COLOR_VERTICES} vertices, got {n}"
        )));
    }
    // Edges grouped by their largest vertex, checked once that vertex is colored.
    let mut closing: Vec<Vec<u64>> = vec![Vec::new(); n];
    for (e, &mask) in h.edges().iter().zip(h.edge_masks()) {
        closing[*e.last().expect("edges are nonempty")].push(mask);
    }
    for c in 1..=n.max(1) {
        let mut classes = vec![0u64; c];
        let mut colors = vec![0usize; n];
        if color_from(0, 0, &closing, &mut classes, &mut colors) {
            debug_assert!(is_proper_coloring(h, &colors));
            return Ok(Coloring {
                chromatic_number: c,
                colors,
            });
        }
    }
    Err(Error::Inconsistent("no proper coloring found".into()))
}

fn color_from(v: usize, used: usize, closing: &[Vec<u64>], classes: &mut [u64], colors: &mut [usize]) -> bool {
    if v == closing.len() {
        return true;
    }
    let limit = (used + 1).min(classes.len());
    for c in 0..limit {
        let class = classes[c] | 1 << v;
        if closing[v].iter().any(|&e| e & !class == 0) {
            continue;
        }
        classes[c] = class;
        colors[v] = c;
        if color_from(v + 1, used.max(c + 1), closing, classes, colors) {
            return true;
        }
        classes[c] &= !(1 << v);
    }
    false
}

/// Whether no color class contains an edge.
pub fn is_proper_coloring(h: &Hypergraph, colors: &[usize]) -> bool {
    colors.len() == h.vertex_count()
        && h.edges()
            .iter()
            .all(|e| e.iter().any(|&v| colors[v] != colors[e[0]]))
}

/// Largest vertex set whose `k`-subsets are all edges, with the least such
/// set in canonical order.
pub fn clique_number(h: &Hypergraph) -> Result<(usize, PointSet)> {
    let n = h.vertex_count();
    if n > MAX_CLIQUE_VERTICES {
        return Err(Error::CapExceeded(format!(
            "clique number needs at most {MAX_CLIQUE_VERTICES} vertices, got {n}"
        )));
    }
    let edges: HashSet<u64> = h.edge_masks().iter().copied().collect();
    let mut best = Vec::new();
    let mut current = Vec::new();
    grow_clique(h.uniformity(), n, 0, &edges, &mut current, &mut best);
    let set = PointSet::from_elements(n, best.iter().copied())?;
    Ok((best.len(), set))
}

fn grow_clique(k: usize, n: usize, from: usize, edges: &HashSet<u64>, current: &mut Vec<usize>, best: &mut Vec<usize>) {
    if current.len() > best.len() {
        *best = current.clone();
    }
    for v in from..n {
        if current.len() + (n - v) <= best.len() {
            return;
        }
        let ok = current.len() + 1 < k || closes_all(k - 1, current, v, edges);
        if ok {
            current.push(v);
            grow_clique(k, n, v + 1, edges, current, best);
            current.pop();
        }
    }
}

/// Every `(size)`-subset of `current` together with `v` is an edge.
fn closes_all(size: usize, current: &[usize], v: usize, edges: &HashSet<u64>) -> bool {
    use itertools::Itertools;
    current
        .iter()
        .combinations(size)
        .all(|c| edges.contains(&c.iter().fold(1u64 << v, |acc, &&u| acc | 1 << u)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chromatic_examples() {
        assert_eq!(chromatic_number(&Hypergraph::new(3, 3, vec![vec![0, 1, 2]]).unwrap()).unwrap().chromatic_number, 2);
        let c5 = chromatic_number(&Hypergraph::cycle(5).unwrap()).unwrap();
        assert_eq!(c5.chromatic_number, 3);
        assert!(is_proper_coloring(&Hypergraph::cycle(5).unwrap(), &c5.colors));
        assert_eq!(chromatic_number(&Hypergraph::complete(3, 4).unwrap()).unwrap().chromatic_number, 2);
        assert_eq!(chromatic_number(&Hypergraph::complete(2, 5).unwrap()).unwrap().chromatic_number, 5);
        assert_eq!(chromatic_number(&Hypergraph::cycle(6).unwrap()).unwrap().chromatic_number, 2);
        assert_eq!(chromatic_number(&Hypergraph::complete(3, 7).unwrap()).unwrap().chromatic_number, 4);
    }

    #[test]
    fn clique_examples() {
        assert_eq!(clique_number(&Hypergraph::new(3, 5, vec![vec![1, 2, 4]]).unwrap()).unwrap().0, 3);
        assert_eq!(clique_number(&Hypergraph::complete(3, 6).unwrap()).unwrap().0, 6);
        assert_eq!(clique_number(&Hypergraph::matching(2, 2).unwrap()).unwrap().0, 2);
        let (w, set) = clique_number(&Hypergraph::new(2, 5, vec![vec![0, 1], vec![2, 3], vec![3, 4], vec![2, 4]]).unwrap()).unwrap();
        assert_eq!((w, set.to_vec()), (3, vec![2, 3, 4]));
    }
}
