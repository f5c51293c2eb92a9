//! Random hypergraphs for property checks.

use itertools::Itertools;
use rand::seq::index::sample;
use rand::Rng;

use super::Hypergraph;
use crate::error::{Error, Result};

/// A graph on `n` vertices with each pair present independently with
/// probability `p`, resampled until it has an edge.
pub fn random_graph<R: Rng + ?Sized>(rng: &mut R, n: usize, p: f64) -> Result<Hypergraph> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!("random graphs need 2 vertices, got {n}")));
    }
    loop {
        let edges: Vec<Vec<usize>> = (0..n).tuple_combinations().filter(|_| rng.random_bool(p)).map(|(a, b)| vec![a, b]).collect();
        if !edges.is_empty() {
            return Hypergraph::new(2, n, edges);
        }
    }
}

/// A `k`-uniform hypergraph on `n` vertices with `edges` distinct edges
/// drawn uniformly from all `k`-subsets.
pub fn random_hypergraph<R: Rng + ?Sized>(rng: &mut R, k: usize, n: usize, edges: usize) -> Result<Hypergraph> {
    let all: Vec<Vec<usize>> = (0..n).combinations(k).collect();
    if edges == 0 || edges > all.len() {
        return Err(Error::InvalidParameter(format!(
            "cannot draw {edges} distinct {k}-edges on {n} vertices"
        )));
    }
    let mut picked: Vec<usize> = sample(rng, all.len(), edges).into_vec();
    picked.sort_unstable();
    Hypergraph::new(k, n, picked.into_iter().map(|i| all[i].clone()).collect())
}
