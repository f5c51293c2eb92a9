//! k-uniform hypergraphs, their coloring invariants, the edge
//! distinct-representative properties, and the associated convexity space on
//! maximal independent sets.

mod assoc;
mod coloring;
mod mis;
pub mod random;
mod sdr;

pub use assoc::{associated_space, star, star_family, AssociatedSpace};
pub use coloring::{chromatic_number, clique_number, is_proper_coloring, Coloring};
pub use mis::{is_maximal_independent, maximal_independent_sets, maximal_independent_sets_with_cap, DEFAULT_MIS_CAP};
pub use sdr::{
    has_property_dkm, has_property_delta_km, has_property_tkm, has_property_tkm_with_caps, induced_matching_oracle, min_m_tk,
    sdr_edge, DisjointResult, SdrWitness, SunflowerResult, TkmCaps, TkmResult, MAX_MULTISETS,
};

use std::fmt;

use crate::error::{parse_err, Error, Result};
use crate::pointset::{PointSet, MAX_GROUND};

/// A nonempty `k`-uniform hypergraph on vertices `0..n`, with edges stored as
/// sorted vertex lists in lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Hypergraph {
    k: usize,
    n: usize,
    edges: Vec<Vec<usize>>,
    masks: Vec<u64>,
}

impl Hypergraph {
    pub fn new(k: usize, n: usize, edges: Vec<Vec<usize>>) -> Result<Self> {
        if k < 2 {
            return Err(Error::InvalidHypergraph(format!("uniformity must be at least 2, got {k}")));
        }
        if n > MAX_GROUND {
            return Err(Error::GroundTooLarge { size: n, cap: MAX_GROUND });
        }
        if edges.is_empty() {
            return Err(Error::InvalidHypergraph("a hypergraph needs at least one edge".into()));
        }
        let mut sorted = Vec::with_capacity(edges.len());
        for mut e in edges {
            e.sort_unstable();
            if let Some(&v) = e.iter().find(|&&v| v >= n) {
                return Err(Error::ElementOutOfRange { element: v, ground_size: n });
            }
            if e.windows(2).any(|w| w[0] == w[1]) || e.len() != k {
                return Err(Error::InvalidHypergraph(format!("{e:?} is not a set of {k} distinct vertices")));
            }
            sorted.push(e);
        }
        sorted.sort();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidHypergraph(format!("edge {:?} listed twice", w[0])));
        }
        let masks = sorted.iter().map(|e| e.iter().fold(0u64, |acc, &v| acc | 1 << v)).collect();
        Ok(Hypergraph { k, n, edges: sorted, masks })
    }

    pub fn uniformity(&self) -> usize {
        self.k
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    /// Edges as vertex bit masks, in edge order.
    pub fn edge_masks(&self) -> &[u64] {
        &self.masks
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edge_set(&self, i: usize) -> PointSet {
        PointSet::from_bits(self.n, self.masks[i]).expect("edge inside the vertex set")
    }

    /// Whether `set` contains no edge.
    pub fn is_independent(&self, set: u64) -> bool {
        self.masks.iter().all(|&e| e & !set != 0)
    }

    /// `s` pairwise disjoint edges of size `k`.
    pub fn matching(k: usize, s: usize) -> Result<Self> {
        Hypergraph::new(k, k * s, (0..s).map(|i| (i * k..(i + 1) * k).collect()).collect())
    }

    /// The cycle `C_n` as a graph.
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidHypergraph(format!("a cycle needs 3 vertices, got {n}")));
        }
        Hypergraph::new(2, n, (0..n).map(|i| vec![i, (i + 1) % n]).collect())
    }

    /// The path on `n` vertices as a graph.
    pub fn path(n: usize) -> Result<Self> {
        Hypergraph::new(2, n, (1..n).map(|i| vec![i - 1, i]).collect())
    }

    /// All `k`-subsets of `n` vertices.
    pub fn complete(k: usize, n: usize) -> Result<Self> {
        use itertools::Itertools;
        Hypergraph::new(k, n, (0..n).combinations(k).collect())
    }

    /// Text form: `hypergraph <k> <n>` then one edge per line.
    pub fn to_text(&self) -> String {
        let mut out = format!("hypergraph {} {}\n", self.k, self.n);
        for e in &self.edges {
            let words: Vec<String> = e.iter().map(|v| v.to_string()).collect();
            out.push_str(&words.join(" "));
            out.push('\n');
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (no, header) = lines.next().ok_or_else(|| parse_err(1, "empty hypergraph file"))?;
        let words: Vec<&str> = header.split_whitespace().collect();
        if words.len() != 3 || words[0] != "hypergraph" {
            return Err(parse_err(no, "expected `hypergraph <k> <n>`"));
        }
        let k = parse_number(words[1], no)?;
        let n = parse_number(words[2], no)?;
        let mut edges = Vec::new();
        for (no, line) in lines {
            let e = line
                .split_whitespace()
                .map(|w| parse_number(w, no))
                .collect::<Result<Vec<usize>>>()?;
            if e.len() != k {
                return Err(parse_err(no, format!("expected {k} vertices, found {}", e.len())));
            }
            edges.push(e);
        }
        Hypergraph::new(k, n, edges)
    }
}

impl fmt::Display for Hypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "H(k={}, n={}, edges=", self.k, self.n)?;
        for (i, e) in self.edges.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            let words: Vec<String> = e.iter().map(|v| v.to_string()).collect();
            write!(f, "{{{}}}", words.join(","))?;
        }
        write!(f, ")")
    }
}

fn parse_number(word: &str, line: usize) -> Result<usize> {
    word.parse().map_err(|_| parse_err(line, format!("`{word}` is not a nonnegative integer")))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form_and_text() {
        let h = Hypergraph::new(2, 4, vec![vec![3, 2], vec![1, 0]]).unwrap();
        assert_eq!(h.edges(), &[vec![0, 1], vec![2, 3]]);
        assert_eq!(h, Hypergraph::matching(2, 2).unwrap());
        let back = Hypergraph::from_text(&format!("# two edges\n{}", h.to_text())).unwrap();
        assert_eq!(back, h);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(Hypergraph::new(2, 3, vec![]).is_err());
        assert!(Hypergraph::new(2, 3, vec![vec![0, 0]]).is_err());
        assert!(Hypergraph::new(2, 3, vec![vec![0, 3]]).is_err());
        assert!(Hypergraph::new(2, 3, vec![vec![0, 1], vec![1, 0]]).is_err());
        assert!(Hypergraph::new(3, 3, vec![vec![0, 1]]).is_err());
        assert!(Hypergraph::from_text("hypergraph 2 3\n0 1 2\n").is_err());
    }
}
