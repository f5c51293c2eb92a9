use itertools::Itertools;

use super::Hypergraph;
use crate::error::{Error, Result};
use crate::par;

/// Largest number of edge multisets a single `T_k(m)` check will scan.
pub const MAX_MULTISETS: u64 = 20_000_000;

/// Size limits for `T_k(m)` checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TkmCaps {
    pub max_edges: usize,
    pub max_m: usize,
}

impl Default for TkmCaps {
    fn default() -> Self {
        TkmCaps { max_edges: 20, max_m: 6 }
    }
}

/// `k` positions in an edge sequence with distinct representatives forming
/// an edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SdrWitness {
    /// Increasing positions in the edge sequence.
    pub chosen_indices: Vec<usize>,
    /// `representatives[j]` lies in the edge at `chosen_indices[j]`.
    pub representatives: Vec<usize>,
    /// Index of the edge formed by the representatives.
    pub witness_edge: usize,
}

/// The first edge (in edge order) that is a system of distinct
/// representatives for `k` of the edges listed in `sequence` (edge indices,
/// repeats allowed).
///
/// For each candidate edge this looks for a matching from its vertices into
/// the sequence positions saturating the edge.
pub fn sdr_edge(h: &Hypergraph, sequence: &[usize]) -> Option<SdrWitness> {
    let masks = h.edge_masks();
    let slots: Vec<u64> = sequence.iter().map(|&i| masks[i]).collect();
    (0..masks.len()).find_map(|cand| {
        let vertices = &h.edges()[cand];
        let matched = saturating_matching(vertices, &slots)?;
        let mut pairs: Vec<(usize, usize)> = matched.into_iter().zip(vertices.iter().copied()).collect();
        pairs.sort_unstable();
        Some(SdrWitness {
            chosen_indices: pairs.iter().map(|p| p.0).collect(),
            representatives: pairs.iter().map(|p| p.1).collect(),
            witness_edge: cand,
        })
    })
}

/// Slot assigned to each vertex, by augmenting paths.
fn saturating_matching(vertices: &[usize], slots: &[u64]) -> Option<Vec<usize>> {
    let mut owner: Vec<Option<usize>> = vec![None; slots.len()];
    for vi in 0..vertices.len() {
        let mut seen = vec![false; slots.len()];
        if !augment(vi, vertices, slots, &mut owner, &mut seen) {
            return None;
        }
    }
    let mut slot_of = vec![0; vertices.len()];
    for (s, o) in owner.iter().enumerate() {
        if let Some(v) = *o {
            slot_of[v] = s;
        }
    }
    Some(slot_of)
}

fn augment(vi: usize, vertices: &[usize], slots: &[u64], owner: &mut [Option<usize>], seen: &mut [bool]) -> bool {
    for s in 0..slots.len() {
        if slots[s] >> vertices[vi] & 1 == 0 || seen[s] {
            continue;
        }
        seen[s] = true;
        if owner[s].is_none_or(|other| augment(other, vertices, slots, owner, seen)) {
            owner[s] = Some(vi);
            return true;
        }
    }
    false
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TkmResult {
    pub m: usize,
    pub holds: bool,
    /// Lexicographically least multiset of `m` edge indices with no SDR edge.
    pub violation: Option<Vec<usize>>,
    /// The hypergraph has fewer than `m` edges; the check still ranges over
    /// multisets.
    pub fewer_edges_than_m: bool,
}

/// Property `T_k(m)`: every multiset of `m` edges has `k` members with
/// distinct representatives forming an edge. Uses the default caps.
pub fn has_property_tkm(h: &Hypergraph, m: usize) -> Result<TkmResult> {
    has_property_tkm_with_caps(h, m, TkmCaps::default())
}

/// [`has_property_tkm`] with explicit size limits. Multisets are scanned in
/// lexicographic order, so the reported violation is the least one.
pub fn has_property_tkm_with_caps(h: &Hypergraph, m: usize, caps: TkmCaps) -> Result<TkmResult> {
    let k = h.uniformity();
    if m < k {
        return Err(Error::InvalidParameter(format!("T_k(m) needs m >= k, got m={m}, k={k}")));
    }
    let e = h.edge_count();
    if e > caps.max_edges {
        return Err(Error::CapExceeded(format!("T_k(m) capped at {} edges, got {e}", caps.max_edges)));
    }
    if m > caps.max_m {
        return Err(Error::CapExceeded(format!("T_k(m) capped at m = {}, got {m}", caps.max_m)));
    }
    let count = multiset_count(e, m);
    if count > MAX_MULTISETS {
        return Err(Error::CapExceeded(format!(
            "T_k({m}) over {e} edges needs {count} multisets, above {MAX_MULTISETS}"
        )));
    }
    let violation = par::find_first(e, |first| {
        (first..e).combinations_with_replacement(m - 1).find_map(|rest| {
            let mut seq = Vec::with_capacity(m);
            seq.push(first);
            seq.extend(rest);
            sdr_edge(h, &seq).is_none().then_some(seq)
        })
    });
    Ok(TkmResult {
        m,
        holds: violation.is_none(),
        violation,
        fewer_edges_than_m: e < m,
    })
}

fn multiset_count(e: usize, m: usize) -> u64 {
    // C(e + m - 1, m), saturating.
    let mut acc: u128 = 1;
    for i in 0..m as u128 {
        acc = acc * (e as u128 + i) / (i + 1);
        if acc > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    acc as u64
}

/// Least `m` in `k..=cap` with `T_k(m)`, or `None` if there is none.
///
/// `T_k(m)` implies `T_k(m + 1)`: any `m` members of an `(m+1)`-multiset
/// already contain the required edges.
pub fn min_m_tk(h: &Hypergraph, cap: usize) -> Result<Option<usize>> {
    let caps = TkmCaps {
        max_m: cap,
        ..TkmCaps::default()
    };
    for m in h.uniformity()..=cap {
        if has_property_tkm_with_caps(h, m, caps)?.holds {
            return Ok(Some(m));
        }
    }
    Ok(None)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SunflowerResult {
    pub m: usize,
    pub holds: bool,
    /// First sunflower of `m` distinct edges with no SDR edge.
    pub witness: Option<Vec<usize>>,
    pub sunflowers_checked: u64,
}

/// Property `δ_k(m)`: every sunflower of `m` distinct edges (all pairwise
/// intersections equal) has an SDR edge among `k` of its petals.
pub fn has_property_delta_km(h: &Hypergraph, m: usize) -> Result<SunflowerResult> {
    let k = h.uniformity();
    if m < k {
        return Err(Error::InvalidParameter(format!("δ_k(m) needs m >= k, got m={m}, k={k}")));
    }
    let masks = h.edge_masks();
    let mut checked = 0;
    let mut witness = None;
    for petals in (0..h.edge_count()).combinations(m) {
        let core = masks[petals[0]] & masks[petals[1]];
        let sunflower = petals
            .iter()
            .tuple_combinations()
            .all(|(&a, &b)| masks[a] & masks[b] == core);
        if !sunflower {
            continue;
        }
        checked += 1;
        if sdr_edge(h, &petals).is_none() {
            witness = Some(petals);
            break;
        }
    }
    Ok(SunflowerResult {
        m,
        holds: witness.is_none(),
        witness,
        sunflowers_checked: checked,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DisjointResult {
    pub m: usize,
    pub holds: bool,
    /// First `m` pairwise disjoint edges with no transversal edge.
    pub witness: Option<Vec<usize>>,
}

/// Property `D_k(m)`: every `m` pairwise disjoint edges span an edge meeting
/// each of them at most once.
pub fn has_property_dkm(h: &Hypergraph, m: usize) -> Result<DisjointResult> {
    let k = h.uniformity();
    if m < k {
        return Err(Error::InvalidParameter(format!("D_k(m) needs m >= k, got m={m}, k={k}")));
    }
    let masks = h.edge_masks();
    let witness = (0..h.edge_count()).combinations(m).find(|chosen| {
        let disjoint = chosen.iter().tuple_combinations().all(|(&a, &b)| masks[a] & masks[b] == 0);
        if !disjoint {
            return false;
        }
        let span = chosen.iter().fold(0u64, |acc, &i| acc | masks[i]);
        !masks
            .iter()
            .any(|&e| e & !span == 0 && chosen.iter().all(|&i| (e & masks[i]).count_ones() <= 1))
    });
    Ok(DisjointResult {
        m,
        holds: witness.is_none(),
        witness,
    })
}

/// For graphs: true iff there are no `m` pairwise disjoint edges whose
/// endpoints induce exactly those edges.
pub fn induced_matching_oracle(g: &Hypergraph, m: usize) -> Result<bool> {
    if g.uniformity() != 2 {
        return Err(Error::InvalidParameter(format!(
            "induced matchings need a graph, got uniformity {}",
            g.uniformity()
        )));
    }
    let masks = g.edge_masks();
    let found = (0..g.edge_count()).combinations(m).any(|chosen| {
        let span = chosen.iter().fold(0u64, |acc, &i| acc | masks[i]);
        span.count_ones() as usize == 2 * m && masks.iter().filter(|&&e| e & !span == 0).count() == m
    });
    Ok(!found)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k3() -> Hypergraph {
        Hypergraph::complete(2, 3).unwrap()
    }

    #[test]
    fn sdr_witness_shape() {
        let h = k3();
        let w = sdr_edge(&h, &[0, 2]).unwrap();
        assert_eq!(w.chosen_indices.len(), 2);
        for (j, &pos) in w.chosen_indices.iter().enumerate() {
            assert!(h.edges()[[0, 2][pos]].contains(&w.representatives[j]));
        }
        let mut reps = w.representatives.clone();
        reps.sort_unstable();
        assert_eq!(reps, h.edges()[w.witness_edge]);
    }

    #[test]
    fn tkm_examples() {
        assert!(has_property_tkm(&k3(), 2).unwrap().holds);
        let m2 = Hypergraph::matching(2, 2).unwrap();
        let res = has_property_tkm(&m2, 2).unwrap();
        assert_eq!(res.violation, Some(vec![0, 1]));
        assert_eq!(min_m_tk(&k3(), 6).unwrap(), Some(2));
        assert_eq!(min_m_tk(&m2, 6).unwrap(), Some(3));
        assert!(has_property_tkm(&m2, 1).is_err());
    }

    #[test]
    fn matching_threshold() {
        for k in 2..=3 {
            for s in 1..=3 {
                let h = Hypergraph::matching(k, s).unwrap();
                for m in k..=(k - 1) * s + 2 {
                    let caps = TkmCaps { max_edges: 20, max_m: 10 };
                    assert_eq!(has_property_tkm_with_caps(&h, m, caps).unwrap().holds, m > (k - 1) * s, "k={k} s={s} m={m}");
                }
            }
        }
    }

    #[test]
    fn fewer_edges_flag() {
        let h = Hypergraph::new(2, 2, vec![vec![0, 1]]).unwrap();
        let res = has_property_tkm(&h, 3).unwrap();
        assert!(res.holds && res.fewer_edges_than_m);
    }

    #[test]
    fn sunflower_and_disjoint_examples() {
        let m2 = Hypergraph::matching(2, 2).unwrap();
        assert_eq!(has_property_delta_km(&m2, 2).unwrap().witness, Some(vec![0, 1]));
        assert!(!has_property_dkm(&m2, 2).unwrap().holds);
        let fan = Hypergraph::new(3, 7, vec![vec![0, 1, 2], vec![0, 3, 4], vec![0, 5, 6]]).unwrap();
        for m in 3..=4 {
            assert!(has_property_dkm(&fan, m).unwrap().holds);
        }
        assert!(has_property_delta_km(&k3(), 3).unwrap().holds);
    }

    #[test]
    fn induced_matchings() {
        let p4 = Hypergraph::path(4).unwrap();
        assert!(induced_matching_oracle(&p4, 2).unwrap());
        assert!(has_property_tkm(&p4, 2).unwrap().holds);
        assert!(!induced_matching_oracle(&Hypergraph::matching(2, 2).unwrap(), 2).unwrap());
        let c7 = Hypergraph::cycle(7).unwrap();
        assert!(!induced_matching_oracle(&c7, 2).unwrap());
        assert!(!has_property_tkm(&c7, 2).unwrap().holds);
        assert!(induced_matching_oracle(&Hypergraph::complete(3, 4).unwrap(), 2).is_err());
    }
}
