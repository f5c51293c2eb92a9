use super::mis::maximal_independent_sets;
use super::Hypergraph;
use crate::error::{Error, Result};
use crate::pointset::{PointSet, MAX_GROUND};
use crate::space::{closure_from_generators, ConvexitySpace, DEFAULT_CLOSURE_CAP};

/// The convexity space on the maximal independent sets of a hypergraph whose
/// convex sets are the stars `S_W = {σ : W ⊆ σ}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AssociatedSpace {
    /// Maximal independent sets in canonical order; point `i` of the space
    /// is `mis[i]`.
    pub mis: Vec<PointSet>,
    pub space: ConvexitySpace,
}

/// Indices of the maximal independent sets containing `w`.
pub fn star(mis: &[PointSet], w: &PointSet) -> PointSet {
    let mask = mis
        .iter()
        .enumerate()
        .filter(|(_, s)| w.is_subset(s))
        .fold(0u64, |acc, (i, _)| acc | 1 << i);
    PointSet::raw(mis.len(), mask)
}

/// The stars of single vertices, `S_{v}` for each vertex `v`.
pub fn star_family(mis: &[PointSet], vertex_count: usize) -> Vec<PointSet> {
    (0..vertex_count)
        .map(|v| star(mis, &PointSet::raw(vertex_count, 1 << v)))
        .collect()
}

/// Builds the associated space. Since `S_A ∩ S_B = S_{A∪B}`, the stars are
/// the intersection closure of the single-vertex stars together with `∅`
/// and the whole set.
pub fn associated_space(h: &Hypergraph) -> Result<AssociatedSpace> {
    let mis = maximal_independent_sets(h)?;
    if mis.len() > MAX_GROUND {
        return Err(Error::GroundTooLarge {
            size: mis.len(),
            cap: MAX_GROUND,
        });
    }
    let stars = star_family(&mis, h.vertex_count());
    let space = closure_from_generators(mis.len(), &stars, DEFAULT_CLOSURE_CAP)?;
    Ok(AssociatedSpace { mis, space })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::chromatic_number;
    use crate::invariants::transversal;

    #[test]
    fn single_edge_space() {
        let h = Hypergraph::new(2, 2, vec![vec![0, 1]]).unwrap();
        let a = associated_space(&h).unwrap();
        let sets: Vec<Vec<usize>> = a.space.sets().iter().map(|s| s.to_vec()).collect();
        assert_eq!(sets, vec![vec![], vec![0], vec![1], vec![0, 1]]);
    }

    #[test]
    fn star_identities() {
        let h = Hypergraph::cycle(6).unwrap();
        let a = associated_space(&h).unwrap();
        let n = h.vertex_count();
        assert!(star(&a.mis, &PointSet::empty(n).unwrap()).is_full());
        assert!(star(&a.mis, &PointSet::full(n).unwrap()).is_empty());
        for x in 0..1u64 << n {
            for y in [0b000011u64, 0b100100, 0b010001] {
                let sx = star(&a.mis, &PointSet::raw(n, x));
                let sy = star(&a.mis, &PointSet::raw(n, y));
                assert_eq!(sx.intersection(&sy), star(&a.mis, &PointSet::raw(n, x | y)));
                assert!(a.space.is_convex(&sx));
            }
        }
    }

    #[test]
    fn hull_is_star_of_common_vertices() {
        for h in [Hypergraph::cycle(5).unwrap(), Hypergraph::new(3, 5, vec![vec![0, 1, 2], vec![2, 3, 4]]).unwrap()] {
            let a = associated_space(&h).unwrap();
            let m = a.mis.len();
            for sub in 0..1u64 << m {
                let common = (0..m)
                    .filter(|i| sub >> i & 1 == 1)
                    .fold(PointSet::full(h.vertex_count()).unwrap(), |acc, i| acc.intersection(&a.mis[i]));
                assert_eq!(a.space.hull_mask(sub), star(&a.mis, &common).bits());
            }
        }
    }

    #[test]
    fn c5_transversal_is_chromatic() {
        let h = Hypergraph::cycle(5).unwrap();
        let a = associated_space(&h).unwrap();
        let t = transversal(&star_family(&a.mis, 5)).unwrap();
        assert_eq!(t.tau, 3);
        assert_eq!(t.tau, chromatic_number(&h).unwrap().chromatic_number);
    }
}
