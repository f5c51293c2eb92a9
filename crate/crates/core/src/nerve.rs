//! Nerve complexes of finite set families.

use crate::error::{Error, Result};
use crate::pointset::PointSet;
use crate::space::point_stars;

/// Default cap on the family size accepted by [`nerve`].
pub const DEFAULT_NERVE_CAP: usize = 20;

/// The nerve `{σ : ∩_{i∈σ} F_i ≠ ∅}` of a family, stored by its maximal faces.
///
/// Faces are index sets over the family. Every subset of a stored face is a
/// face. An empty member gives no vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NerveComplex {
    pub vertex_count: usize,
    pub maximal_faces: Vec<PointSet>,
}

impl NerveComplex {
    pub fn is_face(&self, sigma: &PointSet) -> bool {
        self.maximal_faces.iter().any(|f| sigma.is_subset(f))
    }

    pub fn dimension(&self) -> Option<usize> {
        self.maximal_faces.iter().map(|f| f.len()).max().and_then(|d| d.checked_sub(1))
    }
}

pub fn nerve(family: &[PointSet]) -> Result<NerveComplex> {
    nerve_with_cap(family, DEFAULT_NERVE_CAP)
}

/// A face has a common point `x`, so it lies inside the star `{i : x ∈ F_i}`;
/// the maximal faces are therefore the maximal point stars.
pub fn nerve_with_cap(family: &[PointSet], cap: usize) -> Result<NerveComplex> {
    if family.len() > cap {
        return Err(Error::FamilyTooLarge {
            size: family.len(),
            cap,
        });
    }
    let n = family.len();
    if n == 0 {
        return Ok(NerveComplex {
            vertex_count: 0,
            maximal_faces: Vec::new(),
        });
    }
    let ground = family[0].ground_size();
    for s in family {
        s.same_ground(&family[0])?;
    }
    let mut stars = point_stars(family, ground);
    stars.sort_unstable();
    stars.dedup();
    let mut maximal: Vec<PointSet> = stars
        .iter()
        .filter(|&&s| !stars.iter().any(|&t| t != s && s & !t == 0))
        .map(|&s| PointSet::raw(n, s))
        .collect();
    maximal.sort();
    Ok(NerveComplex {
        vertex_count: n,
        maximal_faces: maximal,
    })
}
