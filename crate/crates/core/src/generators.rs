//! Concrete finite convexity spaces: intervals, grid boxes, lattice windows
//! and power sets.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::lp::{int, point_in_hull, Rational};
use crate::pointset::{full_mask, MAX_GROUND};
use crate::space::{ConvexitySpace, DEFAULT_CLOSURE_CAP};

/// Per-axis grid lengths for [`grid_box_space`]. Points are numbered in
/// row-major order (the last axis varies fastest).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridBoxSpec {
    dims: Vec<usize>,
}

impl GridBoxSpec {
    pub fn new(dims: Vec<usize>) -> Result<Self> {
        check_dims(&dims, usize::MAX)?;
        Ok(GridBoxSpec { dims })
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }
}

/// Window side lengths for [`lattice_window_space`], at most three axes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeWindowSpec {
    dims: Vec<usize>,
}

impl LatticeWindowSpec {
    pub fn new(dims: Vec<usize>) -> Result<Self> {
        check_dims(&dims, 3)?;
        Ok(LatticeWindowSpec { dims })
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }
}

fn check_dims(dims: &[usize], max_axes: usize) -> Result<()> {
    if dims.is_empty() || dims.len() > max_axes {
        return Err(Error::InvalidParameter(format!(
            "expected between 1 and {max_axes} axes, got {}",
            dims.len()
        )));
    }
    if dims.contains(&0) {
        return Err(Error::InvalidParameter("axis lengths must be positive".into()));
    }
    let product = dims.iter().try_fold(1usize, |acc, &d| acc.checked_mul(d));
    match product {
        Some(p) if p <= MAX_GROUND => Ok(()),
        _ => Err(Error::GroundTooLarge {
            size: product.unwrap_or(usize::MAX),
            cap: MAX_GROUND,
        }),
    }
}

/// `∅` and every integer interval `[a, b]` of `{0, .., n-1}`.
pub fn interval_space(n: usize) -> Result<ConvexitySpace> {
    if n == 0 || n > MAX_GROUND {
        return Err(Error::InvalidParameter(format!("interval space needs 1 <= n <= 64, got {n}")));
    }
    let mut masks = vec![0u64];
    for a in 0..n {
        for b in a..n {
            masks.push(full_mask(b + 1) & !full_mask(a));
        }
    }
    Ok(ConvexitySpace::from_masks_unchecked(n, masks))
}

/// `∅` and all products of per-axis integer intervals.
pub fn grid_box_space(spec: &GridBoxSpec) -> Result<ConvexitySpace> {
    let points = grid_points(spec.dims());
    let per_axis: Vec<Vec<(usize, usize)>> = spec
        .dims()
        .iter()
        .map(|&d| (0..d).flat_map(|a| (a..d).map(move |b| (a, b))).collect())
        .collect();
    let mut masks = vec![0u64];
    let mut choice = vec![0usize; per_axis.len()];
    loop {
        let mut mask = 0u64;
        for (i, p) in points.iter().enumerate() {
            let inside = p.iter().enumerate().all(|(axis, &c)| {
                let (lo, hi) = per_axis[axis][choice[axis]];
                lo <= c && c <= hi
            });
            if inside {
                mask |= 1 << i;
            }
        }
        masks.push(mask);
        if !advance(&mut choice, &per_axis.iter().map(|v| v.len()).collect::<Vec<_>>()) {
            break;
        }
    }
    Ok(ConvexitySpace::from_masks_unchecked(points.len(), masks))
}

/// Trace of lattice convexity on a finite window: a set `T` of window points
/// is convex when every window point in the real convex hull of `T` is in `T`.
/// Hull membership is decided by exact rational LP.
pub fn lattice_window_space(spec: &LatticeWindowSpec) -> Result<ConvexitySpace> {
    let points = grid_points(spec.dims());
    let coords: Vec<Vec<Rational>> = points
        .iter()
        .map(|p| p.iter().map(|&c| int(c as i64)).collect())
        .collect();
    let n = points.len();
    let mut cache: HashMap<u64, u64> = HashMap::new();
    let mut closure = |mask: u64| -> Result<u64> {
        if let Some(&c) = cache.get(&mask) {
            return Ok(c);
        }
        let c = lattice_closure(mask, &points, &coords)?;
        cache.insert(mask, c);
        Ok(c)
    };
    let masks = closed_sets(n, &mut closure, DEFAULT_CLOSURE_CAP)?;
    Ok(ConvexitySpace::from_masks_unchecked(n, masks))
}

/// Iterates `T ← conv(T) ∩ window` to a fixpoint.
fn lattice_closure(mask: u64, points: &[Vec<usize>], coords: &[Vec<Rational>]) -> Result<u64> {
    let mut current = mask;
    loop {
        if current.count_ones() <= 1 {
            return Ok(current);
        }
        let members: Vec<usize> = (0..points.len()).filter(|&i| current >> i & 1 == 1).collect();
        let d = points[0].len();
        let lo: Vec<usize> = (0..d).map(|a| members.iter().map(|&i| points[i][a]).min().unwrap()).collect();
        let hi: Vec<usize> = (0..d).map(|a| members.iter().map(|&i| points[i][a]).max().unwrap()).collect();
        let vertices: Vec<Vec<Rational>> = members.iter().map(|&i| coords[i].clone()).collect();
        let mut next = current;
        for (i, p) in points.iter().enumerate() {
            if current >> i & 1 == 1 {
                continue;
            }
            let in_box = (0..d).all(|a| lo[a] <= p[a] && p[a] <= hi[a]);
            if in_box && point_in_hull(&coords[i], &vertices)? {
                next |= 1 << i;
            }
        }
        if next == current {
            return Ok(current);
        }
        current = next;
    }
}

/// All `2^n` subsets; `n` at most 16.
pub fn powerset_space(n: usize) -> Result<ConvexitySpace> {
    if n == 0 || n > 16 {
        return Err(Error::InvalidParameter(format!("power set space needs 1 <= n <= 16, got {n}")));
    }
    Ok(ConvexitySpace::from_masks_unchecked(n, (0..1u64 << n).collect()))
}

/// Enumerates every closed set of a closure operator on `n` points in lectic
/// order (Ganter's NextClosure).
pub fn closed_sets<F>(n: usize, closure: &mut F, cap: usize) -> Result<Vec<u64>>
where
    F: FnMut(u64) -> Result<u64>,
{
    let full = full_mask(n);
    let mut current = closure(0)?;
    let mut out = vec![current];
    while current != full {
        let mut advanced = false;
        for i in (0..n).rev() {
            let bit = 1u64 << i;
            if current & bit != 0 {
                continue;
            }
            let below = bit - 1;
            let candidate = closure((current & below) | bit)?;
            if candidate & below == current & below {
                current = candidate;
                out.push(current);
                advanced = true;
                break;
            }
        }
        if !advanced {
            break;
        }
        if out.len() > cap {
            return Err(Error::ClosureCap {
                cap,
                partial: out.len(),
            });
        }
    }
    Ok(out)
}

fn grid_points(dims: &[usize]) -> Vec<Vec<usize>> {
    let mut points = Vec::new();
    let mut p = vec![0usize; dims.len()];
    loop {
        points.push(p.clone());
        if !advance(&mut p, dims) {
            return points;
        }
    }
}

/// Odometer increment with the last position fastest.
fn advance(counter: &mut [usize], limits: &[usize]) -> bool {
    for i in (0..counter.len()).rev() {
        counter[i] += 1;
        if counter[i] < limits[i] {
            return true;
        }
        counter[i] = 0;
    }
    false
}

/// Window coordinates of each ground point, in ground-set order.
pub fn window_coordinates(dims: &[usize]) -> Vec<Vec<usize>> {
    grid_points(dims)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pointset::PointSet;

    #[test]
    fn interval_counts() {
        let s = interval_space(1).unwrap();
        assert_eq!(s.len(), 2);
        let s = interval_space(3).unwrap();
        assert_eq!(s.len(), 7);
        let s = interval_space(5).unwrap();
        let ends = PointSet::from_elements(5, [0, 4]).unwrap();
        assert!(s.hull(&ends).unwrap().is_full());
        assert!(interval_space(0).is_err());
        assert!(interval_space(65).is_err());
    }

    #[test]
    fn boxes() {
        let one_d = grid_box_space(&GridBoxSpec::new(vec![5]).unwrap()).unwrap();
        assert_eq!(one_d, interval_space(5).unwrap());
        let square = grid_box_space(&GridBoxSpec::new(vec![2, 2]).unwrap()).unwrap();
        assert_eq!(square.len(), 10);
        assert!(square.verify_axioms().passes());
        assert!(GridBoxSpec::new(vec![8, 9]).is_err());
        assert!(GridBoxSpec::new(vec![]).is_err());
        assert!(GridBoxSpec::new(vec![3, 0]).is_err());
    }

    #[test]
    fn box_hull_is_bounding_box() {
        let dims = [3usize, 4];
        let s = grid_box_space(&GridBoxSpec::new(dims.to_vec()).unwrap()).unwrap();
        let pts = window_coordinates(&dims);
        for mask in 1u64..1 << 12 {
            let members: Vec<&Vec<usize>> = (0..12).filter(|i| mask >> i & 1 == 1).map(|i| &pts[i]).collect();
            let expected = (0..12).fold(0u64, |acc, i| {
                let inside = (0..2).all(|a| {
                    let lo = members.iter().map(|p| p[a]).min().unwrap();
                    let hi = members.iter().map(|p| p[a]).max().unwrap();
                    lo <= pts[i][a] && pts[i][a] <= hi
                });
                if inside {
                    acc | 1 << i
                } else {
                    acc
                }
            });
            assert_eq!(s.hull_mask(mask), expected);
        }
    }

    #[test]
    fn lattice_small_windows() {
        let unit = lattice_window_space(&LatticeWindowSpec::new(vec![2, 2]).unwrap()).unwrap();
        assert_eq!(unit, powerset_space(4).unwrap());
        let line = lattice_window_space(&LatticeWindowSpec::new(vec![3, 1]).unwrap()).unwrap();
        let ends = PointSet::from_elements(3, [0, 2]).unwrap();
        assert!(!line.is_convex(&ends));
        assert!(line.hull(&ends).unwrap().is_full());
        assert!(LatticeWindowSpec::new(vec![2, 2, 2, 2]).is_err());
    }

    #[test]
    fn lattice_three_by_three() {
        let s = lattice_window_space(&LatticeWindowSpec::new(vec![3, 3]).unwrap()).unwrap();
        // independently counted by exhaustive subset enumeration
        assert_eq!(s.len(), 214);
        let at = |x: usize, y: usize| x * 3 + y;
        // the unit square at the origin minus one corner
        let square = [at(0, 0), at(0, 1), at(1, 0), at(1, 1)];
        for skip in 0..4 {
            let t: Vec<usize> = square.iter().enumerate().filter(|(i, _)| *i != skip).map(|(_, &p)| p).collect();
            assert!(s.is_convex(&PointSet::from_elements(9, t).unwrap()));
        }
        let sets = s.sets();
        for a in sets {
            for b in sets {
                assert!(s.is_convex(&a.intersection(b)));
            }
        }
    }

    #[test]
    fn powerset_basics() {
        let s = powerset_space(1).unwrap();
        assert_eq!(s.len(), 2);
        let s = powerset_space(4).unwrap();
        for m in 0..16u64 {
            assert_eq!(s.hull_mask(m), m);
        }
        assert!(s.verify_axioms().passes());
        assert!(powerset_space(17).is_err());
    }

    #[test]
    fn next_closure_matches_brute_force() {
        let s = interval_space(6).unwrap();
        let mut cl = |m: u64| Ok(s.hull_by_definition(m));
        let mut got = closed_sets(6, &mut cl, 1000).unwrap();
        got.sort();
        let mut expected: Vec<u64> = s.sets().iter().map(|x| x.bits()).collect();
        expected.sort();
        assert_eq!(got, expected);
    }
}
