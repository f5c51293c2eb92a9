use itertools::Itertools;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::lp::{int, solve_min, LinearProgram, LpOutcome, Rational};
use crate::pointset::PointSet;
use crate::space::ConvexitySpace;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FractionalHellyProfile {
    pub k: usize,
    /// Fraction of `k`-subfamilies (distinct members) that intersect.
    pub alpha: Rational,
    /// Largest intersecting subfamily as a fraction of the family.
    pub beta_observed: Rational,
    /// Least point lying in the most members.
    pub deepest_point: usize,
    pub intersecting_tuples: u64,
    pub total_tuples: u64,
}

/// Exact `α` and `β` for one family of convex sets.
///
/// A subfamily intersects exactly when some point lies in all its members,
/// so the largest intersecting subfamily has the size of the deepest point.
pub fn fractional_helly_profile(space: &ConvexitySpace, family: &[PointSet], k: usize) -> Result<FractionalHellyProfile> {
    check_convex(space, family)?;
    if k == 0 || family.len() < k {
        return Err(Error::InvalidParameter(format!(
            "profile needs 1 <= k <= |F|, got k={k} with |F|={}",
            family.len()
        )));
    }
    let n = space.ground_size();
    let mut total = 0u64;
    let mut hits = 0u64;
    for tuple in family.iter().combinations(k) {
        total += 1;
        if tuple.iter().fold(u64::MAX, |acc, s| acc & s.bits()) != 0 {
            hits += 1;
        }
    }
    let depth = |p: usize| family.iter().filter(|s| s.contains(p)).count();
    let deepest_point = (0..n).max_by_key(|&p| (depth(p), std::cmp::Reverse(p))).unwrap_or(0);
    Ok(FractionalHellyProfile {
        k,
        alpha: frac(hits, total),
        beta_observed: frac(depth(deepest_point) as u64, family.len() as u64),
        deepest_point,
        intersecting_tuples: hits,
        total_tuples: total,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransversalResult {
    pub tau: usize,
    /// A smallest piercing set: the first one met by the search.
    pub pierce_points: PointSet,
    pub tau_star: Rational,
    /// Optimal fractional weights, one per ground point.
    pub weights: Vec<Rational>,
}

/// Transversal number and fractional transversal number of a family.
///
/// Splitting the family into `t` intersecting parts is the same as piercing
/// it with `t` points, since every intersecting part has a common point. `τ`
/// is found by branch and bound over the points of the first unpierced
/// member, starting from `⌈τ*⌉`; `τ*` is the exact optimum of
/// `min Σ f(x)` subject to `Σ_{x∈F} f(x) ≥ 1` for every member `F`.
pub fn transversal(family: &[PointSet]) -> Result<TransversalResult> {
    let Some(first) = family.first() else {
        return Ok(TransversalResult {
            tau: 0,
            pierce_points: PointSet::raw(0, 0),
            tau_star: Rational::zero(),
            weights: Vec::new(),
        });
    };
    let n = first.ground_size();
    for (i, s) in family.iter().enumerate() {
        first.same_ground(s)?;
        if s.is_empty() {
            return Err(Error::EmptyMember(i));
        }
    }
    let rows: Vec<Vec<Rational>> = family
        .iter()
        .map(|s| (0..n).map(|p| if s.contains(p) { Rational::one() } else { Rational::zero() }).collect())
        .collect();
    let lp = LinearProgram::new(vec![Rational::one(); n], rows, vec![Rational::one(); family.len()])?;
    let sol = match solve_min(&lp)? {
        LpOutcome::Optimal(sol) => sol,
        other => return Err(Error::Inconsistent(format!("covering program is {}", other.status()))),
    };
    let lower = ceil_usize(&sol.value);
    let masks: Vec<u64> = family.iter().map(|s| s.bits()).collect();
    let (tau, pierce) = (lower.max(1)..=n)
        .find_map(|t| pierce_with(&masks, t, 0).map(|p| (t, p)))
        .ok_or_else(|| Error::Inconsistent("no piercing set found".into()))?;
    Ok(TransversalResult {
        tau,
        pierce_points: PointSet::raw(n, pierce),
        tau_star: sol.value,
        weights: sol.primal,
    })
}

fn pierce_with(members: &[u64], budget: usize, chosen: u64) -> Option<u64> {
    let Some(&open) = members.iter().find(|&&m| m & chosen == 0) else {
        return Some(chosen);
    };
    if budget == 0 {
        return None;
    }
    let mut rest = open;
    while rest != 0 {
        let p = rest.trailing_zeros();
        rest &= rest - 1;
        if let Some(found) = pierce_with(members, budget - 1, chosen | 1 << p) {
            return Some(found);
        }
    }
    None
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PqResult {
    pub holds: bool,
    /// Lexicographically least `p`-tuple of member indices with no
    /// intersecting `q` members.
    pub violating: Option<Vec<usize>>,
}

/// Whether among every `p` distinct members some `q` share a point.
/// Vacuously true when the family has fewer than `p` members.
pub fn pq_property(family: &[PointSet], p: usize, q: usize) -> Result<PqResult> {
    if q < 2 || p < q {
        return Err(Error::InvalidParameter(format!("(p,q) needs p >= q >= 2, got ({p},{q})")));
    }
    let n = family.first().map_or(0, |s| s.ground_size());
    for s in family {
        family[0].same_ground(s)?;
    }
    let violating = (0..family.len()).combinations(p).find(|tuple| {
        (0..n).all(|x| tuple.iter().filter(|&&i| family[i].contains(x)).count() < q)
    });
    Ok(PqResult {
        holds: violating.is_none(),
        violating,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PqReport {
    pub p: usize,
    pub q: usize,
    pub pq_holds: bool,
    pub violating: Option<Vec<usize>>,
    pub tau: usize,
    pub tau_star: Rational,
}

/// `(p,q)` verdict together with `τ` and `τ*` for one family of convex sets.
pub fn pq_report(space: &ConvexitySpace, family: &[PointSet], p: usize, q: usize) -> Result<PqReport> {
    check_convex(space, family)?;
    let pq = pq_property(family, p, q)?;
    let tr = transversal(family)?;
    Ok(PqReport {
        p,
        q,
        pq_holds: pq.holds,
        violating: pq.violating,
        tau: tr.tau,
        tau_star: tr.tau_star,
    })
}

fn check_convex(space: &ConvexitySpace, family: &[PointSet]) -> Result<()> {
    for (i, s) in family.iter().enumerate() {
        if s.ground_size() != space.ground_size() {
            return Err(Error::GroundMismatch {
                expected: space.ground_size(),
                found: s.ground_size(),
            });
        }
        if !space.is_convex(s) {
            return Err(Error::InvalidParameter(format!("family member {i} = {s} is not convex")));
        }
    }
    Ok(())
}

fn frac(a: u64, b: u64) -> Rational {
    if b == 0 {
        return Rational::zero();
    }
    int(a as i64) / int(b as i64)
}

fn ceil_usize(r: &Rational) -> usize {
    r.ceil().to_integer().to_usize().unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{interval_space, powerset_space};
    use crate::lp::rat;

    fn sets(n: usize, members: &[&[usize]]) -> Vec<PointSet> {
        members
            .iter()
            .map(|m| PointSet::from_elements(n, m.iter().copied()).unwrap())
            .collect()
    }

    #[test]
    fn interval_profile() {
        let s = interval_space(7).unwrap();
        let fam = sets(7, &[&[0, 1, 2], &[1, 2, 3], &[2, 3, 4], &[5, 6]]);
        let prof = fractional_helly_profile(&s, &fam, 2).unwrap();
        assert_eq!(prof.alpha, rat(1, 2));
        assert_eq!(prof.beta_observed, rat(3, 4));
        assert_eq!(prof.deepest_point, 2);
    }

    #[test]
    fn profile_edge_cases() {
        let s = powerset_space(3).unwrap();
        let common = sets(3, &[&[0], &[0, 1], &[0, 2]]);
        let prof = fractional_helly_profile(&s, &common, 2).unwrap();
        assert_eq!((prof.alpha, prof.beta_observed), (rat(1, 1), rat(1, 1)));
        let disjoint = sets(3, &[&[0], &[1], &[2]]);
        let prof = fractional_helly_profile(&s, &disjoint, 2).unwrap();
        assert_eq!((prof.alpha, prof.beta_observed), (rat(0, 1), rat(1, 3)));
        assert!(fractional_helly_profile(&s, &disjoint, 4).is_err());
        let i = interval_space(3).unwrap();
        assert!(fractional_helly_profile(&i, &sets(3, &[&[0, 2]]), 1).is_err());
    }

    #[test]
    fn triangle_transversal() {
        let fam = sets(3, &[&[0, 1], &[1, 2], &[0, 2]]);
        let t = transversal(&fam).unwrap();
        assert_eq!(t.tau, 2);
        assert_eq!(t.tau_star, rat(3, 2));
        assert_eq!(t.weights, vec![rat(1, 2); 3]);
        assert!(fam.iter().all(|s| !s.intersection(&t.pierce_points).is_empty()));
    }

    #[test]
    fn single_and_empty_members() {
        let t = transversal(&sets(4, &[&[1, 3]])).unwrap();
        assert_eq!((t.tau, t.tau_star), (1, rat(1, 1)));
        assert!(matches!(transversal(&sets(4, &[&[1], &[]])), Err(Error::EmptyMember(1))));
    }

    #[test]
    fn c5_star_family() {
        // Members are the maximal independent sets of C5 containing each
        // vertex; the sets {i, i+2} are indexed in canonical order.
        let mis: Vec<[usize; 2]> = vec![[0, 2], [0, 3], [1, 3], [1, 4], [2, 4]];
        let stars: Vec<PointSet> = (0..5)
            .map(|v| PointSet::from_elements(5, (0..5).filter(|&i| mis[i].contains(&v))).unwrap())
            .collect();
        let t = transversal(&stars).unwrap();
        assert_eq!(t.tau, 3);
        assert_eq!(t.tau_star, rat(5, 2));
        let pq = pq_property(&stars, 3, 2).unwrap();
        assert!(pq.holds);
    }

    #[test]
    fn pq_basics() {
        let disjoint = sets(4, &[&[0], &[1], &[2], &[3]]);
        let res = pq_property(&disjoint, 4, 2).unwrap();
        assert_eq!(res.violating, Some(vec![0, 1, 2, 3]));
        assert!(pq_property(&disjoint, 5, 2).unwrap().holds);
        assert!(pq_property(&disjoint, 1, 2).is_err());
        let s = powerset_space(4).unwrap();
        let rep = pq_report(&s, &disjoint, 4, 2).unwrap();
        assert_eq!((rep.pq_holds, rep.tau, rep.tau_star), (false, 4, rat(4, 1)));
        let common = sets(4, &[&[0, 1], &[0, 2], &[0]]);
        let rep = pq_report(&s, &common, 2, 2).unwrap();
        assert_eq!((rep.pq_holds, rep.tau, rep.tau_star), (true, 1, rat(1, 1)));
    }

    #[test]
    fn partition_definition_matches_piercing() {
        use crate::invariants::oracle::naive_partition_transversal;
        let fams = [
            sets(4, &[&[0, 1], &[1, 2], &[2, 3], &[3, 0]]),
            sets(5, &[&[0, 1], &[1, 2], &[2, 3], &[3, 4], &[4, 0]]),
            sets(4, &[&[0], &[1], &[0, 1, 2], &[3], &[2, 3]]),
        ];
        for f in &fams {
            assert_eq!(transversal(f).unwrap().tau, naive_partition_transversal(f));
        }
    }
}
