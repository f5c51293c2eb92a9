//! Finite convexity spaces: intersection-closed families over a ground set.

use std::collections::HashMap;
use std::fmt;
use std::sync::OnceLock;

use crate::error::{parse_err, Error, Result};
use crate::pointset::{full_mask, sort_canonical, PointSet, MAX_GROUND};

/// Default cap on the number of sets produced by [`closure_from_generators`].
pub const DEFAULT_CLOSURE_CAP: usize = 1 << 20;

/// Above this many sets the meet-irreducible reduction is skipped.
const IRREDUCIBLE_LIMIT: usize = 8192;

/// A finite convexity space `(X, C)` with `X = {0, .., ground_size - 1}`.
///
/// Invariants: `C` contains `∅` and `X`, is closed under pairwise
/// intersection, and is stored in canonical order. The union axiom for
/// nested chains holds vacuously on a finite ground set.
#[derive(Clone)]
pub struct ConvexitySpace {
    ground_size: usize,
    sets: Vec<PointSet>,
    index: HashMap<u64, usize>,
    generators: OnceLock<Vec<u64>>,
}

/// Outcome of checking the convexity axioms on a raw family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomReport {
    pub has_empty: bool,
    pub has_full: bool,
    /// First pair (in canonical order) whose intersection is missing.
    pub intersection_failure: Option<(PointSet, PointSet, PointSet)>,
    /// Always true for finite ground sets.
    pub chain_union_vacuous: bool,
}

impl AxiomReport {
    pub fn passes(&self) -> bool {
        self.has_empty && self.has_full && self.intersection_failure.is_none()
    }

    pub fn summary(&self) -> String {
        let mut parts = Vec::new();
        if !self.has_empty {
            parts.push("C1: empty set missing".to_string());
        }
        if !self.has_full {
            parts.push("C1: ground set missing".to_string());
        }
        if let Some((a, b, c)) = &self.intersection_failure {
            parts.push(format!("C2: {a} ∩ {b} = {c} is not in the family"));
        }
        if parts.is_empty() {
            "C1 ok; C2 ok; C3 vacuous (finite ground set)".to_string()
        } else {
            parts.join("; ")
        }
    }
}

/// Checks axioms C1 and C2 on an arbitrary family over `ground_size` points.
pub fn verify_axioms(ground_size: usize, family: &[PointSet]) -> Result<AxiomReport> {
    let full = full_mask(ground_size);
    let mut masks = Vec::with_capacity(family.len());
    for s in family {
        if s.ground_size() != ground_size {
            return Err(Error::GroundMismatch {
                expected: ground_size,
                found: s.ground_size(),
            });
        }
        masks.push(s.bits());
    }
    sort_canonical(&mut masks);
    masks.dedup();
    let present: std::collections::HashSet<u64> = masks.iter().copied().collect();
    let mut failure = None;
    'outer: for (i, &a) in masks.iter().enumerate() {
        for &b in &masks[i + 1..] {
            if !present.contains(&(a & b)) {
                failure = Some((
                    PointSet::raw(ground_size, a),
                    PointSet::raw(ground_size, b),
                    PointSet::raw(ground_size, a & b),
                ));
                break 'outer;
            }
        }
    }
    Ok(AxiomReport {
        has_empty: present.contains(&0),
        has_full: present.contains(&full),
        intersection_failure: failure,
        chain_union_vacuous: true,
    })
}

impl ConvexitySpace {
    /// Builds a space from explicit convex sets, rejecting families that fail
    /// the axioms. Duplicates are merged.
    pub fn new(ground_size: usize, sets: Vec<PointSet>) -> Result<Self> {
        check_ground(ground_size)?;
        let report = verify_axioms(ground_size, &sets)?;
        if !report.passes() {
            return Err(Error::AxiomViolation(report.summary()));
        }
        Ok(Self::from_masks_unchecked(
            ground_size,
            sets.iter().map(|s| s.bits()).collect(),
        ))
    }

    /// Callers guarantee the masks form a closure system over the ground set.
    pub(crate) fn from_masks_unchecked(ground_size: usize, mut masks: Vec<u64>) -> Self {
        sort_canonical(&mut masks);
        masks.dedup();
        let sets: Vec<PointSet> = masks.iter().map(|&m| PointSet::raw(ground_size, m)).collect();
        let index = masks.iter().enumerate().map(|(i, &m)| (m, i)).collect();
        ConvexitySpace {
            ground_size,
            sets,
            index,
            generators: OnceLock::new(),
        }
    }

    pub fn ground_size(&self) -> usize {
        self.ground_size
    }

    pub fn sets(&self) -> &[PointSet] {
        &self.sets
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn full_set(&self) -> PointSet {
        PointSet::raw(self.ground_size, full_mask(self.ground_size))
    }

    pub fn empty_set(&self) -> PointSet {
        PointSet::raw(self.ground_size, 0)
    }

    pub fn position(&self, set: &PointSet) -> Option<usize> {
        if set.ground_size() != self.ground_size {
            return None;
        }
        self.index.get(&set.bits()).copied()
    }

    #[inline]
    pub fn is_convex_mask(&self, mask: u64) -> bool {
        self.index.contains_key(&mask)
    }

    pub fn is_convex(&self, set: &PointSet) -> bool {
        self.position(set).is_some()
    }

    /// Convex sets `G ≠ X` such that every convex set is the intersection of
    /// the members of `G` containing it. These are the meet-irreducible sets
    /// when the space is small enough to compute them, otherwise all sets.
    pub fn meet_generators(&self) -> &[u64] {
        self.generators.get_or_init(|| {
            let full = full_mask(self.ground_size);
            let masks: Vec<u64> = self.sets.iter().map(|s| s.bits()).filter(|&m| m != full).collect();
            if masks.len() > IRREDUCIBLE_LIMIT {
                return masks;
            }
            crate::par::map_slice(&masks, |&k| {
                let above = masks
                    .iter()
                    .filter(|&&o| o != k && k & !o == 0)
                    .fold(full, |acc, &o| acc & o);
                (above != k).then_some(k)
            })
            .into_iter()
            .flatten()
            .collect()
        })
    }

    /// Hull of a raw mask. The mask must lie inside the ground set.
    #[inline]
    pub fn hull_mask(&self, mask: u64) -> u64 {
        let mut acc = full_mask(self.ground_size);
        for &g in self.meet_generators() {
            if mask & !g == 0 {
                acc &= g;
            }
        }
        acc
    }

    /// The intersection of all convex sets containing `y`.
    pub fn hull(&self, y: &PointSet) -> Result<PointSet> {
        if y.ground_size() != self.ground_size {
            return Err(Error::GroundMismatch {
                expected: self.ground_size,
                found: y.ground_size(),
            });
        }
        Ok(PointSet::raw(self.ground_size, self.hull_mask(y.bits())))
    }

    /// Hull computed directly from the definition, scanning every convex set.
    pub fn hull_by_definition(&self, mask: u64) -> u64 {
        self.sets
            .iter()
            .filter(|k| mask & !k.bits() == 0)
            .fold(full_mask(self.ground_size), |acc, k| acc & k.bits())
    }

    pub fn verify_axioms(&self) -> AxiomReport {
        verify_axioms(self.ground_size, &self.sets).expect("sets share the ground set")
    }

    /// Convex sets whose complement is also convex, in canonical order.
    pub fn halfspaces(&self) -> Vec<PointSet> {
        self.sets
            .iter()
            .filter(|k| self.is_convex_mask(k.complement().bits()))
            .copied()
            .collect()
    }

    /// Checks separability. On failure returns the first convex set `K` (in
    /// canonical order) and least point `p ∉ K` not cut off by a halfspace.
    pub fn separability(&self) -> Separability {
        let halfspaces: Vec<u64> = self.halfspaces().iter().map(|h| h.bits()).collect();
        for k in &self.sets {
            let mut outside = k.complement();
            for &h in &halfspaces {
                if k.bits() & !h == 0 {
                    outside = PointSet::raw(self.ground_size, outside.bits() & h);
                }
            }
            // points of outside here lie in every halfspace containing K
            if let Some(p) = outside.first() {
                return Separability::Fails { set: *k, point: p };
            }
        }
        Separability::Separable
    }

    pub fn is_separable(&self) -> bool {
        matches!(self.separability(), Separability::Separable)
    }

    /// Writes the space in the text format (`space <n>` then one `set` line per
    /// convex set in canonical order).
    pub fn to_text(&self) -> String {
        let mut out = format!("space {}\n", self.ground_size);
        for s in &self.sets {
            out.push_str("set");
            for e in s.iter() {
                out.push_str(&format!(" {e}"));
            }
            out.push('\n');
        }
        out
    }

    /// Parses the text format. `gen` lines trigger closure on load; `set`
    /// lines must already satisfy the axioms.
    pub fn from_text(text: &str) -> Result<Self> {
        let mut ground: Option<usize> = None;
        let mut explicit = Vec::new();
        let mut gens = Vec::new();
        for (no, raw) in text.lines().enumerate() {
            let line_no = no + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut words = line.split_whitespace();
            let head = words.next().unwrap_or_default();
            match (head, ground) {
                ("space", None) => {
                    let n = parse_usize(words.next(), line_no)?;
                    if words.next().is_some() {
                        return Err(parse_err(line_no, "trailing tokens after ground size"));
                    }
                    check_ground(n)?;
                    ground = Some(n);
                }
                ("space", Some(_)) => return Err(parse_err(line_no, "duplicate header")),
                (_, None) => return Err(parse_err(line_no, "expected `space <n>` header")),
                ("set" | "gen", Some(n)) => {
                    let elems = words
                        .map(|w| {
                            w.parse::<usize>()
                                .map_err(|_| parse_err(line_no, format!("bad element `{w}`")))
                        })
                        .collect::<Result<Vec<_>>>()?;
                    let set = PointSet::from_elements(n, elems)
                        .map_err(|e| parse_err(line_no, e.to_string()))?;
                    if head == "set" {
                        explicit.push(set);
                    } else {
                        gens.push(set);
                    }
                }
                (other, Some(_)) => return Err(parse_err(line_no, format!("unknown directive `{other}`"))),
            }
        }
        let n = ground.ok_or_else(|| parse_err(0, "missing `space <n>` header"))?;
        match (explicit.is_empty(), gens.is_empty()) {
            (_, true) => ConvexitySpace::new(n, explicit),
            (true, false) => closure_from_generators(n, &gens, DEFAULT_CLOSURE_CAP),
            (false, false) => Err(parse_err(0, "cannot mix `set` and `gen` lines")),
        }
    }
}

impl fmt::Debug for ConvexitySpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ConvexitySpace")
            .field("ground_size", &self.ground_size)
            .field("sets", &self.sets)
            .finish()
    }
}

impl PartialEq for ConvexitySpace {
    fn eq(&self, other: &Self) -> bool {
        self.ground_size == other.ground_size && self.sets == other.sets
    }
}

impl Eq for ConvexitySpace {}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Separability {
    Separable,
    Fails { set: PointSet, point: usize },
}

/// Smallest intersection-closed family containing `generators`, `∅` and `X`.
pub fn closure_from_generators(ground_size: usize, generators: &[PointSet], cap: usize) -> Result<ConvexitySpace> {
    check_ground(ground_size)?;
    let full = full_mask(ground_size);
    let mut members: Vec<u64> = vec![full, 0];
    let mut seen: std::collections::HashSet<u64> = members.iter().copied().collect();
    let mut queue = Vec::new();
    for g in generators {
        if g.ground_size() != ground_size {
            return Err(Error::GroundMismatch {
                expected: ground_size,
                found: g.ground_size(),
            });
        }
        queue.push(g.bits());
    }
    while let Some(s) = queue.pop() {
        if !seen.insert(s) {
            continue;
        }
        for &t in &members {
            let meet = s & t;
            if !seen.contains(&meet) {
                queue.push(meet);
            }
        }
        members.push(s);
        if members.len() > cap {
            return Err(Error::ClosureCap {
                cap,
                partial: members.len(),
            });
        }
    }
    Ok(ConvexitySpace::from_masks_unchecked(ground_size, members))
}

/// The convexity space on the index set of an antichain `family`, whose convex
/// sets are the subfamilies `F_Y = {S : Y ⊆ S}`.
pub fn dual_space(family: &[PointSet]) -> Result<ConvexitySpace> {
    if family.is_empty() {
        return Err(Error::InvalidParameter("dual space of an empty family".into()));
    }
    if family.len() > MAX_GROUND {
        return Err(Error::GroundTooLarge {
            size: family.len(),
            cap: MAX_GROUND,
        });
    }
    let ground = family[0].ground_size();
    for s in family {
        s.same_ground(&family[0])?;
    }
    for (i, a) in family.iter().enumerate() {
        for (j, b) in family.iter().enumerate() {
            if i < j && a == b {
                return Err(Error::DuplicateMember(i, j));
            }
            if i != j && a.is_subset(b) && a != b {
                return Err(Error::NotAntichain { smaller: i, larger: j });
            }
        }
    }
    let n = family.len();
    let stars: Vec<PointSet> = (0..ground)
        .map(|x| {
            let mask = family
                .iter()
                .enumerate()
                .filter(|(_, s)| s.contains(x))
                .fold(0u64, |acc, (i, _)| acc | 1 << i);
            PointSet::raw(n, mask)
        })
        .collect();
    closure_from_generators(n, &stars, DEFAULT_CLOSURE_CAP)
}

/// Points of `family` as index masks, i.e. `{i : x ∈ family[i]}` for each `x`.
pub(crate) fn point_stars(family: &[PointSet], ground: usize) -> Vec<u64> {
    (0..ground)
        .map(|x| {
            family
                .iter()
                .enumerate()
                .filter(|(_, s)| s.contains(x))
                .fold(0u64, |acc, (i, _)| acc | 1 << i)
        })
        .collect()
}

fn check_ground(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidParameter("ground set must be nonempty".into()));
    }
    if n > MAX_GROUND {
        return Err(Error::GroundTooLarge { size: n, cap: MAX_GROUND });
    }
    Ok(())
}

fn parse_usize(word: Option<&str>, line: usize) -> Result<usize> {
    word.ok_or_else(|| parse_err(line, "missing number"))?
        .parse()
        .map_err(|_| parse_err(line, "expected a nonnegative integer"))
}
