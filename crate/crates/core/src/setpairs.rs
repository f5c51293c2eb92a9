//! Families of set pairs `(A_i, B_i)` partitioning `[N]` such that every
//! choice of one side from each of `k` distinct pairs has a common element.
//!
//! Ground elements are 0-based internally and printed 1-based.

use std::fmt;

use fixedbitset::FixedBitSet;
use itertools::Itertools;

use crate::budget::Budget;
use crate::error::{parse_err, Error, Result};
use crate::hypergraph::{associated_space, sdr_edge, Hypergraph};
use crate::invariants::radon_free_set_of_size;
use crate::par;
use crate::pointset::PointSet;

const MAX_BASE_K: usize = 6;
const MAX_BUILD_M: usize = 8;
const MAX_BUILD_K: usize = 4;

/// An enumeration `T_1, …, T_{2^k}` of the subsets of `[k]`, stored as bit
/// masks (bit `j` stands for element `j + 1`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubsetOrder {
    k: usize,
    sequence: Vec<u32>,
}

impl SubsetOrder {
    pub fn new(k: usize, sequence: Vec<u32>) -> Result<Self> {
        if !(1..=MAX_BASE_K).contains(&k) {
            return Err(Error::InvalidParameter(format!("subset orders need 1 <= k <= {MAX_BASE_K}, got {k}")));
        }
        let mut seen = vec![false; 1 << k];
        for &t in &sequence {
            let slot = seen
                .get_mut(t as usize)
                .ok_or_else(|| Error::InvalidParameter(format!("{t:#b} is not a subset of [{k}]")))?;
            if *slot {
                return Err(Error::InvalidParameter(format!("subset {t:#b} listed twice")));
            }
            *slot = true;
        }
        if sequence.len() != 1 << k {
            return Err(Error::InvalidParameter(format!(
                "an order of subsets of [{k}] needs {} entries, got {}",
                1 << k,
                sequence.len()
            )));
        }
        Ok(SubsetOrder { k, sequence })
    }

    /// Order from 1-based subsets of `[k]`.
    pub fn from_sets(k: usize, sets: &[Vec<usize>]) -> Result<Self> {
        let mut seq = Vec::with_capacity(sets.len());
        for s in sets {
            let mut mask = 0u32;
            for &j in s {
                if j == 0 || j > k {
                    return Err(Error::ElementOutOfRange { element: j, ground_size: k });
                }
                mask |= 1 << (j - 1);
            }
            seq.push(mask);
        }
        SubsetOrder::new(k, seq)
    }

    /// `T_i` is the set of bits of `i − 1`.
    pub fn binary_counter(k: usize) -> Result<Self> {
        SubsetOrder::new(k, (0..1u32 << k.min(31)).collect())
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn sequence(&self) -> &[u32] {
        &self.sequence
    }

    /// One `T` line per subset, elements 1-based.
    pub fn to_text(&self) -> String {
        self.sequence
            .iter()
            .map(|&t| {
                let mut line = String::from("T");
                for j in 0..self.k {
                    if t >> j & 1 == 1 {
                        line.push_str(&format!(" {}", j + 1));
                    }
                }
                line + "\n"
            })
            .collect()
    }

    /// Parses `T` lines; `k` is read off the number of lines.
    pub fn from_text(text: &str) -> Result<Self> {
        let mut sets = Vec::new();
        for (no, line) in text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())) {
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut words = line.split_whitespace();
            if words.next() != Some("T") {
                return Err(parse_err(no, "expected a `T` line"));
            }
            sets.push(words.map(|w| parse_index(w, no)).collect::<Result<Vec<usize>>>()?);
        }
        let k = sets.len().trailing_zeros() as usize;
        if sets.len() != 1 << k || k == 0 {
            return Err(parse_err(1, format!("{} subsets is not 2^k for k >= 1", sets.len())));
        }
        SubsetOrder::from_sets(k, &sets)
    }
}

/// `m` pairs `(A_i, B_i)` over the ground set `[N]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetPairFamily {
    ground_size: usize,
    pairs: Vec<(FixedBitSet, FixedBitSet)>,
}

impl SetPairFamily {
    /// Pairs given as 0-based element lists.
    pub fn new(ground_size: usize, pairs: Vec<(Vec<usize>, Vec<usize>)>) -> Result<Self> {
        let mut out = Vec::with_capacity(pairs.len());
        for (a, b) in pairs {
            out.push((to_bits(ground_size, &a)?, to_bits(ground_size, &b)?));
        }
        Ok(SetPairFamily {
            ground_size,
            pairs: out,
        })
    }

    pub fn m(&self) -> usize {
        self.pairs.len()
    }

    pub fn ground_size(&self) -> usize {
        self.ground_size
    }

    /// 0-based elements of `A_i`.
    pub fn a(&self, i: usize) -> Vec<usize> {
        self.pairs[i].0.ones().collect()
    }

    /// 0-based elements of `B_i`.
    pub fn b(&self, i: usize) -> Vec<usize> {
        self.pairs[i].1.ones().collect()
    }

    /// Text form: `setpairs <m> <N>` then `A ...` and `B ...` lines per pair,
    /// 1-based.
    pub fn to_text(&self) -> String {
        let mut out = format!("setpairs {} {}\n", self.m(), self.ground_size);
        for i in 0..self.m() {
            out.push_str(&side_line("A", &self.a(i)));
            out.push_str(&side_line("B", &self.b(i)));
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (no, header) = lines.next().ok_or_else(|| parse_err(1, "empty set-pair file"))?;
        let words: Vec<&str> = header.split_whitespace().collect();
        if words.len() != 3 || words[0] != "setpairs" {
            return Err(parse_err(no, "expected `setpairs <m> <N>`"));
        }
        let m = parse_count(words[1], no)?;
        let n = parse_count(words[2], no)?;
        let mut pairs = Vec::with_capacity(m);
        for i in 0..m {
            let mut side = |tag: &str| -> Result<Vec<usize>> {
                let (no, line) = lines
                    .next()
                    .ok_or_else(|| parse_err(no, format!("missing `{tag}` line for pair {}", i + 1)))?;
                let mut words = line.split_whitespace();
                if words.next() != Some(tag) {
                    return Err(parse_err(no, format!("expected a `{tag}` line")));
                }
                words
                    .map(|w| {
                        let e = parse_index(w, no)?;
                        if e > n {
                            return Err(parse_err(no, format!("element {e} outside [{n}]")));
                        }
                        Ok(e - 1)
                    })
                    .collect()
            };
            let a = side("A")?;
            let b = side("B")?;
            pairs.push((a, b));
        }
        if let Some((no, _)) = lines.next() {
            return Err(parse_err(no, "more pairs than declared"));
        }
        SetPairFamily::new(n, pairs)
    }
}

impl fmt::Display for SetPairFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |v: Vec<usize>| v.iter().map(|e| (e + 1).to_string()).join(",");
        for i in 0..self.m() {
            writeln!(f, "A{0}={{{1}}}  B{0}={{{2}}}", i + 1, show(self.a(i)), show(self.b(i)))?;
        }
        Ok(())
    }
}

/// The `m = k` family on `[2^k]`: `i ∈ A_j` exactly when `j ∈ T_i`, and
/// `B_j` is the complement.
pub fn build_base(k: usize, order: &SubsetOrder) -> Result<SetPairFamily> {
    if !(2..=MAX_BASE_K).contains(&k) {
        return Err(Error::InvalidParameter(format!("base families need 2 <= k <= {MAX_BASE_K}, got {k}")));
    }
    if order.k() != k {
        return Err(Error::InvalidParameter(format!("order is for k={}, not k={k}", order.k())));
    }
    let n = 1usize << k;
    let pairs = (0..k)
        .map(|j| {
            let mut a = FixedBitSet::with_capacity(n);
            for (i, &t) in order.sequence().iter().enumerate() {
                a.set(i, t >> j & 1 == 1);
            }
            let mut b = a.clone();
            b.toggle_range(..);
            (a, b)
        })
        .collect();
    Ok(SetPairFamily { ground_size: n, pairs })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Extension {
    pub family: SetPairFamily,
    /// Number of `k`-tuples that needed fresh elements.
    pub repair_rounds: usize,
}

/// Grows the family to `m_target` pairs satisfying the `k`-tuple condition.
///
/// New pairs start as `A = [N]`, `B = ∅`. Tuples are visited in
/// lexicographic order; each one failing the condition receives `2^k` fresh
/// elements split among its pairs by `order` as in [`build_base`], while
/// every pair outside the tuple gets the fresh elements on its `A` side.
/// The result is verified before it is returned.
pub fn extend(family: &SetPairFamily, k: usize, m_target: usize, order: &SubsetOrder) -> Result<Extension> {
    if m_target < family.m() {
        return Err(Error::InvalidParameter(format!(
            "cannot shrink a family of {} pairs to {m_target}",
            family.m()
        )));
    }
    if order.k() != k {
        return Err(Error::InvalidParameter(format!("order is for k={}, not k={k}", order.k())));
    }
    let mut fam = family.clone();
    let n = fam.ground_size;
    while fam.pairs.len() < m_target {
        let mut a = FixedBitSet::with_capacity(n);
        a.insert_range(..);
        fam.pairs.push((a, FixedBitSet::with_capacity(n)));
    }
    let mut rounds = 0;
    let tuples: Vec<Vec<usize>> = (0..fam.m()).combinations(k).collect();
    for tuple in tuples {
        if first_empty_pattern(&fam, &tuple).is_none() {
            continue;
        }
        rounds += 1;
        let old = fam.ground_size;
        let fresh = 1usize << k;
        fam.ground_size += fresh;
        for (i, (a, b)) in fam.pairs.iter_mut().enumerate() {
            a.grow(fam.ground_size);
            b.grow(fam.ground_size);
            match tuple.iter().position(|&t| t == i) {
                Some(j) => {
                    for (x, &t) in order.sequence().iter().enumerate() {
                        if t >> j & 1 == 1 {
                            a.insert(old + x);
                        } else {
                            b.insert(old + x);
                        }
                    }
                }
                None => a.insert_range(old..old + fresh),
            }
        }
    }
    let report = verify(&fam, k);
    if !report.passes() {
        return Err(Error::Inconsistent(format!("extension failed verification: {}", report.summary())));
    }
    Ok(Extension {
        family: fam,
        repair_rounds: rounds,
    })
}

/// Appends dummy elements to every `A` side until the ground set is `[n_target]`.
pub fn pad(family: &SetPairFamily, n_target: usize) -> Result<SetPairFamily> {
    if n_target < family.ground_size {
        return Err(Error::InvalidParameter(format!(
            "cannot pad [{}] down to [{n_target}]",
            family.ground_size
        )));
    }
    let mut fam = family.clone();
    let old = fam.ground_size;
    fam.ground_size = n_target;
    for (a, b) in &mut fam.pairs {
        a.grow(n_target);
        b.grow(n_target);
        a.insert_range(old..n_target);
    }
    Ok(fam)
}

/// A verified family of `m` pairs for `k`-tuples, with `N ≤ C(m,k)·2^k`:
/// the base family for the binary-counter order, extended to `m` pairs.
pub fn build(m: usize, k: usize) -> Result<SetPairFamily> {
    if !(2..=MAX_BUILD_K).contains(&k) || m < k || m > MAX_BUILD_M {
        return Err(Error::InvalidParameter(format!(
            "build needs 2 <= k <= {MAX_BUILD_K} and k <= m <= {MAX_BUILD_M}, got m={m}, k={k}"
        )));
    }
    let order = SubsetOrder::binary_counter(k)?;
    let base = build_base(k, &order)?;
    Ok(extend(&base, k, m, &order)?.family)
}

/// `C(m,k)·2^k`.
pub fn ground_bound(m: usize, k: usize) -> usize {
    if k > m {
        return 0;
    }
    let c = (0..k).fold(1usize, |acc, i| acc * (m - i) / (i + 1));
    c << k
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyReport {
    pub k: usize,
    /// First pair (0-based) whose sides are empty, overlap, or miss an element.
    pub partition_failure: Option<usize>,
    /// First tuple (0-based indices) and side choice (`true` for `A`) with an
    /// empty intersection, tuples and choices in lexicographic order with
    /// `A` before `B`.
    pub transversal_failure: Option<(Vec<usize>, Vec<bool>)>,
    pub patterns_checked: u64,
}

impl VerifyReport {
    pub fn passes(&self) -> bool {
        self.partition_failure.is_none() && self.transversal_failure.is_none()
    }

    pub fn summary(&self) -> String {
        if let Some(i) = self.partition_failure {
            return format!("pair {} is not a partition into two nonempty sides", i + 1);
        }
        match &self.transversal_failure {
            Some((tuple, choice)) => {
                let parts: Vec<String> = tuple
                    .iter()
                    .zip(choice)
                    .map(|(&i, &a)| format!("{}{}", if a { "A" } else { "B" }, i + 1))
                    .collect();
                format!("empty intersection {}", parts.join(" ∩ "))
            }
            None => "ok".into(),
        }
    }
}

/// Checks that every pair partitions `[N]` into nonempty sides and that
/// every side choice over every `k` distinct pairs intersects. With fewer
/// than `k` pairs the second condition holds vacuously.
pub fn verify(family: &SetPairFamily, k: usize) -> VerifyReport {
    let n = family.ground_size;
    let partition_failure = family.pairs.iter().position(|(a, b)| {
        a.count_ones(..) == 0
            || b.count_ones(..) == 0
            || !a.is_disjoint(b)
            || a.union_count(b) != n
    });
    let tuples: Vec<Vec<usize>> = if k == 0 { Vec::new() } else { (0..family.m()).combinations(k).collect() };
    let transversal_failure = par::find_first(tuples.len(), |t| {
        first_empty_pattern(family, &tuples[t]).map(|choice| (tuples[t].clone(), choice))
    });
    let patterns_checked = match &transversal_failure {
        None => (tuples.len() as u64) << k,
        Some(_) => 0,
    };
    VerifyReport {
        k,
        partition_failure,
        transversal_failure,
        patterns_checked,
    }
}

/// Largest `k ≤ m` for which every `k`-tuple condition holds (0 if even
/// single sides can be empty). The condition for `k` implies it for `k − 1`.
pub fn max_transversal_k(family: &SetPairFamily) -> usize {
    (1..=family.m())
        .take_while(|&k| verify(family, k).transversal_failure.is_none())
        .last()
        .unwrap_or(0)
}

fn first_empty_pattern(family: &SetPairFamily, tuple: &[usize]) -> Option<Vec<bool>> {
    let n = family.ground_size;
    std::iter::repeat_n([true, false], tuple.len())
        .multi_cartesian_product()
        .find(|choice| {
            let mut acc = FixedBitSet::with_capacity(n);
            acc.insert_range(..);
            for (&i, &a) in tuple.iter().zip(choice) {
                let (sa, sb) = &family.pairs[i];
                acc.intersect_with(if a { sa } else { sb });
            }
            acc.count_ones(..) == 0
        })
}

/// Outcome of replaying the Radon bound argument on a hypergraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CertificateOutcome {
    /// No partition-free set of `required` maximal independent sets exists,
    /// so the bound holds and there is nothing to certify.
    NoCertificate { required: usize },
    /// The budget ran out before a partition-free set was found or ruled out.
    Undecided { required: usize },
    Certificate(RadonFreeCertificate),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RadonFreeCertificate {
    /// Indices (into the canonical maximal independent sets) of the
    /// partition-free points `σ_1, …, σ_N`.
    pub free_points: Vec<usize>,
    pub pairs: SetPairFamily,
    /// Edge indices `e_1, …, e_m`, with `e_i ⊆ Y_i ∪ Z_i`.
    pub edges: Vec<usize>,
}

/// Looks for `m` edges violating `T_k(m)` from a partition-free set of
/// `N = C(m,k)·2^k` points of the associated space.
///
/// With set pairs on `[N]`, put `Y_i = ∩_{j∈A_i} σ_j` and
/// `Z_i = ∩_{j∈B_i} σ_j`. The hulls of the two sides are the stars of `Y_i`
/// and `Z_i`, which are disjoint, so `Y_i ∪ Z_i` contains an edge `e_i`. The
/// edges found this way are re-checked to have no SDR edge.
pub fn radon_free_certificate(h: &Hypergraph, m: usize, budget: &Budget) -> Result<CertificateOutcome> {
    let k = h.uniformity();
    if m < k {
        return Err(Error::InvalidParameter(format!("certificates need m >= k, got m={m}, k={k}")));
    }
    if k > MAX_BUILD_K || m > MAX_BUILD_M {
        return Err(Error::InvalidParameter(format!(
            "certificates need k <= {MAX_BUILD_K} and m <= {MAX_BUILD_M}"
        )));
    }
    let required = ground_bound(m, k);
    let assoc = associated_space(h)?;
    if required > assoc.mis.len() {
        return Ok(CertificateOutcome::NoCertificate { required });
    }
    let free = match radon_free_set_of_size(&assoc.space, required, budget) {
        Ok(Some(set)) => set.to_vec(),
        Ok(None) => return Ok(CertificateOutcome::NoCertificate { required }),
        Err(Error::CapExceeded(_)) => return Ok(CertificateOutcome::Undecided { required }),
        Err(e) => return Err(e),
    };
    let pairs = pad(&build(m, k)?, required)?;
    let n = h.vertex_count();
    let meet = |side: Vec<usize>| {
        side.iter()
            .fold(PointSet::full(n).expect("vertex count checked"), |acc, &j| acc.intersection(&assoc.mis[free[j]]))
    };
    let mut edges = Vec::with_capacity(m);
    for i in 0..m {
        let span = meet(pairs.a(i)).union(&meet(pairs.b(i)));
        let e = h
            .edge_masks()
            .iter()
            .position(|&e| e & !span.bits() == 0)
            .ok_or_else(|| Error::Inconsistent(format!("Y_{0} ∪ Z_{0} is independent", i + 1)))?;
        edges.push(e);
    }
    if sdr_edge(h, &edges).is_some() {
        return Err(Error::Inconsistent("certificate edges have an SDR edge".into()));
    }
    Ok(CertificateOutcome::Certificate(RadonFreeCertificate {
        free_points: free,
        pairs,
        edges,
    }))
}

/// A graph whose associated space has `points` maximal independent sets
/// `σ_1, …, σ_points` forming a partition-free set.
///
/// For each split `{P, Q}` of `[points]` into two nonempty parts there are
/// vertices `u` and `v`; `σ_j` takes `u` when `j ∈ P` and `v` otherwise, and
/// two vertices are adjacent when no `σ_j` holds both. Each split then has
/// an edge `uv` between the common parts of its two sides.
pub fn radon_free_trace_graph(points: usize) -> Result<Hypergraph> {
    if !(2..=5).contains(&points) {
        return Err(Error::InvalidParameter(format!("trace graphs support 2..=5 points, got {points}")));
    }
    // Splits with the last point on the Q side, so each unordered split once.
    let splits: Vec<u32> = (1..(1u32 << (points - 1))).collect();
    let n = 2 * splits.len();
    let holds = |vertex: usize, j: usize| {
        let p = splits[vertex / 2] >> j & 1 == 1;
        if vertex.is_multiple_of(2) {
            p
        } else {
            !p
        }
    };
    let edges: Vec<Vec<usize>> = (0..n)
        .tuple_combinations()
        .filter(|&(x, y)| !(0..points).any(|j| holds(x, j) && holds(y, j)))
        .map(|(x, y)| vec![x, y])
        .collect();
    Hypergraph::new(2, n, edges)
}

fn to_bits(n: usize, elems: &[usize]) -> Result<FixedBitSet> {
    let mut bits = FixedBitSet::with_capacity(n);
    for &e in elems {
        if e >= n {
            return Err(Error::ElementOutOfRange { element: e, ground_size: n });
        }
        bits.insert(e);
    }
    Ok(bits)
}

fn side_line(tag: &str, elems: &[usize]) -> String {
    let mut line = tag.to_string();
    for e in elems {
        line.push_str(&format!(" {}", e + 1));
    }
    line + "\n"
}

fn parse_index(word: &str, line: usize) -> Result<usize> {
    match word.parse::<usize>() {
        Ok(v) if v >= 1 => Ok(v),
        _ => Err(parse_err(line, format!("`{word}` is not a positive integer"))),
    }
}

fn parse_count(word: &str, line: usize) -> Result<usize> {
    word.parse().map_err(|_| parse_err(line, format!("`{word}` is not a nonnegative integer")))
}
