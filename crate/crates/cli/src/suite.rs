//! The verification suite behind `verify-theorems`.
//!
//! Every check quantifies over a fixed list of instances. Random instances
//! come from `instance_rng(seed, check, index)`, so each one can be rebuilt
//! on its own and the output depends only on the seed.

use itertools::Itertools;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;
use radon_lab::generators::{
    grid_box_space, interval_space, lattice_window_space, powerset_space, GridBoxSpec, LatticeWindowSpec,
};
use radon_lab::hypergraph::random::{random_graph, random_hypergraph};
use radon_lab::hypergraph::{
    associated_space, chromatic_number, has_property_delta_km, has_property_tkm_with_caps, induced_matching_oracle,
    min_m_tk, star, star_family, Hypergraph, TkmCaps,
};
use radon_lab::invariants::oracle::{
    naive_colorful_helly_number, naive_helly_number, naive_partition_transversal, naive_radon_number,
};
use radon_lab::invariants::{
    colorful_helly_number, helly_number, pq_property, radon_number, transversal, tverberg_number, Pool,
};
use radon_lab::lp::{format_rational, rat, solve_min, LinearProgram, LpOutcome, Rational};
use radon_lab::par;
use radon_lab::rng::instance_rng;
use radon_lab::setpairs::{build, build_base, ground_bound, verify, SubsetOrder};
use radon_lab::space::closure_from_generators;
use radon_lab::{Bound, Budget, ConvexitySpace, PointSet};

use crate::args::Format;
use crate::output::Facts;

/// Instance counts and caps for one run of the suite.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteConfig {
    pub seed: u64,
    /// Node budget for each invariant search.
    pub budget: u64,
    /// Worker threads; 1 is fully sequential.
    pub jobs: usize,
    /// Random graphs on 6 or 7 vertices for the induced-matching check.
    pub random_graphs: usize,
    /// Random hypergraphs compared against their associated spaces.
    pub hypergraph_pool: usize,
    /// Random hypergraphs for the hull and transversal identities.
    pub star_pool: usize,
    pub random_lps: usize,
    /// Random generated spaces for the property checks.
    pub random_spaces: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            seed: 1,
            budget: radon_lab::budget::DEFAULT_BUDGET,
            jobs: 1,
            random_graphs: 200,
            hypergraph_pool: 100,
            star_pool: 100,
            random_lps: 100,
            random_spaces: 40,
        }
    }
}

/// Largest `m` tried when searching for the least `m` with `T_k(m)`.
pub const MIN_M_CAP: usize = 21;
/// `T_k(m)` limits for the suite: random graphs on 7 vertices have up to 21 edges.
pub const SUITE_TKM_CAPS: TkmCaps = TkmCaps {
    max_edges: 21,
    max_m: MIN_M_CAP,
};
/// Associated spaces with at most this many points get the hull identity check.
pub const STAR_MIS_CAP: usize = 12;

/// Result of one named check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub name: &'static str,
    pub instances: usize,
    pub failures: usize,
    /// Instances skipped because a search hit the budget.
    pub capped: usize,
    pub first_failure: Option<String>,
}

impl CheckResult {
    fn from_outcomes(name: &'static str, outcomes: Vec<Outcome>) -> Self {
        let mut r = CheckResult {
            name,
            instances: outcomes.len(),
            failures: 0,
            capped: 0,
            first_failure: None,
        };
        for o in outcomes {
            match o {
                Outcome::Pass => {}
                Outcome::Capped => r.capped += 1,
                Outcome::Fail(msg) => {
                    r.failures += 1;
                    r.first_failure.get_or_insert(msg);
                }
            }
        }
        r
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Outcome {
    Pass,
    Capped,
    Fail(String),
}

fn expect(ok: bool, msg: impl FnOnce() -> String) -> Outcome {
    if ok {
        Outcome::Pass
    } else {
        Outcome::Fail(msg())
    }
}

/// Invariants of one space, for the inequality chain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainRow {
    pub id: String,
    pub helly: Bound,
    pub radon: Bound,
    pub tverberg2: Bound,
    pub colorful: Bound,
    pub tau: Option<usize>,
    pub tau_star: Option<Rational>,
}

impl ChainRow {
    fn compute(id: String, space: &ConvexitySpace, taus: Option<(usize, Rational)>, limit: u64) -> Self {
        let (tau, tau_star) = taus.map_or((None, None), |(t, s)| (Some(t), Some(s)));
        ChainRow {
            id,
            helly: helly_number(space, &Budget::new(limit)).value,
            radon: radon_number(space, true, &Budget::new(limit)).value,
            tverberg2: tverberg_number(space, 2, true, &Budget::new(limit))
                .map(|t| t.value)
                .unwrap_or(Bound::AtLeast(0)),
            colorful: colorful_helly_number(space, Pool::Generators, &Budget::new(limit)).value,
            tau,
            tau_star,
        }
    }

    fn exact(&self) -> bool {
        self.helly.is_exact() && self.radon.is_exact() && self.tverberg2.is_exact() && self.colorful.is_exact()
    }

    fn check(&self) -> Outcome {
        if !self.exact() {
            return Outcome::Capped;
        }
        let v = |b: Bound| b.value();
        let (h, r, t2, hc) = (v(self.helly), v(self.radon), v(self.tverberg2), v(self.colorful));
        let fractional = match (&self.tau, &self.tau_star) {
            (Some(t), Some(s)) => *s <= BigRational::from_integer((*t).into()),
            _ => true,
        };
        expect(h < r && h <= hc && t2 == r && fractional, || {
            format!("{}: h={h} r={r} t2={t2} h_c={hc}", self.id)
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteResult {
    pub config: SuiteConfig,
    pub checks: Vec<CheckResult>,
    pub chain_rows: Vec<ChainRow>,
}

impl SuiteResult {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckResult::passed)
    }

    pub fn check(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }
}

pub fn run_suite(config: &SuiteConfig) -> SuiteResult {
    par::with_threads(config.jobs, || run_checks(config))
}

fn run_checks(config: &SuiteConfig) -> SuiteResult {
    let mut checks = vec![setpair_table(), setpair_builds(), induced_matching(config)];

    let pool = hypergraph_pool(config);
    let records: Vec<PoolRecord> = par::map_slice(&pool, |h| PoolRecord::compute(h, config.budget));
    checks.push(colorful_vs_tkm(&pool, &records));
    checks.push(radon_bound(&pool, &records));
    checks.push(matching_radon(config.budget));

    let stars = star_pool(config);
    checks.push(hull_is_star(&stars));
    checks.push(tau_is_chi(&stars));

    let named = named_spaces();
    checks.push(named_values(&named, config.budget));
    checks.push(lp_exactness(config));

    let mut chain_rows: Vec<ChainRow> = par::map_slice(&named, |(id, s)| {
        ChainRow::compute((*id).to_string(), s, None, config.budget)
    });
    chain_rows.extend(records.iter().map(|r| r.chain.clone()));
    checks.push(CheckResult::from_outcomes(
        "inequality_chain",
        chain_rows.iter().map(ChainRow::check).collect(),
    ));

    let spaces = random_spaces(config);
    checks.push(hull_closure(&spaces));
    checks.push(oracle_agreement(&spaces, config.budget));
    checks.push(tkm_monotone(&pool));
    checks.push(tkm_implies_sunflower(&pool));
    checks.push(pq_and_transversal(config));

    SuiteResult {
        config: config.clone(),
        checks,
        chain_rows,
    }
}

pub fn render(result: &SuiteResult, format: Format) -> String {
    let mut f = Facts::new();
    let c = &result.config;
    f.push("seed", c.seed);
    f.push("budget", c.budget);
    f.push("random_graphs", c.random_graphs);
    f.push("hypergraph_pool", c.hypergraph_pool);
    f.push("star_pool", c.star_pool);
    f.push("random_lps", c.random_lps);
    f.push("random_spaces", c.random_spaces);
    for check in &result.checks {
        let p = format!("check.{}", check.name);
        f.push(format!("{p}.instances"), check.instances);
        f.push(format!("{p}.failures"), check.failures);
        f.push(format!("{p}.capped"), check.capped);
        if let Some(msg) = &check.first_failure {
            f.push(format!("{p}.first_failure"), msg);
        }
        f.push(format!("{p}.status"), if check.passed() { "pass" } else { "fail" });
    }
    let failed = result.checks.iter().filter(|c| !c.passed()).count();
    f.push("checks", result.checks.len());
    f.push("checks.failed", failed);
    f.push("status", if failed == 0 { "pass" } else { "fail" });
    f.render(format)
}

/// The order `∅, {1}, {1,2}, {1,3}, {1,2,3}, {2}, {2,3}, {3}` of subsets of `[3]`.
pub fn worked_order() -> SubsetOrder {
    SubsetOrder::from_sets(
        3,
        &[vec![], vec![1], vec![1, 2], vec![1, 3], vec![1, 2, 3], vec![2], vec![2, 3], vec![3]],
    )
    .expect("valid order")
}

/// Expected 1-based pairs for `build_base(3, worked_order())`.
pub const WORKED_TABLE: [([usize; 4], [usize; 4]); 3] = [
    ([2, 3, 4, 5], [1, 6, 7, 8]),
    ([3, 5, 6, 7], [1, 2, 4, 8]),
    ([4, 5, 7, 8], [1, 2, 3, 6]),
];

fn setpair_table() -> CheckResult {
    let outcome = match build_base(3, &worked_order()) {
        Err(e) => Outcome::Fail(e.to_string()),
        Ok(f) => {
            let one = |v: Vec<usize>| v.into_iter().map(|e| e + 1).collect::<Vec<_>>();
            let table_ok = f.m() == 3
                && f.ground_size() == 8
                && WORKED_TABLE
                    .iter()
                    .enumerate()
                    .all(|(i, (a, b))| one(f.a(i)) == a.to_vec() && one(f.b(i)) == b.to_vec());
            let report = verify(&f, 3);
            expect(table_ok && report.passes(), || format!("table mismatch or {}", report.summary()))
        }
    };
    CheckResult::from_outcomes("setpair_table", vec![outcome])
}

fn setpair_builds() -> CheckResult {
    let cases: Vec<(usize, usize)> = (2..=4).flat_map(|k| (k..=6).map(move |m| (m, k))).collect();
    let outcomes = par::map_slice(&cases, |&(m, k)| match build(m, k) {
        Err(e) => Outcome::Fail(format!("build({m},{k}): {e}")),
        Ok(f) => {
            let report = verify(&f, k);
            expect(report.passes() && f.ground_size() <= ground_bound(m, k), || {
                format!("build({m},{k}) N={}: {}", f.ground_size(), report.summary())
            })
        }
    });
    CheckResult::from_outcomes("setpair_builds", outcomes)
}

/// Every graph on `n` labeled vertices with at least one edge.
fn all_graphs(n: usize) -> Vec<Hypergraph> {
    let pairs: Vec<Vec<usize>> = (0..n).combinations(2).collect();
    (1u64..1 << pairs.len())
        .map(|mask| {
            let edges = (0..pairs.len()).filter(|i| mask >> i & 1 == 1).map(|i| pairs[i].clone()).collect();
            Hypergraph::new(2, n, edges).expect("valid graph")
        })
        .collect()
}

fn induced_matching(config: &SuiteConfig) -> CheckResult {
    let mut graphs: Vec<Hypergraph> = (2..=5).flat_map(all_graphs).collect();
    graphs.extend((0..config.random_graphs).map(|i| {
        let mut rng = instance_rng(config.seed, "induced_matching", i as u64);
        let n = rng.random_range(6..=7);
        random_graph(&mut rng, n, 0.5).expect("valid graph")
    }));
    let outcomes = par::map_slice(&graphs, |g| {
        match (has_property_tkm_with_caps(g, 2, SUITE_TKM_CAPS), induced_matching_oracle(g, 2)) {
            (Ok(t), Ok(free)) => expect(t.holds == free, || format!("{} disagrees", g.to_text().trim().replace('\n', ";"))),
            (Err(e), _) | (_, Err(e)) => Outcome::Fail(e.to_string()),
        }
    });
    CheckResult::from_outcomes("induced_matching", outcomes)
}

/// Random hypergraphs with `k ∈ {2,3}`, `n ≤ 7`, `|E| ≤ 10`, then the
/// 2-uniform matchings with 1, 2 and 3 edges.
pub fn hypergraph_pool(config: &SuiteConfig) -> Vec<Hypergraph> {
    let mut pool: Vec<Hypergraph> = (0..config.hypergraph_pool)
        .map(|i| {
            let mut rng = instance_rng(config.seed, "hypergraph_pool", i as u64);
            let k = rng.random_range(2..=3);
            let n = rng.random_range(k + 1..=7);
            let most = binomial(n, k).min(10);
            let e = rng.random_range(1..=most);
            random_hypergraph(&mut rng, k, n, e).expect("valid hypergraph")
        })
        .collect();
    pool.extend((1..=3).map(|s| Hypergraph::matching(2, s).expect("valid matching")));
    pool
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Values computed once for each hypergraph in the pool.
#[derive(Debug, Clone)]
struct PoolRecord {
    min_m: Result<Option<usize>, String>,
    chain: ChainRow,
}

impl PoolRecord {
    fn compute(h: &Hypergraph, limit: u64) -> Self {
        let min_m = min_m_tk(h, MIN_M_CAP).map_err(|e| e.to_string());
        let chain = match associated_space(h) {
            Ok(a) => {
                let taus = transversal(&star_family(&a.mis, h.vertex_count()))
                    .ok()
                    .map(|t| (t.tau, t.tau_star));
                ChainRow::compute(pool_id(h), &a.space, taus, limit)
            }
            Err(_) => ChainRow {
                id: pool_id(h),
                helly: Bound::AtLeast(0),
                radon: Bound::AtLeast(0),
                tverberg2: Bound::AtLeast(0),
                colorful: Bound::AtLeast(0),
                tau: None,
                tau_star: None,
            },
        };
        PoolRecord { min_m, chain }
    }
}

fn pool_id(h: &Hypergraph) -> String {
    h.to_text().trim().replace('\n', ";")
}

fn colorful_vs_tkm(pool: &[Hypergraph], records: &[PoolRecord]) -> CheckResult {
    let matchings_from = pool.len() - 3;
    let outcomes = records
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let m = match &r.min_m {
                Err(e) => return Outcome::Fail(e.clone()),
                Ok(None) => return Outcome::Fail(format!("{}: no m <= {MIN_M_CAP} with T_k(m)", r.chain.id)),
                Ok(Some(m)) => *m,
            };
            let Some(hc) = r.chain.colorful.exact() else {
                return Outcome::Capped;
            };
            let matching_ok = i < matchings_from || m == i - matchings_from + 2;
            expect(m == hc && matching_ok, || format!("{}: min m={m}, h_c={hc}", r.chain.id))
        })
        .collect();
    CheckResult::from_outcomes("colorful_vs_tkm", outcomes)
}

fn radon_bound(pool: &[Hypergraph], records: &[PoolRecord]) -> CheckResult {
    let outcomes = pool
        .iter()
        .zip(records)
        .map(|(h, r)| match (&r.min_m, r.chain.radon) {
            (Ok(Some(m)), Bound::Exact(radon)) => {
                let bound = binomial(*m, h.uniformity()) << h.uniformity();
                expect(radon <= bound, || format!("{}: r={radon} > {bound}", r.chain.id))
            }
            (Ok(Some(m)), Bound::AtLeast(radon)) => {
                let bound = binomial(*m, h.uniformity()) << h.uniformity();
                if radon > bound {
                    Outcome::Fail(format!("{}: r>={radon} > {bound}", r.chain.id))
                } else {
                    Outcome::Capped
                }
            }
            _ => Outcome::Capped,
        })
        .collect();
    CheckResult::from_outcomes("radon_bound", outcomes)
}

fn matching_radon(limit: u64) -> CheckResult {
    let outcome = match Hypergraph::matching(2, 3).and_then(|h| associated_space(&h)) {
        Err(e) => Outcome::Fail(e.to_string()),
        Ok(a) => {
            let r = radon_number(&a.space, true, &Budget::new(limit)).value;
            expect(r.value() >= 4, || format!("r={r}"))
        }
    };
    CheckResult::from_outcomes("matching_radon", vec![outcome])
}

/// `C_5` followed by random hypergraphs with `k ∈ {2,3}` and `n ≤ 8`.
pub fn star_pool(config: &SuiteConfig) -> Vec<Hypergraph> {
    let mut pool = vec![Hypergraph::cycle(5).expect("valid cycle")];
    pool.extend((1..config.star_pool).map(|i| {
        let mut rng = instance_rng(config.seed, "star_pool", i as u64);
        let k = rng.random_range(2..=3);
        let n = rng.random_range(k + 1..=8);
        let most = binomial(n, k).min(12);
        let e = rng.random_range(1..=most);
        random_hypergraph(&mut rng, k, n, e).expect("valid hypergraph")
    }));
    pool
}

fn hull_is_star(pool: &[Hypergraph]) -> CheckResult {
    let outcomes = par::map_slice(pool, |h| {
        let a = match associated_space(h) {
            Ok(a) => a,
            Err(e) => return Outcome::Fail(e.to_string()),
        };
        let p = a.mis.len();
        if p > STAR_MIS_CAP {
            return Outcome::Capped;
        }
        let n = h.vertex_count();
        let all = PointSet::full(n).expect("ground size");
        let bad = (0u64..1 << p).find(|&mask| {
            let common = (0..p)
                .filter(|i| mask >> i & 1 == 1)
                .fold(all, |acc, i| acc.intersection(&a.mis[i]));
            a.space.hull_mask(mask) != star(&a.mis, &common).bits()
        });
        expect(bad.is_none(), || format!("{}: subset {:#b}", pool_id(h), bad.unwrap_or(0)))
    });
    CheckResult::from_outcomes("hull_is_star", outcomes)
}

fn tau_is_chi(pool: &[Hypergraph]) -> CheckResult {
    let outcomes = par::map_slice(pool, |h| {
        let result = associated_space(h).and_then(|a| {
            let t = transversal(&star_family(&a.mis, h.vertex_count()))?;
            Ok((t.tau, chromatic_number(h)?.chromatic_number))
        });
        match result {
            Ok((tau, chi)) => {
                let cycle_ok = pool_id(h) != pool_id(&pool[0]) || (tau == 3 && chi == 3);
                expect(tau == chi && cycle_ok, || format!("{}: tau={tau} chi={chi}", pool_id(h)))
            }
            Err(e) => Outcome::Fail(e.to_string()),
        }
    });
    CheckResult::from_outcomes("tau_is_chi", outcomes)
}

pub fn named_spaces() -> Vec<(&'static str, ConvexitySpace)> {
    let grid = |d: Vec<usize>| grid_box_space(&GridBoxSpec::new(d).expect("dims")).expect("grid");
    vec![
        ("interval6", interval_space(6).expect("interval")),
        ("grid44", grid(vec![4, 4])),
        ("grid22", grid(vec![2, 2])),
        ("lattice33", lattice_window_space(&LatticeWindowSpec::new(vec![3, 3]).expect("dims")).expect("lattice")),
        ("powerset3", powerset_space(3).expect("powerset")),
    ]
}

#[derive(Debug, Clone, Copy)]
enum Named {
    Helly,
    Radon,
    Colorful,
}

/// `(space, invariant, expected value)`.
const NAMED_VALUES: [(&str, Named, usize); 7] = [
    ("interval6", Named::Helly, 2),
    ("interval6", Named::Radon, 3),
    ("grid44", Named::Helly, 2),
    ("grid22", Named::Colorful, 3),
    ("lattice33", Named::Helly, 4),
    ("powerset3", Named::Radon, 4),
    ("powerset3", Named::Helly, 3),
];

fn named_values(named: &[(&'static str, ConvexitySpace)], limit: u64) -> CheckResult {
    let outcomes = par::map_slice(&NAMED_VALUES, |&(id, which, want)| {
        let space = &named.iter().find(|(n, _)| *n == id).expect("named space").1;
        let budget = Budget::new(limit);
        let (fast, naive) = match which {
            Named::Helly => (helly_number(space, &budget).value, naive_helly_number(space)),
            Named::Radon => (radon_number(space, true, &budget).value, naive_radon_number(space, true)),
            Named::Colorful => (
                colorful_helly_number(space, Pool::Generators, &budget).value,
                naive_colorful_helly_number(space),
            ),
        };
        expect(fast == Bound::Exact(want) && naive == want, || {
            format!("{id} {which:?}: search {fast}, oracle {naive}, expected {want}")
        })
    });
    CheckResult::from_outcomes("named_values", outcomes)
}

fn lp_exactness(config: &SuiteConfig) -> CheckResult {
    let mut outcomes = Vec::new();
    let c5 = Hypergraph::cycle(5).and_then(|h| {
        let a = associated_space(&h)?;
        transversal(&star_family(&a.mis, 5))
    });
    outcomes.push(match c5 {
        Ok(t) => expect(t.tau_star == rat(5, 2), || format!("C5 tau*={}", format_rational(&t.tau_star))),
        Err(e) => Outcome::Fail(e.to_string()),
    });
    let triangle: Vec<PointSet> = [[0, 1], [1, 2], [0, 2]]
        .iter()
        .map(|s| PointSet::from_elements(3, s.iter().copied()).expect("set"))
        .collect();
    outcomes.push(match transversal(&triangle) {
        Ok(t) => expect(t.tau_star == rat(3, 2), || format!("triangle tau*={}", format_rational(&t.tau_star))),
        Err(e) => Outcome::Fail(e.to_string()),
    });
    let indices: Vec<u64> = (0..config.random_lps as u64).collect();
    outcomes.extend(par::map_slice(&indices, |&i| random_lp_outcome(config.seed, i)));
    CheckResult::from_outcomes("lp_exactness", outcomes)
}

/// A feasible bounded program around a nonnegative integer point `x0`, with
/// positive costs.
pub fn random_lp(seed: u64, index: u64) -> (LinearProgram, Vec<Rational>) {
    let mut rng = instance_rng(seed, "lp_exactness", index);
    let n = rng.random_range(1..=8);
    let m = rng.random_range(1..=12);
    let x0: Vec<i64> = (0..n).map(|_| rng.random_range(0..=4)).collect();
    let c: Vec<Rational> = (0..n).map(|_| rat(rng.random_range(1..=9), rng.random_range(1..=4))).collect();
    let mut rows = Vec::with_capacity(m);
    let mut rhs = Vec::with_capacity(m);
    for _ in 0..m {
        let row: Vec<i64> = (0..n).map(|_| rng.random_range(-5..=5)).collect();
        let at_x0: i64 = row.iter().zip(&x0).map(|(a, x)| a * x).sum();
        let half_slack = rng.random_range(0..=6);
        rows.push(row.iter().map(|&a| rat(a, 1)).collect());
        rhs.push(rat(2 * at_x0 - half_slack, 2));
    }
    let lp = LinearProgram::new(c, rows, rhs).expect("consistent dimensions");
    (lp, x0.iter().map(|&x| rat(x, 1)).collect())
}

fn random_lp_outcome(seed: u64, index: u64) -> Outcome {
    let (lp, x0) = random_lp(seed, index);
    match solve_min(&lp) {
        Ok(LpOutcome::Optimal(sol)) => {
            let at_x0 = lp
                .objective()
                .iter()
                .zip(&x0)
                .fold(Rational::zero(), |acc, (c, x)| acc + c * x);
            let ok = sol.value == sol.dual_value(&lp) && sol.value <= at_x0 && sol.certify(&lp).is_ok();
            expect(ok, || format!("lp {index}: primal {} dual {}", sol.value, sol.dual_value(&lp)))
        }
        Ok(other) => Outcome::Fail(format!("lp {index}: {}", other.status())),
        Err(e) => Outcome::Fail(format!("lp {index}: {e}")),
    }
}

/// Closures of a few random generator sets on up to 7 points.
pub fn random_spaces(config: &SuiteConfig) -> Vec<ConvexitySpace> {
    (0..config.random_spaces)
        .map(|i| {
            let mut rng = instance_rng(config.seed, "random_spaces", i as u64);
            let n = rng.random_range(2..=7);
            let count = rng.random_range(1..=6);
            let gens: Vec<PointSet> = (0..count)
                .map(|_| PointSet::from_bits(n, rng.random_range(0..1u64 << n)).expect("mask in range"))
                .collect();
            closure_from_generators(n, &gens, 1 << 12).expect("small closure")
        })
        .collect()
}

fn hull_closure(spaces: &[ConvexitySpace]) -> CheckResult {
    let outcomes = par::map_slice(spaces, |s| {
        let n = s.ground_size();
        let bad = (0u64..1 << n).find(|&y| {
            let h = s.hull_mask(y);
            !(s.is_convex_mask(h) && h & y == y && s.hull_mask(h) == h && h == s.hull_by_definition(y))
        });
        expect(s.verify_axioms().passes() && bad.is_none(), || format!("hull of {:#b} on {n} points", bad.unwrap_or(0)))
    });
    CheckResult::from_outcomes("hull_closure", outcomes)
}

fn oracle_agreement(spaces: &[ConvexitySpace], limit: u64) -> CheckResult {
    let outcomes = par::map_slice(spaces, |s| {
        let r = radon_number(s, true, &Budget::new(limit)).value;
        let r_set = radon_number(s, false, &Budget::new(limit)).value;
        let h = helly_number(s, &Budget::new(limit)).value;
        let hc = colorful_helly_number(s, Pool::Full, &Budget::new(limit)).value;
        if !(r.is_exact() && r_set.is_exact() && h.is_exact() && hc.is_exact()) {
            return Outcome::Capped;
        }
        let want = (
            naive_radon_number(s, true),
            naive_radon_number(s, false),
            naive_helly_number(s),
            naive_colorful_helly_number(s),
        );
        let got = (r.value(), r_set.value(), h.value(), hc.value());
        expect(got == want, || format!("{} points: search {got:?}, oracle {want:?}", s.ground_size()))
    });
    CheckResult::from_outcomes("oracle_agreement", outcomes)
}

fn tkm_monotone(pool: &[Hypergraph]) -> CheckResult {
    let outcomes = par::map_slice(pool, |h| {
        let k = h.uniformity();
        let holds: Result<Vec<bool>, _> = (k..=k + 3)
            .map(|m| has_property_tkm_with_caps(h, m, SUITE_TKM_CAPS).map(|r| r.holds))
            .collect();
        match holds {
            Ok(v) => expect(v.windows(2).all(|w| !w[0] || w[1]), || format!("{}: {v:?}", pool_id(h))),
            Err(e) => Outcome::Fail(e.to_string()),
        }
    });
    CheckResult::from_outcomes("tkm_monotone", outcomes)
}

fn tkm_implies_sunflower(pool: &[Hypergraph]) -> CheckResult {
    let outcomes = par::map_slice(pool, |h| {
        let k = h.uniformity();
        let pairs: Result<Vec<(bool, bool)>, _> = (k..=k + 2)
            .map(|m| {
                Ok::<_, radon_lab::Error>((
                    has_property_tkm_with_caps(h, m, SUITE_TKM_CAPS)?.holds,
                    has_property_delta_km(h, m)?.holds,
                ))
            })
            .collect();
        match pairs {
            Ok(v) => expect(v.iter().all(|&(t, d)| !t || d), || format!("{}: {v:?}", pool_id(h))),
            Err(e) => Outcome::Fail(e.to_string()),
        }
    });
    CheckResult::from_outcomes("tkm_implies_sunflower", outcomes)
}

/// On random interval families: `τ* ≤ τ`, `τ` equals the least partition
/// into intersecting subfamilies, and `(p,q)` implies `(p+1,q)`.
fn pq_and_transversal(config: &SuiteConfig) -> CheckResult {
    let indices: Vec<u64> = (0..config.random_spaces as u64).collect();
    let outcomes = par::map_slice(&indices, |&i| {
        let mut rng = instance_rng(config.seed, "pq_and_transversal", i);
        let n = 8;
        let members = rng.random_range(1..=7);
        let family: Vec<PointSet> = (0..members)
            .map(|_| {
                let a = rng.random_range(0..n);
                let b = rng.random_range(a..n);
                PointSet::from_elements(n, a..=b).expect("interval")
            })
            .collect();
        let t = match transversal(&family) {
            Ok(t) => t,
            Err(e) => return Outcome::Fail(e.to_string()),
        };
        let fractional_ok = t.tau_star <= BigRational::from_integer(t.tau.into()) && t.tau_star >= Rational::one();
        let partition_ok = t.tau == naive_partition_transversal(&family);
        let pq_ok = (2..=members).all(|q| {
            (q..members).all(|p| {
                let now = pq_property(&family, p, q).map(|r| r.holds).unwrap_or(false);
                let next = pq_property(&family, p + 1, q).map(|r| r.holds).unwrap_or(false);
                !now || next
            })
        });
        expect(fractional_ok && partition_ok && pq_ok, || {
            format!("family {i}: tau={} tau*={}", t.tau, format_rational(&t.tau_star))
        })
    });
    CheckResult::from_outcomes("pq_and_transversal", outcomes)
}
