//! Acceptance criteria 1 to 11. Each test prints one line of the form
//! `criterion N: PASS|FAIL <detail>`; every comparison is exact.

use std::path::{Path, PathBuf};
use std::process::Command;
use std::sync::OnceLock;

use radon_lab::hypergraph::{associated_space, min_m_tk, Hypergraph};
use radon_lab::invariants::{colorful_helly_number, radon_number, Pool};
use radon_lab::lp::rat;
use radon_lab::setpairs::{build, build_base, ground_bound, verify};
use radon_lab::{Bound, Budget};
use radon_lab_cli::args::Format;
use radon_lab_cli::suite::{render, run_suite, worked_order, SuiteConfig, SuiteResult, MIN_M_CAP};

/// Budget pinned for every search in these tests.
const BUDGET: u64 = 10_000_000;
/// Seed pinned for every random instance in these tests.
const SEED: u64 = 1;

fn config() -> SuiteConfig {
    SuiteConfig {
        seed: SEED,
        budget: BUDGET,
        jobs: 1,
        ..SuiteConfig::default()
    }
}

fn suite() -> &'static SuiteResult {
    static RESULT: OnceLock<SuiteResult> = OnceLock::new();
    RESULT.get_or_init(|| run_suite(&config()))
}

fn report(n: u32, ok: bool, detail: impl AsRef<str>) {
    println!("criterion {n}: {} {}", if ok { "PASS" } else { "FAIL" }, detail.as_ref());
    assert!(ok, "criterion {n} failed: {}", detail.as_ref());
}

/// Whether a suite check has no failures and no capped instances.
fn clean(name: &str, min_instances: usize) -> (bool, String) {
    let c = suite().check(name).unwrap_or_else(|| panic!("check {name} missing"));
    let ok = c.failures == 0 && c.capped == 0 && c.instances >= min_instances;
    (
        ok,
        format!(
            "{name}: {} instances, {} failures, {} capped{}",
            c.instances,
            c.failures,
            c.capped,
            c.first_failure.as_deref().map(|m| format!(", first: {m}")).unwrap_or_default()
        ),
    )
}

fn clean_check(n: u32, name: &str, min_instances: usize) {
    let (ok, detail) = clean(name, min_instances);
    report(n, ok, detail);
}

fn tests_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests")
}

fn binary() -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_radon-lab"));
    cmd.env("RADON_LAB_BUDGET", BUDGET.to_string());
    cmd
}

#[test]
fn criterion_01_worked_setpair_table_matches_golden_file() {
    let out = binary()
        .args(["setpairs", "build", "--m", "3", "--k", "3", "--order"])
        .arg(tests_dir().join("data/worked_order.txt"))
        .output()
        .unwrap();
    let golden = std::fs::read_to_string(tests_dir().join("golden/setpairs_k3.txt")).unwrap();
    let stdout = String::from_utf8(out.stdout).unwrap();
    let fam = build_base(3, &worked_order()).unwrap();
    let ok = out.status.code() == Some(0) && stdout == golden && verify(&fam, 3).passes();
    report(1, ok, "build_base(3, worked order) is bit-exact with the golden file and verifies");
}

#[test]
fn criterion_02_builds_verify_within_ground_bound() {
    let mut cases = 0;
    let mut bad = Vec::new();
    for k in 2..=4 {
        for m in k..=6 {
            cases += 1;
            let f = build(m, k).unwrap();
            if !verify(&f, k).passes() || f.ground_size() > ground_bound(m, k) {
                bad.push(format!("(m={m},k={k})"));
            }
        }
    }
    report(2, bad.is_empty() && cases == 12, format!("{cases} builds, failures {bad:?}"));
}

#[test]
fn criterion_03_two_matching_property_vs_induced_matchings() {
    // 1023 + 63 + 7 + 1 nonempty labeled graphs on 5, 4, 3, 2 vertices, plus the random ones.
    clean_check(3, "induced_matching", 1094 + 200);
}

#[test]
fn criterion_04_least_m_equals_colorful_helly_number() {
    let (mut ok, mut detail) = clean("colorful_vs_tkm", 103);
    for s in 1..=3 {
        let h = Hypergraph::matching(2, s).unwrap();
        let m = min_m_tk(&h, MIN_M_CAP).unwrap();
        let hc = colorful_helly_number(&associated_space(&h).unwrap().space, Pool::Generators, &Budget::new(BUDGET));
        ok &= m == Some(s + 1) && hc.value == Bound::Exact(s + 1);
        detail += &format!("; matching s={s}: min m={}, h_c={}", m.unwrap_or(0), hc.value);
    }
    report(4, ok, detail);
}

#[test]
fn criterion_05_radon_number_below_setpair_bound() {
    clean_check(5, "radon_bound", 103);
}

#[test]
fn criterion_06_three_matching_radon_number_at_least_four() {
    let a = associated_space(&Hypergraph::matching(2, 3).unwrap()).unwrap();
    let r = radon_number(&a.space, true, &Budget::new(BUDGET)).value;
    report(6, r.is_exact() && r.value() >= 4, format!("r = {r}"));
}

#[test]
fn criterion_07_hulls_are_stars_and_tau_is_chi() {
    let hull = suite().check("hull_is_star").unwrap();
    // Spaces with more than 12 points are outside the hull identity check.
    let hull_ok = hull.failures == 0 && hull.instances == 100 && hull.capped < hull.instances;
    let (tau_ok, tau_detail) = clean("tau_is_chi", 100);
    report(
        7,
        hull_ok && tau_ok,
        format!(
            "hull_is_star: {} checked, {} over 12 points; {tau_detail}",
            hull.instances - hull.capped,
            hull.capped
        ),
    );
}

#[test]
fn criterion_08_named_values_with_oracles() {
    clean_check(8, "named_values", 7);
}

#[test]
fn criterion_09_exact_lp() {
    let (ok, detail) = clean("lp_exactness", 102);
    let c5 = associated_space(&Hypergraph::cycle(5).unwrap()).unwrap();
    let t = radon_lab::invariants::transversal(&radon_lab::hypergraph::star_family(&c5.mis, 5)).unwrap();
    report(9, ok && t.tau_star == rat(5, 2), format!("{detail}; C5 star family tau* = {}", t.tau_star));
}

#[test]
fn criterion_10_inequality_chain() {
    let (ok, detail) = clean("inequality_chain", 108);
    let rows = &suite().chain_rows;
    let exact = rows.iter().filter(|r| r.helly.is_exact() && r.radon.is_exact()).count();
    report(10, ok && exact == rows.len(), format!("{detail}; {exact} of {} spaces fully computed", rows.len()));
}

#[test]
fn criterion_11_same_seed_gives_identical_output() {
    let run = |jobs: &str| {
        binary()
            .args(["verify-theorems", "--seed", &SEED.to_string(), "--jobs", jobs])
            .output()
            .unwrap()
    };
    let (a, b, c) = (run("1"), run("1"), run("4"));
    let ok = a.status.code() == Some(0) && a.stdout == b.stdout && a.stdout == c.stdout && !a.stdout.is_empty();
    report(11, ok, format!("{} bytes, identical across runs and job counts", a.stdout.len()));
    assert_eq!(String::from_utf8(a.stdout).unwrap(), render(suite(), Format::Machine));
}
