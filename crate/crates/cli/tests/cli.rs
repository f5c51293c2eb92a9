//! Subcommands, file formats and exit codes of the binary.

use std::path::Path;
use std::process::{Command, Output};

use tempfile::TempDir;

fn radon_lab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_radon-lab"))
        .args(args)
        .env_remove("RADON_LAB_BUDGET")
        .output()
        .unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn path(dir: &TempDir, name: &str) -> String {
    dir.path().join(name).display().to_string()
}

fn write(dir: &TempDir, name: &str, text: &str) -> String {
    let p = path(dir, name);
    std::fs::write(Path::new(&p), text).unwrap();
    p
}

#[test]
fn generated_space_feeds_invariants() {
    let dir = TempDir::new().unwrap();
    let space = path(&dir, "i6.space");
    let gen = radon_lab(&["space", "gen", "--kind", "interval", "--dims", "6", "--out", &space]);
    assert_eq!(gen.status.code(), Some(0));
    let out = radon_lab(&["invariants", "--space", &space, "--radon", "--helly", "--tverberg", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("radon=3\n"), "{text}");
    assert!(text.contains("helly=2\n"), "{text}");
    assert!(text.contains("tverberg=5\n"), "{text}");
    assert!(text.contains("radon.capped=false\n"), "{text}");
}

#[test]
fn budget_from_environment_caps_searches() {
    let dir = TempDir::new().unwrap();
    let space = path(&dir, "p3.space");
    radon_lab(&["space", "gen", "--kind", "powerset", "--dims", "3", "--out", &space]);
    let out = Command::new(env!("CARGO_BIN_EXE_radon-lab"))
        .args(["invariants", "--space", &space, "--helly"])
        .env("RADON_LAB_BUDGET", "1")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("helly.capped=true"), "{}", stdout(&out));
    let flag = radon_lab(&["--budget", "1", "invariants", "--space", &space, "--helly"]);
    assert!(stdout(&flag).contains("helly=>="), "{}", stdout(&flag));
}

#[test]
fn input_errors_exit_with_two() {
    let dir = TempDir::new().unwrap();
    let missing = path(&dir, "missing.space");
    assert_eq!(radon_lab(&["space", "info", "--space", &missing]).status.code(), Some(2));
    // Not closed under intersection: {0,1} ∩ {1,2} = {1} is missing.
    let broken = write(&dir, "broken.space", "space 3\nset\nset 0 1\nset 1 2\nset 0 1 2\n");
    assert_eq!(radon_lab(&["invariants", "--space", &broken]).status.code(), Some(2));
    assert_eq!(radon_lab(&["no-such-command"]).status.code(), Some(2));
}

#[test]
fn failed_verification_exits_with_one() {
    let dir = TempDir::new().unwrap();
    // Pair 2 moves element 5 from A to B, so A1 ∩ A2 ∩ A3 is empty.
    let text = "setpairs 3 8\nA 1 2 3 4 5\nB 1 1 6 7 8\nA 2 3 6 7\nB 2 1 2 4 5 8\nA 3 4 5 7 8\nB 3 1 2 3 6\n";
    let file = write(&dir, "bad.setpairs", text);
    let out = radon_lab(&["setpairs", "verify", "--file", &file, "--k", "3"]);
    assert_eq!(out.status.code(), Some(1), "{}", stdout(&out));
    assert!(stdout(&out).contains("verify.status=fail"));
}

#[test]
fn setpair_files_round_trip() {
    let dir = TempDir::new().unwrap();
    let file = path(&dir, "b43.setpairs");
    let built = radon_lab(&["setpairs", "build", "--m", "4", "--k", "3", "--out", &file]);
    assert_eq!(built.status.code(), Some(0));
    let checked = radon_lab(&["setpairs", "verify", "--file", &file]);
    assert_eq!(checked.status.code(), Some(0));
    let text = stdout(&checked);
    assert!(text.contains("max_k=3\n") || text.contains("max_k=4\n"), "{text}");
}

#[test]
fn hypergraph_commands() {
    let dir = TempDir::new().unwrap();
    let c5 = write(&dir, "c5.hg", "hypergraph 2 5\n0 1\n1 2\n2 3\n3 4\n0 4\n");
    let assoc = path(&dir, "c5.space");
    let out = radon_lab(&[
        "hg", "--file", &c5, "--mis", "--chi", "--omega", "--tkm", "2", "--min-m", "8", "--assoc", &assoc,
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("mis.count=5\n"), "{text}");
    assert!(text.contains("chi=3\n"), "{text}");
    assert!(text.contains("omega=2\n"), "{text}");
    let info = radon_lab(&["space", "info", "--space", &assoc]);
    assert!(stdout(&info).contains("axioms=pass"), "{}", stdout(&info));
}

#[test]
fn family_measurements_print_exact_rationals() {
    let dir = TempDir::new().unwrap();
    let space = path(&dir, "p3.space");
    radon_lab(&["space", "gen", "--kind", "powerset", "--dims", "3", "--out", &space]);
    let sets = write(&dir, "tri.family", "family 3\nset 0 1\nset 1 2\nset 0 2\n");
    let out = radon_lab(&["family", "--space", &space, "--sets", &sets, "--transversal", "--pq", "3,2", "--profile", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("tau=2\n"), "{text}");
    assert!(text.contains("tau_star=3/2\n"), "{text}");
    assert!(text.contains("pq.holds=true\n"), "{text}");
}

#[test]
fn lp_subcommand_reports_primal_and_dual() {
    let dir = TempDir::new().unwrap();
    let lp = write(&dir, "tri.lp", "min 1 1 1\nrow 1 1 0 >= 1\nrow 0 1 1 >= 1\nrow 1 0 1 >= 1\n");
    let out = radon_lab(&["lp", "--file", &lp]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("status=OPTIMAL\n"), "{text}");
    assert!(text.contains("value=3/2\n"), "{text}");
    assert!(text.contains("dual_value=3/2\n"), "{text}");
}

#[test]
fn report_rows_for_spaces_and_hypergraphs() {
    let dir = TempDir::new().unwrap();
    let grid = path(&dir, "grid44.space");
    radon_lab(&["space", "gen", "--kind", "gridbox", "--dims", "4,4", "--out", &grid]);
    let c5 = write(&dir, "c5.hg", "hypergraph 2 5\n0 1\n1 2\n2 3\n3 4\n0 4\n");
    let out = radon_lab(&["report", &grid, &c5]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    let text = stdout(&out);
    assert!(text.contains("row.1.h=2\n"), "{text}");
    assert!(text.contains("row.2.tau=3\n"), "{text}");
    assert!(text.contains("row.2.tau_star=5/2\n"), "{text}");
    let human = radon_lab(&["--format", "human", "report", &grid]);
    assert!(stdout(&human).starts_with("id"), "{}", stdout(&human));
}

#[test]
fn hull_and_nerve() {
    let dir = TempDir::new().unwrap();
    let space = path(&dir, "i5.space");
    radon_lab(&["space", "gen", "--kind", "interval", "--dims", "5", "--out", &space]);
    let hull = radon_lab(&["space", "hull", "--space", &space, "--set", "1,3"]);
    assert!(stdout(&hull).contains("hull={1,2,3}"), "{}", stdout(&hull));
    let sets = write(&dir, "f.family", "family 5\nset 0 1 2\nset 2 3\nset 3 4\n");
    let nerve = radon_lab(&["space", "nerve", "--sets", &sets]);
    assert_eq!(nerve.status.code(), Some(0));
    assert!(stdout(&nerve).contains("dimension=1\n"), "{}", stdout(&nerve));
}
