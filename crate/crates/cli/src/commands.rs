//! Subcommand implementations. Each returns its facts and whether every
//! check it performed passed; errors are input errors.

use anyhow::{bail, Context, Result};
use itertools::Itertools;
use radon_lab::budget::DEFAULT_BUDGET;
use radon_lab::generators::{
    grid_box_space, interval_space, lattice_window_space, powerset_space, GridBoxSpec, LatticeWindowSpec,
};
use radon_lab::hypergraph::{
    associated_space, chromatic_number, clique_number, has_property_dkm, has_property_delta_km, has_property_tkm,
    maximal_independent_sets, min_m_tk,
};
use radon_lab::invariants::{
    colorful_helly_number, fractional_helly_profile, helly_number, pq_property, radon_number, transversal,
    tverberg_number, MultiSubset, Pool,
};
use radon_lab::lp::{format_rational, parse_lp, solve_min, LpOutcome};
use radon_lab::nerve::nerve;
use radon_lab::setpairs::{
    build, build_base, extend, max_transversal_k, radon_free_certificate, verify, CertificateOutcome, SetPairFamily,
    SubsetOrder,
};
use radon_lab::space::Separability;
use radon_lab::{Bound, Budget, ConvexitySpace, PointSet};

use crate::args::{
    Cli, Command, FamilyArgs, HgArgs, InvariantsArgs, LpArgs, SetpairsCommand, SpaceCommand, SpaceKind, Toggle,
};
use crate::io::{load_family, load_hypergraph, load_space, parse_list, read_text, write_text};
use crate::output::Facts;
use crate::{report, suite};

/// Environment variable overriding the default node budget.
pub const BUDGET_ENV: &str = "RADON_LAB_BUDGET";

/// What a command printed and whether its checks passed.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub text: String,
    pub passed: bool,
}

/// Budget limit from the flag, then the environment, then the default.
pub fn resolve_budget(flag: Option<u64>) -> Result<u64> {
    if let Some(b) = flag {
        return Ok(b);
    }
    match std::env::var(BUDGET_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .with_context(|| format!("{BUDGET_ENV}={v} is not a nonnegative integer")),
        Err(_) => Ok(DEFAULT_BUDGET),
    }
}

pub fn run(cli: Cli) -> Result<Outcome> {
    let budget = resolve_budget(cli.budget)?;
    let format = cli.format;
    let done = |facts: Facts, passed: bool| Outcome {
        text: facts.render(format),
        passed,
    };
    match cli.command {
        Command::Space(cmd) => space(cmd).map(|(f, raw)| match raw {
            Some(text) => Outcome { text, passed: true },
            None => done(f, true),
        }),
        Command::Invariants(args) => invariants(&args, budget).map(|f| done(f, true)),
        Command::Family(args) => family(&args).map(|f| done(f, true)),
        Command::Hg(args) => hg(&args, budget).map(|f| done(f, true)),
        Command::Setpairs(cmd) => setpairs(cmd).map(|(f, ok)| done(f, ok)),
        Command::Lp(args) => lp(&args).map(|f| done(f, true)),
        Command::VerifyTheorems(args) => {
            let config = suite::SuiteConfig {
                seed: args.seed,
                jobs: args.jobs,
                budget,
                ..suite::SuiteConfig::default()
            };
            let result = suite::run_suite(&config);
            Ok(Outcome {
                text: suite::render(&result, format),
                passed: result.passed(),
            })
        }
        Command::Report(args) => {
            let rows = report::report_table(&args.inputs, budget)?;
            let passed = rows.iter().all(|r| r.inequalities_hold());
            Ok(Outcome {
                text: report::render(&rows, format),
                passed,
            })
        }
    }
}

pub fn generate_space(kind: SpaceKind, dims: &[usize]) -> Result<ConvexitySpace> {
    let single = || -> Result<usize> {
        match dims {
            [n] => Ok(*n),
            _ => bail!("this kind takes a single size, got {dims:?}"),
        }
    };
    Ok(match kind {
        SpaceKind::Interval => interval_space(single()?)?,
        SpaceKind::Powerset => powerset_space(single()?)?,
        SpaceKind::Gridbox => grid_box_space(&GridBoxSpec::new(dims.to_vec())?)?,
        SpaceKind::Lattice => lattice_window_space(&LatticeWindowSpec::new(dims.to_vec())?)?,
    })
}

fn space(cmd: SpaceCommand) -> Result<(Facts, Option<String>)> {
    let mut f = Facts::new();
    match cmd {
        SpaceCommand::Gen { kind, dims, out } => {
            let s = generate_space(kind, &parse_list(&dims)?)?;
            let text = s.to_text();
            match out {
                Some(path) => {
                    write_text(&path, &text)?;
                    f.push("written", path.display());
                    f.push("ground", s.ground_size());
                    f.push("sets", s.len());
                }
                None => return Ok((f, Some(text))),
            }
        }
        SpaceCommand::Info { space } => {
            let s = load_space(&space)?;
            let axioms = s.verify_axioms();
            f.push("ground", s.ground_size());
            f.push("sets", s.len());
            f.push("generators", s.meet_generators().len());
            f.push("axioms", if axioms.passes() { "pass" } else { "fail" });
            f.push("axioms.detail", axioms.summary());
            let halfspaces = s.halfspaces();
            f.push("halfspaces", halfspaces.len());
            f.push("halfspaces.list", halfspaces.iter().join(" "));
            match s.separability() {
                Separability::Separable => f.push("separable", true),
                Separability::Fails { set, point } => {
                    f.push("separable", false);
                    f.push("separable.set", set);
                    f.push("separable.point", point);
                }
            }
        }
        SpaceCommand::Hull { space, set } => {
            let s = load_space(&space)?;
            let y = PointSet::from_elements(s.ground_size(), parse_list(&set)?)?;
            f.push("set", y);
            f.push("hull", s.hull(&y)?);
        }
        SpaceCommand::Nerve { sets } => {
            let (_, family) = load_family(&sets)?;
            let nv = nerve(&family)?;
            f.push("vertices", nv.vertex_count);
            f.push("dimension", nv.dimension().map_or("empty".to_string(), |d| d.to_string()));
            f.push("maximal_faces", nv.maximal_faces.iter().join(" "));
        }
    }
    Ok((f, None))
}

fn bound_facts(f: &mut Facts, key: &str, b: Bound) {
    f.push(key, b);
    f.push(format!("{key}.capped"), !b.is_exact());
}

fn parts(p: &[MultiSubset]) -> String {
    p.iter().join(" | ")
}

fn invariants(args: &InvariantsArgs, limit: u64) -> Result<Facts> {
    let s = load_space(&args.space)?;
    let multi = args.multiset == Toggle::On;
    let any = args.radon || args.helly || args.colorful || args.tverberg.is_some();
    let mut f = Facts::new();
    f.push("ground", s.ground_size());
    f.push("sets", s.len());
    f.push("multiset", multi);
    if args.radon || !any {
        let r = radon_number(&s, multi, &Budget::new(limit));
        bound_facts(&mut f, "radon", r.value);
        f.push("radon.free_set", r.free_set);
        if let Some((a, b)) = r.witness_partition {
            f.push("radon.partition", format!("{a} | {b}"));
        }
    }
    if let Some(k) = args.tverberg {
        let t = tverberg_number(&s, k, multi, &Budget::new(limit))?;
        f.push("tverberg.k", k);
        bound_facts(&mut f, "tverberg", t.value);
        f.push("tverberg.free_multiset", &t.free_multiset);
        if let Some(p) = t.witness_partition {
            f.push("tverberg.partition", parts(&p));
        }
    }
    if args.helly || !any {
        let h = helly_number(&s, &Budget::new(limit));
        bound_facts(&mut f, "helly", h.value);
        f.push("helly.independent_set", h.independent_set);
        f.push("helly.family", h.witness_family.iter().join(" "));
    }
    if args.colorful {
        let c = colorful_helly_number(&s, Pool::Generators, &Budget::new(limit));
        bound_facts(&mut f, "colorful", c.value);
        f.push("colorful.families", c.family_count);
        for (i, fam) in c.obstruction.iter().enumerate() {
            f.push(format!("colorful.obstruction.{}", i + 1), fam.iter().join(" "));
        }
        f.push("fractional_helly.bound", format!("<= {}", c.value.value()));
    }
    Ok(f)
}

fn family(args: &FamilyArgs) -> Result<Facts> {
    let s = load_space(&args.space)?;
    let (n, fam) = load_family(&args.sets)?;
    if n != s.ground_size() {
        bail!("family is over {n} points but the space has {}", s.ground_size());
    }
    let mut f = Facts::new();
    f.push("members", fam.len());
    if let Some(k) = args.profile {
        let p = fractional_helly_profile(&s, &fam, k)?;
        f.push("profile.k", k);
        f.push("profile.alpha", format_rational(&p.alpha));
        f.push("profile.beta", format_rational(&p.beta_observed));
        f.push("profile.deepest_point", p.deepest_point);
        f.push("profile.intersecting_tuples", p.intersecting_tuples);
        f.push("profile.tuples", p.total_tuples);
    }
    let pq = match &args.pq {
        Some(text) => match parse_list(text)?.as_slice() {
            [p, q] => Some((*p, *q)),
            _ => bail!("--pq expects `p,q`, got `{text}`"),
        },
        None => None,
    };
    if args.transversal || pq.is_some() {
        for (i, m) in fam.iter().enumerate() {
            if !s.is_convex(m) {
                bail!("family member {i} = {m} is not convex");
            }
        }
        let t = transversal(&fam)?;
        f.push("tau", t.tau);
        f.push("tau.points", t.pierce_points);
        f.push("tau_star", format_rational(&t.tau_star));
        f.push("tau_star.weights", t.weights.iter().map(format_rational).join(","));
    }
    if let Some((p, q)) = pq {
        let r = pq_property(&fam, p, q)?;
        f.push("pq", format!("{p},{q}"));
        f.push("pq.holds", r.holds);
        if let Some(v) = r.violating {
            f.push("pq.violating", v.iter().join(","));
        }
    }
    Ok(f)
}

fn hg(args: &HgArgs, limit: u64) -> Result<Facts> {
    let h = load_hypergraph(&args.file)?;
    let mut f = Facts::new();
    f.push("k", h.uniformity());
    f.push("n", h.vertex_count());
    f.push("edges", h.edge_count());
    if args.mis {
        let mis = maximal_independent_sets(&h)?;
        f.push("mis.count", mis.len());
        f.push("mis", mis.iter().join(" "));
    }
    if args.chi {
        let c = chromatic_number(&h)?;
        f.push("chi", c.chromatic_number);
        f.push("chi.coloring", c.colors.iter().join(","));
    }
    if args.omega {
        let (w, set) = clique_number(&h)?;
        f.push("omega", w);
        f.push("omega.clique", set);
    }
    let edge_list = |idx: &[usize]| idx.iter().map(|&i| format!("{}", h.edge_set(i))).join(" ");
    if let Some(m) = args.tkm {
        let r = has_property_tkm(&h, m)?;
        f.push("tkm.m", m);
        f.push("tkm.holds", r.holds);
        f.push("tkm.fewer_edges_than_m", r.fewer_edges_than_m);
        if let Some(v) = r.violation {
            f.push("tkm.violation", edge_list(&v));
        }
    }
    if let Some(m) = args.delta {
        let r = has_property_delta_km(&h, m)?;
        f.push("delta.m", m);
        f.push("delta.holds", r.holds);
        f.push("delta.sunflowers", r.sunflowers_checked);
        if let Some(v) = r.witness {
            f.push("delta.witness", edge_list(&v));
        }
    }
    if let Some(m) = args.dkm {
        let r = has_property_dkm(&h, m)?;
        f.push("dkm.m", m);
        f.push("dkm.holds", r.holds);
        if let Some(v) = r.witness {
            f.push("dkm.witness", edge_list(&v));
        }
    }
    if let Some(cap) = args.min_m {
        match min_m_tk(&h, cap)? {
            Some(m) => f.push("min_m", m),
            None => f.push("min_m", format!("above {cap}")),
        }
    }
    if let Some(out) = &args.assoc {
        let a = associated_space(&h)?;
        write_text(out, &a.space.to_text())?;
        f.push("assoc.points", a.mis.len());
        f.push("assoc.sets", a.space.len());
        f.push("assoc.mis", a.mis.iter().join(" "));
        f.push("assoc.written", out.display());
    }
    if let Some(m) = args.certificate {
        match radon_free_certificate(&h, m, &Budget::new(limit))? {
            CertificateOutcome::NoCertificate { required } => {
                f.push("certificate", "none");
                f.push("certificate.required_points", required);
            }
            CertificateOutcome::Undecided { required } => {
                f.push("certificate", "capped");
                f.push("certificate.required_points", required);
            }
            CertificateOutcome::Certificate(c) => {
                f.push("certificate", "found");
                f.push("certificate.free_points", c.free_points.iter().join(","));
                f.push("certificate.edges", edge_list(&c.edges));
            }
        }
    }
    Ok(f)
}

/// Facts describing a family and its verification, 1-based.
pub fn setpair_facts(fam: &SetPairFamily, k: usize) -> (Facts, bool) {
    let mut f = Facts::new();
    f.push("m", fam.m());
    f.push("N", fam.ground_size());
    for i in 0..fam.m() {
        let show = |v: Vec<usize>| v.iter().map(|e| e + 1).join(",");
        f.push(format!("pair.{}.A", i + 1), show(fam.a(i)));
        f.push(format!("pair.{}.B", i + 1), show(fam.b(i)));
    }
    let report = verify(fam, k);
    f.push("verify.k", k);
    f.push("verify.partition", if report.partition_failure.is_none() { "pass" } else { "fail" });
    f.push("verify.transversal", if report.transversal_failure.is_none() { "pass" } else { "fail" });
    f.push("verify.detail", report.summary());
    f.push("verify.status", if report.passes() { "pass" } else { "fail" });
    (f, report.passes())
}

fn setpairs(cmd: SetpairsCommand) -> Result<(Facts, bool)> {
    match cmd {
        SetpairsCommand::Build { m, k, order, out } => {
            let fam = match order {
                Some(path) => {
                    let order = SubsetOrder::from_text(&read_text(&path)?)
                        .with_context(|| format!("invalid order file {}", path.display()))?;
                    let base = build_base(k, &order)?;
                    if m == k {
                        base
                    } else {
                        extend(&base, k, m, &order)?.family
                    }
                }
                None if m == k => build_base(k, &SubsetOrder::binary_counter(k)?)?,
                None => build(m, k)?,
            };
            if let Some(path) = out {
                write_text(&path, &fam.to_text())?;
            }
            Ok(setpair_facts(&fam, k))
        }
        SetpairsCommand::Verify { file, k } => {
            let fam = SetPairFamily::from_text(&read_text(&file)?)
                .with_context(|| format!("invalid set-pair file {}", file.display()))?;
            match k {
                Some(k) => Ok(setpair_facts(&fam, k)),
                None => {
                    let max_k = max_transversal_k(&fam);
                    let (mut f, ok) = setpair_facts(&fam, max_k);
                    f.push("max_k", max_k);
                    Ok((f, ok))
                }
            }
        }
    }
}

fn lp(args: &LpArgs) -> Result<Facts> {
    let program = parse_lp(&read_text(&args.file)?).with_context(|| format!("invalid LP file {}", args.file.display()))?;
    let mut f = Facts::new();
    f.push("variables", program.num_variables());
    f.push("constraints", program.num_constraints());
    let outcome = solve_min(&program)?;
    f.push("status", outcome.status());
    if let LpOutcome::Optimal(sol) = &outcome {
        f.push("value", format_rational(&sol.value));
        f.push("primal", sol.primal.iter().map(format_rational).join(","));
        f.push("dual", sol.dual.iter().map(format_rational).join(","));
        f.push("dual_value", format_rational(&sol.dual_value(&program)));
        f.push("certified", true);
    }
    Ok(f)
}
