use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "radon-lab", version, about = "Exact Helly-type invariants of finite convexity spaces")]
pub struct Cli {
    /// Output style: `key=value` lines or an aligned table.
    #[arg(long, value_enum, global = true, default_value_t = Format::Machine)]
    pub format: Format,

    /// Node budget for exhaustive searches (overrides RADON_LAB_BUDGET).
    #[arg(long, global = true)]
    pub budget: Option<u64>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Machine,
    Human,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate or inspect convexity spaces.
    #[command(subcommand)]
    Space(SpaceCommand),
    /// Radon, Tverberg, Helly and colorful Helly numbers of a space.
    Invariants(InvariantsArgs),
    /// Profile, transversal and (p,q) measurements of a family of convex sets.
    Family(FamilyArgs),
    /// Hypergraph invariants and properties.
    Hg(HgArgs),
    /// Build or verify set-pair families.
    #[command(subcommand)]
    Setpairs(SetpairsCommand),
    /// Solve a plain-text linear program exactly.
    Lp(LpArgs),
    /// Run the property and theorem checks on generated instances.
    VerifyTheorems(SuiteArgs),
    /// One row of invariants per space or hypergraph file.
    Report(ReportArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SpaceKind {
    Interval,
    Gridbox,
    Lattice,
    Powerset,
}

#[derive(Debug, Subcommand)]
pub enum SpaceCommand {
    /// Write a generated space in the space file format.
    Gen {
        #[arg(long, value_enum)]
        kind: SpaceKind,
        /// Comma-separated side lengths; a single number for interval and powerset.
        #[arg(long)]
        dims: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Axioms, halfspaces, separability and hull generators of a space.
    Info {
        #[arg(long)]
        space: PathBuf,
    },
    /// Convex hull of a comma-separated point list.
    Hull {
        #[arg(long)]
        space: PathBuf,
        #[arg(long, default_value = "")]
        set: String,
    },
    /// Nerve of a family file, as maximal faces.
    Nerve {
        #[arg(long)]
        sets: PathBuf,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Toggle {
    On,
    Off,
}

#[derive(Debug, Args)]
pub struct InvariantsArgs {
    #[arg(long)]
    pub space: PathBuf,
    #[arg(long)]
    pub radon: bool,
    #[arg(long, value_name = "K")]
    pub tverberg: Option<usize>,
    #[arg(long)]
    pub helly: bool,
    #[arg(long)]
    pub colorful: bool,
    /// Whether points may repeat in Radon and Tverberg searches.
    #[arg(long, value_enum, default_value_t = Toggle::On)]
    pub multiset: Toggle,
}

#[derive(Debug, Args)]
pub struct FamilyArgs {
    #[arg(long)]
    pub space: PathBuf,
    /// Family file: `family <n>` then one `set ...` line per member.
    #[arg(long)]
    pub sets: PathBuf,
    #[arg(long, value_name = "K")]
    pub profile: Option<usize>,
    #[arg(long)]
    pub transversal: bool,
    /// `p,q`
    #[arg(long, value_name = "P,Q")]
    pub pq: Option<String>,
}

#[derive(Debug, Args)]
pub struct HgArgs {
    #[arg(long)]
    pub file: PathBuf,
    #[arg(long)]
    pub mis: bool,
    #[arg(long)]
    pub chi: bool,
    #[arg(long)]
    pub omega: bool,
    #[arg(long, value_name = "M")]
    pub tkm: Option<usize>,
    #[arg(long, value_name = "M")]
    pub delta: Option<usize>,
    #[arg(long, value_name = "M")]
    pub dkm: Option<usize>,
    #[arg(long = "min-m", value_name = "CAP")]
    pub min_m: Option<usize>,
    /// Write the associated space to this file.
    #[arg(long, value_name = "OUT")]
    pub assoc: Option<PathBuf>,
    /// Replay the Radon bound argument for this m.
    #[arg(long, value_name = "M")]
    pub certificate: Option<usize>,
}

#[derive(Debug, Subcommand)]
pub enum SetpairsCommand {
    Build {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        k: usize,
        /// Subset order file (`T` lines, 1-based); only for m = k.
        #[arg(long)]
        order: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    Verify {
        #[arg(long)]
        file: PathBuf,
        /// Tuple size; without it the largest size that holds is reported.
        #[arg(long)]
        k: Option<usize>,
    },
}

#[derive(Debug, Args)]
pub struct LpArgs {
    #[arg(long)]
    pub file: PathBuf,
}

#[derive(Debug, Args)]
pub struct SuiteArgs {
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    /// Worker threads; 1 runs everything sequentially.
    #[arg(long, default_value_t = 1)]
    pub jobs: usize,
}

#[derive(Debug, Args)]
pub struct ReportArgs {
    /// Space or hypergraph files.
    #[arg(required = true)]
    pub inputs: Vec<PathBuf>,
}
