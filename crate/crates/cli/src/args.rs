use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use sextic_core::rootsystems::SingularitySet;
use sextic_core::stability::KernelSpec;

#[derive(Parser, Debug)]
#[command(name = "sextic", version, about = "Stable symmetries of plane sextics and maximal trigonal curves")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Stable symmetry groups of sextic families.
    Classify(ClassifyArgs),
    /// Skeleton inventories and the table of stable maximal curves in Σ2.
    Dessins(DessinsArgs),
    /// Fiber analysis of a trigonal curve given as a JSON file.
    Curve(CurveArgs),
    /// Runs the built-in consistency checks.
    Verify(VerifyArgs),
    /// Prints the bundled family list.
    DumpFamilies,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Default)]
pub enum Format {
    #[default]
    Json,
    Md,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Default)]
pub enum KernelChoice {
    #[default]
    All,
    First,
}

#[derive(Args, Debug)]
pub struct ClassifyArgs {
    /// Every bundled family.
    #[arg(long, conflicts_with = "set")]
    pub all: bool,
    /// A single singularity set, e.g. "2E6+A5".
    #[arg(long)]
    pub set: Option<SingularitySet>,
    /// Kernel shape for sets outside the catalog: "zero", "p" or "p^r".
    #[arg(long, value_parser = parse_kernel)]
    pub kernel: Option<KernelSpec>,
    #[arg(long, value_enum, default_value_t)]
    pub kernels: KernelChoice,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
    /// Print wall-clock time to stderr.
    #[arg(long)]
    pub timings: bool,
}

#[derive(Args, Debug)]
pub struct DessinsArgs {
    #[arg(long, default_value_t = 2)]
    pub k: u32,
    /// Only skeletons without unstable vertices.
    #[arg(long, conflicts_with = "max_unstable")]
    pub stable: bool,
    #[arg(long, default_value_t = 0)]
    pub max_unstable: usize,
    /// Singular fibers of stable maximal curves in Σ2.
    #[arg(long)]
    pub table1: bool,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}

#[derive(Args, Debug)]
pub struct CurveArgs {
    pub file: PathBuf,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Run only the named checks (repeatable).
    #[arg(long)]
    pub only: Vec<String>,
    /// Family file to use instead of the bundled one.
    #[arg(long)]
    pub families: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}

pub fn parse_kernel(s: &str) -> Result<KernelSpec, String> {
    let s = s.trim();
    if s.eq_ignore_ascii_case("zero") || s == "0" {
        return Ok(KernelSpec::Zero);
    }
    let (p, rank) = match s.split_once('^') {
        Some((p, r)) => (p, r.parse::<usize>().map_err(|e| e.to_string())?),
        None => (s, 1),
    };
    let p: u32 = p.parse().map_err(|_| format!("bad kernel {s:?}"))?;
    if p < 2 || (2..p).any(|d| p % d == 0) || rank == 0 {
        return Err(format!("bad kernel {s:?}: need a prime and a positive rank"));
    }
    Ok(KernelSpec::Elementary { p, rank })
}
