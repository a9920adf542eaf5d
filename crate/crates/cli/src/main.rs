//! `mengerkit`: command-line front end for the mengerkit-core library.
//!
//! Exit codes: 0 pass, 1 fail or counterexample, 2 input error, 3 capacity
//! error. Slots are 1-based in files and reports.

mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use mengerkit_core::lab::ChiKind;
use mengerkit_core::theorem::TargetKind;
use mengerkit_core::Flavor;

use report::Report;

#[derive(Debug, Parser)]
#[command(
    name = "mengerkit",
    version,
    about = "Finite (2,n)-semigroups and Menger (2,n)-semigroups"
)]
struct Cli {
    /// Print the machine report as JSON instead of the human summary.
    #[arg(long, global = true)]
    json: bool,

    /// Treat the algebra as Menger or plain. Defaults to the file's flavor.
    #[arg(long, global = true, value_parser = parse_flavor)]
    flavor: Option<Flavor>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check associativity, the Menger identities and representability.
    Check {
        #[arg(long)]
        algebra: PathBuf,
    },
    /// Write the χ, γ and π relations of a concrete algebra.
    Relations {
        #[arg(long)]
        algebra: PathBuf,
        /// Directory for chi.json, gamma.json and pi.json.
        #[arg(long)]
        out_dir: PathBuf,
    },
    /// Compute a closure relation.
    Closure {
        #[arg(long)]
        algebra: PathBuf,
        #[arg(long)]
        pi: Option<PathBuf>,
        /// Defaults to the kind matching the flavor and whether --pi is given.
        #[arg(long, value_enum)]
        kind: Option<KindArg>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Decide whether a target satisfies the characterizing conditions.
    Classify {
        #[arg(long)]
        algebra: PathBuf,
        #[arg(long, value_parser = parse_target)]
        target: TargetKind,
        #[command(flatten)]
        relations: RelationArgs,
    },
    /// Build a canonical representation.
    Represent {
        #[arg(long)]
        algebra: PathBuf,
        #[arg(long)]
        chi: PathBuf,
        /// Sum over the pairs of this relation.
        #[arg(long, conflicts_with = "point_all")]
        gamma: Option<PathBuf>,
        /// Sum over all points (the default).
        #[arg(long)]
        point_all: bool,
        #[arg(long)]
        out: PathBuf,
    },
    /// Round-trip targets through representations and cross-check the
    /// bounded word systems. Missing relations of a concrete algebra are
    /// taken from its functions.
    Verify {
        /// May be repeated; the algebras are verified concurrently.
        #[arg(long, required = true)]
        algebra: Vec<PathBuf>,
        #[arg(long, value_parser = parse_target)]
        target: TargetKind,
        #[command(flatten)]
        relations: RelationArgs,
        #[arg(long, value_parser = parse_bounds, default_value = "4,4")]
        bounds: (usize, usize),
    },
    /// Compare the closure with the brute-force least quasi-order.
    Oracle {
        #[arg(long)]
        algebra: PathBuf,
        #[arg(long)]
        pi: Option<PathBuf>,
        /// Largest carrier the enumeration accepts.
        #[arg(long, default_value_t = mengerkit_core::theorem::DEFAULT_ORACLE_CAP)]
        cap: usize,
    },
    /// Generate seeded concrete algebras.
    Generate {
        #[arg(long, default_value_t = 2)]
        n: usize,
        #[arg(long)]
        base: usize,
        #[arg(long)]
        gens: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1)]
        count: u64,
        #[arg(long)]
        out_dir: PathBuf,
        #[arg(long)]
        closure_cap: Option<usize>,
    },
}

#[derive(Debug, Args)]
struct RelationArgs {
    #[arg(long)]
    chi: Option<PathBuf>,
    #[arg(long)]
    gamma: Option<PathBuf>,
    #[arg(long)]
    pi: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum KindArg {
    ChiPi,
    Chi0,
    ChiBullet,
    Chi0Bullet,
}

impl From<KindArg> for ChiKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::ChiPi => ChiKind::ChiPi,
            KindArg::Chi0 => ChiKind::Chi0,
            KindArg::ChiBullet => ChiKind::ChiPiBullet,
            KindArg::Chi0Bullet => ChiKind::Chi0Bullet,
        }
    }
}

fn parse_flavor(s: &str) -> Result<Flavor, String> {
    s.parse().map_err(|e: mengerkit_core::Error| e.to_string())
}

fn parse_target(s: &str) -> Result<TargetKind, String> {
    s.parse().map_err(|e: mengerkit_core::Error| e.to_string())
}

fn parse_bounds(s: &str) -> Result<(usize, usize), String> {
    let (n, m) = s.split_once(',').ok_or("expected N,M")?;
    let parse = |t: &str| t.trim().parse::<usize>().map_err(|e| format!("`{t}`: {e}"));
    Ok((parse(n)?, parse(m)?))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let mut report = commands::run(&cli).unwrap_or_else(|e| {
        eprintln!("mengerkit: {e}");
        Report::from_error(&e)
    });
    report.command = std::env::args().skip(1).collect();
    if cli.json {
        println!("{}", report.to_json());
    } else {
        for line in &report.summary {
            println!("{line}");
        }
    }
    ExitCode::from(report.exit_code as u8)
}
