use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use impartial_core::bounds::{alpha2_table, alphak_table, upper_table};
use impartial_core::exact::expected_degree;
use impartial_core::graph::{gen_gadget, gen_random, gen_random_functional};
use impartial_core::{GraphClass, Limits, MechanismSpec, Oracle, Prng, Runner};
use impartial_tools::format::{
    read_graph, write_bounds_csv, write_graph, Config, DistributionJson, GraphFormat, McJson, RatioJson, SearchJson,
    SelectJson,
};
use impartial_tools::parallel::{par_estimate, par_worst_case_search};
use impartial_tools::settings::{limits_from_env, parse_range, parse_seed};
use impartial_tools::verify::{self, Suite};
use impartial_tools::{exit, Result, ToolError};

/// Impartial selection mechanisms: run, evaluate exactly, sample, verify.
#[derive(Parser)]
#[command(name = "impartial", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a mechanism once and print the selected vertex.
    Select {
        graph: PathBuf,
        #[command(flatten)]
        mech: MechArgs,
        #[arg(long, value_parser = parse_seed, default_value = "0")]
        seed: u64,
    },
    /// Exact selection probabilities.
    Dist {
        graph: PathBuf,
        #[command(flatten)]
        mech: MechArgs,
    },
    /// Exact expected selected indegree over the maximum indegree.
    Ratio {
        graph: PathBuf,
        #[command(flatten)]
        mech: MechArgs,
    },
    /// Exact bound tables as CSV.
    Bounds {
        #[arg(long, value_enum)]
        table: Table,
        /// Range of maximum indegrees, e.g. 1..10 (inclusive).
        #[arg(long, value_parser = parse_range, default_value = "1..10")]
        delta: (usize, usize),
        #[arg(long, default_value_t = 3)]
        k: usize,
        #[arg(long, value_enum, default_value = "no-abstention")]
        class: ClassArg,
        /// Range of graph sizes for the upper-bound table.
        #[arg(long, value_parser = parse_range, default_value = "3..10")]
        n: (usize, usize),
    },
    /// Run invariant suites; exits 1 if any check fails.
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        suite: SuiteArg,
        #[arg(long, default_value_t = 3)]
        max_n: usize,
    },
    /// Smallest exact ratio over every graph of a class.
    Search {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "all")]
        class: ClassArg,
        #[command(flatten)]
        mech: MechArgs,
    },
    /// Monte Carlo estimate of selection frequencies.
    Mc {
        graph: PathBuf,
        #[command(flatten)]
        mech: MechArgs,
        #[arg(long, default_value_t = 100_000)]
        trials: u64,
        #[arg(long, value_parser = parse_seed, default_value = "0")]
        seed: u64,
        /// Failure probability of the reported Hoeffding band.
        #[arg(long, default_value_t = 1e-6)]
        confidence: f64,
    },
    /// Write a graph: a named gadget or a seeded random graph.
    Gen {
        #[arg(long, conflicts_with = "random")]
        gadget: Option<String>,
        /// Random graph with this many vertices.
        #[arg(long)]
        random: Option<usize>,
        /// Vertex count for sized gadgets.
        #[arg(long)]
        n: Option<usize>,
        /// Edge probability for random graphs.
        #[arg(long, default_value_t = 0.5)]
        p: f64,
        /// Random graph where every vertex nominates exactly one other.
        #[arg(long)]
        functional: bool,
        #[arg(long, value_parser = parse_seed, default_value = "0")]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args)]
struct MechArgs {
    #[arg(long, value_enum)]
    mech: MechArg,
    /// Number of blocks for k-partition.
    #[arg(long)]
    k: Option<usize>,
}

impl MechArgs {
    fn spec(&self) -> Result<MechanismSpec> {
        match (self.mech, self.k) {
            (MechArg::TwoPartition, None) => Ok(MechanismSpec::TwoPartition),
            (MechArg::Permutation, None) => Ok(MechanismSpec::Permutation),
            (MechArg::KPartition, Some(k)) => Ok(MechanismSpec::k_partition(k)?),
            (MechArg::KPartition, None) => Err(ToolError::Usage("--mech k-partition needs --k".into())),
            (_, Some(_)) => Err(ToolError::Usage("--k only applies to k-partition".into())),
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum MechArg {
    TwoPartition,
    KPartition,
    Permutation,
}

#[derive(Clone, Copy, ValueEnum)]
enum ClassArg {
    All,
    NoAbstention,
    OutdegreeOne,
}

impl From<ClassArg> for GraphClass {
    fn from(c: ClassArg) -> Self {
        match c {
            ClassArg::All => GraphClass::All,
            ClassArg::NoAbstention => GraphClass::NoAbstention,
            ClassArg::OutdegreeOne => GraphClass::OutdegreeExactlyOne,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Table {
    Alpha2,
    Alphak,
    Upper,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Impartiality,
    Formulas,
    Lemmas,
    All,
}

fn print_json<T: serde::Serialize>(value: &T) -> Result<()> {
    let mut out = io::stdout().lock();
    serde_json::to_writer_pretty(&mut out, value).map_err(io::Error::from)?;
    writeln!(out)?;
    Ok(())
}

fn run(cli: Cli, limits: Limits, overrides: Vec<String>) -> Result<u8> {
    let oracle = Oracle::new(limits);
    let config = || Config::new(&limits, &overrides);
    match cli.command {
        Command::Select { graph, mech, seed } => {
            let spec = mech.spec()?;
            let g = read_graph(&graph)?;
            let winner = Runner::new(&g).run(spec, &mut Prng::new(seed))?;
            let config = config().with_mech(spec).with_seed(seed);
            print_json(&SelectJson { winner: winner.label(), seed, mech: spec.to_string(), config })?;
        }
        Command::Dist { graph, mech } => {
            let spec = mech.spec()?;
            let g = read_graph(&graph)?;
            let d = oracle.distribution(&g, spec)?;
            let e = expected_degree(&d, &g)?;
            print_json(&DistributionJson::new(&g, &d, &e, config().with_mech(spec)))?;
        }
        Command::Ratio { graph, mech } => {
            let spec = mech.spec()?;
            let g = read_graph(&graph)?;
            print_json(&RatioJson::new(&oracle.ratio(&g, spec)?, config().with_mech(spec)))?;
        }
        Command::Bounds { table, delta, k, class, n } => {
            let rows = match table {
                Table::Alpha2 => alpha2_table(delta.0..=delta.1)?,
                Table::Alphak => alphak_table(k, delta.0..=delta.1)?,
                Table::Upper => upper_table(class.into(), n.0..=n.1)?,
            };
            eprintln!("config: {}", serde_json::to_string(&config()).map_err(io::Error::from)?);
            write_bounds_csv(&rows, io::stdout().lock())?;
        }
        Command::Verify { suite, max_n } => {
            let suite = match suite {
                SuiteArg::Impartiality => Suite::Impartiality,
                SuiteArg::Formulas => Suite::Formulas,
                SuiteArg::Lemmas => Suite::Lemmas,
                SuiteArg::All => Suite::All,
            };
            let report = verify::run(suite, max_n, &oracle)?;
            let passed = report.passed();
            print_json(&serde_json::json!({
                "passed": passed,
                "checks": report.checks,
                "failures": report.failures().map(|c| &c.name).collect::<Vec<_>>(),
                "max_n": max_n,
                "config": config(),
            }))?;
            if !passed {
                return Ok(exit::VERIFY_FAILED);
            }
        }
        Command::Search { n, class, mech } => {
            let spec = mech.spec()?;
            let w = par_worst_case_search(&oracle, n, spec, class.into())?;
            print_json(&SearchJson::new(&w, config().with_mech(spec)))?;
        }
        Command::Mc { graph, mech, trials, seed, confidence } => {
            let spec = mech.spec()?;
            if !(confidence > 0.0 && confidence < 1.0) {
                return Err(ToolError::Usage(format!("--confidence must be in (0, 1), got {confidence}")));
            }
            let g = read_graph(&graph)?;
            let est = par_estimate(&g, spec, trials, seed)?;
            print_json(&McJson::new(&est, confidence, config().with_mech(spec).with_seed(seed)))?;
        }
        Command::Gen { gadget, random, n, p, functional, seed, json } => {
            let g = match (gadget, random) {
                (Some(name), None) => gen_gadget(&name, n)?,
                (None, Some(size)) if functional => gen_random_functional(size, seed)?,
                (None, Some(size)) => gen_random(size, p, seed)?,
                _ => return Err(ToolError::Usage("pass --gadget NAME or --random N".into())),
            };
            let format = if json { GraphFormat::Json } else { GraphFormat::Text };
            let mut out = io::stdout().lock();
            if !json {
                writeln!(out, "# {}", serde_json::to_string(&config().with_seed(seed)).map_err(io::Error::from)?)?;
            }
            out.write_all(write_graph(&g, format).as_bytes())?;
        }
    }
    Ok(exit::OK)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = limits_from_env().and_then(|(limits, overrides)| {
        for o in &overrides {
            eprintln!("size guard override: {o}");
        }
        run(cli, limits, overrides)
    });
    match code {
        Ok(c) => ExitCode::from(c),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
