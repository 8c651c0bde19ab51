//! `hurwitz`: branch data checks, realizability search and surface complexity.

use std::io::{self, BufWriter, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::{Deserialize, Serialize};
use serde_json::json;

use hurwitz_core::{
    branching_multisets, hyperelliptic_witness, implied_genus, m_min_search_with, realize_attempt,
    simple_complexity_formula, simple_complexity_search_with, BranchDatum, ComplexityReport,
    Error, Genus, Partition, SearchOptions, DEFAULT_BUDGET,
};

const EXIT_INVALID: u8 = 2;
const EXIT_UNKNOWN: u8 = 3;

#[derive(Parser)]
#[command(name = "hurwitz", version, about = "Branched covers of the sphere: realizability and complexity")]
struct Cli {
    /// Print machine-readable JSON.
    #[arg(long, global = true)]
    json: bool,

    /// Node budget for each realizability search.
    #[arg(long, global = true, env = "HURWITZ_BUDGET", default_value_t = DEFAULT_BUDGET)]
    budget: u64,

    /// Worker threads for the search fan-out.
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    workers: u64,

    /// Largest degree tried by simple-complexity.
    #[arg(long, global = true, default_value_t = 6)]
    d_cap: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Riemann–Hurwitz bookkeeping for a datum.
    Check(DatumArg),
    /// Search for a monodromy tuple realizing a datum.
    Realize(DatumArg),
    /// Simple complexity of the genus-G surface, by formula and by search.
    SimpleComplexity { genus: Genus },
    /// Complexity of the genus-G surface via the minimal total length.
    Complexity { genus: Genus },
    /// The hyperelliptic double cover of the genus-G surface.
    WitnessHyperelliptic { genus: Genus },
    /// Stream every multiset of N branching partitions of D with total length M.
    Enumerate { degree: usize, n: usize, m: usize },
}

#[derive(Args)]
struct DatumArg {
    /// Path to a JSON datum file (`-` for stdin).
    #[arg(required_unless_present = "datum", conflicts_with = "datum")]
    file: Option<PathBuf>,

    /// Inline JSON datum.
    #[arg(long)]
    datum: Option<String>,
}

/// A datum as read from input, before branch-datum validation.
#[derive(Serialize, Deserialize)]
struct DatumInput {
    genus: Genus,
    degree: usize,
    partitions: Vec<Partition>,
}

#[derive(Debug)]
enum Failure {
    Invalid(String),
    Io(io::Error),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Invalid(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

impl DatumArg {
    fn read(&self) -> Result<DatumInput, Failure> {
        let text = match (&self.datum, &self.file) {
            (Some(inline), _) => inline.clone(),
            (None, Some(path)) if path.as_os_str() == "-" => {
                let mut s = String::new();
                io::stdin().read_to_string(&mut s)?;
                s
            }
            (None, Some(path)) => std::fs::read_to_string(path)
                .map_err(|e| Failure::Invalid(format!("{}: {e}", path.display())))?,
            (None, None) => return Err(Failure::Invalid("no datum given".into())),
        };
        serde_json::from_str(&text).map_err(|e| Failure::Invalid(format!("malformed datum: {e}")))
    }
}

fn emit(out: &mut impl Write, json: bool, value: &serde_json::Value, human: &str) -> io::Result<()> {
    if json {
        serde_json::to_writer(&mut *out, value)?;
        writeln!(out)
    } else {
        writeln!(out, "{human}")
    }
}

fn show_partitions(ps: &[Partition]) -> String {
    ps.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

fn report_summary(r: &ComplexityReport) -> String {
    let d = &r.achieved_by;
    let mut s = format!(
        "genus {}: complexity {} (total length {}, {}), achieved by d={}, n={}: {}",
        r.genus,
        r.value,
        r.total_length,
        if r.certified { "certified minimal" } else { "upper bound only" },
        d.degree(),
        d.branch_points(),
        show_partitions(d.partitions()),
    );
    for t in &r.trace {
        s.push_str(&format!(
            "\n  k={:<3} data={:<6} realizable={} unknown={}",
            t.k, t.data_count, t.realizable_found, t.unknown_count
        ));
    }
    s
}

fn run(cli: Cli, out: &mut impl Write) -> Result<u8, Failure> {
    let options = SearchOptions { budget: cli.budget, workers: cli.workers as usize };
    match cli.command {
        Command::Check(arg) => {
            let input = arg.read()?;
            let datum = BranchDatum::new(input.genus, input.degree, input.partitions)?;
            let genus = implied_genus(datum.degree(), datum.partitions()).ok();
            let value = json!({
                "datum": datum,
                "compatible": datum.is_compatible(),
                "simple": datum.is_simple(),
                "total_length": datum.total_length(),
                "implied_genus": genus,
            });
            let human = format!(
                "datum: {datum}\ncompatible: {}\nsimple: {}\ntotal length: {}\nimplied genus: {}",
                datum.is_compatible(),
                datum.is_simple(),
                datum.total_length(),
                genus.map_or("none".to_string(), |g| g.to_string()),
            );
            emit(out, cli.json, &value, &human)?;
            Ok(0)
        }
        Command::Realize(arg) => {
            let input = arg.read()?;
            let result =
                realize_attempt(input.genus, input.degree, input.partitions.clone(), &options)?;
            let mut value = serde_json::to_value(&result).map_err(|e| Failure::Internal(e.to_string()))?;
            value["datum"] = serde_json::to_value(&input).map_err(|e| Failure::Internal(e.to_string()))?;
            let mut human = format!(
                "datum: g={}, d={}, {}\nstatus: {}\nnodes explored: {}",
                input.genus,
                input.degree,
                show_partitions(&input.partitions),
                result.status_name(),
                result.nodes_explored
            );
            if let Some(w) = result.witness() {
                for p in w.perms() {
                    human.push_str(&format!("\n  {:?}", p.images()));
                }
            }
            emit(out, cli.json, &value, &human)?;
            Ok(if result.is_unknown() { EXIT_UNKNOWN } else { 0 })
        }
        Command::SimpleComplexity { genus } => {
            let formula = simple_complexity_formula(genus)?;
            let report = simple_complexity_search_with(genus, cli.d_cap, &options)?;
            let equal = formula == report.value;
            let value = json!({
                "genus": genus,
                "formula": formula,
                "search": report,
                "equal": equal,
            });
            let human = format!(
                "genus {genus}: formula {formula}, search {} at d_min={}",
                report.value,
                report.achieved_by.degree()
            );
            emit(out, cli.json, &value, &human)?;
            if !equal {
                return Err(Failure::Internal(format!(
                    "search value {} disagrees with formula {formula}",
                    report.value
                )));
            }
            Ok(if report.certified { 0 } else { EXIT_UNKNOWN })
        }
        Command::Complexity { genus } => {
            let report = m_min_search_with(genus, &options)?;
            let value = serde_json::to_value(&report).map_err(|e| Failure::Internal(e.to_string()))?;
            emit(out, cli.json, &value, &report_summary(&report))?;
            Ok(if report.certified { 0 } else { EXIT_UNKNOWN })
        }
        Command::WitnessHyperelliptic { genus } => {
            let (datum, witness) = hyperelliptic_witness(genus)?;
            let value = json!({ "datum": datum, "witness": witness });
            let human = format!("datum: {datum}\nwitness: {} copies of [1, 0]", witness.len());
            emit(out, cli.json, &value, &human)?;
            Ok(0)
        }
        Command::Enumerate { degree, n, m } => {
            for parts in branching_multisets(degree, n, m)? {
                if cli.json {
                    serde_json::to_writer(&mut *out, &parts).map_err(|e| Failure::Internal(e.to_string()))?;
                    writeln!(out)?;
                } else {
                    writeln!(out, "{}", show_partitions(&parts))?;
                }
            }
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let code = match run(cli, &mut out) {
        Ok(code) => code,
        Err(Failure::Invalid(msg)) => {
            eprintln!("error: {msg}");
            EXIT_INVALID
        }
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => 0,
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            1
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("error: {msg}");
            1
        }
    };
    if let Err(e) = out.flush() {
        if e.kind() != io::ErrorKind::BrokenPipe {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    }
    ExitCode::from(code)
}
