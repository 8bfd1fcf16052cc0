//! Command-line front end: single-semigroup reports, Hilbert tables,
//! corpus verification against the brute-force oracle, and CSV sweeps.
//!
//! Exit codes: 0 success, 1 violated property, 2 invalid input, 3 I/O error.

mod output;

use clap::{Args, Parser, Subcommand, ValueEnum};
use output::{HilbertReport, InfoReport};
use semicurve::{verify, NumericalSemigroup};
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

#[derive(Parser)]
#[command(
    name = "semicurve",
    version,
    about = "Invariants of monomial curve singularities from numerical semigroup generators"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Full invariant report for one semigroup.
    Info {
        /// Comma-separated generators, e.g. 4,9,10.
        gens: GensArg,
        /// Drop redundant generators instead of rejecting them.
        #[arg(long)]
        normalize: bool,
        /// Stabilization margin re-checked past the proven bound.
        #[arg(long, default_value_t = semicurve::DEFAULT_STABILITY_MARGIN)]
        extra: u64,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Hilbert-Samuel values lambda(0..=max_n) with running dimension sums.
    Hilbert {
        /// Comma-separated generators, e.g. 3,7.
        gens: GensArg,
        #[arg(long, default_value_t = 12)]
        max_n: u64,
        /// Drop redundant generators instead of rejecting them.
        #[arg(long)]
        normalize: bool,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Run the full property battery over a corpus; exit 1 on any violation.
    Verify {
        #[command(flatten)]
        corpus: CorpusArgs,
    },
    /// Write one CSV row of invariants per corpus member.
    Sweep {
        #[command(flatten)]
        corpus: CorpusArgs,
        /// Output path for the CSV file.
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
    Csv,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Family {
    /// Coprime two-generator semigroups.
    Plane,
    /// The family on which the regularity bound is tight.
    Sharp,
}

#[derive(Args)]
#[command(group(clap::ArgGroup::new("source").required(true).args(["family", "random"])))]
struct CorpusArgs {
    /// Deterministic family to enumerate.
    #[arg(long, value_enum)]
    family: Option<Family>,
    /// Seeded random corpus (up to 6 generators, each at most 200).
    #[arg(long)]
    random: bool,
    /// Range LO..HI (inclusive) of the smallest generator, for families.
    #[arg(long)]
    a1: Option<RangeArg>,
    /// Largest second generator of the plane family.
    #[arg(long, default_value_t = 60)]
    a2_max: u64,
    /// Seed of the random corpus.
    #[arg(long, default_value_t = 7)]
    seed: u64,
    /// Size of the random corpus.
    #[arg(long, default_value_t = 200)]
    count: u64,
}

/// Inclusive integer range written LO..HI.
#[derive(Copy, Clone)]
struct RangeArg {
    lo: u64,
    hi: u64,
}

impl FromStr for RangeArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (lo, hi) = s
            .split_once("..")
            .ok_or_else(|| format!("expected LO..HI, got '{s}'"))?;
        let lo = lo.parse().map_err(|e| format!("bad range start: {e}"))?;
        let hi = hi.parse().map_err(|e| format!("bad range end: {e}"))?;
        if lo > hi {
            return Err(format!("empty range {lo}..{hi}"));
        }
        Ok(RangeArg { lo, hi })
    }
}

/// Comma-separated positive integers.
#[derive(Clone)]
struct GensArg(Vec<u64>);

impl FromStr for GensArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.split(',')
            .map(|part| {
                part.trim()
                    .parse::<u64>()
                    .map_err(|e| format!("bad generator '{part}': {e}"))
            })
            .collect::<Result<Vec<u64>, String>>()
            .map(GensArg)
    }
}

enum CliError {
    Input(semicurve::Error),
    Violations(u64),
    Io(PathBuf, std::io::Error),
}

impl From<semicurve::Error> for CliError {
    fn from(e: semicurve::Error) -> Self {
        CliError::Input(e)
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Violations(n)) => {
            eprintln!("{n} property violation(s)");
            ExitCode::from(1)
        }
        Err(CliError::Input(e)) => {
            eprintln!("{}: {e}", e.name());
            ExitCode::from(2)
        }
        Err(CliError::Io(path, e)) => {
            eprintln!("io error on {}: {e}", path.display());
            ExitCode::from(3)
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Info {
            gens,
            normalize,
            extra,
            format,
        } => {
            let (semigroup, reduced) = build(&gens.0, normalize)?;
            let report = InfoReport::new(&semigroup, extra, reduced)?;
            match format {
                Format::Table => print!("{}", report.render_table()),
                Format::Json => println!("{}", serde_json::to_string(&report).unwrap()),
                Format::Csv => {
                    println!("{}", InfoReport::SWEEP_HEADER);
                    println!("{}", report.sweep_row());
                }
            }
            Ok(())
        }
        Command::Hilbert {
            gens,
            max_n,
            normalize,
            format,
        } => {
            let (semigroup, _) = build(&gens.0, normalize)?;
            let report = HilbertReport::new(&semigroup, max_n)?;
            match format {
                Format::Table => print!("{}", report.render_table()),
                Format::Json => println!("{}", serde_json::to_string(&report).unwrap()),
                Format::Csv => print!("{}", report.render_csv()),
            }
            Ok(())
        }
        Command::Verify { corpus } => cmd_verify(corpus),
        Command::Sweep { corpus, out } => cmd_sweep(corpus, out),
    }
}

fn build(gens: &[u64], normalize: bool) -> Result<(NumericalSemigroup, bool), CliError> {
    let semigroup = NumericalSemigroup::build(gens, normalize)?;
    let mut input = gens.to_vec();
    input.sort_unstable();
    input.dedup();
    let reduced = input != semigroup.gens().as_slice();
    Ok((semigroup, reduced))
}

fn resolve_corpus(
    args: &CorpusArgs,
) -> Result<(Vec<NumericalSemigroup>, Option<Family>), CliError> {
    match (args.family, args.random) {
        (Some(Family::Plane), false) => {
            let range = args.a1.unwrap_or(RangeArg { lo: 2, hi: 30 });
            Ok((
                verify::plane_corpus(range.lo, range.hi, args.a2_max),
                Some(Family::Plane),
            ))
        }
        (Some(Family::Sharp), false) => {
            let range = args.a1.unwrap_or(RangeArg { lo: 3, hi: 40 });
            Ok((
                verify::sharp_corpus(range.lo, range.hi)?,
                Some(Family::Sharp),
            ))
        }
        (None, true) => Ok((verify::random_corpus(args.seed, args.count, 6, 200)?, None)),
        _ => unreachable!("clap enforces exactly one corpus source"),
    }
}

fn cmd_verify(args: CorpusArgs) -> Result<(), CliError> {
    let (corpus, family) = resolve_corpus(&args)?;
    println!("corpus: {} semigroups", corpus.len());

    let mut outcomes = verify::run_all(&corpus, 10, 12);
    if let Some(Family::Sharp) = family {
        let range = args.a1.unwrap_or(RangeArg { lo: 3, hi: 40 });
        outcomes.push(verify::sharp_family_invariants(range.lo, range.hi));
    }

    let mut violations = 0;
    for outcome in &outcomes {
        println!("{outcome}");
        for sample in &outcome.samples {
            println!("      counterexample: {sample}");
        }
        violations += outcome.failures;
    }
    let total: u64 = outcomes.iter().map(|o| o.cases).sum();
    println!("checked {total} cases across {} properties", outcomes.len());
    if violations > 0 {
        return Err(CliError::Violations(violations));
    }
    Ok(())
}

fn cmd_sweep(args: CorpusArgs, out: PathBuf) -> Result<(), CliError> {
    let (corpus, _) = resolve_corpus(&args)?;
    let io = |e| CliError::Io(out.clone(), e);
    let file = std::fs::File::create(&out).map_err(io)?;
    let mut writer = std::io::BufWriter::new(file);
    writeln!(writer, "{}", InfoReport::SWEEP_HEADER).map_err(io)?;
    for semigroup in &corpus {
        let report = InfoReport::new(semigroup, semicurve::DEFAULT_STABILITY_MARGIN, false)?;
        writeln!(writer, "{}", report.sweep_row()).map_err(io)?;
    }
    writer.flush().map_err(io)?;
    println!("wrote {} rows to {}", corpus.len(), out.display());
    Ok(())
}
