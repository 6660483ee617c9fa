use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::Context;
use clap::{Parser, Subcommand, ValueEnum};
use cremona_cli::poly::{self, PolyOptions, Suite};
use cremona_cli::{hexads, iterate, lattice, Report};
use cremona_poly::expr::Mode;
use cremona_poly::PointConfig;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Tsv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Sample,
    Expand,
}

#[derive(Parser)]
#[command(name = "cremona", version, about = "Verification suites for the degree-13 Cremona transformation of P^3")]
struct Cli {
    /// Report format.
    #[arg(long, value_enum, default_value = "json", global = true)]
    format: Format,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Record wall-clock time per check (reports are then not reproducible byte for byte).
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Intersection products on S, the half-class scan and the isometries κ* and η.
    VerifyLattice,
    /// Flats of A[2] and the Weber hexads.
    Hexads,
    /// F_k = η^k(E_03) against the closed form; TSV output is the table of classes.
    Iterate {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        k_max: u64,
    },
    /// Polynomial suites on a six-point configuration.
    Poly {
        #[arg(value_enum)]
        suite: Suite,
        /// Configuration JSON; defaults to the suite's fixture placement.
        #[arg(long)]
        config: Option<PathBuf>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value = "sample")]
        mode: ModeArg,
        #[arg(long, default_value_t = 40)]
        samples: usize,
    },
}

fn load_config(path: &Path) -> anyhow::Result<PointConfig> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    PointConfig::from_json(&text).with_context(|| format!("parsing {}", path.display()))
}

fn emit(text: &str, out: Option<&Path>) -> anyhow::Result<()> {
    match out {
        Some(p) => std::fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            let mut out = std::io::stdout().lock();
            match out.write_all(text.as_bytes()).and_then(|()| out.flush()) {
                Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => Err(e.into()),
                _ => Ok(()),
            }
        }
    }
}

fn render(rep: &Report, format: Format) -> String {
    match format {
        Format::Json => rep.to_json(),
        Format::Tsv => rep.to_tsv(),
    }
}

fn run(cli: Cli) -> anyhow::Result<bool> {
    let out = cli.out.as_deref();
    let rep = match cli.command {
        Command::VerifyLattice => lattice::verify_lattice(cli.timing),
        Command::Hexads => hexads::hexads(cli.timing),
        Command::Iterate { k_max } => {
            let (rep, table) = iterate::iterate(k_max as usize, cli.timing)?;
            match (cli.format, out) {
                (Format::Tsv, _) => emit(&table, out)?,
                (Format::Json, Some(p)) => {
                    emit(&rep.to_json(), Some(p))?;
                    emit(&table, Some(&p.with_extension("tsv")))?;
                }
                (Format::Json, None) => emit(&rep.to_json(), None)?,
            }
            return Ok(rep.passed());
        }
        Command::Poly { suite, config, seed, mode, samples } => {
            let cfg = match config {
                Some(p) => load_config(&p)?,
                None => suite.default_fixture().default_config(),
            };
            let mode = match mode {
                ModeArg::Sample => Mode::Sample,
                ModeArg::Expand => Mode::Expand,
            };
            poly::run(suite, &cfg, PolyOptions { seed, mode, samples, timing: cli.timing })?
        }
    };
    emit(&render(&rep, cli.format), out)?;
    Ok(rep.passed())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
