mod compute;
mod report;
mod verify;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use poset_zeta::cycles::DEFAULT_ENUMERATION_CAP;
use poset_zeta::{Error, Poset};

use crate::report::{PosetDescriptor, Report};

#[derive(Parser)]
#[command(
    name = "poset-zeta",
    version,
    about = "Zeta and Möbius determinants of finite posets"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a poset in the text format (element count, then cover pairs).
    Gen {
        family: Family,
        /// Chain length, boolean rank, the integer whose divisors to take,
        /// or a poset file to normalize.
        param: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compute one quantity for a poset file.
    Compute {
        file: PathBuf,
        #[arg(long)]
        what: What,
        /// Cycle lengths for `--what fcount`, e.g. `2,2`.
        #[arg(long, value_delimiter = ',')]
        lengths: Vec<usize>,
        /// Largest poset the permutation/cycle enumerations accept.
        #[arg(long, default_value_t = DEFAULT_ENUMERATION_CAP)]
        cap: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a verification suite; exits 1 if any check fails.
    Verify {
        suite: Suite,
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long)]
        max_rank: Option<usize>,
        /// Number of random posets for the randomized suites.
        #[arg(long)]
        count: Option<usize>,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_ENUMERATION_CAP)]
        cap: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Chain,
    Boolean,
    Divisor,
    File,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum What {
    Zeta,
    Mobius,
    Det,
    Charpoly,
    Cvec,
    Fcount,
}

#[derive(Clone, Copy, ValueEnum)]
pub enum Suite {
    Theorem1,
    Theorem2,
    Chain,
    Corollary1,
    Boolean,
    Lemma3,
    Lemma4,
    Eq6,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

/// Failures that stop a command before it can report.
#[derive(Debug)]
pub enum Failure {
    Input(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InexactDivision
            | Error::InternalMismatch(_)
            | Error::FactorizationMismatch(_) => Failure::Internal(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let command_line = std::env::args().skip(1).collect::<Vec<_>>().join(" ");
    match run(cli, command_line) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Internal(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli, command_line: String) -> Result<bool, Failure> {
    match cli.command {
        Command::Gen { family, param, out } => {
            let poset = generate(family, &param)?;
            emit(&poset.to_text(), out.as_deref())?;
            Ok(true)
        }
        Command::Compute {
            file,
            what,
            lengths,
            cap,
            format,
            out,
        } => {
            let poset = read_poset(&file)?;
            let mut report = Report::new(command_line);
            report.poset = Some(describe(&poset, &file.display().to_string()));
            compute::run(&mut report, &poset, what, &lengths, cap)?;
            write_report(&report, format, out.as_deref())?;
            Ok(report.pass)
        }
        Command::Verify {
            suite,
            max_n,
            max_rank,
            count,
            seed,
            cap,
            format,
            out,
        } => {
            let mut report = Report::new(command_line);
            let bounds = verify::Bounds {
                max_n,
                max_rank,
                count,
                seed,
                cap,
            };
            verify::run(&mut report, suite, &bounds)?;
            write_report(&report, format, out.as_deref())?;
            Ok(report.pass)
        }
    }
}

fn generate(family: Family, param: &str) -> Result<Poset, Failure> {
    let number = || {
        param
            .parse::<u64>()
            .map_err(|e| Failure::Input(format!("bad parameter {param:?}: {e}")))
    };
    match family {
        Family::Chain => match number()? {
            0 => Err(Failure::Input("a chain needs at least one element".into())),
            n => Ok(Poset::chain(n as usize)),
        },
        Family::Boolean => Ok(Poset::boolean_algebra(number()? as usize)?),
        Family::Divisor => match number()? {
            0 => Err(Failure::Input(
                "divisors of 0 are not a finite poset".into(),
            )),
            n => Ok(Poset::divisor_poset(n)),
        },
        Family::File => read_poset(Path::new(param)),
    }
}

fn read_poset(path: &Path) -> Result<Poset, Failure> {
    let text =
        fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    Poset::parse(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn describe(p: &Poset, source: &str) -> PosetDescriptor {
    PosetDescriptor {
        source: source.to_owned(),
        elements: p.len(),
        strict_relations: p.strict_relation_size(),
        cover_relations: p.covers().len(),
    }
}

fn emit(text: &str, out: Option<&Path>) -> Result<(), Failure> {
    match out {
        Some(path) => {
            fs::write(path, text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
        }
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn write_report(report: &Report, format: Format, out: Option<&Path>) -> Result<(), Failure> {
    let text = match format {
        Format::Json => report.to_json(),
        Format::Text => report.to_text(),
    };
    emit(&text, out)
}
