//! Command-line front end: build minuscule modules, check relations, and
//! export generator matrices.

mod commands;
mod document;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(
    name = "chevalley",
    version,
    about = "Chevalley groups of minuscule type over commutative rings"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

/// Which module to build.
#[derive(Args, Debug, Clone)]
pub struct Target {
    /// Cartan type, either a family letter (with --rank) or a full name like E6.
    #[arg(long = "type", value_name = "TYPE")]
    pub lie_type: String,
    #[arg(long)]
    pub rank: Option<usize>,
    /// Minuscule nodes, 1-based, comma separated.
    #[arg(
        long = "nodes",
        visible_alias = "node",
        value_delimiter = ',',
        required = true
    )]
    pub nodes: Vec<usize>,
    /// Coefficient ring: int, rat, gfp:<p>, mod:<n>, poly:<vars>.
    #[arg(long)]
    pub ring: Option<String>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the weights of the module in basis order.
    Orbit(Target),
    /// Print generator matrices as JSON documents.
    Generators(Target),
    /// Run relation checks and print a pass/fail table.
    Verify {
        #[command(flatten)]
        target: Target,
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        /// Largest Weyl group the weyl suite will enumerate.
        #[arg(long, default_value_t = chevalley::chevgroup::DEFAULT_WEYL_CAP)]
        cap: usize,
    },
    /// Describe the center over a prime field.
    Center(Target),
    /// Count the group over a finite ring by closure.
    Enumerate {
        #[command(flatten)]
        target: Target,
        #[arg(long, default_value_t = 1_000_000)]
        cap: usize,
    },
    /// Factor an upper unitriangular matrix document into root elements.
    Factorize {
        #[command(flatten)]
        target: Target,
        #[arg(long = "in", value_name = "FILE")]
        input: PathBuf,
    },
    /// Write generator matrices as text assignments.
    Export {
        #[command(flatten)]
        target: Target,
        #[arg(long, value_enum, default_value_t = ExportFormat::Gap)]
        format: ExportFormat,
    },
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Serre,
    Braid,
    Commutator,
    Torus,
    Weyl,
    All,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExportFormat {
    Gap,
}

#[derive(Debug)]
pub enum Failure {
    /// Bad input: unknown type, invalid node, unsupported ring, ...
    Usage(String),
    /// A check did not hold.
    Verification(String),
    CapExceeded(String),
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Verification(_) => 1,
            Failure::CapExceeded(_) => 3,
        }
    }
}

fn configure_threads() -> Result<(), Failure> {
    let Ok(v) = std::env::var("CHEVALLEY_THREADS") else {
        return Ok(());
    };
    let n: usize = v.parse().map_err(|_| {
        Failure::Usage(format!(
            "CHEVALLEY_THREADS must be a positive integer, got {v:?}"
        ))
    })?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| Failure::Usage(e.to_string()))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = configure_threads().and_then(|()| match cli.command {
        Command::Orbit(t) => commands::orbit(&t),
        Command::Generators(t) => commands::generators(&t),
        Command::Verify { target, suite, cap } => commands::verify(&target, suite, cap),
        Command::Center(t) => commands::center(&t),
        Command::Enumerate { target, cap } => commands::enumerate(&target, cap),
        Command::Factorize { target, input } => commands::factorize(&target, &input),
        Command::Export { target, format } => commands::export(&target, format),
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            let msg = match &f {
                Failure::Usage(m) | Failure::Verification(m) | Failure::CapExceeded(m) => m,
            };
            eprintln!("error: {msg}");
            ExitCode::from(f.exit_code())
        }
    }
}
