use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use duoidal_cli::commands::probes;
use duoidal_cli::{load, run, Command, Suite, PROBES_ENV};

/// Exact checks of duoidal R-matrices, double opmonoidal monads and linear
/// distributors on finite-dimensional bialgebras.
#[derive(Parser)]
#[command(name = "duoidal", version)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Args)]
struct Common {
    /// Instance file (JSON).
    file: PathBuf,
    /// Machine-readable report on standard output.
    #[arg(long)]
    json: bool,
    /// Probe modules and budget, e.g. `trivial,free,budget=64`.
    #[arg(long, env = PROBES_ENV)]
    probes: Option<String>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Bialgebra axioms (and test modules).
    Validate(Common),
    /// Run a check suite.
    Check {
        #[arg(value_parser = Suite::NAMES)]
        suite: String,
        #[command(flatten)]
        common: Common,
    },
    /// R ↦ ξ ↦ R and ξ ↦ R ↦ ξ.
    Roundtrip(Common),
    /// Embed a classical R-matrix as a four-leg element.
    EmbedClassical(Common),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (cmd, common) = match cli.command {
        Cmd::Validate(c) => (Command::Validate, c),
        Cmd::Check { suite, common } => (Command::Check(Suite::parse(&suite).expect("restricted by clap")), common),
        Cmd::Roundtrip(c) => (Command::Roundtrip, c),
        Cmd::EmbedClassical(c) => (Command::EmbedClassical, c),
    };
    let inst = match load(&common.file) {
        Ok(i) => i,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let outcome = probes(&inst, common.probes.as_deref()).and_then(|p| run(cmd, &inst, &p));
    match outcome {
        Ok(o) => {
            if common.json {
                println!("{}", serde_json::to_string_pretty(&o).expect("serializable"));
            } else {
                println!("{o}");
            }
            ExitCode::from(o.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
