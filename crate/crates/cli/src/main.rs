//! `gkm-kirwan <command> --config <path> [--dot <path>] [--out <path>] [--degree-bound N]`

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, ValueEnum};
use gkm_kirwan::config::parse_config;
use gkm_kirwan::report::{run_command, Command};

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Cmd {
    /// Check Assumptions 1-3 and print the valency heuristic.
    Validate,
    /// Emit the moment graph as DOT.
    Graph,
    /// Dimensions of the equivariant cohomology groups.
    Cohomology,
    /// Betti numbers and ring structure of the reduced space.
    Quotient,
    /// All of the above in one document.
    Report,
}

impl From<Cmd> for Command {
    fn from(c: Cmd) -> Self {
        match c {
            Cmd::Validate => Command::Validate,
            Cmd::Graph => Command::Graph,
            Cmd::Cohomology => Command::Cohomology,
            Cmd::Quotient => Command::Quotient,
            Cmd::Report => Command::Report,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "gkm-kirwan", version, about = "Cohomology of circle quotients of Schubert varieties")]
struct Args {
    #[arg(value_enum)]
    command: Cmd,
    /// Job configuration (TOML).
    #[arg(long)]
    config: PathBuf,
    /// Write the moment graph in DOT format here.
    #[arg(long)]
    dot: Option<PathBuf>,
    /// Write the JSON report here.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Polynomial degree bound (cohomological degree is twice this).
    #[arg(long)]
    degree_bound: Option<u32>,
}

fn write_file(path: &Path, contents: &str) -> Result<(), ExitCode> {
    std::fs::write(path, contents).map_err(|e| {
        eprintln!("error: cannot write {}: {e}", path.display());
        ExitCode::from(2)
    })
}

fn run(args: Args) -> Result<ExitCode, ExitCode> {
    let text = std::fs::read_to_string(&args.config).map_err(|e| {
        eprintln!("error: cannot read {}: {e}", args.config.display());
        ExitCode::from(2)
    })?;
    let config = parse_config(&text).map_err(|e| {
        eprintln!("error: {e}");
        ExitCode::from(2)
    })?;
    let output = run_command(args.command.into(), &config, args.degree_bound).map_err(|e| {
        eprintln!("error: {e}");
        ExitCode::from(e.exit_code() as u8)
    })?;

    let dot_path = args.dot.or(config.dot_path.clone());
    let out_path = args.out.or(config.report_path.clone());
    match (&output.dot, &dot_path) {
        (Some(dot), Some(path)) => write_file(path, dot)?,
        (Some(dot), None) if matches!(args.command, Cmd::Graph) => print!("{dot}"),
        _ => {}
    }
    if let Some(path) = &out_path {
        write_file(path, &output.json())?;
    }
    if !(matches!(args.command, Cmd::Graph) && dot_path.is_none()) {
        print!("{}", output.text);
    }
    for a in &output.failed_assumptions {
        eprintln!("assumption {a} failed");
    }
    Ok(ExitCode::from(output.exit_code() as u8))
}

fn main() -> ExitCode {
    run(Args::parse()).unwrap_or_else(|code| code)
}
