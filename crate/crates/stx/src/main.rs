use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use stx::commands::{
    cmd_export, cmd_sc, cmd_sweep_finals, cmd_verify_figures, write_output, ExportFormat,
    ExportTarget, Method,
};
use stx::formats::write_csv;
use stx::{exit_code, CliError, ExperimentReport};
use stx_core::Limits;

/// State complexity experiments for the star of symmetric difference.
#[derive(Parser)]
#[command(name = "stx", version)]
struct Cli {
    /// Worker threads for sweeps (0 = one per core).
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,
    /// Largest number of states any construction may materialize.
    #[arg(long, global = true)]
    cap_states: Option<u128>,
    /// Largest alphabet any monster may have.
    #[arg(long, global = true)]
    cap_letters: Option<u128>,
    /// Largest transition table, in entries.
    #[arg(long, global = true)]
    cap_cells: Option<u128>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Minimal StX size at (n1, n2) by one or all methods.
    Sc {
        #[arg(long)]
        n1: usize,
        #[arg(long)]
        n2: usize,
        #[arg(long, value_enum, default_value_t = Method::All)]
        method: Method,
    },
    /// Minimal sizes over every pair of final sets.
    SweepFinals {
        #[arg(long)]
        n1: usize,
        #[arg(long)]
        n2: usize,
        /// Write the per-pair CSV here instead of stdout.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Check the reconstructed drawings edge by edge.
    VerifyFigures,
    /// Write an automaton or table.
    Export {
        #[arg(long, value_enum)]
        what: ExportTarget,
        #[arg(long, value_enum)]
        format: ExportFormat,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Sizes of the witness machines.
        #[arg(long, default_value_t = 4)]
        n1: usize,
        #[arg(long, default_value_t = 4)]
        n2: usize,
    },
}

fn limits(cli: &Cli) -> Limits {
    let d = Limits::default();
    Limits {
        max_states: cli.cap_states.unwrap_or(d.max_states),
        max_letters: cli.cap_letters.unwrap_or(d.max_letters),
        max_cells: cli.cap_cells.unwrap_or(d.max_cells),
    }
}

fn emit(text: &str, out: Option<&PathBuf>) -> Result<(), CliError> {
    match out {
        Some(path) => write_output(path, text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: &Cli) -> Result<Vec<ExperimentReport>, CliError> {
    let limits = limits(cli);
    match &cli.command {
        Command::Sc { n1, n2, method } => cmd_sc(*n1, *n2, *method, &limits),
        Command::SweepFinals { n1, n2, csv } => {
            let (report, rows) = cmd_sweep_finals(*n1, *n2, &limits)?;
            if !rows.is_empty() {
                emit(&write_csv(&rows)?, csv.as_ref())?;
            }
            Ok(vec![report])
        }
        Command::VerifyFigures => Ok(vec![cmd_verify_figures()?]),
        Command::Export {
            what,
            format,
            out,
            n1,
            n2,
        } => {
            let mut text = cmd_export(*what, *format, (*n1, *n2))?;
            if !text.ends_with('\n') {
                text.push('\n');
            }
            emit(&text, out.as_ref())?;
            Ok(Vec::new())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.jobs > 0 {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(cli.jobs)
            .build_global()
        {
            eprintln!("stx: {e}");
            return ExitCode::from(2);
        }
    }
    match run(&cli) {
        Ok(reports) => {
            let to_stderr = matches!(&cli.command, Command::SweepFinals { csv: None, .. });
            for r in &reports {
                if to_stderr {
                    eprintln!("{}", r.to_json());
                } else {
                    println!("{}", r.to_json());
                }
            }
            ExitCode::from(exit_code(&reports) as u8)
        }
        Err(e) => {
            eprintln!("stx: {e}");
            ExitCode::from(2)
        }
    }
}
