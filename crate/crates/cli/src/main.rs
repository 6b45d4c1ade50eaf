use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use delpezzo_cli::{
    cmd_atlas, cmd_eliminate, cmd_enumerate, cmd_indices, cmd_validate, CliError, EnumerateArgs,
    GraphFormat, Output,
};
use delpezzo_core::GraphSelection;

/// Fundamental triplets of log del Pezzo surfaces of index in [1/2, 1).
#[derive(Debug, Parser)]
#[command(name = "delpezzo", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Dot,
    Json,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Which {
    /// Curves in the support of E_M.
    #[value(name = "E")]
    E,
    /// Every curve of the resolution.
    Full,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check every triplet condition on a JSON document.
    Validate { path: PathBuf },
    /// Eliminate the subscheme of a triplet and print the dual graph.
    Eliminate {
        path: PathBuf,
        #[arg(long, value_enum, default_value = "dot")]
        graph: Format,
        #[arg(long, value_enum, default_value = "E")]
        which: Which,
    },
    /// List every type within the bounds as JSON lines.
    Enumerate {
        #[arg(long, default_value_t = 30)]
        a_max: u32,
        #[arg(long, default_value_t = 12)]
        n_max: u32,
        /// Restrict to one multi-index, written a/b.
        #[arg(long)]
        index: Option<String>,
        /// Search from the raw constraints without pruning.
        #[arg(long)]
        no_prune: bool,
    },
    /// Write one DOT file per dual-graph table row.
    Atlas {
        #[arg(long, default_value_t = 12)]
        n_max: u32,
        #[arg(long, default_value_t = 30)]
        a_max: u32,
        #[arg(long, default_value = "atlas")]
        out: PathBuf,
    },
    /// Print the fractional indices with bounded denominator.
    Indices {
        #[arg(long, default_value_t = 12)]
        denominator_cap: u32,
    },
}

fn configure_threads() -> Result<(), String> {
    let Ok(value) = std::env::var("DELPEZZO_THREADS") else {
        return Ok(());
    };
    let threads: usize = value
        .parse()
        .ok()
        .filter(|n| *n > 0)
        .ok_or_else(|| format!("DELPEZZO_THREADS must be a positive integer, got `{value}`"))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| e.to_string())
}

fn run(command: Command) -> Result<Output, CliError> {
    match command {
        Command::Validate { path } => cmd_validate(&path),
        Command::Eliminate { path, graph, which } => cmd_eliminate(
            &path,
            match graph {
                Format::Dot => GraphFormat::Dot,
                Format::Json => GraphFormat::Json,
            },
            match which {
                Which::E => GraphSelection::SupportOfEm,
                Which::Full => GraphSelection::FullExceptional,
            },
        ),
        Command::Enumerate {
            a_max,
            n_max,
            index,
            no_prune,
        } => cmd_enumerate(&EnumerateArgs {
            a_max,
            n_max,
            index,
            no_prune,
        }),
        Command::Atlas { n_max, a_max, out } => cmd_atlas(n_max, a_max, &out),
        Command::Indices { denominator_cap } => Ok(cmd_indices(denominator_cap)),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    if let Err(message) = configure_threads() {
        eprintln!("error: {message}");
        return ExitCode::from(2);
    }
    match run(cli.command) {
        Ok(out) => {
            let _ = std::io::stdout().write_all(out.stdout.as_bytes());
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
