use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use hypertri_cli::{cmd_count, cmd_verify, render_pattern_table, CliError, OutputFormat, RunConfig, VerifyConfig};

/// Count the 26 three-hyperedge patterns of a hypergraph.
#[derive(Parser)]
#[command(name = "hypertri", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count every pattern in an edge-list file (one hyperedge per line).
    Count {
        file: PathBuf,
        #[arg(long = "out", value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
        /// Write the report here instead of standard output.
        #[arg(long)]
        output: Option<PathBuf>,
        /// Write degree_dist.csv and outdegree_dist.csv into this directory.
        #[arg(long, value_name = "DIR")]
        dump_degrees: Option<PathBuf>,
        /// Write the per-edge degree table as CSV.
        #[arg(long, value_name = "PATH")]
        dump_edge_degrees: Option<PathBuf>,
        /// Accept an input with no hyperedges.
        #[arg(long)]
        allow_empty: bool,
    },
    /// Compare the pipeline with brute-force oracles on random instances.
    Verify {
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 200)]
        instances: usize,
        #[arg(long, default_value_t = 12)]
        max_n: usize,
        #[arg(long, default_value_t = 15)]
        max_m: usize,
    },
    /// Inspect the pattern table.
    Patterns {
        /// Print every class as CSV.
        #[arg(long)]
        dump_table: bool,
    },
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Count {
            file,
            format,
            output,
            dump_degrees,
            dump_edge_degrees,
            allow_empty,
        } => {
            cmd_count(&RunConfig {
                input: file,
                format,
                output,
                dump_degrees,
                dump_edge_degrees,
                allow_empty,
            })?;
        }
        Command::Verify {
            seed,
            instances,
            max_n,
            max_m,
        } => {
            let summary = cmd_verify(&VerifyConfig {
                seed,
                instances,
                max_n,
                max_m,
            })?;
            println!("{summary}");
        }
        Command::Patterns { dump_table } => {
            if dump_table {
                print!("{}", render_pattern_table());
            } else {
                let n = hypertri_core::PatternTable::global().classes().len();
                println!("{n} patterns; use --dump-table to list them");
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
