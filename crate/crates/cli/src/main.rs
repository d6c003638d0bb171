//! `primsync`: command-line front end for the synchronization analyses.
//!
//! Exit codes: 0 when the property holds or the computation succeeded, 1
//! when the property fails (a witness is reported), 2 on usage, input or
//! cap errors.

mod commands;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

#[derive(Parser, Debug)]
#[command(name = "primsync", version, about = "Synchronization of automata and permutation groups")]
struct Cli {
    #[command(flatten)]
    opts: Opts,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum Format {
    Text,
    Json,
}

/// Options shared by all subcommands; they are echoed into JSON reports.
#[derive(Args, Debug, Clone, Serialize)]
struct Opts {
    /// Maximum monoid or group elements enumerated.
    #[arg(long, global = true, default_value_t = 1_000_000, value_parser = clap::value_parser!(u64).range(1..))]
    cap_monoid: u64,
    /// Maximum search nodes for the graph solvers.
    #[arg(long, global = true, default_value_t = 10_000_000, value_parser = clap::value_parser!(u64).range(1..))]
    cap_nodes: u64,
    /// Maximum sections or partitions enumerated.
    #[arg(long, global = true, default_value_t = 100_000, value_parser = clap::value_parser!(u64).range(1..))]
    cap_sections: u64,
    /// Seed for the sampling subcommands.
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Catalog entry to use as input.
    #[arg(long, global = true)]
    catalog: Option<String>,
    /// Group file.
    #[arg(long, global = true)]
    group: Option<PathBuf>,
    /// Transformation file.
    #[arg(long, global = true)]
    map: Option<PathBuf>,
    /// Automaton file.
    #[arg(long, global = true)]
    dfa: Option<PathBuf>,
    /// Graph file.
    #[arg(long, global = true)]
    graph: Option<PathBuf>,
    /// Re-check every reported witness from the definitions.
    #[arg(long, global = true)]
    verify: bool,
}

#[derive(Subcommand, Debug, Clone, Serialize)]
#[serde(rename_all = "kebab-case")]
enum Command {
    /// Decide whether a transitive group is synchronizing.
    SyncGroup,
    /// List the non-synchronizing partitions and their regular sections.
    NonsyncPartitions,
    /// Compute m(G) and M(G).
    Params,
    /// Test random maps with non-uniform kernel for synchronization.
    AlmostSync {
        #[arg(long, default_value_t = 1000)]
        trials: usize,
    },
    /// Decide whether the group together with a map generates a constant.
    Synchronizes,
    /// Find or check a reset word of an automaton.
    ResetWord {
        /// Automaton file (alternative to --dfa / --catalog).
        path: Option<PathBuf>,
        /// Comma-separated word to check, e.g. BLUE,RED,BLUE,BLUE.
        #[arg(long)]
        check: Option<String>,
        /// Also compute a shortest reset word by subset search.
        #[arg(long)]
        shortest: bool,
    },
    /// Clique and chromatic numbers of a graph.
    GraphStats,
    /// Decide whether every endomorphism is an automorphism or a colouring.
    PseudoCore,
    /// List or emit catalog entries.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
}

#[derive(Subcommand, Debug, Clone, Serialize)]
#[serde(rename_all = "kebab-case")]
enum CatalogAction {
    List,
    /// Write the entry in its file format.
    Emit { name: String },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let format = cli.opts.format;
    match commands::run(&cli.command, &cli.opts) {
        Ok(out) => {
            let body = match format {
                Format::Json => {
                    let doc = serde_json::json!({
                        "version": primsync::sync::SCHEMA_VERSION,
                        "config": { "command": &cli.command, "options": &cli.opts },
                        "exit": out.code,
                        "result": out.json,
                    });
                    serde_json::to_string_pretty(&doc).expect("serializable") + "\n"
                }
                Format::Text => out.text,
            };
            // a closed pipe (e.g. `| head`) is not an error worth reporting
            let _ = std::io::stdout().lock().write_all(body.as_bytes());
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
