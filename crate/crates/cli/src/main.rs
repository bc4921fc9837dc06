use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

mod commands;

#[derive(Parser, Debug)]
#[command(name = "stag", version, about = "Spanning tree auxiliary graphs: build, count, factor, invert")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    #[command(flatten)]
    opts: Opts,
}

#[derive(clap::Args, Debug, Clone)]
pub struct Opts {
    /// Input graph (.txt edge list or .json); `-` reads stdin as an edge list unless `--format json`.
    #[arg(short, long, global = true)]
    pub input: Option<PathBuf>,

    /// Output file; the extension picks the format (.txt, .json, .dot).
    #[arg(short, long, global = true)]
    pub output: Option<PathBuf>,

    /// Output format; defaults to the one implied by the `-o` extension.
    #[arg(long, global = true, value_enum)]
    pub format: Option<FormatArg>,

    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    #[arg(long, global = true, default_value_t = stag_core::spanning::DEFAULT_MAX_TREES)]
    pub max_trees: usize,

    /// Vertex bound for exhaustive cycle and cut searches.
    #[arg(long, global = true, default_value_t = stag_core::graph::DEFAULT_MAX_N)]
    pub max_n: usize,

    /// Use the brute-force reference implementations.
    #[arg(long, global = true)]
    pub oracle: bool,

    /// Pick an implementation by name (see `stag strategies`).
    #[arg(long, global = true)]
    pub strategy: Option<String>,

    /// Print the verdict as one JSON object on stdout.
    #[arg(long, global = true)]
    pub json: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Edgelist,
    Json,
    Dot,
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// Build the auxiliary graph of the input.
    Aux,
    /// Count spanning trees.
    Count,
    /// List spanning trees, one `t: e1,e2,...` line each.
    Trees,
    /// Blocks, cut vertices and the block-cutpoint tree.
    Blocks,
    /// Prime factors under the Cartesian product.
    Factor,
    /// Decide whether the input is an auxiliary graph and rebuild a minimal preimage.
    Invert,
    /// Non-minimal preimages of the input with the same auxiliary graph.
    Preimages {
        #[arg(long, default_value_t = 10)]
        budget: usize,
    },
    /// Audit the degree, diameter and clique-number relations.
    Params,
    /// Build the auxiliary graph, invert it and compare.
    VerifyRoundtrip,
    /// Seeded random graph.
    Random {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        /// Generate by ear additions so the graph is 2-connected.
        #[arg(long)]
        two_connected: bool,
    },
    /// List the available implementations.
    Strategies,
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Aux => "aux",
            Command::Count => "count",
            Command::Trees => "trees",
            Command::Blocks => "blocks",
            Command::Factor => "factor",
            Command::Invert => "invert",
            Command::Preimages { .. } => "preimages",
            Command::Params => "params",
            Command::VerifyRoundtrip => "verify-roundtrip",
            Command::Random { .. } => "random",
            Command::Strategies => "strategies",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Ok,
    NotAStag,
    Violated,
}

/// What a command produced. Text goes to stdout unless `--json` is set.
pub struct Outcome {
    pub status: Status,
    pub outputs: Vec<PathBuf>,
    pub text: String,
    pub detail: Value,
}

impl Outcome {
    pub fn ok(text: String, detail: Value) -> Self {
        Outcome {
            status: Status::Ok,
            outputs: Vec::new(),
            text,
            detail,
        }
    }
}

fn exit_code(err: &anyhow::Error) -> u8 {
    use stag_core::Error as E;
    match err.downcast_ref::<E>() {
        Some(e) if e.is_resource_guard() => 3,
        Some(E::NotAStag(_) | E::ValidationFailed(_)) => 1,
        _ => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let result = commands::run(&cli.command, &cli.opts);
    let elapsed_ms = start.elapsed().as_secs_f64() * 1000.0;
    let name = cli.command.name();

    let (code, verdict) = match result {
        Ok(out) => {
            let (code, status) = match out.status {
                Status::Ok => (0, "ok"),
                Status::NotAStag => (1, "not_a_stag"),
                Status::Violated => (1, "violated"),
            };
            if !cli.opts.json && !out.text.is_empty() {
                print!("{}", out.text);
            }
            let outputs: Vec<String> = out.outputs.iter().map(|p| p.display().to_string()).collect();
            (
                code,
                json!({ "command": name, "status": status, "outputs": outputs, "detail": out.detail, "elapsed_ms": elapsed_ms }),
            )
        }
        Err(err) => {
            let code = exit_code(&err);
            let status = if code == 1 { "not_a_stag" } else { "error" };
            if !cli.opts.json {
                eprintln!("stag {name}: {err:#}");
            }
            (
                code,
                json!({ "command": name, "status": status, "error": format!("{err:#}"), "exit_code": code, "elapsed_ms": elapsed_ms }),
            )
        }
    };
    if cli.opts.json {
        println!("{verdict}");
    }
    ExitCode::from(code)
}
