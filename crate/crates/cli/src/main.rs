use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

mod commands;
mod input;

use input::Format;

#[derive(Parser)]
#[command(
    name = "ngsplit",
    version,
    about = "Split, pseudo-split and Nordhaus-Gaddum graph tools"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct InputArgs {
    /// Input file; stdin when omitted.
    input: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "g6")]
    format: Format,
    /// Emit JSON lines instead of TSV.
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Classify each graph from its degree sequence.
    Classify {
        #[command(flatten)]
        io: InputArgs,
        /// Fill in the chromatic number of graphs that are neither split nor
        /// NG-3 by exact search (at most 16 vertices).
        #[arg(long)]
        oracle: bool,
    },
    /// Print ABC- or KS-partitions.
    Partition {
        #[command(flatten)]
        io: InputArgs,
        #[arg(long, value_enum)]
        kind: PartitionKind,
        /// Allow exact chromatic numbers for ABC-partitions of other graphs.
        #[arg(long)]
        oracle: bool,
        /// List KS-partitions up to isomorphism instead of all labelled ones.
        #[arg(long)]
        unlabeled: bool,
    },
    /// Apply one of the class bijections and print the image in graph6.
    Map {
        #[command(flatten)]
        io: InputArgs,
        #[arg(long, value_enum)]
        map: MapName,
        /// Vertex count of the image, required by the growing maps.
        #[arg(long)]
        target_n: Option<usize>,
        /// Which KS-partition (position in `partition --kind ks` output,
        /// starting at 1) forms the triple for phi and psi. Defaults to the
        /// first one (phi) or the first K-max one (psi).
        #[arg(long)]
        ks_index: Option<usize>,
    },
    /// Count graph classes by order and check them against the known values.
    Census {
        /// Enumerate all graphs on 0..=K vertices (K <= 9).
        #[arg(long, conflicts_with = "input")]
        max_n: Option<usize>,
        /// Tally a graph6 stream instead of enumerating.
        #[arg(long)]
        input: Option<PathBuf>,
        /// Run all identity checks and, when enumerating, the bijection sweeps.
        #[arg(long)]
        verify: bool,
        /// One JSON record per order instead of a table.
        #[arg(long)]
        json: bool,
        /// Worker threads.
        #[arg(long, env = "NG_SPLIT_JOBS")]
        jobs: Option<usize>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum PartitionKind {
    Abc,
    Ks,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum MapName {
    Ng1Remove,
    SplitToNg1,
    Ng1ToNg2,
    Ng2ToNg1,
    Ng3Shrink,
    Ng3Grow,
    StripA,
    RebuildA,
    StripAb,
    RebuildD,
    Phi,
    Psi,
}

/// Worst outcome seen so far: 0 ok, 1 domain or verification failure, 2
/// parse or I/O failure.
#[derive(Default)]
pub struct Status(u8);

impl Status {
    pub fn domain(&mut self, index: usize, msg: impl std::fmt::Display) {
        eprintln!("record {index}: {msg}");
        self.0 = self.0.max(1);
    }

    pub fn parse(&mut self, index: usize, msg: impl std::fmt::Display) {
        eprintln!("record {index}: {msg}");
        self.0 = self.0.max(2);
    }

    pub fn fail(&mut self, code: u8) {
        self.0 = self.0.max(code);
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut status = Status::default();
    let outcome = match cli.command {
        Command::Classify { io, oracle } => commands::classify(&io, oracle, &mut status),
        Command::Partition {
            io,
            kind,
            oracle,
            unlabeled,
        } => commands::partition(&io, kind, oracle, unlabeled, &mut status),
        Command::Map {
            io,
            map,
            target_n,
            ks_index,
        } => commands::map(&io, map, target_n, ks_index, &mut status),
        Command::Census {
            max_n,
            input,
            verify,
            json,
            jobs,
        } => commands::census(max_n, input.as_deref(), verify, json, jobs, &mut status),
    };
    if let Err(e) = outcome {
        eprintln!("error: {e}");
        status.fail(2);
    }
    ExitCode::from(status.0)
}
