use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use discharge_lab::cli::{self, CommandKind, Format, RunConfig};

#[derive(Parser)]
#[command(
    name = "discharge-lab",
    about = "Structural analysis of plane graphs: cycles, configurations, discharging, 3-coloring"
)]
struct Args {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Rot,
    Pcode,
}

#[derive(clap::Args)]
struct CommonArgs {
    /// Input file (or directory of .rot files for batch)
    #[arg(long, short)]
    input: PathBuf,
    /// Input format; inferred from the extension or content when omitted
    #[arg(long, value_enum)]
    format: Option<FormatArg>,
    /// Emit a JSON report instead of text
    #[arg(long)]
    json: bool,
    /// Override the outer face by its boundary walk (1-based vertex ids)
    #[arg(long, num_args = 1.., value_name = "V")]
    outer: Option<Vec<usize>>,
}

#[derive(Subcommand)]
enum Command {
    /// Faces, cycles, classifications, and bad partitions of one graph
    Analyze {
        #[command(flatten)]
        common: CommonArgs,
        /// Longest cycle to enumerate (at most 13)
        #[arg(long, default_value_t = 13)]
        max_cycle_len: usize,
    },
    /// Class membership with witnesses
    Class {
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Initial charges, rules R1-R6, and the transfer ledger
    Discharge {
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Exact 3-coloring, or "none"
    Color {
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Boundary-coloring extension property of the outer face
    Extend {
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Run every configuration audit
    Audit {
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Process a planar_code stream or a directory of .rot files
    Batch {
        #[command(flatten)]
        common: CommonArgs,
        /// Process at most this many graphs
        #[arg(long)]
        limit: Option<usize>,
    },
}

fn to_config(command: CommandKind, common: CommonArgs, max_cycle_len: usize, limit: Option<usize>) -> RunConfig {
    RunConfig {
        command,
        input: common.input,
        format: common.format.map(|f| match f {
            FormatArg::Rot => Format::Rot,
            FormatArg::Pcode => Format::Pcode,
        }),
        json: common.json,
        max_cycle_len,
        limit,
        outer: common.outer,
    }
}

fn main() -> ExitCode {
    #[cfg(feature = "parallel")]
    if let Ok(threads) = std::env::var("DISCHARGE_LAB_THREADS") {
        if let Ok(threads) = threads.parse::<usize>() {
            let _ = rayon::ThreadPoolBuilder::new()
                .num_threads(threads.max(1))
                .build_global();
        }
    }

    let args = Args::parse();
    let config = match args.command {
        Command::Analyze {
            common,
            max_cycle_len,
        } => to_config(CommandKind::Analyze, common, max_cycle_len, None),
        Command::Class { common } => to_config(CommandKind::Class, common, 13, None),
        Command::Discharge { common } => to_config(CommandKind::Discharge, common, 13, None),
        Command::Color { common } => to_config(CommandKind::Color, common, 13, None),
        Command::Extend { common } => to_config(CommandKind::Extend, common, 13, None),
        Command::Audit { common } => to_config(CommandKind::Audit, common, 13, None),
        Command::Batch { common, limit } => to_config(CommandKind::Batch, common, 13, limit),
    };

    let outcome = cli::run(&config);
    print!("{}", outcome.output);
    ExitCode::from(outcome.exit_code as u8)
}
