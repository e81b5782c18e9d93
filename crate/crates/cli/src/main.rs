//! `qchev` — exact width and Seshadri bounds for single-node homogeneous
//! spaces: analyze one space, sweep an atlas, or bound a product.

mod atlas;
mod descriptor;
mod error;
mod product;
mod records;
mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use qchev_core::{NormalizationScale, Rational, DEFAULT_ENUMERATION_CAP};

use descriptor::SpaceDescriptor;
use error::CliError;
use records::{analyze_space, AnalyzeReport};
use render::parse_rational;

#[derive(Parser)]
#[command(
    name = "qchev",
    version,
    about = "Exact-arithmetic width and Seshadri bounds for homogeneous spaces with a single-node parabolic"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
enum Format {
    #[default]
    Json,
    Table,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze one space, e.g. `qchev analyze A3:2`
    Analyze {
        /// Space descriptor, FAMILYrank:node with Bourbaki numbering
        descriptor: String,
        /// Symplectic area of the curve generator in units of π (positive rational)
        #[arg(long, default_value = "1")]
        scale: String,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
        /// Add decimal convenience fields next to the exact values
        #[arg(long)]
        decimal: bool,
    },
    /// Sweep every space up to a rank cap into a JSON-lines atlas
    Atlas {
        #[arg(long)]
        max_rank: usize,
        /// Atlas file; a CSV summary lands next to it. Omitting this streams
        /// the records to stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Keep only canonical representatives under diagram symmetries
        #[arg(long)]
        dedup: bool,
        #[arg(long)]
        decimal: bool,
    },
    /// Bound a product of factors, e.g. `qchev product A1:1:1 A3:2:-1/2 any`
    Product {
        /// Factor specs `descriptor:a`, plus `any` for an arbitrary closed factor
        specs: Vec<String>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
        #[arg(long)]
        decimal: bool,
    },
}

fn enumeration_cap() -> Result<usize, CliError> {
    match std::env::var("QCHEV_CAP") {
        Ok(text) => text
            .parse::<usize>()
            .map_err(|_| CliError::Usage(format!("QCHEV_CAP must be an integer, got {text:?}"))),
        Err(_) => Ok(DEFAULT_ENUMERATION_CAP),
    }
}

fn positive_scale(text: &str) -> Result<(Rational, NormalizationScale), CliError> {
    let value = parse_rational(text).map_err(CliError::Usage)?;
    let scale = NormalizationScale::new(value)
        .map_err(|_| CliError::Usage(format!("scale must be positive, got {text}")))?;
    Ok((value, scale))
}

fn run() -> Result<(), CliError> {
    let cli = Cli::parse();
    let cap = enumeration_cap()?;
    match cli.command {
        Command::Analyze { descriptor, scale, format, decimal } => {
            let descriptor = SpaceDescriptor::parse(&descriptor).map_err(CliError::Usage)?;
            let (value, scale) = positive_scale(&scale)?;
            let analysis = analyze_space(descriptor, cap, scale)?;
            let report = AnalyzeReport::build(&analysis, value, decimal);
            match format {
                Format::Json => {
                    let json =
                        serde_json::to_string(&report).map_err(|e| CliError::Io(e.to_string()))?;
                    println!("{json}");
                }
                Format::Table => print!("{}", report.table()),
            }
            Ok(())
        }
        Command::Atlas { max_rank, out, dedup, decimal } => {
            atlas::run(&atlas::AtlasOptions { max_rank, out, dedup, decimal, cap })
        }
        Command::Product { specs, format, decimal } => {
            let report = product::run(&specs, cap, decimal)?;
            match format {
                Format::Json => {
                    let json =
                        serde_json::to_string(&report).map_err(|e| CliError::Io(e.to_string()))?;
                    println!("{json}");
                }
                Format::Table => print!("{}", report.table()),
            }
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("qchev: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
