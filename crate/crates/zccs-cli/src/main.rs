use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use zccs::analysis::Axis;
use zccs::construct::ZccsRecipe;
use zccs_cli::{
    parse_family, parse_seed, parse_source, parse_weight, run_analyze, run_coverage,
    run_generate, run_verify, CmdResult, EXIT_PARSE,
};

#[derive(Parser)]
#[command(name = "zccs", version, about = "Generate, verify and analyze Z-complementary code sets")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a set from a recipe and write zccs-doc JSON plus sign-matrix text
    Generate {
        /// CCC source: dft:K | table1 | file:PATH
        #[arg(long)]
        source: String,
        /// Seed sequence: barker:P | composite:P1xP2x... | file:PATH
        /// (superseded by --expand, whose family members become the seeds)
        #[arg(long, default_value = "barker:1")]
        seed: String,
        /// Orthogonal family for set expansion: hadamard:P | file:PATH
        #[arg(long)]
        expand: Option<String>,
        /// Barker row weight: barker:K with K the number of rows
        #[arg(long)]
        weight: Option<String>,
        /// Output path prefix (writes PREFIX.json and PREFIX.txt)
        #[arg(long, default_value = "zccs_out")]
        out: String,
    },
    /// Classify a stored set and check it against its declared parameters
    Verify {
        file: PathBuf,
    },
    /// PMEPR bounds, numeric PMEPR and AACS profile dumps as CSV
    Analyze {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = AxisArg::Column)]
        axis: AxisArg,
        /// Envelope oversampling factor (>= 4)
        #[arg(long, default_value_t = 16)]
        oversampling: usize,
        /// Analyze even if the set fails verification
        #[arg(long)]
        force: bool,
        #[arg(long, default_value = "zccs_analysis")]
        out: String,
    },
    /// Enumerate achievable type-II pair lengths up to a cap
    Coverage {
        #[arg(long)]
        max_len: usize,
        /// Write PREFIX_coverage.csv instead of printing
        #[arg(long)]
        out: Option<String>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum AxisArg {
    Row,
    Column,
}

impl From<AxisArg> for Axis {
    fn from(a: AxisArg) -> Self {
        match a {
            AxisArg::Row => Axis::Row,
            AxisArg::Column => Axis::Column,
        }
    }
}

fn configure_workers() -> CmdResult {
    if let Ok(value) = std::env::var("ZCCS_WORKERS") {
        let workers: usize = value.parse().map_err(|_| zccs_cli::Failure {
            code: EXIT_PARSE,
            message: format!("ZCCS_WORKERS must be a positive integer, got {value:?}"),
        })?;
        rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build_global()
            .map_err(|e| zccs_cli::Failure {
                code: EXIT_PARSE,
                message: format!("cannot size worker pool: {e}"),
            })?;
    }
    Ok(())
}

fn dispatch(cli: Cli) -> CmdResult {
    configure_workers()?;
    match cli.command {
        Command::Generate {
            source,
            seed,
            expand,
            weight,
            out,
        } => {
            let recipe = ZccsRecipe {
                source: parse_source(&source)?,
                seed: parse_seed(&seed)?,
                family: expand.as_deref().map(parse_family).transpose()?,
                weight: weight.as_deref().map(parse_weight).transpose()?,
            };
            run_generate(recipe, &out)
        }
        Command::Verify { file } => run_verify(&file),
        Command::Analyze {
            file,
            axis,
            oversampling,
            force,
            out,
        } => run_analyze(&file, axis.into(), oversampling, force, &out),
        Command::Coverage { max_len, out } => run_coverage(max_len, out.as_deref()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            if !failure.message.is_empty() {
                eprintln!("error: {}", failure.message);
            }
            ExitCode::from(failure.code as u8)
        }
    }
}
