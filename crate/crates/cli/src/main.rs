mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use gcstruct::cache::CACHE_DIR_ENV;
use gcstruct::rootsys::{DEFAULT_ENUMERATION_BUDGET, DEFAULT_RANK_CAP};

/// Classify invariant Dirac and generalized complex structures on
/// homogeneous spaces from exact Lie-algebra data.
#[derive(Debug, Parser)]
#[command(name = "gcstruct", version)]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Global {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Largest rank accepted for each simple factor.
    #[arg(long, global = true, default_value_t = DEFAULT_RANK_CAP)]
    pub rank_cap: usize,
    /// Upper bound on 2^|roots| for subset enumeration.
    #[arg(long, global = true, default_value_t = DEFAULT_ENUMERATION_BUDGET)]
    pub budget: u64,
    /// Worker threads for parallel enumeration.
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    /// Directory for cached structure constants.
    #[arg(long, global = true, env = CACHE_DIR_ENV)]
    pub cache_dir: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Dot,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Sigma {
    Compact,
    Split,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Roots, Cartan matrix and subset counts.
    Roots {
        /// Root system type, e.g. A2, G2 or A1xA1.
        #[arg(long = "type")]
        ty: String,
    },
    /// Admissible subsets with their functional spaces and predicates.
    Classify {
        #[arg(long = "type")]
        ty: String,
        /// `cartan`, or a comma-separated root list such as `+a1,-a1`.
        #[arg(long, default_value = "cartan")]
        isotropy: String,
        #[arg(long, value_enum, default_value_t = Sigma::Compact)]
        sigma: Sigma,
        /// List real Dirac families instead of generalized complex ones.
        #[arg(long)]
        real: bool,
    },
    /// The orbit graph of the moduli space.
    Moduli {
        #[arg(long = "type")]
        ty: String,
        #[arg(long, default_value = "cartan")]
        isotropy: String,
    },
    /// Certificates for a nilpotent orbit of sl_n.
    Nilpotent {
        #[arg(long)]
        n: usize,
        /// Jordan type as comma-separated parts; defaults to the regular orbit.
        #[arg(long)]
        partition: Option<String>,
        #[arg(long, default_value_t = 100)]
        probe_trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(j) = cli.global.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(j.max(1)).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match commands::run(&cli) {
        Ok(out) => {
            print!("{}", out.text);
            if out.certified {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(3)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
