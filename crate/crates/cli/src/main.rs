mod commands;
mod load;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

pub const DEFAULT_SEED: u64 = 0x5eed_2024;

#[derive(Parser, Debug)]
#[command(name = "wdigraph", version, about = "W-digraphs, their Hecke modules and the checks around them")]
pub struct Cli {
    #[command(flatten)]
    pub config: CliConfig,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct CliConfig {
    /// Coxeter system: a JSON/TOML file or one of a3, b3, h3, affine-a2, i2:N.
    #[arg(long, global = true)]
    pub system: Option<String>,
    /// Length bound for enumerations in infinite groups.
    #[arg(long, global = true, default_value_t = 24, value_parser = clap::value_parser!(u64).range(1..))]
    pub length_bound: u64,
    /// Safety bound on braid-orbit sizes.
    #[arg(long, global = true, value_parser = clap::value_parser!(u64).range(1..))]
    pub orbit_bound: Option<u64>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Build a family digraph over I2(n) and write it as JSON.
    Family {
        #[arg(long)]
        figure: u8,
        #[arg(long)]
        m: usize,
        /// Defaults to the least admissible n.
        #[arg(long)]
        n: Option<u32>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Build the Lusztig-Vogan digraph of the system given by --system.
    Lv {
        /// Automorphism as swaps, e.g. `r:t` or `a:b,c:d`; identity when absent.
        #[arg(long)]
        star: Option<String>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Build the regular digraph of the system given by --system.
    Regular {
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Write one of the built-in example digraphs.
    Example {
        /// affine_a2_cycle, b3_no_bar, h3_nonselfassoc, ex_fig2 or ex_fig3.
        name: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Decide whether a digraph is a W-digraph.
    Validate {
        file: PathBuf,
        /// Show vertex witnesses and rejection details.
        #[arg(long)]
        explain: bool,
        /// Use the matrix relation check instead of the classification.
        #[arg(long, conflicts_with = "both")]
        oracle: bool,
        /// Run both deciders and compare.
        #[arg(long)]
        both: bool,
    },
    /// Components, sources, sinks, path lengths and eigenspace dimensions.
    Analyze { file: PathBuf },
    /// Character values and characteristic polynomials of ρ(T_w).
    Character {
        file: PathBuf,
        /// Comma-separated words.
        #[arg(long, value_delimiter = ',', required = true)]
        words: Vec<String>,
        #[arg(long)]
        charpoly: bool,
        /// Also evaluate at u = Q (a rational such as 1 or -1/2).
        #[arg(long)]
        at: Option<String>,
    },
    /// Reversal identities on words up to a length, plus w0 when W is finite.
    Identities {
        file: PathBuf,
        /// Comma-separated words; overrides --max-length.
        #[arg(long, value_delimiter = ',')]
        words: Vec<String>,
        #[arg(long, default_value_t = 4)]
        max_length: usize,
    },
    /// Propagate a source-fixing bar operator and check consistency.
    BarOp { file: PathBuf },
    /// Run the structural theorem checks.
    Theorems { file: PathBuf },
    /// Write the digraph in Graphviz DOT.
    ExportDot {
        file: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Relation check of a file, or a seeded random agreement test of both deciders.
    Oracle {
        file: Option<PathBuf>,
        /// Random digraphs per n.
        #[arg(long, default_value_t = 200)]
        count: usize,
        #[arg(long, default_value_t = 12)]
        max_vertices: usize,
        #[arg(long, default_value_t = 2)]
        n_min: u32,
        #[arg(long, default_value_t = 6)]
        n_max: u32,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(out) => {
            print!("{}", out.text);
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
