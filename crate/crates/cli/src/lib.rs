//! Command-line front end. [`run`] parses arguments, dispatches, and returns
//! the process exit code: 0 on success, 1 when a verification comes out
//! false, 2 on usage or input errors.

mod commands;
mod render;

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

pub use commands::CommandError;

/// Version string written into CSV and DOT header comments.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Environment variable overriding default size caps, clamped to hard limits.
pub const MAX_N_ENV: &str = "PILAT_MAX_N";

#[derive(Debug, Parser)]
#[command(
    name = "pilat",
    version,
    about = "Finite partition lattices and symbolic cardinal arithmetic"
)]
pub struct Cli {
    /// Worker threads for censuses (default: all cores). Output does not depend on it.
    #[arg(long, global = true)]
    pub threads: Option<usize>,

    /// Write output to this file instead of standard output.
    #[arg(long, short = 'o', global = true)]
    pub output: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List the partitions of {0..n} in RGS order, or print their counts.
    Enumerate {
        #[arg(long)]
        n: usize,
        /// Print Bell, atom and coatom counts instead of listing.
        #[arg(long)]
        counts: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        out: Format,
    },
    /// Keyframe chains, chain checks and maximal chains.
    #[command(subcommand)]
    Chains(ChainsCommand),
    /// Doubleton and bipartition antichains, antichain checks.
    #[command(subcommand)]
    Antichains(AntichainsCommand),
    /// Complement census and complement lists.
    #[command(subcommand)]
    Complements(ComplementsCommand),
    /// Orthocomplementation search and the counting obstruction.
    #[command(subcommand)]
    Ortho(OrthoCommand),
    /// Symbolic cardinal arithmetic.
    #[command(subcommand)]
    Cardinal(CardinalCommand),
    /// Hasse diagram in DOT, bottom to top.
    Hasse(HasseArgs),
}

#[derive(Debug, Subcommand)]
pub enum ChainsCommand {
    /// The keyframe chain on 2^k elements, one literal per line.
    Keyframe {
        #[arg(long)]
        k: usize,
    },
    /// Check a chain file (one literal per line). Exits 1 unless it is a maximal chain.
    Verify(ChainFile),
    /// Extend a chain file to a maximal chain.
    Extend(ChainFile),
    /// List every maximal chain of the lattice on {0..n}.
    Maximal {
        #[arg(long)]
        n: usize,
        /// Print only the number of maximal chains.
        #[arg(long)]
        count: bool,
    },
}

#[derive(Debug, Args)]
pub struct ChainFile {
    pub file: PathBuf,
    /// Ground-set size; inferred from the largest element when omitted.
    #[arg(long)]
    pub n: Option<usize>,
}

#[derive(Debug, Subcommand)]
pub enum AntichainsCommand {
    /// The doubleton antichain (the atoms).
    Doubleton(FamilyArgs),
    /// The bipartition antichain (the coatoms).
    Bipartition(FamilyArgs),
    /// Check an antichain file. Exits 1 unless it is a maximal antichain.
    Verify(AntichainFile),
    /// Greedily extend an antichain file to a maximal antichain.
    Extend(AntichainFile),
}

#[derive(Debug, Args)]
pub struct FamilyArgs {
    #[arg(long)]
    pub n: usize,
    /// Also check maximality against the whole lattice; exits 1 on failure.
    #[arg(long)]
    pub verify: bool,
}

#[derive(Debug, Args)]
pub struct AntichainFile {
    pub file: PathBuf,
    #[arg(long)]
    pub n: usize,
}

#[derive(Debug, Subcommand)]
pub enum ComplementsCommand {
    /// Complement statistics for every partition of {0..n}.
    Census {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        out: Format,
    },
    /// All complements of one partition.
    List {
        partition: String,
        #[arg(long)]
        n: Option<usize>,
    },
}

#[derive(Debug, Subcommand)]
pub enum OrthoCommand {
    /// Search for an orthocomplementation; prints "none" if there is none.
    Search {
        #[arg(long)]
        n: usize,
        /// Permit the n = 5 search.
        #[arg(long)]
        exhaustive: bool,
    },
    /// The atom/coatom counting obstruction for n ≥ 5.
    Witness {
        #[arg(long)]
        n: usize,
    },
}

#[derive(Debug, Subcommand)]
pub enum CardinalCommand {
    /// Evaluate a cardinal expression such as `pow(aleph(w), aleph(0))`.
    Eval {
        expr: String,
        /// `gch` or a JSON model file.
        #[arg(long, default_value = "gch")]
        model: String,
    },
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct HasseArgs {
    /// The whole lattice on {0..n}.
    #[arg(long)]
    pub n: Option<usize>,
    /// Partitions from a chain file.
    #[arg(long)]
    pub chain: Option<PathBuf>,
    /// Partitions from an antichain file.
    #[arg(long)]
    pub antichain: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

/// Runs the CLI on `args` (including the program name).
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                stderr.write_all(text.as_bytes())
            } else {
                stdout.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match execute(&cli, stdout) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            2
        }
    }
}

fn execute(cli: &Cli, stdout: &mut dyn Write) -> Result<i32, CommandError> {
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(t) = cli.threads {
        if t == 0 {
            return Err(CommandError::Usage("--threads must be at least 1".into()));
        }
        pool = pool.num_threads(t);
    }
    let pool = pool.build().map_err(|e| CommandError::Usage(e.to_string()))?;
    let ctx = commands::Context {
        caps: commands::Caps::from_env()?,
        pool,
    };
    match &cli.output {
        Some(path) => {
            let file = File::create(path).map_err(|e| CommandError::Io(path.display().to_string(), e))?;
            let mut w = BufWriter::new(file);
            let code = commands::dispatch(&cli.command, &ctx, &mut w)?;
            w.flush().map_err(|e| CommandError::Io(path.display().to_string(), e))?;
            Ok(code)
        }
        None => {
            let mut w = BufWriter::new(stdout);
            let code = commands::dispatch(&cli.command, &ctx, &mut w)?;
            w.flush().map_err(|e| CommandError::Io("standard output".into(), e))?;
            Ok(code)
        }
    }
}

/// Entry point for the binary.
pub fn main_with_std() -> i32 {
    let stdout = io::stdout();
    let stderr = io::stderr();
    run(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}
