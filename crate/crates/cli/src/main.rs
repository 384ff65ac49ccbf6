mod commands;
mod io;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

#[derive(Parser, Debug)]
#[command(
    name = "filiform",
    version,
    about = "Exact checks for totally geodesic subalgebras of graded filiform Lie algebras"
)]
struct Cli {
    /// Worker threads for parallel checks (default: logical processors).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Write the JSON report here instead of stdout (a directory for construct-m01).
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Include full violation lists and log progress to stderr.
    #[arg(long, short, global = true)]
    verbose: bool,
    #[command(subcommand)]
    command: Command,
}

/// A catalog algebra: `--family g --dim 9 --alpha 1/2`, `--family m01 --dim 7`, ...
#[derive(Args, Debug, Clone)]
pub struct FamilyArgs {
    /// m0, m2, V, m01, m02, m03, g (with --dim) or g7..g11.
    #[arg(long)]
    family: String,
    #[arg(long)]
    dim: Option<usize>,
    /// Parameter of the g family, as p/q.
    #[arg(long, allow_hyphen_values = true)]
    alpha: Option<String>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Emit the structure constants of a catalog algebra.
    Build(FamilyArgs),
    /// Verify the Jacobi identity.
    Jacobi { algebra: PathBuf },
    /// Grading, filiform and O1/O2 membership of the canonical basis.
    Classify { algebra: PathBuf },
    /// Decide whether a subspace is a totally geodesic subalgebra.
    TgsCheck { algebra: PathBuf, ip: PathBuf, subalgebra: PathBuf },
    /// Orthogonal basis adapted to the grading.
    AdaptedBasis { algebra: PathBuf, ip: Option<PathBuf> },
    /// Exhaustive search over spans of basis subsets.
    SearchGraded {
        algebra: PathBuf,
        /// Inner product file (default: identity).
        #[arg(long)]
        ip: Option<PathBuf>,
        /// Search the adapted basis of the inner product rather than the structure basis.
        #[arg(long)]
        adapted: bool,
        #[arg(long, default_value_t = filiform_core::tgs::DEFAULT_SEARCH_CAP)]
        cap: usize,
        /// Also try subsets containing the first basis vector.
        #[arg(long)]
        include_first: bool,
    },
    /// Run and certify the codimension-4 construction in dimension 2k+1.
    ConstructM01 {
        #[arg(long)]
        k: usize,
        /// Comma-separated distinct positive rationals |d_i|.
        #[arg(long, value_delimiter = ',')]
        magnitudes: Option<Vec<String>>,
    },
    /// Kernel of a K_1 + b K_2 + c K_3: closed formula against the nullspace.
    KernelK {
        #[arg(long)]
        k: usize,
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
        #[arg(long, allow_hyphen_values = true)]
        c: String,
    },
    /// Compare the quotient by the top basis vector with a smaller catalog algebra.
    QuotientCheck {
        #[command(flatten)]
        source: FamilyArgs,
        #[arg(long)]
        target: String,
        /// Defaults to dim − 1.
        #[arg(long)]
        target_dim: Option<usize>,
        /// Defaults to --alpha when the target takes a parameter.
        #[arg(long, allow_hyphen_values = true)]
        target_alpha: Option<String>,
    },
    /// Check an isomorphism witness: three files, or a built-in witness via --family.
    IsoCheck {
        src: Option<PathBuf>,
        dst: Option<PathBuf>,
        map: Option<PathBuf>,
        #[arg(long)]
        family: Option<String>,
        #[arg(long)]
        dim: Option<usize>,
        #[arg(long, allow_hyphen_values = true)]
        alpha: Option<String>,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let level = if cli.verbose { "info" } else { "warn" };
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or(level)).init();
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: cannot configure {n} threads: {e}");
            return ExitCode::from(2);
        }
    }
    let ctx = commands::Context { out: cli.out, verbose: cli.verbose };
    match commands::run(cli.command, &ctx) {
        Ok(outcome) => ExitCode::from(outcome as u8),
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
