//! `cylindric`: count and list the families, verify identities over
//! parameter grids, run single bijections and compare independent methods.
//!
//! Exit status is 0 on success, 1 on a usage or input error and 2 when a
//! mathematical check fails.

mod biject;
mod count;
mod oracle;
mod report;
mod verify;

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use cylindric_cli::grid;
use report::{Output, Report};

#[derive(Parser, Debug)]
#[command(name = "cylindric", version, about = "Exact combinatorics of cylindric tableaux and bounded Littlewood identities")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Report format.
    #[arg(long, value_enum, default_value_t = Output::Text, global = true)]
    output: Output,
    /// Size of the worker pool for grid commands.
    #[arg(long, env = "CYLINDRIC_WORKERS", global = true)]
    workers: Option<usize>,
    /// Seed for randomized checks.
    #[arg(long, default_value_t = 0, global = true)]
    seed: u64,
    /// Keep wall-clock timings in reports (otherwise they are zeroed so that
    /// repeated runs are byte-identical).
    #[arg(long, global = true)]
    timings: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Size of a family.
    Count(FamilyArgs),
    /// Members of a family, one per line.
    Enumerate(FamilyArgs),
    /// Check an identity on every cell of a parameter grid.
    Verify(VerifyArgs),
    /// Apply one bijection or involution to one object.
    Biject(BijectArgs),
    /// Compare two methods for the same quantity over a grid.
    OracleDiff(OracleArgs),
}

#[derive(Args, Debug)]
pub struct FamilyArgs {
    /// csyt, ncnn, ncnn_prime, vt, matchings, partitions, or a path family
    /// (T, Mot, Mot', Mot1, Mot2, Mot3, DP, GD, mot2_signed).
    #[arg(long)]
    pub family: String,
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub h: Option<usize>,
    #[arg(long)]
    pub w: Option<usize>,
    /// Crossing bound for ncnn, such as 2 or 3/2.
    #[arg(long)]
    pub r: Option<String>,
    /// Nesting bound for ncnn.
    #[arg(long)]
    pub s: Option<String>,
    /// Vacillating tableau variant: plain, w_star, h_star, prime.
    #[arg(long)]
    pub variant: Option<String>,
    /// Counting method for csyt: chain_dp, brute, factorial_formula.
    #[arg(long)]
    pub method: Option<String>,
    /// Count with the sign (−1)^z.
    #[arg(long)]
    pub signed: bool,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// A Littlewood identity (abl_odd, d1, classical_sp, ...), a
    /// correspondence (syt_VT1, NCNN_VT2, syt_ncnn4, ...), a path identity
    /// (t_Mot1, DP_Mot2, ...), an up-down check (OT_L1, Cor_L3, ...), or one
    /// of csyt_transpose, schur, degeneration, framework, pfaffian_sum,
    /// section5, gordon, minor_summation.
    #[arg(long)]
    pub identity: String,
    #[arg(long)]
    pub h: Option<String>,
    #[arg(long)]
    pub w: Option<String>,
    #[arg(long)]
    pub n: Option<String>,
    #[arg(long)]
    pub vars: Option<String>,
    #[arg(long)]
    pub deg: Option<String>,
    #[arg(long)]
    pub m: Option<String>,
    #[arg(long = "big-n")]
    pub big_n: Option<String>,
    /// Structure matrices for framework and pfaffian_sum (default: all).
    #[arg(long)]
    pub kind: Option<String>,
    /// Number of random instances for gordon and minor_summation.
    #[arg(long, default_value_t = 100)]
    pub trials: usize,
}

#[derive(Args, Debug)]
pub struct BijectArgs {
    /// The map to apply, e.g. chen_phi, ncnn_symmetry, dershowitz, psi.
    #[arg(long)]
    pub map: String,
    /// The object, as JSON or as a step word.
    #[arg(long)]
    pub input: String,
    #[arg(long)]
    pub h: Option<usize>,
    #[arg(long)]
    pub w: Option<usize>,
    /// odd or even.
    #[arg(long)]
    pub parity: Option<String>,
    #[arg(long)]
    pub variant: Option<String>,
    /// triangle or dyck_prefix, for csyt_to_walk and walk_to_csyt.
    #[arg(long)]
    pub target: Option<String>,
}

#[derive(Args, Debug)]
pub struct OracleArgs {
    /// csyt, ncnn, vt or schur.
    #[arg(long)]
    pub quantity: String,
    /// Two comma-separated methods, e.g. chain_dp,brute.
    #[arg(long)]
    pub methods: String,
    #[arg(long)]
    pub n: Option<String>,
    #[arg(long)]
    pub h: Option<String>,
    #[arg(long)]
    pub w: Option<String>,
    #[arg(long)]
    pub vars: Option<String>,
    #[arg(long)]
    pub deg: Option<String>,
    #[arg(long)]
    pub variant: Option<String>,
}

/// Settings shared by every command.
pub struct Ctx {
    pub workers: usize,
    pub seed: u64,
    pub timings: bool,
}

pub type CliResult<T> = Result<T, String>;

/// Lowercases and maps `-` to `_` so `abl-odd` and `abl_odd` agree.
pub fn normalize(s: &str) -> String {
    s.trim().to_ascii_lowercase().replace('-', "_")
}

pub fn need<T: Copy>(v: Option<T>, flag: &str) -> CliResult<T> {
    v.ok_or_else(|| format!("--{flag} is required here"))
}

fn run(cli: Cli) -> CliResult<Report> {
    let ctx = Ctx { workers: grid::worker_count(cli.workers), seed: cli.seed, timings: cli.timings };
    match cli.command {
        Command::Count(a) => count::count(&a),
        Command::Enumerate(a) => count::enumerate(&a),
        Command::Verify(a) => verify::verify(&a, &ctx),
        Command::Biject(a) => biject::biject(&a),
        Command::OracleDiff(a) => oracle::oracle_diff(&a, &ctx),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let output = cli.output;
    match run(cli) {
        Ok(report) => {
            let stdout = std::io::stdout();
            let mut lock = stdout.lock();
            if let Err(e) = report.write(output, &mut lock).and_then(|_| lock.flush()) {
                eprintln!("error: {e}");
                return ExitCode::from(1);
            }
            ExitCode::from(if report.failed { 2 } else { 0 })
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
