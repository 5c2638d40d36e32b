//! `minmat`: command-line front end for minmat-core.
//!
//! Exit codes: 0 success, 1 verification failure or method disagreement,
//! 2 usage error.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use minmat_core::stochastic::DEFAULT_CHUNKS;
use minmat_core::{Dist, Error, DEFAULT_MINOR_CAP};

mod bench;
mod commands;
mod output;

use output::Format;

#[derive(Debug, Parser)]
#[command(name = "minmat", version, about = "Exact arithmetic for the min(i,j) matrix")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print A_n, C_{n,k}, or a Δ/Θ prefix-sum matrix.
    Matrix {
        kind: MatrixKind,
        #[command(flatten)]
        params: MatrixParams,
        #[arg(long, value_enum, default_value = "plain")]
        format: Format,
    },
    /// Determinant by closed form, Bareiss elimination, or both.
    Det {
        kind: MatrixKind,
        #[command(flatten)]
        params: MatrixParams,
        #[arg(long, value_enum, default_value = "closed")]
        method: DetMethodArg,
        #[arg(long, value_enum, default_value = "plain")]
        format: Format,
    },
    /// Elementary symmetric functions S_k^n of the eigenvalues of A_n.
    Symfun {
        #[arg(long)]
        n: usize,
        /// A single k, or `all` for k = 0..=n.
        #[arg(long, default_value = "all")]
        k: KArg,
        #[arg(long, value_enum, default_value = "closed")]
        method: SymMethodArg,
        #[arg(long, default_value_t = DEFAULT_MINOR_CAP)]
        minor_cap: usize,
        #[arg(long, value_enum, default_value = "plain")]
        format: Format,
    },
    /// Run identity sweeps up to --n-max.
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        suite: SuiteArg,
        #[arg(long, default_value_t = 12)]
        n_max: usize,
        /// Seed for the random determinant cases.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_MINOR_CAP)]
        minor_cap: usize,
        #[arg(long, value_enum, default_value = "plain")]
        format: Format,
    },
    /// Monte-Carlo covariance of a random walk, compared with A_n.
    Simulate {
        #[arg(long, default_value_t = 8)]
        n: usize,
        #[arg(long, default_value_t = 200_000)]
        m: usize,
        #[arg(long, default_value_t = 1.0)]
        sigma: f64,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, value_enum, default_value = "gaussian")]
        dist: DistArg,
        #[arg(long, default_value_t = DEFAULT_CHUNKS)]
        chunks: usize,
        /// Exit 1 when the deviation from sigma^2 A_n exceeds this.
        #[arg(long)]
        max_deviation: Option<f64>,
        #[arg(long, value_enum, default_value = "plain")]
        format: Format,
    },
    /// Time symmetric-function methods over a grid of (n, k).
    Bench {
        #[arg(long, value_delimiter = ',', default_value = "8,10,12")]
        n_list: Vec<usize>,
        /// Defaults to k = ceil(n/2) for each n.
        #[arg(long, value_delimiter = ',')]
        k_list: Vec<usize>,
        #[arg(long, value_enum, value_delimiter = ',', default_value = "closed,minors")]
        methods: Vec<BenchMethod>,
        #[arg(long, default_value_t = 3)]
        reps: usize,
        #[arg(long, default_value_t = DEFAULT_MINOR_CAP)]
        minor_cap: usize,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MatrixKind {
    Min,
    C,
    Delta,
    Theta,
}

#[derive(Debug, Clone, Args)]
pub struct MatrixParams {
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub k: Option<usize>,
    /// Comma-separated increments, e.g. `2,3,4`.
    #[arg(long, allow_hyphen_values = true)]
    pub inc: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DetMethodArg {
    Closed,
    Bareiss,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SymMethodArg {
    Closed,
    Minors,
    Nested,
    Rec6,
    Rec7,
    Ratio,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BenchMethod {
    Closed,
    Minors,
    Nested,
    Rec6,
    Rec7,
    Ratio,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KArg {
    All,
    One(usize),
}

impl std::str::FromStr for KArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        if s == "all" {
            return Ok(KArg::All);
        }
        s.parse()
            .map(KArg::One)
            .map_err(|_| format!("expected a nonnegative integer or `all`, got {s:?}"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SuiteArg {
    Dets,
    Symfun,
    Binomial,
    Fibonacci,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DistArg {
    Rademacher,
    Uniform,
    Gaussian,
}

impl From<DistArg> for Dist {
    fn from(d: DistArg) -> Self {
        match d {
            DistArg::Rademacher => Dist::Rademacher,
            DistArg::Uniform => Dist::Uniform,
            DistArg::Gaussian => Dist::Gaussian,
        }
    }
}

/// What a command reports back to `main` on success.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Ok,
    Disagreement,
}

fn run(cli: Cli) -> Result<Status, Error> {
    match cli.command {
        Command::Matrix {
            kind,
            params,
            format,
        } => commands::matrix(kind, &params, format),
        Command::Det {
            kind,
            params,
            method,
            format,
        } => commands::det(kind, &params, method, format),
        Command::Symfun {
            n,
            k,
            method,
            minor_cap,
            format,
        } => commands::symfun(n, k, method, minor_cap, format),
        Command::Verify {
            suite,
            n_max,
            seed,
            minor_cap,
            format,
        } => commands::verify(suite, n_max, seed, minor_cap, format),
        Command::Simulate {
            n,
            m,
            sigma,
            seed,
            dist,
            chunks,
            max_deviation,
            format,
        } => commands::simulate(
            minmat_core::SimConfig {
                n,
                m,
                sigma,
                seed,
                dist: dist.into(),
                chunks,
            },
            max_deviation,
            format,
        ),
        Command::Bench {
            n_list,
            k_list,
            methods,
            reps,
            minor_cap,
            format,
        } => bench::run(&n_list, &k_list, &methods, reps, minor_cap, format),
    }
}

fn main() -> ExitCode {
    // clap exits with status 2 on malformed arguments
    let cli = Cli::parse();
    match run(cli) {
        Ok(Status::Ok) => ExitCode::SUCCESS,
        Ok(Status::Disagreement) => ExitCode::from(1),
        Err(e @ (Error::Usage(_) | Error::Resource(_))) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(e @ Error::Invariant(_)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
