//! Command-line front end: `snf`, `bbs` and `toda-trace`.
//!
//! Everything writes to caller-supplied streams so the commands can be
//! driven from tests; [`main_with_args`] returns the process exit code.

pub mod matrix_file;

use std::ffi::OsString;
use std::io::{self, Write};
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use gcdtoda_core::{
    classical_snf, smith_normal_form, verify, DenseMatrix, Error as CoreError, GcdTodaState,
    Method, Pid, SnfOptions, SnfResult, UdTodaState,
};
use thiserror::Error;

pub use matrix_file::{MatrixFile, ParseError};

/// Overrides the default iteration cap when `--max-iters` is absent.
pub const MAX_ITERS_ENV: &str = "GCDTODA_MAX_ITERS";

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_CAP: i32 = 2;
pub const EXIT_VERIFY: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "gcdtoda", version, about = "Smith normal form via the gcd-Toda lattice")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Invariant factors of a matrix file, one per line.
    Snf {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = MethodArg::Toda)]
        method: MethodArg,
        /// Iteration cap for the lattice; defaults to max(64, N·Σsize).
        #[arg(long)]
        max_iters: Option<usize>,
        /// Print every lattice state before the factors.
        #[arg(long)]
        trace: bool,
        /// Check the factors against gcds of minors.
        #[arg(long)]
        verify: bool,
        /// Print zero factors of rank-deficient inputs instead of a count.
        #[arg(long)]
        keep_zeros: bool,
    },
    /// Evolve a box-ball state given as `Q:4,3,1;E:3,2`.
    Bbs {
        state: String,
        #[arg(long, default_value_t = 4)]
        steps: usize,
        /// Empty cells shown on either side.
        #[arg(long, default_value_t = 2)]
        pad: usize,
    },
    /// Step a lower bidiagonal matrix file without the termination test.
    TodaTrace {
        file: PathBuf,
        #[arg(long, default_value_t = 4)]
        steps: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Toda,
    Classical,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io { path: String, source: io::Error },
    #[error("{path}: {source}")]
    Parse { path: String, source: ParseError },
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] CoreError),
    #[error("verification failed")]
    VerifyFailed,
    #[error(transparent)]
    Output(#[from] io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(CoreError::CapExceeded { .. }) => EXIT_CAP,
            CliError::VerifyFailed => EXIT_VERIFY,
            _ => EXIT_INPUT,
        }
    }
}

/// Parses `args` (program name first), runs the command, reports errors on
/// `err`, and returns the exit code.
pub fn main_with_args<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(err, "{e}");
            return if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
        }
    };
    let env_cap = std::env::var(MAX_ITERS_ENV).ok();
    match execute(&cli.command, env_cap.as_deref(), out) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            if let CliError::Core(CoreError::CapExceeded { trace, .. }) = &e {
                for line in trace {
                    let _ = writeln!(err, "  {line}");
                }
            }
            e.exit_code()
        }
    }
}

/// Runs one command. `env_cap` is the raw value of [`MAX_ITERS_ENV`].
pub fn execute(command: &Command, env_cap: Option<&str>, out: &mut dyn Write) -> Result<(), CliError> {
    match command {
        Command::Snf { file, method, max_iters, trace, verify, keep_zeros } => {
            let cap = match (max_iters, env_cap) {
                (Some(n), _) => Some(*n),
                (None, Some(raw)) => Some(raw.trim().parse().map_err(|_| {
                    CliError::Usage(format!("{MAX_ITERS_ENV} must be a nonnegative integer, found {raw:?}"))
                })?),
                (None, None) => None,
            };
            let flags = SnfFlags { method: *method, cap, trace: *trace, verify: *verify, keep_zeros: *keep_zeros };
            match load(file)? {
                MatrixFile::Int(m) => cmd_snf(&m, &flags, out),
                MatrixFile::PolyMod { matrix, .. } => cmd_snf(&matrix, &flags, out),
            }
        }
        Command::Bbs { state, steps, pad } => cmd_bbs(state, *steps, *pad, out),
        Command::TodaTrace { file, steps } => match load(file)? {
            MatrixFile::Int(m) => cmd_toda_trace(&m, *steps, out),
            MatrixFile::PolyMod { matrix, .. } => cmd_toda_trace(&matrix, *steps, out),
        },
    }
}

fn load(path: &PathBuf) -> Result<MatrixFile, CliError> {
    let shown = path.display().to_string();
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io { path: shown.clone(), source })?;
    MatrixFile::parse(&text).map_err(|source| CliError::Parse { path: shown, source })
}

#[derive(Clone, Copy, Debug)]
pub struct SnfFlags {
    pub method: MethodArg,
    pub cap: Option<usize>,
    pub trace: bool,
    pub verify: bool,
    pub keep_zeros: bool,
}

pub fn cmd_snf<R: Pid>(a: &DenseMatrix<R>, flags: &SnfFlags, out: &mut dyn Write) -> Result<(), CliError> {
    let result = match flags.method {
        MethodArg::Classical => classical_snf(a),
        MethodArg::Toda if a.is_zero() => SnfResult {
            factors: vec![a.witness().zero_like(); a.rows().min(a.cols())],
            iterations: 0,
            method: Method::Toda,
            trace: Vec::new(),
        },
        MethodArg::Toda => smith_normal_form(a, SnfOptions { max_iters: flags.cap, trace: flags.trace })?,
    };
    if flags.trace {
        if result.method == Method::Classical {
            writeln!(out, "# no lattice trace for the classical method")?;
        }
        for state in &result.trace {
            writeln!(out, "{state}")?;
        }
    }
    let rank = result.rank();
    let shown = if flags.keep_zeros { result.factors.len() } else { rank };
    for f in &result.factors[..shown] {
        writeln!(out, "{f}")?;
    }
    let hidden = result.factors.len() - shown;
    if hidden > 0 {
        writeln!(out, "# {hidden} zero factor{} omitted", if hidden == 1 { "" } else { "s" })?;
    }
    if flags.verify {
        let ok = verify(a, &result);
        writeln!(out, "# verify: {}", if ok { "pass" } else { "fail" })?;
        if !ok {
            return Err(CliError::VerifyFailed);
        }
    }
    Ok(())
}

pub fn cmd_bbs(literal: &str, steps: usize, pad: usize, out: &mut dyn Write) -> Result<(), CliError> {
    let state: UdTodaState = literal.parse()?;
    let mut bbs = state.to_bbs()?;
    let mut states = Vec::with_capacity(steps + 1);
    states.push(bbs.clone());
    for _ in 0..steps {
        bbs = bbs.step();
        states.push(bbs.clone());
    }
    let pad = pad as i64;
    let from = states.iter().map(|s| s.offset()).min().unwrap_or(0) - pad;
    let to = states.iter().map(|s| s.end()).max().unwrap_or(0) + pad;
    for s in &states {
        let quantities = UdTodaState::from_bbs(s)?.conserved_quantities();
        let shown: Vec<String> = quantities.iter().map(u64::to_string).collect();
        writeln!(out, "{}  C: {}", s.render(from, to), shown.join(" "))?;
    }
    Ok(())
}

pub fn cmd_toda_trace<R: Pid>(a: &DenseMatrix<R>, steps: usize, out: &mut dyn Write) -> Result<(), CliError> {
    let mut state = GcdTodaState::from_matrix(a)?;
    state.check_seed()?;
    for t in 0..=steps {
        if t > 0 {
            state = state.step()?;
        }
        let divisors: Vec<String> = state.determinantal_divisors().iter().map(ToString::to_string).collect();
        writeln!(out, "{state} | d: {}", divisors.join(" "))?;
    }
    Ok(())
}
