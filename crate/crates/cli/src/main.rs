use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

mod commands;

#[derive(Parser)]
#[command(name = "degenq", version, about = "Exact computations in U_q(gl_{m,n})")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy)]
struct ParamArgs {
    #[arg(long)]
    m: usize,
    #[arg(long)]
    n: usize,
}

#[derive(Args, Clone, Copy)]
struct CapArgs {
    /// Largest (m+n)^r the run may build.
    #[arg(long, env = "DEGENQ_MAX_DIM", default_value_t = degenq::rep::DEFAULT_MAX_DIM)]
    max_dim: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Link invariant of a braid closure.
    Invariant {
        #[command(flatten)]
        params: ParamArgs,
        /// Whitespace-separated nonzero letters, e.g. "1 -2 1 -2".
        #[arg(long, allow_hyphen_values = true)]
        braid: String,
        #[arg(long)]
        strands: Option<usize>,
        #[arg(long)]
        json: bool,
        #[command(flatten)]
        cap: CapArgs,
    },
    /// Run verification suites and report every check.
    Verify {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        #[arg(long, default_value_t = 3)]
        tensor_depth: usize,
        #[arg(long)]
        json: bool,
        #[command(flatten)]
        cap: CapArgs,
    },
    /// Simple U_q(sl_{2,1}) module with highest weight (±q^ell, lambda2).
    SimpleModule {
        #[arg(long)]
        ell: u32,
        #[arg(long, allow_hyphen_values = true, default_value_t = 1)]
        sign1: i8,
        #[arg(long, allow_hyphen_values = true)]
        lambda2: String,
        #[arg(long)]
        json: bool,
    },
    /// Spectral decomposition of V⊗V under the braid operator.
    Decompose {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long)]
        json: bool,
    },
    /// Evaluate an algebra expression in a representation.
    Eval {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, allow_hyphen_values = true)]
        expr: String,
        /// `natural` or `tensorK` for the K-th tensor power.
        #[arg(long, default_value = "natural")]
        rep: String,
        #[arg(long, value_enum, default_value_t = SideArg::Delta)]
        side: SideArg,
        #[arg(long)]
        json: bool,
        #[command(flatten)]
        cap: CapArgs,
    },
}

#[derive(ValueEnum, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    All,
    Relations,
    Hopf,
    Rmatrix,
    Invariant,
}

#[derive(ValueEnum, Clone, Copy)]
pub enum SideArg {
    Delta,
    DeltaPrime,
}

/// Exit code for a library error.
fn error_code(e: &degenq::Error) -> u8 {
    match e {
        degenq::Error::EqualMNUnsupported => 2,
        degenq::Error::ResourceLimit { .. } => 3,
        _ => 1,
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            // usage errors share the generic failure code so 2 stays free
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    let out = match cli.command {
        Command::Invariant { params, braid, strands, json, cap } => {
            commands::invariant(params.m, params.n, &braid, strands, json, cap.max_dim)
        }
        Command::Verify { params, suite, tensor_depth, json, cap } => {
            commands::verify(params.m, params.n, suite, tensor_depth, json, cap.max_dim)
        }
        Command::SimpleModule { ell, sign1, lambda2, json } => commands::simple_module(ell, sign1, &lambda2, json),
        Command::Decompose { params, json } => commands::decompose(params.m, params.n, json),
        Command::Eval { params, expr, rep, side, json, cap } => commands::eval(params.m, params.n, &expr, &rep, side, json, cap.max_dim),
    };
    match out {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(error_code(&e))
        }
    }
}
