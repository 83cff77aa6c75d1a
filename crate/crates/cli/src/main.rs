use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use bigeo_cli::commands::{
    cmd_deriv, cmd_interp, cmd_matrix, cmd_seq, DerivArgs, InterpArgs, MatrixArgs, SeqArgs,
};

/// Bigeometric calculus toolbox: Hermite interpolation, derivatives,
/// sequence-space diagnostics, and matrix transformations.
#[derive(Parser)]
#[command(name = "bigeo", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Bigeometric Hermite interpolation from a node file
    Interp {
        /// Node file: CSV with header x,f[,fprime|dgf] or a JSON array
        #[arg(long)]
        input: PathBuf,
        /// Write evaluations (CSV x,p_G(x)) here instead of stdout
        #[arg(long)]
        output: Option<PathBuf>,
        /// Evaluation grid A:B:STEP
        #[arg(long, conflicts_with = "at")]
        grid: Option<String>,
        /// Explicit evaluation points X[,X...]
        #[arg(long)]
        at: Option<String>,
        /// Print numbers in the 4-decimal table style
        #[arg(long)]
        paper_view: bool,
        /// Log-domain tolerance for node distinctness
        #[arg(long, default_value_t = 1e-12)]
        tolerance: f64,
    },
    /// Bigeometric derivative of a builtin function or a point triple
    Deriv {
        /// Builtin function: ln, exp, or sin
        function: Option<String>,
        /// Evaluation point for the builtin
        #[arg(long)]
        at: Option<f64>,
        /// Point a for the (a, f(a), f'(a)) form
        #[arg(long)]
        point: Option<f64>,
        /// f(a)
        #[arg(long)]
        f: Option<f64>,
        /// f'(a)
        #[arg(long)]
        fprime: Option<f64>,
        #[arg(long)]
        paper_view: bool,
    },
    /// Sequence-space diagnostics for a generated sequence
    Seq {
        /// Term rule over k and m, e.g. 'exp(k^(m-1))'
        generator: String,
        /// Difference order (also bound to `m` in the generator)
        #[arg(long, default_value_t = 1)]
        m: usize,
        /// Norm exponent: a real ≥ 1 or 'inf'
        #[arg(long, default_value = "1")]
        p: String,
        /// Truncation for sums and diagnostics
        #[arg(long = "N", default_value_t = 200)]
        n_trunc: usize,
        /// One of: norm, member, dual, lemma-diag
        #[arg(long, default_value = "norm")]
        mode: String,
        /// Write the report here instead of stdout
        #[arg(long)]
        output: Option<PathBuf>,
        #[arg(long)]
        paper_view: bool,
    },
    /// Derived-matrix construction and the consistency identity
    Matrix {
        /// Matrix file: CSV rows of positive reals
        matrix: PathBuf,
        /// Sequence file: positive reals, comma or newline separated
        sequence: PathBuf,
        /// Difference order
        #[arg(long, default_value_t = 1)]
        m: usize,
        /// Row of the derived matrix to check
        #[arg(long, default_value_t = 1)]
        i: usize,
        #[arg(long)]
        paper_view: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut stdout = std::io::stdout();
    let result = match cli.command {
        Command::Interp {
            input,
            output,
            grid,
            at,
            paper_view,
            tolerance,
        } => cmd_interp(
            &InterpArgs {
                input,
                output,
                grid,
                at,
                paper_view,
                tolerance,
            },
            &mut stdout,
        ),
        Command::Deriv {
            function,
            at,
            point,
            f,
            fprime,
            paper_view,
        } => cmd_deriv(
            &DerivArgs {
                function,
                at,
                point,
                f,
                fprime,
                paper_view,
            },
            &mut stdout,
        ),
        Command::Seq {
            generator,
            m,
            p,
            n_trunc,
            mode,
            output,
            paper_view,
        } => cmd_seq(
            &SeqArgs {
                generator,
                m,
                p,
                n_trunc,
                mode,
                output,
                paper_view,
            },
            &mut stdout,
        ),
        Command::Matrix {
            matrix,
            sequence,
            m,
            i,
            paper_view,
        } => cmd_matrix(
            &MatrixArgs {
                matrix,
                sequence,
                m,
                i,
                paper_view,
            },
            &mut stdout,
        ),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error[{}]: {e}", e.category());
            ExitCode::from(e.exit_code().clamp(0, 255) as u8)
        }
    }
}
