//! `hh`: Hochschild (co)homology of finite-dimensional and split algebras.

mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "hh", version, about = "Hochschild cohomology of split algebras, computed exactly")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// dim H^n(A, X) for n up to the degree cap
    Cohomology(AlgebraArgs),
    /// dim H_n(A, X)
    Homology(AlgebraArgs),
    /// Bigraded table of column cohomology for a split algebra
    DoubleComplex(SplitArgs),
    /// dim Ext^q of bimodules over the enveloping algebra
    Ext(ExtArgs),
    /// The long exact sequence of 0 -> M -> L -> L/M -> 0
    Les(SplitArgs),
    /// Run a theorem verifier (or `all`)
    Verify(VerifyArgs),
}

#[derive(Args, Debug, Clone)]
pub struct Common {
    /// Highest degree; defaults to the cap for the algebra's dimension
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    pub max_degree: Option<u64>,
    /// Q or Fp:p, overriding the field named in the input
    #[arg(long)]
    pub field: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[arg(long, default_value_t = 2718)]
    pub seed: u64,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Args, Debug)]
pub struct AlgebraArgs {
    /// Algebra file (structure constants or quiver), or a corpus name
    #[arg(long, conflicts_with = "quiver", required_unless_present = "quiver")]
    pub algebra: Option<String>,
    /// Quiver-with-relations file, or a corpus name
    #[arg(long)]
    pub quiver: Option<String>,
    /// `self`, `dual`, or a bimodule file
    #[arg(long, default_value = "self")]
    pub coeff: String,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Args, Debug)]
pub struct SplitArgs {
    /// Split or triangular algebra file, or a corpus name
    #[arg(long)]
    pub split: String,
    /// Coefficients: `quotient` (L/M), `ideal` (M) or `self` (L)
    #[arg(long, default_value = "quotient")]
    pub coeff: String,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Args, Debug)]
pub struct ExtArgs {
    #[arg(long, conflicts_with = "quiver", required_unless_present = "quiver")]
    pub algebra: Option<String>,
    #[arg(long)]
    pub quiver: Option<String>,
    /// First argument of Ext: `self`, `dual` or a bimodule file
    #[arg(long, default_value = "self")]
    pub module: String,
    /// Second argument of Ext
    #[arg(long, default_value = "self")]
    pub coeff: String,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Theorem id, or `all`
    pub theorem: String,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[arg(long, default_value_t = 2718)]
    pub seed: u64,
    /// Also write the verdict JSON here
    #[arg(long)]
    pub out: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let usage = e.use_stderr();
            let _ = e.print();
            return ExitCode::from(if usage { 2 } else { 0 });
        }
    };
    let outcome = match cli.command {
        Command::Cohomology(a) => commands::cohomology(&a),
        Command::Homology(a) => commands::homology(&a),
        Command::DoubleComplex(a) => commands::double_complex(&a),
        Command::Ext(a) => commands::ext(&a),
        Command::Les(a) => commands::les(&a),
        Command::Verify(a) => commands::verify(&a),
    };
    match outcome {
        Ok(out) => {
            print!("{}", out.text);
            ExitCode::from(if out.verified { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(commands::exit_code(&e))
        }
    }
}
