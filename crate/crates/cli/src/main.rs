//! `fovea`: verification suites and queries on bound quivers and their
//! coverings.

mod query;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use fovea::suite::{run_suite, Input, Options, Suite};
use fovea::{Exec, Field, FoveaError};

#[derive(Parser, Debug)]
#[command(
    name = "fovea",
    version,
    about = "Exact checks for coverings of bound quiver algebras"
)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct Global {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Field override, `gf:<p>` or `q`.
    #[arg(long, global = true, env = "FOVEA_FIELD", value_parser = parse_field)]
    field: Option<Field>,
    /// Seed for randomized decomposition.
    #[arg(long, global = true, default_value_t = fovea::modcat::DEFAULT_SEED)]
    seed: u64,
    /// Window radius for covering computations.
    #[arg(long, global = true)]
    window: Option<i64>,
    /// Largest total dimension enumerated.
    #[arg(long, global = true, default_value_t = fovea::modcat::DEFAULT_DIM_CAP)]
    dim_cap: usize,
    /// Largest number of indecomposables enumerated.
    #[arg(long, global = true, default_value_t = fovea::modcat::DEFAULT_COUNT_CAP)]
    count_cap: usize,
    /// Run on one thread.
    #[arg(long, global = true)]
    sequential: bool,
}

impl Global {
    fn options(&self) -> Options {
        Options {
            field: self.field,
            seed: self.seed,
            window: self.window,
            dim_cap: self.dim_cap,
            count_cap: self.count_cap,
            exec: if self.sequential {
                Exec::Sequential
            } else {
                Exec::Parallel
            },
        }
    }
}

fn parse_field(s: &str) -> Result<Field, String> {
    Field::parse(s).map_err(|e| e.to_string())
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run a named suite: cover-axioms, pushdown, phi-identities, kg0, repetitive.
    Suite { name: String, inputs: Vec<String> },
    /// Covering checks.
    #[command(subcommand)]
    Cover(CoverCmd),
    /// Finitely presented functors.
    #[command(subcommand)]
    Fun(FunCmd),
    /// Repetitive categories and their orbit algebras.
    #[command(subcommand)]
    Rep(RepCmd),
    /// Dimension of the hom space between two modules.
    Hom {
        file: String,
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
    },
    /// Push a covering module down to the base.
    Pushdown {
        file: String,
        #[arg(long)]
        module: String,
    },
    /// Evaluate a functor at a module.
    Eval(EvalArgs),
    /// Presentation and profile of a simple functor.
    Simple(SimpleArgs),
    /// Push a covering functor down.
    Phi(FunctorArgs),
    /// Length of a functor with its profile.
    Length(FunctorArgs),
}

#[derive(Subcommand, Debug)]
enum CoverCmd {
    /// Check the covering hom decomposition on stabilizing windows.
    Verify { file: String },
}

#[derive(Subcommand, Debug)]
enum FunCmd {
    Eval(EvalArgs),
    /// Dimension of the natural transformations between two functors.
    Hom {
        file: String,
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
    },
    Simple(SimpleArgs),
    Phi(FunctorArgs),
    /// Level-0 verdicts for each fixture.
    Kg0 {
        inputs: Vec<String>,
    },
}

#[derive(Subcommand, Debug)]
enum RepCmd {
    /// Quiver of the truncation on layers `0..=n`.
    Build {
        file: String,
        #[arg(long, default_value_t = 1)]
        n: usize,
    },
    /// Orbit algebra of the repetitive category under the `k`-th shift.
    Orbit {
        file: String,
        #[arg(long, default_value_t = 1)]
        k: usize,
    },
    /// Graded presentation of the repetitive category.
    Voltage { file: String },
}

#[derive(Args, Debug)]
struct EvalArgs {
    file: String,
    #[arg(long)]
    functor: String,
    #[arg(long)]
    at: String,
}

#[derive(Args, Debug)]
struct SimpleArgs {
    file: String,
    #[arg(long)]
    module: String,
}

#[derive(Args, Debug)]
struct FunctorArgs {
    file: String,
    #[arg(long)]
    functor: String,
}

/// Failures mapped onto exit codes.
enum Failure {
    Checks,
    Usage(String),
    Compute(String),
}

impl From<FoveaError> for Failure {
    fn from(e: FoveaError) -> Self {
        match e {
            FoveaError::Parse { .. }
            | FoveaError::Invalid(_)
            | FoveaError::UnknownVertex(_)
            | FoveaError::Field(_) => Failure::Usage(e.to_string()),
            other => Failure::Compute(other.to_string()),
        }
    }
}

fn read_all(paths: &[String]) -> Result<Vec<Input>, Failure> {
    if paths.is_empty() {
        return Err(Failure::Usage("no input files given".into()));
    }
    paths
        .iter()
        .map(|p| Input::read(p).map_err(Failure::from))
        .collect()
}

fn suite(g: &Global, name: &str, paths: &[String]) -> Result<(), Failure> {
    let suite: Suite = name.parse()?;
    let inputs = read_all(paths)?;
    let report = run_suite(suite, &inputs, &g.options())?;
    print!(
        "{}",
        if g.json {
            report.to_json() + "\n"
        } else {
            report.to_text()
        }
    );
    if report.pass {
        Ok(())
    } else {
        Err(Failure::Checks)
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let g = &cli.global;
    match cli.command {
        Command::Suite { name, inputs } => suite(g, &name, &inputs),
        Command::Cover(CoverCmd::Verify { file }) => suite(g, Suite::CoverAxioms.name(), &[file]),
        Command::Fun(FunCmd::Kg0 { inputs }) => query::kg0(g, &read_all(&inputs)?),
        Command::Fun(FunCmd::Eval(a)) | Command::Eval(a) => query::eval(g, &a),
        Command::Fun(FunCmd::Hom { file, left, right }) => query::fun_hom(g, &file, &left, &right),
        Command::Fun(FunCmd::Simple(a)) | Command::Simple(a) => query::simple(g, &a),
        Command::Fun(FunCmd::Phi(a)) | Command::Phi(a) => query::phi(g, &a),
        Command::Length(a) => query::length(g, &a),
        Command::Hom { file, from, to } => query::hom(g, &file, &from, &to),
        Command::Pushdown { file, module } => query::pushdown(g, &file, &module),
        Command::Rep(RepCmd::Build { file, n }) => query::rep_build(g, &file, n),
        Command::Rep(RepCmd::Orbit { file, k }) => query::rep_orbit(g, &file, k),
        Command::Rep(RepCmd::Voltage { file }) => query::rep_voltage(g, &file),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Checks) => ExitCode::from(1),
        Err(Failure::Compute(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}\n\nRun `fovea --help` for usage.");
            ExitCode::from(2)
        }
    }
}
