//! Command-line driver: verification sweeps, exact solves, and momentum
//! transforms.
//!
//! Exit codes: 0 when everything passed, 1 when at least one identity check
//! failed (the report names it), 2 on input or usage errors.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::{Deserialize, Serialize};

use trispinor_core::finsler::{cubic_form, Momentum9};
use trispinor_core::matrix::MatrixCN;
use trispinor_core::scalar::{format_rational, parse_rational};
use trispinor_core::trispinor_map::{random_unimodular, sl3_transform};
use trispinor_core::verify::{run_suite, Suite, VerifyConfig};
use trispinor_core::wave::{solution_space, Mass, WaveFunction12};

#[derive(Parser)]
#[command(
    name = "trispinor",
    version,
    about = "Exact verification and solving for the 9-momentum 3-spinor formalism"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run verification suites, streaming one JSON report per line
    Verify(VerifyArgs),
    /// Solve the momentum-linear wave equation exactly
    Solve(SolveArgs),
    /// Apply a seeded SL(3,C) transform to a momentum
    Transform(TransformArgs),
}

#[derive(Args)]
struct VerifyArgs {
    /// Suites to run; all of them when omitted
    #[arg(value_parser = parse_suite)]
    suites: Vec<Suite>,

    /// Trials per randomized suite (exhaustive suites ignore this)
    #[arg(long, default_value_t = 1000, value_parser = clap::value_parser!(u64).range(1..))]
    trials: u64,

    /// Seed for all randomized suites
    #[arg(long, default_value_t = 0)]
    seed: u64,

    /// Write reports to a file instead of standard output
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct SolveArgs {
    /// Momentum as nine comma-separated rationals, e.g. 1,0,0,0,0,0,0,0,1
    #[arg(long)]
    p: Option<String>,

    /// The mass, a rational like 2 or -3/2
    #[arg(long = "M")]
    mass: Option<String>,

    /// Read {"p": [...], "M": "..."} from a JSON file
    #[arg(long)]
    json_in: Option<PathBuf>,

    /// Write the result to a file instead of standard output
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct TransformArgs {
    /// Momentum as nine comma-separated rationals
    #[arg(long)]
    p: Option<String>,

    /// Seed for the random unimodular matrix
    #[arg(long, default_value_t = 0)]
    seed: u64,

    /// Number of elementary shears composed into the transform
    #[arg(long, default_value_t = 8)]
    steps: u32,

    /// Read {"p": [...]} from a JSON file
    #[arg(long)]
    json_in: Option<PathBuf>,

    /// Write the result to a file instead of standard output
    #[arg(long)]
    out: Option<PathBuf>,
}

fn parse_suite(name: &str) -> Result<Suite, String> {
    Suite::from_name(name).ok_or_else(|| {
        let known: Vec<_> = Suite::ALL.iter().map(|s| s.name()).collect();
        format!("unknown suite {name:?}; expected one of {}", known.join(", "))
    })
}

/// The optional JSON input shared by `solve` and `transform`.
#[derive(Deserialize)]
struct InstanceFile {
    p: Momentum9,
    #[serde(rename = "M")]
    mass: Option<String>,
}

#[derive(Serialize)]
struct SolveOutput {
    p: Momentum9,
    #[serde(rename = "M")]
    mass: String,
    on_shell: bool,
    dimension: usize,
    basis: Vec<WaveFunction12>,
}

#[derive(Serialize)]
struct TransformOutput {
    #[serde(rename = "A")]
    a: MatrixCN,
    p_prime: Momentum9,
    cubic_before: String,
    cubic_after: String,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Verify(args) => cmd_verify(args),
        Command::Solve(args) => cmd_solve(args),
        Command::Transform(args) => cmd_transform(args),
    };
    match result {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn cmd_verify(args: VerifyArgs) -> Result<ExitCode, String> {
    let suites: Vec<Suite> = if args.suites.is_empty() {
        Suite::ALL.to_vec()
    } else {
        args.suites.clone()
    };
    let cfg = VerifyConfig {
        trials: args.trials,
        seed: args.seed,
    };

    let mut sink: Box<dyn Write> = match &args.out {
        Some(path) => Box::new(
            fs::File::create(path).map_err(|e| format!("cannot create {}: {e}", path.display()))?,
        ),
        None => Box::new(std::io::stdout()),
    };

    let mut all_passed = true;
    // stream one report per suite so partial output survives interruption
    for suite in suites {
        let report = run_suite(suite, &cfg);
        all_passed &= report.passed();
        let line = serde_json::to_string(&report).map_err(|e| e.to_string())?;
        writeln!(sink, "{line}").map_err(|e| e.to_string())?;
        sink.flush().map_err(|e| e.to_string())?;
    }
    Ok(if all_passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn cmd_solve(args: SolveArgs) -> Result<ExitCode, String> {
    let (p, mass_from_file) = read_instance(&args.p, &args.json_in)?;
    let mass_token = args
        .mass
        .or(mass_from_file)
        .ok_or("missing mass: pass --M or provide \"M\" in the JSON input")?;
    let mass = Mass::new(parse_rational(&mass_token).map_err(|e| e.to_string())?);

    let basis = solution_space(&p, &mass);
    let output = SolveOutput {
        on_shell: cubic_form(&p) == mass.cubed(),
        p,
        mass: format_rational(mass.value()),
        dimension: basis.len(),
        basis,
    };
    emit(&args.out, &serde_json::to_string(&output).map_err(|e| e.to_string())?)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_transform(args: TransformArgs) -> Result<ExitCode, String> {
    let (p, _) = read_instance(&args.p, &args.json_in)?;
    let a = random_unimodular(args.seed, args.steps);
    let p_prime = sl3_transform(&a, &p);
    let output = TransformOutput {
        cubic_before: format_rational(&cubic_form(&p)),
        cubic_after: format_rational(&cubic_form(&p_prime)),
        a: a.matrix().clone(),
        p_prime,
    };
    emit(&args.out, &serde_json::to_string(&output).map_err(|e| e.to_string())?)?;
    Ok(ExitCode::SUCCESS)
}

/// Resolve the momentum (and optional mass) from inline flags or a JSON file.
fn read_instance(
    inline: &Option<String>,
    json_in: &Option<PathBuf>,
) -> Result<(Momentum9, Option<String>), String> {
    match (inline, json_in) {
        (Some(list), None) => Ok((parse_momentum_list(list)?, None)),
        (None, Some(path)) => {
            let file = read_json_file(path)?;
            Ok((file.p, file.mass))
        }
        (Some(_), Some(_)) => Err("pass either --p or --json-in, not both".into()),
        (None, None) => Err("missing momentum: pass --p or --json-in".into()),
    }
}

fn parse_momentum_list(list: &str) -> Result<Momentum9, String> {
    let tokens: Vec<&str> = list.split(',').collect();
    if tokens.len() != 9 {
        return Err(format!(
            "expected 9 comma-separated momentum components, got {}",
            tokens.len()
        ));
    }
    let mut p = Momentum9::zero();
    for (k, token) in tokens.iter().enumerate() {
        p.0[k] = parse_rational(token).map_err(|e| e.to_string())?;
    }
    Ok(p)
}

fn read_json_file(path: &Path) -> Result<InstanceFile, String> {
    let text =
        fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    serde_json::from_str(&text).map_err(|e| format!("malformed JSON in {}: {e}", path.display()))
}

fn emit(out: &Option<PathBuf>, content: &str) -> Result<(), String> {
    match out {
        Some(path) => fs::write(path, format!("{content}\n"))
            .map_err(|e| format!("cannot write {}: {e}", path.display())),
        None => {
            println!("{content}");
            Ok(())
        }
    }
}
