//! Command-line front end for `toricmult`.

pub mod error;
pub mod monomial;
pub mod problem;
pub mod report;
pub mod verify;

use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use toricmult::lab::{check_subadditivity, exhaustive_refute, search_counterexamples_with, Finding, SearchConfig};
use toricmult::{multiplier_ideal, point::parse_rational, RatPoint};

use crate::error::CliError;
use crate::problem::Problem;
use crate::report::{
    ClosureEntry, Echo, GeneratorCertificate, Monomial, MultiplierEntry, NewtonEntry, Payload, RefutePayload, Report,
    SearchPayload, SubaddPayload,
};
use crate::verify::{verify_paper, FacetFixture};

#[derive(Debug, Parser)]
#[command(name = "toricmult", version, about = "Multiplier ideals of monomial ideals on toric rings")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Append the wall-clock time to the report.
    #[arg(long, global = true)]
    pub timing: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Facets and vertices of Newton polyhedra.
    Newton(IdealArgs),
    /// Multiplier ideals with per-generator facet certificates.
    Multiplier(IdealArgs),
    /// Integral closures.
    Closure(IdealArgs),
    /// Test J(ab) ⊆ J(a)J(b); exits 1 when it fails.
    Subadd(IdealArgs),
    /// Search for v = α' + β with α' ∈ relint N(a), β + u0 ∈ relint N(b); exits 1 if one exists.
    Refute(RefuteArgs),
    /// Recheck the three-dimensional counterexample end to end.
    VerifyPaper(VerifyArgs),
    /// Randomized Huneke–Swanson search for counterexamples.
    Search(SearchArgs),
}

#[derive(Debug, Args)]
pub struct IdealArgs {
    /// Problem file (JSON).
    #[arg(long)]
    pub input: PathBuf,
    /// Comma-separated ideal names; `a*b` denotes a product.
    #[arg(long, value_delimiter = ',', required = true)]
    pub ideals: Vec<String>,
}

#[derive(Debug, Args)]
pub struct RefuteArgs {
    #[command(flatten)]
    pub ideals: IdealArgs,
    /// The point v, as a monomial ("x^18y^12z^2") or comma-separated rationals ("18,12,2").
    #[arg(long)]
    pub target: String,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// JSON fixture with the expected facets of N(a) and N(b).
    #[arg(long)]
    pub expect_facets: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    /// Search configuration (JSON).
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long)]
    pub cap: Option<usize>,
    #[arg(long)]
    pub threads: Option<usize>,
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Newton(_) => "newton",
            Command::Multiplier(_) => "multiplier",
            Command::Closure(_) => "closure",
            Command::Subadd(_) => "subadd",
            Command::Refute(_) => "refute",
            Command::VerifyPaper(_) => "verify-paper",
            Command::Search(_) => "search",
        }
    }
}

/// Runs a parsed command line. Findings of `search` are passed to `on_finding`
/// as soon as they are confirmed.
pub fn run(cli: &Cli, on_finding: &(dyn Fn(&Finding) + Sync)) -> Report {
    let start = Instant::now();
    let mut echo = Echo::default();
    let (result, exit_code) = match dispatch(&cli.command, &mut echo, on_finding) {
        Ok(r) => r,
        Err(e) => (Payload::Error { message: e.to_string() }, 2),
    };
    let timing_ms = cli.timing.then(|| u64::try_from(start.elapsed().as_millis()).unwrap_or(u64::MAX));
    Report { command: cli.command.name().into(), echo, exit_code, result, timing_ms }
}

fn dispatch(
    command: &Command,
    echo: &mut Echo,
    on_finding: &(dyn Fn(&Finding) + Sync),
) -> Result<(Payload, i32), CliError> {
    match command {
        Command::Newton(args) => {
            let (problem, names) = load(args, echo)?;
            let mut ideals = Vec::new();
            for name in names {
                let ideal = problem.ideal(&name)?;
                let n = ideal.newton_polyhedron()?;
                ideals.push(NewtonEntry {
                    name,
                    generators: Monomial::list(ideal.generators()),
                    vertices: Monomial::list(n.vertices()),
                    facets: n.facets().to_vec(),
                });
            }
            Ok((Payload::Newton { ideals }, 0))
        }
        Command::Multiplier(args) => {
            let (problem, names) = load(args, echo)?;
            let mut u0 = None;
            let mut ideals = Vec::new();
            for name in names {
                let j = multiplier_ideal(&problem.ideal(&name)?)?;
                u0 = Some(j.u0.clone());
                let certificates = j
                    .facet_report
                    .iter()
                    .map(|(g, evals)| GeneratorCertificate { generator: Monomial::of(g), evaluations: evals.clone() })
                    .collect();
                ideals.push(MultiplierEntry { name, generators: Monomial::list(j.ideal.generators()), certificates });
            }
            let u0 = u0.ok_or_else(|| CliError::Usage("no ideals given".into()))?;
            Ok((Payload::Multiplier { u0, ideals }, 0))
        }
        Command::Closure(args) => {
            let (problem, names) = load(args, echo)?;
            let mut ideals = Vec::new();
            for name in names {
                let ideal = problem.ideal(&name)?;
                let closure = ideal.integral_closure()?;
                ideals.push(ClosureEntry {
                    name,
                    generators: Monomial::list(ideal.generators()),
                    integrally_closed: closure == ideal,
                    closure: Monomial::list(closure.generators()),
                });
            }
            Ok((Payload::Closure { ideals }, 0))
        }
        Command::Subadd(args) => {
            let (problem, names) = load(args, echo)?;
            let [a_name, b_name] = pair(names)?;
            let verdict = check_subadditivity(&problem.ideal(&a_name)?, &problem.ideal(&b_name)?)?;
            let code = if verdict.holds { 0 } else { 1 };
            Ok((
                Payload::Subadd(SubaddPayload {
                    a: a_name,
                    b: b_name,
                    holds: verdict.holds,
                    witnesses: Monomial::list(&verdict.witnesses),
                    certificates: verdict.certificates,
                    j_ab: Monomial::list(&verdict.j_ab),
                    j_a: Monomial::list(&verdict.j_a),
                    j_b: Monomial::list(&verdict.j_b),
                }),
                code,
            ))
        }
        Command::Refute(args) => {
            let (problem, names) = load(&args.ideals, echo)?;
            let [a_name, b_name] = pair(names)?;
            let target = parse_target(&args.target, problem.ring.dim())?;
            echo.target = Some(target.clone());
            let report = exhaustive_refute(&target, &problem.ideal(&a_name)?, &problem.ideal(&b_name)?)?;
            let refuted = report.refuted();
            Ok((Payload::Refute(RefutePayload { a: a_name, b: b_name, refuted, report }), if refuted { 0 } else { 1 }))
        }
        Command::VerifyPaper(args) => {
            let expected = match &args.expect_facets {
                Some(path) => {
                    echo.expect_facets = Some(path.display().to_string());
                    FacetFixture::read(path)?
                }
                None => FacetFixture::builtin(),
            };
            let payload = verify_paper(&expected)?;
            let code = if payload.all_passed { 0 } else { 1 };
            Ok((Payload::VerifyPaper(payload), code))
        }
        Command::Search(args) => {
            echo.input = Some(args.input.display().to_string());
            let text = std::fs::read_to_string(&args.input)
                .map_err(|e| CliError::Input(format!("{}: {e}", args.input.display())))?;
            let mut config: SearchConfig =
                serde_json::from_str(&text).map_err(|e| CliError::Input(format!("{}: {e}", args.input.display())))?;
            if let Some(seed) = args.seed {
                config.seed = seed;
            }
            if let Some(cap) = args.cap {
                config.cap = cap;
            }
            if let Some(threads) = args.threads {
                config.threads = threads;
            }
            echo.seed = Some(config.seed);
            echo.cap = Some(config.cap);
            echo.threads = Some(config.threads);
            let out = search_counterexamples_with(&config, on_finding)?;
            Ok((
                Payload::Search(SearchPayload {
                    seed: out.seed,
                    candidates: out.candidates,
                    valid_recipes: out.valid_recipes,
                    findings: out.findings,
                }),
                0,
            ))
        }
    }
}

fn load(args: &IdealArgs, echo: &mut Echo) -> Result<(Problem, Vec<String>), CliError> {
    echo.input = Some(args.input.display().to_string());
    echo.ideals = args.ideals.clone();
    Ok((Problem::load(&args.input)?, args.ideals.clone()))
}

fn pair(names: Vec<String>) -> Result<[String; 2], CliError> {
    <[String; 2]>::try_from(names).map_err(|n| CliError::Usage(format!("expected two ideals, got {}", n.len())))
}

/// A monomial string or comma-separated rationals, optionally parenthesized.
pub fn parse_target(s: &str, dim: usize) -> Result<RatPoint, CliError> {
    if s.chars().any(|c| matches!(c, 'x' | 'y' | 'z')) {
        return monomial::parse(s, dim).map(|w| w.to_rat()).map_err(CliError::Usage);
    }
    let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
    let coords = inner
        .split(',')
        .map(|c| parse_rational(c).ok_or_else(|| CliError::Usage(format!("bad coordinate {c:?} in target"))))
        .collect::<Result<Vec<BigRational>, _>>()?;
    if coords.len() != dim {
        return Err(CliError::Usage(format!("target has {} coordinates, the ring has dimension {dim}", coords.len())));
    }
    Ok(RatPoint::new(coords))
}
