use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use qcenter::report::{
    character_report, classify_report, hilbert_basis_report, lattice_report, orbit_report,
    presentation_report, tensor_report, Envelope,
};
use qcenter::suite::run_paper_suite;
use qcenter::{Error, Family, LieType, Limits, Weight};

mod text;

#[derive(Parser)]
#[command(name = "qcenter", version, about = "Centers of quantum groups at generic q: lattices, monoids, presentations")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Emit a JSON report instead of a table
    #[arg(long, global = true)]
    json: bool,

    /// Enumeration budget (overrides QCENTER_BUDGET)
    #[arg(long, global = true, value_name = "N")]
    budget: Option<u128>,
}

#[derive(Args, Clone, Copy)]
struct TypeArgs {
    /// Family letter A..G
    #[arg(long = "type", value_name = "FAMILY")]
    family: Family,

    #[arg(long, value_name = "N")]
    rank: usize,
}

impl TypeArgs {
    fn lie_type(self) -> Result<LieType, Error> {
        LieType::new(self.family, self.rank)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Polynomiality, lattice case and |Ψ_min|
    Classify(TypeArgs),
    /// Root, weight and even-weight lattices in Hermite normal form
    Lattice(TypeArgs),
    /// Minimal generating set of Ψ
    HilbertBasis(TypeArgs),
    /// Generators, relations and bounded completeness check
    Presentation {
        #[command(flatten)]
        ty: TypeArgs,
        #[arg(long, value_name = "N")]
        degree_bound: Option<u64>,
    },
    /// Weyl group orbit of a weight
    Orbit {
        #[command(flatten)]
        ty: TypeArgs,
        #[arg(long, allow_hyphen_values = true, value_name = "a,b,...")]
        weight: String,
    },
    /// Decompose L(left) ⊗ L(right)
    Tensor {
        #[command(flatten)]
        ty: TypeArgs,
        #[arg(long, value_name = "a,b,...")]
        left: String,
        #[arg(long, value_name = "a,b,...")]
        right: String,
    },
    /// Dominant weight multiplicities of L(weight)
    Character {
        #[command(flatten)]
        ty: TypeArgs,
        #[arg(long, value_name = "a,b,...")]
        weight: String,
    },
    /// Run a reproduction suite
    Verify {
        #[arg(long, value_enum, default_value_t = SuiteName::Paper)]
        suite: SuiteName,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteName {
    Paper,
}

enum Failure {
    Validation(String),
    Runtime(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_validation() {
            Failure::Validation(e.to_string())
        } else {
            Failure::Runtime(e.to_string())
        }
    }
}

fn parse_weight(t: LieType, s: &str) -> Result<Weight, Error> {
    let w: Weight = s.parse()?;
    t.check_weight(&w)?;
    Ok(w)
}

fn limits(budget: Option<u128>) -> Result<Limits, Failure> {
    let env = match std::env::var("QCENTER_BUDGET") {
        Ok(v) => Some(v.trim().parse::<u128>().map_err(|_| {
            Failure::Validation(format!("QCENTER_BUDGET must be a positive integer, got {v:?}"))
        })?),
        Err(_) => None,
    };
    Ok(match budget.or(env) {
        Some(0) => return Err(Failure::Validation("budget must be positive".into())),
        Some(b) => Limits::default().with_budget(b),
        None => Limits::default(),
    })
}

fn emit<T: Serialize>(json: bool, command: &str, body: T, render: impl FnOnce(&T) -> String) -> String {
    if json {
        let mut s = serde_json::to_string_pretty(&Envelope::new(command, body)).expect("reports serialize");
        s.push('\n');
        s
    } else {
        render(&body)
    }
}

/// Returns the report text and whether the run succeeded.
fn run(cli: Cli) -> Result<(String, bool), Failure> {
    let limits = limits(cli.budget)?;
    let json = cli.json;
    let out = match cli.command {
        Command::Classify(a) => {
            let r = classify_report(a.lie_type()?, &limits)?;
            emit(json, "classify", r, text::classify)
        }
        Command::Lattice(a) => emit(json, "lattice", lattice_report(a.lie_type()?)?, text::lattice),
        Command::HilbertBasis(a) => {
            let r = hilbert_basis_report(a.lie_type()?, &limits)?;
            emit(json, "hilbert-basis", r, text::hilbert_basis)
        }
        Command::Presentation { ty, degree_bound } => {
            let r = presentation_report(ty.lie_type()?, degree_bound, &limits)?;
            emit(json, "presentation", r, text::presentation)
        }
        Command::Orbit { ty, weight } => {
            let t = ty.lie_type()?;
            let r = orbit_report(t, &parse_weight(t, &weight)?, &limits)?;
            emit(json, "orbit", r, text::orbit)
        }
        Command::Tensor { ty, left, right } => {
            let t = ty.lie_type()?;
            let r = tensor_report(t, &parse_weight(t, &left)?, &parse_weight(t, &right)?, &limits)?;
            emit(json, "tensor", r, text::tensor)
        }
        Command::Character { ty, weight } => {
            let t = ty.lie_type()?;
            let r = character_report(t, &parse_weight(t, &weight)?, &limits)?;
            emit(json, "character", r, text::character)
        }
        Command::Verify { suite: SuiteName::Paper } => {
            let r = run_paper_suite(&limits);
            let ok = r.all_passed();
            return Ok((emit(json, "verify", r, text::verify), ok));
        }
    };
    Ok((out, true))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok((out, ok)) => {
            print!("{out}");
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Validation(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Runtime(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
