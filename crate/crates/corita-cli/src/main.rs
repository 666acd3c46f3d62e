use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use corita::algebra::Algebra;
use corita::coring::Coring;
use corita::report::Report;
use corita::{examples, Error, Result};
use serde_json::{json, Value};

mod commands;
mod load;

use commands::{Catalog, Outcome};

/// Exact checks for firm rings, Morita contexts, corings and comodules.
#[derive(Parser)]
#[command(name = "corita", version)]
struct Cli {
    /// Write the machine-readable report to this file.
    #[arg(long, global = true)]
    json: Option<PathBuf>,
    /// Require a boolean fact or a named report item to hold; exit 1 otherwise.
    #[arg(long, global = true)]
    expect: Vec<String>,
    /// Catalog used for functor-level checks: "default" or "dim:N".
    #[arg(long, global = true, default_value = "default")]
    catalog: String,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Associativity, unit, idempotency, firmness, local units and the firm square.
    CheckRing {
        #[arg(long)]
        file: PathBuf,
    },
    /// Module axioms, firmness and projectivity of a bimodule.
    CheckModule {
        #[arg(long)]
        file: PathBuf,
    },
    /// Morita context axioms and the reduction conditions.
    CheckContext {
        #[arg(long)]
        file: PathBuf,
    },
    /// Reduce a context by an idempotent ideal and emit the reduced context.
    ReduceContext {
        #[arg(long)]
        file: PathBuf,
        /// "auto" (idempotent core of QσP) or the name of an ideal in the file.
        #[arg(long, default_value = "auto")]
        ideal: String,
    },
    /// Firm-module equivalence of a reduced context on a catalog.
    KatoOhtake {
        #[arg(long)]
        file: PathBuf,
        #[arg(long, default_value = "auto")]
        ideal: String,
    },
    /// Coring axioms, the dual ring and coseparability.
    CheckCoring {
        #[arg(long)]
        file: PathBuf,
    },
    /// Solve for a cointegral and check the comodule/module isomorphism.
    Coseparable {
        #[arg(long)]
        file: PathBuf,
    },
    /// Galois comodule checks for a comodule, with R constructed or given.
    Galois {
        #[arg(long)]
        file: PathBuf,
    },
    /// The structure theorem for B ⊆ *C.
    BStructure {
        #[arg(long)]
        file: PathBuf,
    },
    /// The context of a coring extension and the extension theorem.
    Extension {
        #[arg(long)]
        file: PathBuf,
    },
    /// The built-in examples.
    Examples {
        #[command(subcommand)]
        action: ExamplesAction,
    },
}

#[derive(Subcommand)]
enum ExamplesAction {
    List,
    /// Run one example, or "all".
    Run { name: String },
}

fn name(command: &Command) -> &'static str {
    match command {
        Command::CheckRing { .. } => "check-ring",
        Command::CheckModule { .. } => "check-module",
        Command::CheckContext { .. } => "check-context",
        Command::ReduceContext { .. } => "reduce-context",
        Command::KatoOhtake { .. } => "kato-ohtake",
        Command::CheckCoring { .. } => "check-coring",
        Command::Coseparable { .. } => "coseparable",
        Command::Galois { .. } => "galois",
        Command::BStructure { .. } => "b-structure",
        Command::Extension { .. } => "extension",
        Command::Examples { .. } => "examples",
    }
}

fn execute(cli: &Cli) -> Result<Option<Outcome>> {
    let cat = Catalog::parse(&cli.catalog)?;
    let out = match &cli.command {
        Command::CheckRing { file } => commands::check_ring(&Algebra::from_json(&load::read(file)?)?)?,
        Command::CheckModule { file } => commands::check_module(&load::module(&load::read(file)?)?)?,
        Command::CheckContext { file } => commands::check_context(&load::context(&load::read(file)?)?.0)?,
        Command::ReduceContext { file, ideal } => {
            let (ctx, named) = load::context(&load::read(file)?)?;
            commands::reduce_context(&ctx, &commands::ideal(&ctx, ideal, &named)?)?
        }
        Command::KatoOhtake { file, ideal } => {
            let (ctx, named) = load::context(&load::read(file)?)?;
            commands::kato_ohtake(&ctx, &commands::ideal(&ctx, ideal, &named)?, cat)?
        }
        Command::CheckCoring { file } => commands::check_coring(&coring_file(&load::read(file)?)?)?,
        Command::Coseparable { file } => {
            let input = load::comodule_input(&load::read(file)?)?;
            let mut seeds = input.seeds.clone();
            seeds.extend(input.sigma.clone());
            commands::coseparable(&input.coring, &seeds, cat)?
        }
        Command::Galois { file } => {
            let v = load::read(file)?;
            let input = load::comodule_input(&v)?;
            let datum = (!v["datum"].is_null()).then(|| &v["datum"]);
            commands::galois(&load::required_sigma(&input)?, &input.seeds, datum, cat)?
        }
        Command::BStructure { file } => {
            let input = load::comodule_input(&load::read(file)?)?;
            commands::b_structure(&load::required_sigma(&input)?, &input.seeds, cat)?
        }
        Command::Extension { file } => {
            let v = load::read(file)?;
            let input = load::comodule_input(&v)?;
            let x = commands::extension_input(&v, &input.coring)?;
            commands::extension(&x, &load::required_sigma(&input)?, &input.seeds, cat)?
        }
        Command::Examples { action: ExamplesAction::List } => {
            for n in examples::NAMES {
                println!("{n}");
            }
            return Ok(None);
        }
        Command::Examples { action: ExamplesAction::Run { name } } => {
            if name == "all" {
                let reports = examples::NAMES.iter().map(|n| examples::run(n)).collect::<Result<Vec<_>>>()?;
                Report::group("examples", reports).into()
            } else {
                examples::run(name)?.into()
            }
        }
    };
    Ok(Some(out))
}

fn coring_file(v: &Value) -> Result<Coring> {
    if v["coring"].is_null() {
        Coring::from_json(v)
    } else {
        Coring::from_json(&v["coring"])
    }
}

/// A boolean fact with this key, or else the verdict of an item with this name.
fn lookup(report: &Report, key: &str) -> Option<bool> {
    if let Some(b) = report.facts.get(key).and_then(Value::as_bool) {
        return Some(b);
    }
    if report.name == key {
        return Some(report.passed());
    }
    report.items.iter().find_map(|r| lookup(r, key))
}

fn exit_for(e: &Error) -> u8 {
    match e {
        Error::Input(_) | Error::Dimension(_) | Error::ActionMismatch(_) => 2,
        _ => 1,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match execute(&cli) {
        Ok(Some(o)) => o,
        Ok(None) => return ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(exit_for(&e));
        }
    };
    print!("{}", outcome.report);
    if let Some(result) = &outcome.result {
        println!("{}", serde_json::to_string_pretty(result).expect("JSON values serialise"));
    }
    let mut code = if outcome.report.failed() { 1 } else { 0 };
    let mut expectations = Vec::new();
    for key in &cli.expect {
        match lookup(&outcome.report, key) {
            Some(ok) => {
                if !ok {
                    println!("expected {key}: does not hold");
                    code = 1;
                }
                expectations.push(json!({ "property": key, "holds": ok }));
            }
            None => {
                eprintln!("error: the report has no property \"{key}\"");
                return ExitCode::from(2);
            }
        }
    }
    if let Some(path) = &cli.json {
        let mut machine = json!({ "command": name(&cli.command), "report": outcome.report.to_json() });
        if let Some(result) = outcome.result {
            machine["result"] = result;
        }
        if !expectations.is_empty() {
            machine["expectations"] = Value::Array(expectations);
        }
        let text = serde_json::to_string_pretty(&machine).expect("JSON values serialise") + "\n";
        if let Err(e) = std::fs::write(path, text) {
            eprintln!("error: {}: {e}", path.display());
            return ExitCode::from(2);
        }
    }
    ExitCode::from(code)
}
