//! `hirano`: batch front end over hirano-core.
//!
//! Exit codes: 0 success, 2 when the requested inverse does not exist,
//! 1 for malformed input or any other failure (JSON diagnostic on stderr).

use std::io::Read;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use hirano_core::additive::RuleRegistry;
use hirano_core::cline::{cline_classic, cline_generalized};
use hirano_core::hirano::{
    classify_integer_2x2, classify_local_2x2, tripotent_decompose, verify_hirano_axioms, StrategyRegistry,
};
use hirano_core::oracle::{FiniteMatrixRing, PropertyRegistry, DEFAULT_BUDGET};
use hirano_core::report::{self, SCHEMA_VERSION};
use hirano_core::spectral::drazin_field;
use hirano_core::{Error, RingDescriptor, SquareMatrix};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "hirano", version, about = "Generalized Hirano and Drazin inverses of matrices over Q, Z, Z/n and Z_(p)")]
struct Cli {
    /// Ring descriptor overriding the document's, e.g. '{"kind":"Zn","n":30}' or Zn:30.
    #[arg(long, global = true)]
    ring: Option<String>,

    /// Force a named construction (integer, zn, local, field, oracle).
    #[arg(long, global = true)]
    strategy: Option<String>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Which case of the classifier the matrix falls into.
    Classify { input: Option<String> },
    /// Compute and certify the generalized Hirano inverse.
    Hirano { input: Option<String> },
    /// Generalized Drazin inverse (field base rings).
    Drazin { input: Option<String> },
    /// Check the axioms for `matrix2` as an inverse of `matrix`.
    Verify { input: Option<String> },
    /// (ba)^h from (ac)^h; `matrix3` defaults to `matrix2`.
    Cline { input: Option<String> },
    /// Inverse of `matrix + matrix2` by an additive rule.
    Sum {
        input: Option<String>,
        #[arg(long, value_enum, default_value = "thm53")]
        mode: SumMode,
    },
    /// Split into a commuting tripotent and nilpotent.
    Tripotent { input: Option<String> },
    /// Exhaustively check a registered property over Z/n or M_k(Z/n).
    Oracle {
        #[arg(long)]
        property: Option<String>,
        #[arg(long, default_value_t = 1)]
        dim: usize,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u128,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum SumMode {
    Thm53,
    Cor54,
    Cor55,
}

impl SumMode {
    fn name(self) -> &'static str {
        match self {
            SumMode::Thm53 => "thm53",
            SumMode::Cor54 => "cor54",
            SumMode::Cor55 => "cor55",
        }
    }
}

/// A failure with its machine-readable code.
struct Failure {
    code: &'static str,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure { code: e.code(), message: e.to_string() }
    }
}

fn fail(code: &'static str, message: impl Into<String>) -> Failure {
    Failure { code, message: message.into() }
}

type Outcome = Result<(Value, bool), Failure>;

fn parse_ring(text: &str) -> Result<RingDescriptor, Failure> {
    let text = text.trim();
    if text.starts_with('{') {
        serde_json::from_str(text).map_err(|e| fail("invalid-descriptor", e.to_string()))
    } else {
        text.parse().map_err(Failure::from)
    }
}

fn read_document(input: Option<&str>) -> Result<Value, Failure> {
    let text = match input {
        None | Some("-") => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s).map_err(|e| fail("io-error", e.to_string()))?;
            s
        }
        Some(s) if s.trim_start().starts_with('{') => s.to_string(),
        Some(path) => std::fs::read_to_string(path).map_err(|e| fail("io-error", format!("{path}: {e}")))?,
    };
    serde_json::from_str(&text).map_err(|e| fail("malformed-json", e.to_string()))
}

struct Input {
    ring: RingDescriptor,
    doc: Value,
}

impl Input {
    fn load(input: Option<&str>, ring_flag: Option<&str>) -> Result<Self, Failure> {
        let doc = read_document(input)?;
        let ring = match (ring_flag, doc.get("ring")) {
            (Some(flag), _) => parse_ring(flag)?,
            (None, Some(Value::String(s))) => parse_ring(s)?,
            (None, Some(v)) => serde_json::from_value(v.clone()).map_err(|e| fail("invalid-descriptor", e.to_string()))?,
            (None, None) => return Err(fail("invalid-input", "no ring given (document `ring` or --ring)")),
        };
        Ok(Input { ring, doc })
    }

    fn matrix(&self, key: &str) -> Result<SquareMatrix, Failure> {
        let v = self.doc.get(key).ok_or_else(|| fail("invalid-input", format!("missing `{key}`")))?;
        Ok(report::matrix_from_json(self.ring, v)?)
    }

    fn optional(&self, key: &str) -> Result<Option<SquareMatrix>, Failure> {
        match self.doc.get(key) {
            None | Some(Value::Null) => Ok(None),
            Some(_) => self.matrix(key).map(Some),
        }
    }
}

fn solve(cli: &Cli, command: &str, a: &SquareMatrix) -> Outcome {
    let reg = StrategyRegistry::default();
    let out = match &cli.strategy {
        Some(name) => reg.solve_with(name, a)?,
        None => reg.solve(a)?,
    };
    Ok((report::outcome_report(command, a, &out), out.exists()))
}

fn classify(cli: &Cli, a: &SquareMatrix) -> Outcome {
    let ring = a.ring();
    if cli.strategy.is_none() && a.dim() == 2 {
        if ring == RingDescriptor::Integers {
            let case = classify_integer_2x2(a)?;
            let exists = case.name() != "no-hirano";
            let v = json!({
                "schema_version": SCHEMA_VERSION,
                "command": "classify",
                "ring": ring,
                "exists": exists,
                "case": case.name(),
            });
            return Ok((v, exists));
        }
        if ring.is_local() || ring == RingDescriptor::Rationals {
            let c = classify_local_2x2(a)?;
            let exists = c.case.failed().is_none();
            let mut v = report::classification_json(&c);
            let m = v.as_object_mut().expect("object");
            m.insert("schema_version".into(), json!(SCHEMA_VERSION));
            m.insert("command".into(), json!("classify"));
            m.insert("ring".into(), json!(ring));
            m.insert("exists".into(), json!(exists));
            return Ok((v, exists));
        }
    }
    solve(cli, "classify", a)
}

fn run(cli: &Cli) -> Outcome {
    let ring_flag = cli.ring.as_deref();
    match &cli.command {
        Command::Classify { input } => {
            let inp = Input::load(input.as_deref(), ring_flag)?;
            classify(cli, &inp.matrix("matrix")?)
        }
        Command::Hirano { input } => {
            let inp = Input::load(input.as_deref(), ring_flag)?;
            solve(cli, "hirano", &inp.matrix("matrix")?)
        }
        Command::Drazin { input } => {
            let inp = Input::load(input.as_deref(), ring_flag)?;
            let a = inp.matrix("matrix")?;
            let d = drazin_field(&a)?;
            let r = verify_hirano_axioms(&a, &d)?;
            let v = json!({
                "schema_version": SCHEMA_VERSION,
                "command": "drazin",
                "ring": a.ring(),
                "exists": true,
                "drazin": report::matrix_json(&d),
                "checks": report::axioms_json(&r),
            });
            Ok((v, true))
        }
        Command::Verify { input } => {
            let inp = Input::load(input.as_deref(), ring_flag)?;
            let (a, b) = (inp.matrix("matrix")?, inp.matrix("matrix2")?);
            let r = verify_hirano_axioms(&a, &b)?;
            Ok((report::verify_report(&a, &r), true))
        }
        Command::Cline { input } => {
            let inp = Input::load(input.as_deref(), ring_flag)?;
            let (a, b) = (inp.matrix("matrix")?, inp.matrix("matrix2")?);
            let w = match inp.optional("matrix3")? {
                Some(c) => cline_generalized(&a, &b, &c)?,
                None => cline_classic(&a, &b)?,
            };
            let exists = w.is_some();
            Ok((report::witness_report("cline", a.ring(), w.as_ref()), exists))
        }
        Command::Sum { input, mode } => {
            let inp = Input::load(input.as_deref(), ring_flag)?;
            let (a, b) = (inp.matrix("matrix")?, inp.matrix("matrix2")?);
            let out = RuleRegistry::default().apply(mode.name(), &a, &b)?;
            let exists = out.witness.is_some();
            Ok((report::additive_report(a.ring(), &out), exists))
        }
        Command::Tripotent { input } => {
            let inp = Input::load(input.as_deref(), ring_flag)?;
            let a = inp.matrix("matrix")?;
            let split = tripotent_decompose(&a)?;
            let exists = split.is_some();
            Ok((report::tripotent_report(&a, split.as_ref()), exists))
        }
        Command::Oracle { property, dim, budget } => {
            let ring = parse_ring(ring_flag.ok_or_else(|| fail("invalid-input", "oracle needs --ring"))?)?;
            let fr = FiniteMatrixRing::from_descriptor(ring, *dim, *budget)?;
            let reg = PropertyRegistry::default();
            let ids = match property {
                Some(p) => vec![p.as_str()],
                None => reg.ids(),
            };
            let mut reports = Vec::new();
            let mut all_ok = true;
            for id in ids {
                match reg.check(id, &fr) {
                    Ok(r) => {
                        all_ok &= r.ok();
                        reports.push(serde_json::to_value(&r).expect("report serializes"));
                    }
                    Err(Error::BudgetExceeded { size, budget }) if property.is_none() => {
                        reports.push(json!({ "property": id, "skipped": "budget-exceeded", "size": size.to_string(), "budget": budget.to_string() }));
                    }
                    Err(e) => return Err(e.into()),
                }
            }
            let v = json!({
                "schema_version": SCHEMA_VERSION,
                "command": "oracle",
                "ring": fr.label(),
                "all_passed": all_ok,
                "reports": reports,
            });
            Ok((v, true))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) if !e.use_stderr() => {
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let msg = e.to_string();
            eprintln!("{}", json!({ "schema_version": SCHEMA_VERSION, "error": "usage", "message": msg.trim() }));
            return ExitCode::from(1);
        }
    };
    match run(&cli) {
        Ok((v, exists)) => {
            println!("{}", serde_json::to_string_pretty(&v).expect("json"));
            if exists {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(2)
            }
        }
        Err(f) => {
            eprintln!("{}", json!({ "schema_version": SCHEMA_VERSION, "error": f.code, "message": f.message }));
            ExitCode::from(1)
        }
    }
}
