//! `ilambda`: batch front end for the core library.
//!
//! Exit codes: 0 success, 1 domain error, 2 usage error, 3 failed
//! verification.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use ilambda_core::oracle::{enumerate_window, Window};
use ilambda_core::topology::{
    common_member, continuity_witness, inversion_witness, member, separate,
    wf_inversion_counterexample,
};
use ilambda_core::{
    eval_expr, principal_congruence, solve_left, solve_right, verify, CongruenceId, Error, FinSet,
    Flavor, GreenRelation, Nbhd, PartialSelfmap, Suite, VerifyConfig,
};

#[derive(Parser)]
#[command(
    name = "ilambda",
    version,
    about = "Computations in the monoid of almost-identity partial bijections"
)]
struct Cli {
    /// Print results as JSON.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a product such as "{1>2,2>1} * inv({-3})".
    Eval { expr: String },
    /// Decide a Green relation between two elements.
    Green {
        #[arg(value_parser = parse_green)]
        relation: GreenRelation,
        a: String,
        b: String,
    },
    /// Queries against the congruence chain, e.g. "S:0".
    #[command(subcommand)]
    Cong(CongCommand),
    /// Solve a * x = b (left) or x * a = b (right).
    Solve { side: Side, a: String, b: String },
    /// Neighbourhood queries.
    Nbhd {
        /// F (fixed domain and range) or WF (domain bounded above).
        #[arg(long, value_parser = parse_flavor)]
        flavor: Flavor,
        #[command(subcommand)]
        query: NbhdCommand,
    },
    /// List every element supported in {0, ..., n-1}.
    Enum {
        #[arg(long)]
        window: usize,
    },
    /// Run verification suites over the window {0, ..., n-1}.
    Verify {
        #[arg(long)]
        window: usize,
        #[arg(long, default_value = "all", value_parser = parse_suite)]
        suite: Suite,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Subcommand)]
enum CongCommand {
    /// Whether two elements are related by a congruence.
    Related { cid: String, a: String, b: String },
    /// The smallest congruence in the chain relating two elements.
    Principal { a: String, b: String },
    /// The class label of an element.
    Class { cid: String, a: String },
}

#[derive(Clone, Copy, ValueEnum)]
enum Side {
    Left,
    Right,
}

#[derive(Subcommand)]
enum NbhdCommand {
    /// Membership of an element in U_center(constraint).
    Member {
        center: String,
        constraint: String,
        element: String,
    },
    /// Whether U_a(F1) and U_b(F2) are disjoint.
    Disjoint {
        a: String,
        f1: String,
        b: String,
        f2: String,
    },
    /// Constraints separating two distinct elements.
    Separate { a: String, b: String },
    /// Constraint sets witnessing continuity of product or inversion.
    #[command(subcommand)]
    Witness(WitnessCommand),
}

#[derive(Subcommand)]
enum WitnessCommand {
    /// Constraints (F1, F2) with U_a(F1) U_b(F2) inside U_ab(F).
    Continuity {
        a: String,
        b: String,
        constraint: String,
    },
    /// A constraint K with the inverse of U_g(F) inside U_g'(K).
    Inversion { g: String, constraint: String },
}

fn parse_flavor(s: &str) -> Result<Flavor, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_green(s: &str) -> Result<GreenRelation, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn el(s: &str) -> Result<PartialSelfmap, Error> {
    s.parse()
}

fn set(s: &str) -> Result<FinSet, Error> {
    s.parse()
}

struct Output {
    text: String,
    json: Value,
    failed: bool,
}

impl Output {
    fn new(text: impl Into<String>, json: Value) -> Self {
        Output {
            text: text.into(),
            json,
            failed: false,
        }
    }
}

fn lines<T: ToString>(items: &[T]) -> String {
    items
        .iter()
        .map(T::to_string)
        .collect::<Vec<_>>()
        .join("\n")
}

fn run(command: Command) -> Result<Output, Error> {
    Ok(match command {
        Command::Eval { expr } => {
            let v = eval_expr(&expr)?;
            Output::new(v.to_string(), json!({ "result": v.to_string() }))
        }
        Command::Green { relation, a, b } => {
            let g = relation;
            let related = g.relates(&el(&a)?, &el(&b)?);
            Output::new(
                related.to_string(),
                json!({ "relation": g.to_string(), "related": related }),
            )
        }
        Command::Cong(CongCommand::Related { cid, a, b }) => {
            let c: CongruenceId = cid.parse()?;
            let related = c.related(&el(&a)?, &el(&b)?);
            Output::new(
                related.to_string(),
                json!({ "congruence": c.to_string(), "related": related }),
            )
        }
        Command::Cong(CongCommand::Principal { a, b }) => {
            let c = principal_congruence(&el(&a)?, &el(&b)?);
            Output::new(c.to_string(), json!({ "congruence": c.to_string() }))
        }
        Command::Cong(CongCommand::Class { cid, a }) => {
            let c: CongruenceId = cid.parse()?;
            let label = c.class_label(&el(&a)?);
            Output::new(
                label.to_string(),
                json!({ "congruence": c.to_string(), "label": label }),
            )
        }
        Command::Solve { side, a, b } => {
            let (a, b) = (el(&a)?, el(&b)?);
            let sols = match side {
                Side::Left => solve_left(&a, &b),
                Side::Right => solve_right(&a, &b),
            };
            let text: Vec<String> = sols.iter().map(ToString::to_string).collect();
            Output::new(
                lines(&text),
                json!({ "count": sols.len(), "solutions": text }),
            )
        }
        Command::Nbhd { flavor, query } => nbhd(flavor, query)?,
        Command::Enum { window } => {
            let els = enumerate_window(&Window::first(window))?;
            let text: Vec<String> = els.iter().map(ToString::to_string).collect();
            Output::new(
                lines(&text),
                json!({ "count": els.len(), "elements": text }),
            )
        }
        Command::Verify {
            window,
            suite,
            seed,
        } => {
            let cfg = VerifyConfig {
                seed,
                ..VerifyConfig::default()
            };
            let report = verify(suite, &Window::first(window), &cfg)?;
            Output {
                text: report.to_string(),
                json: serde_json::to_value(&report).expect("report serializes"),
                failed: !report.passed(),
            }
        }
    })
}

fn nbhd(flavor: Flavor, query: NbhdCommand) -> Result<Output, Error> {
    Ok(match query {
        NbhdCommand::Member {
            center,
            constraint,
            element,
        } => {
            let n = Nbhd::new(flavor, el(&center)?, set(&constraint)?)?;
            let inside = member(&n, &el(&element)?);
            Output::new(inside.to_string(), json!({ "member": inside }))
        }
        NbhdCommand::Disjoint { a, f1, b, f2 } => {
            let n1 = Nbhd::new(flavor, el(&a)?, set(&f1)?)?;
            let n2 = Nbhd::new(flavor, el(&b)?, set(&f2)?)?;
            match common_member(&n1, &n2)? {
                None => Output::new("true", json!({ "disjoint": true })),
                Some(w) => Output::new(
                    format!("false\ncommon member {w}"),
                    json!({ "disjoint": false, "common_member": w.to_string() }),
                ),
            }
        }
        NbhdCommand::Separate { a, b } => {
            let (f1, f2) = separate(&el(&a)?, &el(&b)?, flavor)?;
            Output::new(format!("{f1} {f2}"), json!({ "f1": f1, "f2": f2 }))
        }
        NbhdCommand::Witness(WitnessCommand::Continuity { a, b, constraint }) => {
            let (f1, f2) = continuity_witness(&el(&a)?, &el(&b)?, &set(&constraint)?)?;
            Output::new(format!("{f1} {f2}"), json!({ "f1": f1, "f2": f2 }))
        }
        NbhdCommand::Witness(WitnessCommand::Inversion { g, constraint }) => {
            let (g, f) = (el(&g)?, set(&constraint)?);
            match inversion_witness(flavor, &g, &f) {
                Ok(k) => Output::new(k.to_string(), json!({ "k": k })),
                Err(Error::InversionDiscontinuous(msg)) => {
                    let escape = wf_inversion_counterexample(&g, &f)?
                        .map(|b| b.to_string())
                        .unwrap_or_default();
                    return Err(Error::InversionDiscontinuous(format!(
                        "{msg}; {escape} is a member whose inverse leaves every neighbourhood of the inverse"
                    )));
                }
                Err(e) => return Err(e),
            }
        }
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.command) {
        Ok(out) => {
            if cli.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&out.json).expect("valid JSON")
                );
            } else if !out.text.is_empty() {
                println!("{}", out.text);
            }
            if out.failed {
                ExitCode::from(3)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            if cli.json {
                let v = json!({ "error": e.name(), "message": e.to_string() });
                eprintln!("{v}");
            } else {
                eprintln!("error: {}: {e}", e.name());
            }
            ExitCode::from(1)
        }
    }
}
