//! The `conway` command line.
//!
//! Exit codes: 0 success, 1 a verification failed, 2 bad usage or input,
//! 3 an enumeration budget was exceeded (a partial report is still printed).

use std::ffi::OsString;
use std::io::Write;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use crate::catalog;
use crate::codes::{self, Field};
use crate::designs::Hypergraph;
use crate::error::{Error, Result};
use crate::groupoid::{build_groupoid, verify_theorems, CheckStatus};
use crate::m13::{dual_groupoid, signed_groupoid, verify_donors_and_recipients};
use crate::pliable;
use crate::report::{InputRef, Report, Status};
use crate::verify;

#[derive(Parser, Debug)]
#[command(name = "conway", version, about = "Conway groupoids, hole stabilizers and their codes")]
struct Cli {
    /// Print the full JSON report instead of `key: value` lines.
    #[arg(long, global = true)]
    json: bool,
    /// Include elapsed wall-clock time (reports are otherwise byte-stable).
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// The named design catalog.
    #[command(subcommand)]
    Catalog(CatalogCmd),
    /// Build or inspect a design.
    #[command(subcommand)]
    Design(DesignCmd),
    /// Hole stabilizers and Conway groupoids.
    #[command(subcommand)]
    Groupoid(GroupoidCmd),
    /// The projective plane of order 3 and its games.
    #[command(subcommand)]
    M13(M13Cmd),
    /// Groupoid of a pliable function: paley6, affine:k, cyclic:n, group:FILE or design:FILE.
    Pliable { spec: String },
    /// Linear codes of designs.
    #[command(subcommand)]
    Code(CodeCmd),
    /// Run the acceptance criteria.
    VerifyAll {
        /// Run only these criteria.
        #[arg(long = "criterion", value_parser = clap::value_parser!(u8).range(1..=15))]
        criteria: Vec<u8>,
    },
    /// Serve the puzzle JSON API.
    Serve {
        #[arg(long, default_value_t = 8080)]
        port: u16,
    },
}

#[derive(Subcommand, Debug)]
enum CatalogCmd {
    /// List the standard catalog members.
    List,
}

#[derive(Subcommand, Debug)]
enum DesignCmd {
    /// Print a catalog design in the design JSON format.
    Build {
        name: String,
        /// Write to this file instead of standard output.
        #[arg(long)]
        out: Option<String>,
    },
    /// Structural profile of a design (catalog name or JSON file).
    Check { design: String },
}

#[derive(Args, Debug)]
struct DesignArgs {
    /// Catalog name or design JSON file.
    design: String,
    /// Hole position.
    #[arg(long, default_value_t = 0)]
    base: usize,
}

#[derive(Subcommand, Debug)]
enum GroupoidCmd {
    /// Hole stabilizer and groupoid report.
    Compute(DesignArgs),
    /// Evaluate the structural theorems on a supersimple design.
    #[command(name = "verify-section4")]
    VerifyTheorems(DesignArgs),
}

#[derive(Subcommand, Debug)]
enum M13Cmd {
    /// Exhaustive donor and recipient check over all ordered 6-tuples.
    #[command(name = "verify-6t")]
    VerifySixTuples,
    /// The signed game.
    Signed {
        #[arg(long, default_value_t = 0)]
        hole: usize,
    },
    /// The dual game on flags.
    Dual {
        /// Hole flag index.
        #[arg(long, default_value_t = 0)]
        hole: usize,
    },
}

#[derive(Subcommand, Debug)]
enum CodeCmd {
    /// Weights, covering radius and regularity of a design's code.
    Analyze {
        design: String,
        #[arg(long, value_parser = ["2", "3"])]
        field: String,
        /// Also report coset class sizes and the minimum-weight design check.
        #[arg(long)]
        full: bool,
    },
    /// From the ternary plane code to the perfect ternary Golay code.
    GolayChain {
        #[arg(long, default_value_t = 0)]
        point: usize,
    },
}

/// What a subcommand produced before it is wrapped in a report.
struct Outcome {
    inputs: Vec<InputRef>,
    results: Value,
    status: Status,
    /// Printed instead of the flattened report in text mode.
    text: Option<String>,
}

impl Outcome {
    fn new(inputs: Vec<InputRef>, results: impl Serialize, status: Status) -> Result<Self> {
        Ok(Outcome {
            inputs,
            results: serde_json::to_value(results)?,
            status,
            text: None,
        })
    }
}

fn verified(ok: bool) -> Status {
    if ok {
        Status::Ok
    } else {
        Status::VerificationFailed
    }
}

fn design_input(arg: &str) -> Result<(Hypergraph, InputRef)> {
    let h = catalog::resolve(arg)?;
    let input = InputRef::design(&h);
    Ok((h, input))
}

fn execute(cmd: &Command, timing: bool) -> Result<Outcome> {
    match cmd {
        Command::Catalog(CatalogCmd::List) => Outcome::new(
            vec![],
            json!({ "families": catalog::FAMILIES.iter().map(|(f, form)| json!({"family": f, "names": form})).collect::<Vec<_>>(), "designs": catalog::list() }),
            Status::Ok,
        ),
        Command::Design(DesignCmd::Build { name, out }) => {
            let h = catalog::design(name)?;
            let text = h.to_json();
            if let Some(path) = out {
                std::fs::write(path, &text)?;
            }
            let mut o = Outcome::new(vec![InputRef::design(&h)], &h, Status::Ok)?;
            o.text = out.is_none().then_some(text);
            Ok(o)
        }
        Command::Design(DesignCmd::Check { design }) => {
            let (h, input) = design_input(design)?;
            let profile = h.profile();
            let violation = h.pliability_violation();
            Outcome::new(
                vec![input],
                json!({ "label": h.label(), "profile": profile, "pliability_violation": violation }),
                Status::Ok,
            )
        }
        Command::Groupoid(GroupoidCmd::Compute(a)) => {
            let (h, input) = design_input(&a.design)?;
            let report = build_groupoid(&h, a.base)?.classify()?;
            Outcome::new(vec![input], report, Status::Ok)
        }
        Command::Groupoid(GroupoidCmd::VerifyTheorems(a)) => {
            let (h, input) = design_input(&a.design)?;
            let report = verify_theorems(&h, a.base)?;
            let status = verified(report.passed());
            Outcome::new(vec![input], report, status)
        }
        Command::M13(M13Cmd::VerifySixTuples) => {
            let (h, input) = design_input("pg23")?;
            let g = build_groupoid(&h, 0)?;
            let report = verify_donors_and_recipients(&g, &h);
            let status = verified(report.holds);
            Outcome::new(vec![input], report, status)
        }
        Command::M13(M13Cmd::Signed { hole }) => {
            let report = signed_groupoid(*hole)?;
            let status = verified(
                report.negation_in_group && report.negation_central && report.quotient_matches_plain,
            );
            Outcome::new(vec![InputRef::named("signed:pg23")], report, status)
        }
        Command::M13(M13Cmd::Dual { hole }) => {
            let report = dual_groupoid(*hole)?;
            let status = verified(report.refines_point_line_split && report.point_restriction_faithful);
            Outcome::new(vec![InputRef::named("dual:pg23")], report, status)
        }
        Command::Pliable { spec } => {
            let f = pliable::from_spec(spec)?;
            let check = pliable::primitivity_check(&f)?;
            let status = verified(check.status != CheckStatus::Fail);
            Outcome::new(vec![InputRef::named(spec)], check, status)
        }
        Command::Code(CodeCmd::Analyze { design, field, full }) => {
            let (h, input) = design_input(design)?;
            let field = Field::from_q(field.parse().expect("clap restricts the field"))?;
            let report = codes::analyze(&h, field, *full)?;
            let status = if report.budget_skipped() {
                Status::BudgetExceeded
            } else {
                Status::Ok
            };
            Outcome::new(vec![input], report, status)
        }
        Command::Code(CodeCmd::GolayChain { point }) => {
            let (_, input) = design_input("pg23")?;
            let report = codes::golay_chain(*point)?;
            let status = verified(report.holds);
            Outcome::new(vec![input], report, status)
        }
        Command::VerifyAll { criteria } => {
            let ids: Vec<u8> = if criteria.is_empty() {
                (1..=verify::CRITERIA).collect()
            } else {
                criteria.clone()
            };
            let mut status = Status::Ok;
            let mut lines = Vec::new();
            let mut results = Vec::new();
            for id in ids {
                let r = verify::run_criterion(id)?;
                lines.push(r.summary());
                status = status.combine(if r.passed {
                    Status::Ok
                } else if r.budget_exceeded {
                    Status::BudgetExceeded
                } else {
                    Status::VerificationFailed
                });
                let mut v = serde_json::to_value(&r)?;
                if timing {
                    v["elapsed_ms"] = json!(r.elapsed.as_millis() as u64);
                }
                results.push(v);
            }
            let passed = results.iter().filter(|r| r["passed"] == true).count();
            lines.push(format!("passed {passed} of {}", results.len()));
            let mut o = Outcome::new(vec![], json!({ "passed": passed, "criteria": results }), status)?;
            o.text = Some(lines.join("\n"));
            Ok(o)
        }
        Command::Serve { .. } => unreachable!("serve is handled before execute"),
    }
}

/// Exit code for a failed command.
fn error_status(e: &Error) -> i32 {
    match e {
        Error::BudgetExceeded { .. } => Status::BudgetExceeded.exit_code(),
        _ => 2,
    }
}

fn serve(port: u16) -> i32 {
    let rt = match tokio::runtime::Runtime::new() {
        Ok(rt) => rt,
        Err(e) => {
            eprintln!("error: {e}");
            return 1;
        }
    };
    match rt.block_on(crate::service::serve(port)) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            1
        }
    }
}

/// Runs the command line `args` (program name first), writing reports to `out`.
pub fn run_with<I, T>(args: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    if let Command::Serve { port } = cli.command {
        return serve(port);
    }
    let command: Vec<String> = args
        .iter()
        .skip(1)
        .map(|a| a.to_string_lossy().into_owned())
        .collect();
    let start = Instant::now();
    let (report, text) = match execute(&cli.command, cli.timing) {
        Ok(o) => (Report::new(command, o.inputs, o.results, o.status), o.text),
        Err(e) => {
            let code = error_status(&e);
            if code != Status::BudgetExceeded.exit_code() {
                eprintln!("error: {e}");
                return code;
            }
            let results = json!({ "error": e.to_string() });
            (Report::new(command, vec![], results, Status::BudgetExceeded), None)
        }
    };
    let mut report = report;
    if cli.timing {
        report.elapsed_ms = Some(start.elapsed().as_millis() as u64);
    }
    let body = match (cli.json, text) {
        (true, _) => report.to_json(),
        (false, Some(t)) => t,
        (false, None) => report.to_text(),
    };
    let _ = writeln!(out, "{body}");
    report.status.exit_code()
}

/// Runs the process command line and returns the exit code.
pub fn run() -> i32 {
    run_with(std::env::args_os(), &mut std::io::stdout())
}
