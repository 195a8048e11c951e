//! `crystal-branch`: branching tables, crystal dumps and verification suites.
//!
//! Exit codes: 0 success, 1 mismatch or failed check, 2 invalid input,
//! 3 vertex budget exceeded.

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use crystal_branch_core::branching::{branch_multiplicity, branch_table, KWeight};
use crystal_branch_core::crystal::{build_crystal, export_graph, DominantWeight, ExportFormat, DEFAULT_BUDGET};
use crystal_branch_core::irrep::{
    check_defining_relations, idivided_poly, idivided_polys_by_recursion, recursion_holds, verify_based_structure,
    BTildeComputer, Check, Parity, Rank1Module,
};
use crystal_branch_core::oracle::decompose;
use crystal_branch_core::qlaurent::q_binomial;
use crystal_branch_core::Error;
use serde_json::json;

#[derive(Parser, Debug)]
#[command(name = "crystal-branch", version, about = "sl_n -> so_n branching via crystal degrees")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the table of [lambda:nu], or a single multiplicity with --nu.
    Branch(BranchArgs),
    /// Dump B(lambda) with deg and B~ annotations.
    Crystal(CrystalArgs),
    /// Check the idivided-power recursion and Gaussian binomials.
    Qcheck(QcheckArgs),
    /// Verify the based-module structure of V(nu) for n = 3.
    Irrep3(Irrep3Args),
    /// Verify the rank-one module V(l).
    Rank1(Rank1Args),
}

#[derive(Args, Debug)]
struct WeightArgs {
    #[arg(long)]
    n: usize,
    /// Fundamental-weight coordinates, comma separated.
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true, num_args = 0..)]
    lambda: Vec<i64>,
    /// Vertex budget for crystal enumeration.
    #[arg(long, env = "CRYSTAL_BRANCH_BUDGET", default_value_t = DEFAULT_BUDGET)]
    budget: usize,
}

impl WeightArgs {
    fn weight(&self) -> Result<DominantWeight, Error> {
        DominantWeight::from_signed(self.n, &self.lambda)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Tsv,
    Dot,
}

#[derive(Args, Debug)]
struct BranchArgs {
    #[command(flatten)]
    weight: WeightArgs,
    /// A single so_n weight in epsilon coordinates.
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
    nu: Option<Vec<i64>>,
    #[arg(long, value_enum, default_value_t = Format::Tsv)]
    format: Format,
    /// Compare against the Weyl-character oracle.
    #[arg(long)]
    verify: bool,
}

#[derive(Args, Debug)]
struct CrystalArgs {
    #[command(flatten)]
    weight: WeightArgs,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Args, Debug)]
struct QcheckArgs {
    #[arg(long, default_value_t = 12)]
    max_k: u32,
}

#[derive(Args, Debug)]
struct Irrep3Args {
    #[arg(long)]
    nu: u32,
}

#[derive(Args, Debug)]
struct Rank1Args {
    #[arg(long)]
    l: u32,
}

/// A failure carrying its exit code.
enum Failure {
    Invalid(String),
    Budget(String),
    Mismatch(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidWeight(_) | Error::UnsupportedFormat(_) => Failure::Invalid(e.to_string()),
            Error::BudgetExceeded { .. } => Failure::Budget(e.to_string()),
            _ => Failure::Mismatch(e.to_string()),
        }
    }
}

fn pretty(v: &serde_json::Value) -> String {
    serde_json::to_string_pretty(v).expect("json values serialize")
}

/// Writes to stdout, ignoring a closed pipe.
fn emit(text: &str) {
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(text.as_bytes()).and_then(|_| out.flush());
}

fn cmd_branch(a: &BranchArgs) -> Result<bool, Failure> {
    let lambda = a.weight.weight()?;
    if a.format == Format::Dot {
        return Err(Failure::Invalid("branch supports --format json or tsv".into()));
    }
    if let Some(nu) = &a.nu {
        let nu = KWeight::new(nu.clone());
        let mult = branch_multiplicity(&lambda, &nu, a.weight.budget)?;
        let expected = if a.verify { Some(decompose(&lambda, a.weight.budget)?.get(&nu)) } else { None };
        match a.format {
            Format::Tsv => {
                let coords: Vec<String> = nu.coords().iter().map(i64::to_string).collect();
                emit(&format!("{}\t{mult}\n", coords.join("\t")));
            }
            _ => emit(
                &(pretty(&json!({ "n": lambda.n(), "lambda": lambda.coords(), "nu": nu, "multiplicity": mult }))
                    + "\n"),
            ),
        }
        if let Some(e) = expected.filter(|&e| e != mult) {
            emit(&(pretty(&json!({ "match": false, "nu": nu, "branch": mult, "oracle": e })) + "\n"));
            return Ok(false);
        }
        return Ok(true);
    }
    let table = branch_table(&lambda, a.weight.budget)?;
    match a.format {
        Format::Tsv => emit(&table.to_tsv()),
        _ => emit(&(table.to_json()? + "\n")),
    }
    if a.verify {
        let oracle = decompose(&lambda, a.weight.budget)?;
        if oracle.entries() != table.entries() {
            let rows = |t: &crystal_branch_core::branching::BranchTable| -> Vec<serde_json::Value> {
                t.sorted().map(|(nu, c)| json!({ "nu": nu, "multiplicity": c })).collect()
            };
            emit(&(pretty(&json!({ "match": false, "branch": rows(&table), "oracle": rows(&oracle) })) + "\n"));
            return Ok(false);
        }
    }
    Ok(true)
}

fn cmd_crystal(a: &CrystalArgs) -> Result<bool, Failure> {
    let lambda = a.weight.weight()?;
    let format = match a.format {
        Format::Json => ExportFormat::Json,
        Format::Dot => ExportFormat::Dot,
        Format::Tsv => return Err(Failure::Invalid("crystal supports --format json or dot".into())),
    };
    let g = build_crystal(&lambda, a.weight.budget)?;
    let mut text = export_graph(&g, format, true);
    if !text.ends_with('\n') {
        text.push('\n');
    }
    emit(&text);
    Ok(true)
}

/// Prints the JSON report of a suite and returns whether every check passed.
fn report(suite: &str, params: serde_json::Value, checks: &[Check], extra: Option<(&str, serde_json::Value)>) -> bool {
    let passed = checks.iter().all(|c| c.pass);
    let failures: Vec<&Check> = checks.iter().filter(|c| !c.pass).collect();
    let mut doc =
        json!({ "suite": suite, "params": params, "passed": passed, "checks": checks.len(), "failures": failures });
    if let Some((key, value)) = extra {
        doc[key] = value;
    }
    emit(&(pretty(&doc) + "\n"));
    passed
}

fn cmd_qcheck(a: &QcheckArgs) -> Result<bool, Failure> {
    let mut checks = Vec::new();
    for (p, tag) in [(Parity::Even, "even"), (Parity::Odd, "odd")] {
        for (k, pass) in recursion_holds(a.max_k, p) {
            checks.push(Check { name: format!("recursion_{tag}"), k: Some(k as i64), pass });
        }
        for (k, poly) in idivided_polys_by_recursion(a.max_k, p).iter().enumerate() {
            let pass = poly == &idivided_poly(k as u32, p);
            checks.push(Check { name: format!("closed_form_{tag}"), k: Some(k as i64), pass });
        }
    }
    for m in 0..=a.max_k {
        for k in 0..=m {
            let c = q_binomial(m, k, 1);
            let pass = c.is_bar_invariant() && c.terms().all(|(_, x)| x >= &0.into());
            checks.push(Check { name: format!("binomial_{m}"), k: Some(k as i64), pass });
        }
    }
    Ok(report("qcheck", json!({ "max_k": a.max_k }), &checks, None))
}

fn cmd_irrep3(a: &Irrep3Args) -> Result<bool, Failure> {
    let mut checks = verify_based_structure(a.nu).checks;
    checks.extend(check_defining_relations(a.nu).checks);
    let edges = BTildeComputer::new(a.nu)
        .and_then(|c| c.graph())
        .map(|g| g.edges().iter().map(|(i, x, y)| format!("B{i}: {x} <-> {y}")).collect::<Vec<_>>());
    Ok(report("irrep3", json!({ "nu": a.nu }), &checks, Some(("btilde_edges", json!(edges)))))
}

fn cmd_rank1(a: &Rank1Args) -> Result<bool, Failure> {
    let r = Rank1Module::new(a.l).verify();
    Ok(report("rank1", json!({ "l": a.l }), &r.checks, None))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Branch(a) => cmd_branch(a),
        Command::Crystal(a) => cmd_crystal(a),
        Command::Qcheck(a) => cmd_qcheck(a),
        Command::Irrep3(a) => cmd_irrep3(a),
        Command::Rank1(a) => cmd_rank1(a),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Mismatch(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
        Err(Failure::Invalid(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Budget(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(3)
        }
    }
}
