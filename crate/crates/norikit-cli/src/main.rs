//! Command-line interface: parse representation files, run computations
//! and check suites, emit deterministic reports.
//!
//! Exit codes: 0 success, 1 check failure, 2 input error, 3 I/O error.

use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use norikit::checks::run_suite;
use norikit::coalgebra::{dual_of_algebra_hom, dualize, module_to_comodule, Coalgebra, ColimitChain};
use norikit::diagram::{matrix_from_text, representation_from_json, Representation};
use norikit::emodule::EModule;
use norikit::end_algebra::{compute_end, transition_hom, EndAlgebra};
use norikit::exact_linalg::{ExactMatrix, Scalar};
use norikit::functors::DEFAULT_SIZE_BOUND;
use norikit::Error;

#[derive(Parser)]
#[command(name = "norikit", version, about = "Exact diagram-algebra computations", disable_help_subcommand = true)]
struct Cli {
    /// Force machine-readable JSON output
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Smith normal form of an integer matrix (text format)
    Snf { matrix_file: PathBuf },
    /// Compute End(T): dimension, basis tuples, structure constants
    EndAlgebra { rep: PathBuf },
    /// Dual coalgebra of End(T) as JSON
    Coalgebra { rep: PathBuf },
    /// Translate a module over End(T) into a comodule
    Comodule {
        rep: PathBuf,
        #[arg(long)]
        module: PathBuf,
    },
    /// Run a named check suite (end, duality, equivalence, all)
    Check {
        rep: PathBuf,
        #[arg(long)]
        suite: String,
    },
    /// Colimit of dual coalgebras along a chain of full subdiagrams
    Colimit { chain: PathBuf },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}

#[derive(Debug)]
enum CliError {
    Io(std::io::Error),
    Lib(Error),
    Input(String),
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Io(e) => write!(f, "{e}"),
            CliError::Lib(e) => write!(f, "{e}"),
            CliError::Input(m) => write!(f, "{m}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Lib(e)
    }
}

fn exit_code_for(e: &CliError) -> u8 {
    match e {
        CliError::Io(_) => 3,
        CliError::Lib(_) | CliError::Input(_) => 2,
    }
}

fn read_file(path: &PathBuf) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(CliError::Io)
}

fn size_bound() -> usize {
    std::env::var("NORIKIT_SIZE_BOUND")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_SIZE_BOUND)
}

/// Parses and validates a representation file; violations name the
/// offending vertex or edge ids.
fn parse_representation(path: &PathBuf) -> Result<Representation, CliError> {
    let text = read_file(path)?;
    let rep = representation_from_json(&text)?;
    let violations = rep.validate();
    if !violations.is_empty() {
        let msgs: Vec<String> = violations.iter().map(ToString::to_string).collect();
        return Err(CliError::Input(msgs.join("; ")));
    }
    Ok(rep)
}

fn dispatch(cli: &Cli) -> Result<ExitCode, CliError> {
    match &cli.command {
        Command::Snf { matrix_file } => cmd_snf(matrix_file, cli.json),
        Command::EndAlgebra { rep } => cmd_end_algebra(rep, cli.json),
        Command::Coalgebra { rep } => cmd_coalgebra(rep),
        Command::Comodule { rep, module } => cmd_comodule(rep, module),
        Command::Check { rep, suite } => cmd_check(rep, suite, cli.json),
        Command::Colimit { chain } => cmd_colimit(chain, cli.json),
    }
}

fn scalar_strings(v: &[Scalar]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

fn matrix_rows(m: &ExactMatrix) -> Vec<Vec<String>> {
    (0..m.rows())
        .map(|i| (0..m.cols()).map(|j| m.at(i, j).to_string()).collect())
        .collect()
}

fn cmd_snf(path: &PathBuf, as_json: bool) -> Result<ExitCode, CliError> {
    let m = matrix_from_text(&read_file(path)?)?;
    let d = m.snf()?;
    if as_json {
        let out = json!({
            "diagonal": d.diagonal().iter().map(ToString::to_string).collect::<Vec<_>>(),
            "u": matrix_rows(&d.u),
            "s": matrix_rows(&d.s),
            "v": matrix_rows(&d.v),
        });
        println!("{}", serde_json::to_string(&out).expect("serializable"));
    } else {
        let diag: Vec<String> = d.diagonal().iter().map(ToString::to_string).collect();
        println!("diagonal: {}", diag.join(" "));
        println!("U:\n{}", d.u);
        println!("S:\n{}", d.s);
        println!("V:\n{}", d.v);
    }
    Ok(ExitCode::SUCCESS)
}

fn end_algebra_json(e: &EndAlgebra) -> Value {
    let mut basis = Vec::new();
    for i in 0..e.dim() {
        let mut per_vertex = serde_json::Map::new();
        for v in e.vertex_order() {
            per_vertex.insert(v.clone(), json!(matrix_rows(e.basis_component(i, v))));
        }
        basis.push(Value::Object(per_vertex));
    }
    json!({
        "dimension": e.dim(),
        "vertices": e.vertex_order(),
        "basis": basis,
        "structure": structure_triples(e),
        "unit": scalar_strings(e.unit_coords()),
    })
}

fn structure_triples(e: &EndAlgebra) -> Vec<Value> {
    let mut out = Vec::new();
    for i in 0..e.dim() {
        for j in 0..e.dim() {
            for l in 0..e.dim() {
                let c = e.structure_constant(i, j, l);
                if !c.is_zero() {
                    out.push(json!([i, j, l, c.to_string()]));
                }
            }
        }
    }
    out
}

fn cmd_end_algebra(path: &PathBuf, as_json: bool) -> Result<ExitCode, CliError> {
    let rep = parse_representation(path)?;
    let e = compute_end(&rep)?;
    if as_json {
        println!("{}", serde_json::to_string(&end_algebra_json(&e)).expect("serializable"));
    } else {
        println!("dimension: {}", e.dim());
        println!("vertices: {}", e.vertex_order().join(" "));
        for i in 0..e.dim() {
            for v in e.vertex_order() {
                println!("basis[{i}] {v}:");
                let m = e.basis_component(i, v);
                if m.rows() > 0 {
                    println!("{m}");
                }
            }
        }
        println!("structure:");
        for t in structure_triples(&e) {
            let arr = t.as_array().expect("triple");
            println!("({},{},{}) {}", arr[0], arr[1], arr[2], arr[3].as_str().expect("value"));
        }
        println!("unit: {}", scalar_strings(e.unit_coords()).join(" "));
    }
    Ok(ExitCode::SUCCESS)
}

fn coalgebra_json(c: &Coalgebra) -> Value {
    let mut delta = Vec::new();
    for (l, i, j, v) in c.delta_triples() {
        delta.push(json!([l, i, j, v.to_string()]));
    }
    json!({
        "rank": c.rank(),
        "epsilon": scalar_strings(c.epsilon()),
        "delta": delta,
    })
}

fn cmd_coalgebra(path: &PathBuf) -> Result<ExitCode, CliError> {
    let rep = parse_representation(path)?;
    let e = compute_end(&rep)?;
    let c = dualize(&e);
    println!("{}", serde_json::to_string(&coalgebra_json(&c)).expect("serializable"));
    Ok(ExitCode::SUCCESS)
}

fn parse_module(text: &str, e: &Arc<EndAlgebra>) -> Result<EModule, CliError> {
    let v: Value = serde_json::from_str(text).map_err(|e| CliError::Input(e.to_string()))?;
    let rank = v
        .get("rank")
        .and_then(Value::as_u64)
        .ok_or_else(|| CliError::Input("module file needs a numeric `rank`".into()))? as usize;
    let actions = v
        .get("action")
        .and_then(Value::as_array)
        .ok_or_else(|| CliError::Input("module file needs an `action` array".into()))?;
    if actions.len() != e.dim() {
        return Err(CliError::Input(format!(
            "expected {} action matrices (one per basis element), found {}",
            e.dim(),
            actions.len()
        )));
    }
    let ring = e.ring();
    let mut mats = Vec::new();
    for (idx, a) in actions.iter().enumerate() {
        let rows = a
            .as_array()
            .ok_or_else(|| CliError::Input(format!("action[{idx}] is not a matrix")))?;
        if rows.len() != rank {
            return Err(CliError::Input(format!(
                "action[{idx}] has {} rows, expected {rank}",
                rows.len()
            )));
        }
        let mut data = Vec::new();
        for row in rows {
            let cells = row
                .as_array()
                .ok_or_else(|| CliError::Input(format!("action[{idx}] row is not an array")))?;
            if cells.len() != rank {
                return Err(CliError::Input(format!("action[{idx}] is not {rank}x{rank}")));
            }
            let mut out = Vec::new();
            for c in cells {
                let s = c
                    .as_str()
                    .ok_or_else(|| CliError::Input("matrix entries must be strings".into()))?;
                out.push(Scalar::parse(s, ring).map_err(CliError::Lib)?);
            }
            data.push(out);
        }
        mats.push(ExactMatrix::from_rows(ring, data).map_err(CliError::Lib)?);
    }
    EModule::free(Arc::clone(e), rank, mats).map_err(CliError::Lib)
}

fn cmd_comodule(rep_path: &PathBuf, module_path: &PathBuf) -> Result<ExitCode, CliError> {
    let rep = parse_representation(rep_path)?;
    let e = Arc::new(compute_end(&rep)?);
    let module = parse_module(&read_file(module_path)?, &e)?;
    let cm = module_to_comodule(&module)?;
    let coaction: Vec<Value> = cm.coefficients().iter().map(|m| json!(matrix_rows(m))).collect();
    let out = json!({
        "rank": cm.rank(),
        "coalgebra": coalgebra_json(cm.coalgebra()),
        "coaction": coaction,
    });
    println!("{}", serde_json::to_string(&out).expect("serializable"));
    Ok(ExitCode::SUCCESS)
}

fn cmd_check(path: &PathBuf, suite: &str, as_json: bool) -> Result<ExitCode, CliError> {
    let rep = parse_representation(path)?;
    let report = run_suite(&rep, suite, size_bound())?;
    if as_json {
        let items: Vec<Value> = report
            .items
            .iter()
            .map(|i| json!({"name": i.name, "pass": i.pass, "detail": i.detail}))
            .collect();
        let out = json!({"suite": suite, "pass": report.pass(), "items": items});
        println!("{}", serde_json::to_string(&out).expect("serializable"));
    } else {
        for item in &report.items {
            let tag = if item.pass { "PASS" } else { "FAIL" };
            println!("{tag} {} ({})", item.name, item.detail);
        }
        println!("suite {}: {}", suite, if report.pass() { "PASS" } else { "FAIL" });
    }
    Ok(if report.pass() { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

/// chain.json: {"representation": {...}, "stages": [["p"], ["p","q"], ...]}
/// with each stage a vertex subset inducing a full subdiagram, nested in
/// order.
fn cmd_colimit(path: &PathBuf, as_json: bool) -> Result<ExitCode, CliError> {
    let v: Value =
        serde_json::from_str(&read_file(path)?).map_err(|e| CliError::Input(e.to_string()))?;
    let rep_value = v
        .get("representation")
        .ok_or_else(|| CliError::Input("chain file needs a `representation`".into()))?;
    let rep = representation_from_json(&rep_value.to_string())?;
    if !rep.is_valid() {
        return Err(CliError::Input("invalid representation in chain file".into()));
    }
    let stages_val = v
        .get("stages")
        .and_then(Value::as_array)
        .ok_or_else(|| CliError::Input("chain file needs a `stages` array".into()))?;
    let mut stage_sets: Vec<Vec<String>> = Vec::new();
    for s in stages_val {
        let ids = s
            .as_array()
            .ok_or_else(|| CliError::Input("each stage is an array of vertex ids".into()))?
            .iter()
            .map(|x| {
                x.as_str()
                    .map(str::to_string)
                    .ok_or_else(|| CliError::Input("vertex ids are strings".into()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        stage_sets.push(ids);
    }
    if stage_sets.is_empty() {
        return Err(CliError::Input("chain needs at least one stage".into()));
    }
    for w in stage_sets.windows(2) {
        if !w[0].iter().all(|v| w[1].contains(v)) {
            return Err(CliError::Input("stages must be nested vertex subsets".into()));
        }
    }

    // End algebras per stage, transition homs from each later stage to
    // the earlier one, dualized into the chain of coalgebra morphisms
    let algebras: Vec<EndAlgebra> = stage_sets
        .iter()
        .map(|vs| Ok(compute_end(&rep.restrict_to(vs)?)?))
        .collect::<Result<_, Error>>()?;
    let mut maps = Vec::new();
    for i in 0..algebras.len().saturating_sub(1) {
        let h = transition_hom(&algebras[i + 1], &algebras[i])?;
        maps.push(dual_of_algebra_hom(&h, &algebras[i + 1], &algebras[i])?);
    }
    let stages: Vec<Coalgebra> = algebras.iter().map(dualize).collect();
    let chain = ColimitChain::new(stages, maps)?;
    chain.verify_pushforward_compatibility()?;

    if as_json {
        let out = json!({
            "stages": chain.stages().iter().map(coalgebra_json).collect::<Vec<_>>(),
            "maps": chain.maps().iter().map(matrix_rows).collect::<Vec<_>>(),
            "final_rank": chain.final_rank(),
            "pushforward_compatible": true,
        });
        println!("{}", serde_json::to_string(&out).expect("serializable"));
    } else {
        for (i, c) in chain.stages().iter().enumerate() {
            println!("stage {i}: rank {}", c.rank());
        }
        println!("maps verified: {}", chain.maps().len());
        println!("pushforward compatible: true");
        println!("final rank: {}", chain.final_rank());
    }
    Ok(ExitCode::SUCCESS)
}
