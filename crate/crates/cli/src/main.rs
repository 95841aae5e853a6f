//! Command-line front end: recognition, exact solvers, the brute-force
//! oracle, witness verification, and instance generation.
//!
//! Exit codes: 0 ok, 1 verification failed, 2 parse or parameter error,
//! 3 not co-biconvex, 4 unsupported k, 5 infeasible, 6 oracle budget.

use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand};
use serde_json::json;

use tupledom::cobiconvex::{solve_cobiconvex, SolveError};
use tupledom::domination::{DominationResult, DominationValue};
use tupledom::gen::random_cobiconvex;
use tupledom::graph::Graph;
use tupledom::oracle::{oracle_min_ktuple, OracleBudget, OracleError};
use tupledom::recognition::{circ1p_columns, decompose_cobiconvex, DecomposeError};
use tupledom::web::{
    algorithm1, ktuple_coverage_arith, web_graph, witness_walk, WebParams,
};

mod formats;

use formats::{emit_edges, emit_matrix, parse_graph, FileFormat};

const EXIT_VERIFY_FALSE: i32 = 1;
const EXIT_PARSE: i32 = 2;
const EXIT_NOT_COBICONVEX: i32 = 3;
const EXIT_UNSUPPORTED_K: i32 = 4;
const EXIT_INFEASIBLE: i32 = 5;
const EXIT_BUDGET: i32 = 6;
const EXIT_INTERNAL: i32 = 70;

#[derive(Parser)]
#[command(
    name = "tupledom",
    version,
    about = "Exact k-tuple domination on co-biconvex and web graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Report class verdicts (co-biconvex, circular-ones) for a graph file.
    Recognize {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "edges")]
        format: FileFormat,
        #[arg(long)]
        json: bool,
    },
    /// Solve k-tuple domination on a co-biconvex graph file.
    Solve {
        file: PathBuf,
        #[arg(short)]
        k: usize,
        #[arg(long, value_enum, default_value = "edges")]
        format: FileFormat,
        #[arg(long)]
        json: bool,
    },
    /// Solve k-tuple domination on the web graph W(n, m).
    Web {
        n: usize,
        m: usize,
        #[arg(short)]
        k: usize,
        #[arg(long)]
        json: bool,
    },
    /// Exact solve by brute force (small instances only).
    Oracle {
        /// Graph file; alternatively give --web N M.
        file: Option<PathBuf>,
        /// Web parameters `N M` instead of a file.
        #[arg(long, num_args = 2, value_names = ["N", "M"])]
        web: Option<Vec<usize>>,
        #[arg(short)]
        k: usize,
        #[arg(long, value_enum, default_value = "edges")]
        format: FileFormat,
        /// Raise the vertex-count cap of the search.
        #[arg(long)]
        max_vertices: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Check whether a vertex set k-tuple dominates an instance.
    Verify {
        /// Graph file; alternatively give --web N M.
        file: Option<PathBuf>,
        #[arg(long, num_args = 2, value_names = ["N", "M"])]
        web: Option<Vec<usize>>,
        #[arg(short)]
        k: usize,
        /// Comma-separated vertex list, e.g. 1,10,4.
        #[arg(long, default_value = "")]
        set: String,
        #[arg(long, value_enum, default_value = "edges")]
        format: FileFormat,
        #[arg(long)]
        json: bool,
    },
    /// Emit a generated instance file.
    Gen {
        #[command(subcommand)]
        kind: GenKind,
    },
}

#[derive(Subcommand)]
enum GenKind {
    /// The web graph W(n, m) as a graph file.
    Web {
        n: usize,
        m: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "edges")]
        format: FileFormat,
    },
    /// A random co-biconvex graph from a seeded staircase of zero runs.
    Cobiconvex {
        /// First clique size.
        #[arg(long)]
        c1: usize,
        /// Second clique size.
        #[arg(long)]
        c2: usize,
        /// Number of universal vertices to append.
        #[arg(long, default_value_t = 0)]
        universal: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "edges")]
        format: FileFormat,
    },
}

struct Failure {
    code: i32,
    message: String,
}

fn fail(code: i32, message: impl Into<String>) -> Failure {
    Failure { code, message: message.into() }
}

fn main() {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => std::process::exit(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            std::process::exit(f.code);
        }
    }
}

fn run(command: Command) -> Result<i32, Failure> {
    match command {
        Command::Recognize { file, format, json } => recognize(&file, format, json),
        Command::Solve { file, k, format, json } => solve(&file, k, format, json),
        Command::Web { n, m, k, json } => web(n, m, k, json),
        Command::Oracle { file, web, k, format, max_vertices, json } => {
            oracle(file.as_deref(), web.as_deref(), k, format, max_vertices, json)
        }
        Command::Verify { file, web, k, set, format, json } => {
            verify(file.as_deref(), web.as_deref(), k, &set, format, json)
        }
        Command::Gen { kind } => gen(kind),
    }
}

fn load_graph(path: &Path, format: FileFormat) -> Result<Graph, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| fail(EXIT_PARSE, format!("{}: {e}", path.display())))?;
    parse_graph(&text, format).map_err(|e| fail(EXIT_PARSE, format!("{}: {e}", path.display())))
}

fn recognize(path: &Path, format: FileFormat, json: bool) -> Result<i32, Failure> {
    let g = load_graph(path, format)?;
    let decomposition = decompose_cobiconvex(&g);
    let circular = circ1p_columns(&g.augmented_adjacency()).is_some();
    if json {
        let mut record = json!({
            "instance": path.display().to_string(),
            "n": g.vertex_count(),
            "edges": g.edge_count(),
            "circular_ones": circular,
        });
        match &decomposition {
            Ok(d) => {
                record["cobiconvex"] = json!(true);
                record["c1_size"] = json!(d.c1.len());
                record["c2_size"] = json!(d.c2.len());
                record["u_size"] = json!(d.u.len());
                record["ordering"] = json!(d.ordering);
            }
            Err(DecomposeError::NotCoBiconvex) => record["cobiconvex"] = json!(false),
            Err(e @ DecomposeError::StructureViolation) => {
                record["cobiconvex"] = json!("structure-violation");
                record["detail"] = json!(e.to_string());
            }
        }
        println!("{record}");
    } else {
        println!("instance: {}", path.display());
        println!("vertices: {}", g.vertex_count());
        println!("edges: {}", g.edge_count());
        match &decomposition {
            Ok(d) => {
                println!(
                    "co-biconvex: yes; |C1|={} |C2|={} |U|={}",
                    d.c1.len(),
                    d.c2.len(),
                    d.u.len()
                );
                println!("ordering: {}", join(&d.ordering));
            }
            Err(DecomposeError::NotCoBiconvex) => println!("co-biconvex: no"),
            Err(e @ DecomposeError::StructureViolation) => println!("co-biconvex: {e}"),
        }
        println!("circular-ones: {}", if circular { "yes" } else { "no" });
    }
    Ok(0)
}

fn join(values: &[usize]) -> String {
    values
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

/// Prints a result record and maps its value to the exit code.
fn report(
    instance: &str,
    res: &DominationResult,
    elapsed_ms: f64,
    json: bool,
    extra_human: &[String],
) -> i32 {
    if json {
        let mut record = json!({
            "instance": instance,
            "k": res.k,
            "derivation": res.derivation.as_str(),
            "elapsed_ms": elapsed_ms,
        });
        match res.value {
            DominationValue::Finite(v) => {
                record["value"] = json!(v);
                record["witness"] = json!(res.witness);
            }
            DominationValue::Infeasible => record["value"] = json!("infeasible"),
        }
        println!("{record}");
    } else {
        println!("instance: {instance}");
        println!("k: {}", res.k);
        println!("value: {}", res.value);
        for line in extra_human {
            println!("{line}");
        }
        if !res.value.is_infeasible() {
            println!("witness: {}", join(&res.witness));
        }
        println!("derivation: {}", res.derivation);
        println!("elapsed_ms: {elapsed_ms:.3}");
    }
    if res.value.is_infeasible() {
        EXIT_INFEASIBLE
    } else {
        0
    }
}

fn solve(path: &Path, k: usize, format: FileFormat, json: bool) -> Result<i32, Failure> {
    let g = load_graph(path, format)?;
    let start = Instant::now();
    let res = solve_cobiconvex(&g, k).map_err(|e| {
        let code = match e {
            SolveError::NotCoBiconvex | SolveError::StructureViolation => EXIT_NOT_COBICONVEX,
            SolveError::UnsupportedK { .. } => EXIT_UNSUPPORTED_K,
            _ => EXIT_INTERNAL,
        };
        fail(code, e.to_string())
    })?;
    let elapsed = start.elapsed().as_secs_f64() * 1e3;
    Ok(report(&path.display().to_string(), &res, elapsed, json, &[]))
}

fn web(n: usize, m: usize, k: usize, json: bool) -> Result<i32, Failure> {
    let p = WebParams::new(n, m).map_err(|e| fail(EXIT_PARSE, e.to_string()))?;
    let start = Instant::now();
    let res = algorithm1(&p, k);
    let elapsed = start.elapsed().as_secs_f64() * 1e3;
    let mut extra = Vec::new();
    if !json && !res.value.is_infeasible() {
        if let Some(walk) = witness_walk(&p, k) {
            extra.push(format!("witness (walk order): {}", join(&walk)));
            let original: Vec<String> = walk
                .iter()
                .map(|&label| format!("v{}", p.original_index(label)))
                .collect();
            extra.push(format!("witness (original labels): {}", original.join(" ")));
        }
    }
    Ok(report(&format!("web({n},{m})"), &res, elapsed, json, &extra))
}

enum Instance {
    File(Graph, String),
    Web(WebParams),
}

fn resolve_instance(
    file: Option<&Path>,
    web: Option<&[usize]>,
    format: FileFormat,
) -> Result<Instance, Failure> {
    match (file, web) {
        (Some(path), None) => {
            let g = load_graph(path, format)?;
            Ok(Instance::File(g, path.display().to_string()))
        }
        (None, Some(params)) => {
            let [n, m] = params else {
                return Err(fail(EXIT_PARSE, "--web takes exactly two values"));
            };
            let p = WebParams::new(*n, *m).map_err(|e| fail(EXIT_PARSE, e.to_string()))?;
            Ok(Instance::Web(p))
        }
        _ => Err(fail(EXIT_PARSE, "give either a graph file or --web N M")),
    }
}

fn oracle(
    file: Option<&Path>,
    web: Option<&[usize]>,
    k: usize,
    format: FileFormat,
    max_vertices: Option<usize>,
    json: bool,
) -> Result<i32, Failure> {
    let mut budget = OracleBudget::default();
    if let Some(cap) = max_vertices {
        budget.max_vertices = cap;
    }
    let (g, desc) = match resolve_instance(file, web, format)? {
        Instance::File(g, desc) => (g, desc),
        Instance::Web(p) => {
            if p.n() > budget.max_vertices {
                return Err(fail(
                    EXIT_BUDGET,
                    format!(
                        "web on {} vertices exceeds the oracle budget {}",
                        p.n(),
                        budget.max_vertices
                    ),
                ));
            }
            (web_graph(&p), format!("web({},{})", p.n(), p.m()))
        }
    };
    let start = Instant::now();
    let res = oracle_min_ktuple(&g, k, &budget).map_err(|e| {
        let code = match e {
            OracleError::BudgetExceeded { .. } | OracleError::TimeLimit => EXIT_BUDGET,
        };
        fail(code, e.to_string())
    })?;
    let elapsed = start.elapsed().as_secs_f64() * 1e3;
    Ok(report(&desc, &res, elapsed, json, &[]))
}

fn parse_set(set: &str) -> Result<Vec<usize>, Failure> {
    let mut out = Vec::new();
    for piece in set.split(',').map(str::trim) {
        if piece.is_empty() {
            continue;
        }
        let v: usize = piece
            .parse()
            .map_err(|_| fail(EXIT_PARSE, format!("bad vertex {piece:?} in --set")))?;
        out.push(v);
    }
    Ok(out)
}

fn verify(
    file: Option<&Path>,
    web: Option<&[usize]>,
    k: usize,
    set: &str,
    format: FileFormat,
    json: bool,
) -> Result<i32, Failure> {
    let d = parse_set(set)?;
    let (desc, deficiencies) = match resolve_instance(file, web, format)? {
        Instance::File(g, desc) => {
            let deficiencies = g
                .ktuple_deficiencies(&d, k)
                .map_err(|e| fail(EXIT_PARSE, e.to_string()))?;
            (desc, deficiencies)
        }
        Instance::Web(p) => {
            let coverage = ktuple_coverage_arith(&p, &d)
                .ok_or_else(|| fail(EXIT_PARSE, "set contains labels out of range"))?;
            let deficiencies: Vec<(usize, usize)> = coverage
                .iter()
                .enumerate()
                .filter(|&(_, &c)| c < k)
                .map(|(i, &c)| (i + 1, c))
                .collect();
            (format!("web({},{})", p.n(), p.m()), deficiencies)
        }
    };
    let ok = deficiencies.is_empty();
    if json {
        println!(
            "{}",
            json!({
                "instance": desc,
                "k": k,
                "set_size": d.len(),
                "dominates": ok,
                "deficient": deficiencies
                    .iter()
                    .map(|&(v, c)| json!({"vertex": v, "covered": c}))
                    .collect::<Vec<_>>(),
            })
        );
    } else {
        println!("instance: {desc}");
        println!("k: {k}");
        println!("dominates: {}", if ok { "true" } else { "false" });
        for &(v, c) in &deficiencies {
            println!("deficient: vertex {v} covered {c} < {k}");
        }
    }
    Ok(if ok { 0 } else { EXIT_VERIFY_FALSE })
}

fn gen(kind: GenKind) -> Result<i32, Failure> {
    let (graph, comment, output, format) = match kind {
        GenKind::Web { n, m, output, format } => {
            let p = WebParams::new(n, m).map_err(|e| fail(EXIT_PARSE, e.to_string()))?;
            if n.saturating_mul(m) > 10_000_000 {
                return Err(fail(EXIT_PARSE, "web too large to materialize as a file"));
            }
            (web_graph(&p), format!("web n={n} m={m}"), output, format)
        }
        GenKind::Cobiconvex { c1, c2, universal, seed, output, format } => {
            let g = random_cobiconvex(c1, c2, universal, seed)
                .map_err(|e| fail(EXIT_PARSE, e.to_string()))?;
            (
                g,
                format!("cobiconvex c1={c1} c2={c2} universal={universal} seed={seed}"),
                output,
                format,
            )
        }
    };
    let text = match format {
        FileFormat::Edges => emit_edges(&graph, Some(&comment)),
        FileFormat::Matrix => emit_matrix(&graph),
    };
    match output {
        Some(path) => std::fs::write(&path, text)
            .map_err(|e| fail(EXIT_PARSE, format!("{}: {e}", path.display())))?,
        None => print!("{text}"),
    }
    Ok(0)
}
