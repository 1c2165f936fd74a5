//! Command-line front end. `run` does all the work so it can be driven
//! from tests with in-memory writers.

use crate::extract::{cliques_per_min_edge, extract_with, CliqueJson, ExtractOptions};
use crate::fixtures::{load_fixture, FixtureError};
use crate::generators::{complete, complete_multipartite, moon_moser, GeneratorError};
use crate::graph::Graph;
use crate::io::{read_graph, write_dimacs, write_edge_list, ParseError};
use crate::oracle::{
    enumerate_maximal_cliques, maghout_cliques, max_clique_exact, OracleError, OracleMethod,
    OracleReport, DEFAULT_CLAUSE_BUDGET, DEFAULT_NODE_BUDGET,
};
use crate::prune::{full_trace, TraceMode};
use crate::triangles::{edge_weight_vector, enumerate_triangles, vertex_weight_vector};
use clap::{Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;
use thiserror::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_BUDGET: i32 = 2;
pub const EXIT_INVARIANT: i32 = 3;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Generator(#[from] GeneratorError),
    #[error(transparent)]
    Fixture(#[from] FixtureError),
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Budget(#[from] OracleError),
    #[error("invariant violated: {0}")]
    Invariant(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Budget(_) => EXIT_BUDGET,
            CliError::Invariant(_) => EXIT_INVARIANT,
            _ => EXIT_INPUT,
        }
    }
}

#[derive(Parser, Debug)]
#[command(name = "triclique", version, about = "Triangle-pruning clique search")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum OutFormat {
    Edges,
    Dimacs,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum ModeArg {
    Exhaustive,
    EarlyStop,
}

impl From<ModeArg> for TraceMode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Exhaustive => TraceMode::Exhaustive,
            ModeArg::EarlyStop => TraceMode::EarlyStop,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum MethodArg {
    BranchAndBound,
    Pivot,
    Maghout,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Write a generated graph.
    Generate {
        #[command(subcommand)]
        family: Family,
        /// Output file; standard output when absent.
        #[arg(short, long, global = true)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "edges", global = true)]
        format: OutFormat,
    },
    /// Write a bundled fixture graph.
    Fixture {
        name: String,
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Sizes, triangle counts, initial weights and structure flags.
    Analyze {
        path: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Iteration table of the pruning process.
    Trace {
        path: PathBuf,
        #[arg(long, value_enum, default_value = "exhaustive")]
        mode: ModeArg,
        #[arg(long)]
        json: bool,
    },
    /// Heuristic clique extraction.
    Clique {
        path: PathBuf,
        /// One extraction per minimum-weight edge of the main iteration.
        #[arg(long)]
        all_min_edges: bool,
        #[arg(long, value_enum, default_value = "exhaustive")]
        mode: ModeArg,
        #[arg(long)]
        json: bool,
    },
    /// Compare the heuristic with both exact oracles.
    Validate {
        path: PathBuf,
        /// Search node limit for the exact oracles.
        #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
        budget: u64,
        /// Complement edge limit for the Boolean expansion.
        #[arg(long, default_value_t = DEFAULT_CLAUSE_BUDGET)]
        clause_budget: usize,
        #[arg(long)]
        json: bool,
    },
    /// Run one exact oracle.
    Oracle {
        path: PathBuf,
        #[arg(long, value_enum, default_value = "pivot")]
        method: MethodArg,
        /// Node limit, or clause limit for `maghout`.
        #[arg(long)]
        budget: Option<u64>,
    },
}

#[derive(Subcommand, Debug)]
pub enum Family {
    Complete {
        n: usize,
    },
    MoonMoser {
        triads: usize,
    },
    /// Part sizes, comma separated, e.g. `3,3,3,4`.
    Multipartite {
        #[arg(value_delimiter = ',', required = true)]
        parts: Vec<usize>,
    },
    /// G(n, p) with an explicit seed.
    Random {
        n: usize,
        p: f64,
        #[arg(long)]
        seed: u64,
    },
}

/// Each pair `u < v` is an edge with probability `p`, in lexicographic order.
pub fn gnp(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pairs = Vec::new();
    for u in 1..=n {
        for v in u + 1..=n {
            if rng.gen_bool(p) {
                pairs.push((u, v));
            }
        }
    }
    Graph::from_edge_list(n, pairs).expect("sampled graph is simple")
}

fn emit(text: &str, out: Option<&PathBuf>, stdout: &mut dyn Write) -> Result<(), CliError> {
    match out {
        Some(p) => std::fs::write(p, text)?,
        None => stdout.write_all(text.as_bytes())?,
    }
    Ok(())
}

fn join(xs: impl IntoIterator<Item = usize>) -> String {
    xs.into_iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

#[derive(Serialize, Deserialize, Debug, PartialEq)]
pub struct AnalyzeReport {
    pub vertices: usize,
    pub edges: usize,
    pub triangles: usize,
    pub min: u32,
    pub max: u32,
    pub edge_weights: Vec<u32>,
    pub vertex_weights: Vec<u32>,
    pub nonseparable: bool,
    pub structure: serde_json::Value,
}

#[derive(Serialize, Deserialize, Debug, PartialEq)]
pub struct EdgeClique {
    pub edge: usize,
    pub clique: CliqueJson,
}

#[derive(Serialize, Deserialize, Debug, PartialEq)]
pub struct PerEdgeReport {
    pub main_index: Option<usize>,
    pub min: u32,
    pub by_edge: Vec<EdgeClique>,
    pub distinct: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize, Debug, PartialEq, Default)]
pub struct Runtimes {
    pub heuristic_ms: f64,
    pub branch_and_bound_ms: f64,
    pub pivot_ms: f64,
    pub maghout_ms: f64,
}

#[derive(Serialize, Deserialize, Debug, PartialEq)]
pub struct ValidateReport {
    pub vertices: usize,
    pub edges: usize,
    pub heuristic_size: usize,
    pub heuristic_vertices: Vec<usize>,
    pub verified: bool,
    pub omega: Option<usize>,
    pub agree: Option<bool>,
    pub count_maximal: Option<usize>,
    pub maghout_count: Option<usize>,
    pub oracles_agree: Option<bool>,
    /// Oracles that ran out of budget, with the message.
    pub budget_errors: Vec<String>,
    pub runtimes: Runtimes,
}

fn ms(t: Instant) -> f64 {
    t.elapsed().as_secs_f64() * 1e3
}

pub fn validate(g: &Graph, budget: u64, clause_budget: usize) -> ValidateReport {
    let mut runtimes = Runtimes::default();
    let mut budget_errors = Vec::new();

    let t = Instant::now();
    let h = extract_with(g, ExtractOptions::default());
    runtimes.heuristic_ms = ms(t);

    let t = Instant::now();
    let exact = max_clique_exact(g, budget)
        .map_err(|e| budget_errors.push(format!("branch-and-bound: {e}")))
        .ok();
    runtimes.branch_and_bound_ms = ms(t);

    let t = Instant::now();
    let maximal = enumerate_maximal_cliques(g, budget)
        .map_err(|e| budget_errors.push(format!("pivot: {e}")))
        .ok();
    runtimes.pivot_ms = ms(t);

    let t = Instant::now();
    let maghout = maghout_cliques(g, clause_budget)
        .map_err(|e| budget_errors.push(format!("maghout: {e}")))
        .ok();
    runtimes.maghout_ms = ms(t);

    let omega = exact
        .as_ref()
        .map(|e| e.omega)
        .or_else(|| maximal.as_ref().map(|m| m.omega()));
    let oracles_agree = match (&maximal, &maghout) {
        (Some(a), Some(b)) => Some(&a.cliques == b),
        _ => None,
    };
    ValidateReport {
        vertices: g.vertex_count(),
        edges: g.edge_count(),
        heuristic_size: h.size(),
        heuristic_vertices: h.vertices.to_vec(),
        verified: h.verified,
        omega,
        agree: omega.map(|w| w == h.size()),
        count_maximal: maximal.as_ref().map(|m| m.cliques.len()),
        maghout_count: maghout.as_ref().map(Vec::len),
        oracles_agree,
        budget_errors,
        runtimes,
    }
}

/// Runs one command, writing results to `out` and diagnostics to `err`.
/// Returns the process exit code.
pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match dispatch(cli, out, err) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn dispatch(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), CliError> {
    match cli.command {
        Command::Generate {
            family,
            out: path,
            format,
        } => {
            let g = match family {
                Family::Complete { n } => complete(n)?,
                Family::MoonMoser { triads } => moon_moser(triads)?,
                Family::Multipartite { parts } => complete_multipartite(&parts)?,
                Family::Random { n, p, seed } => {
                    if n == 0 || !(0.0..=1.0).contains(&p) {
                        return Err(CliError::Usage(format!(
                            "random graph needs n >= 1 and 0 <= p <= 1, got n={n} p={p}"
                        )));
                    }
                    gnp(n, p, seed)
                }
            };
            let text = match format {
                OutFormat::Edges => write_edge_list(&g),
                OutFormat::Dimacs => write_dimacs(&g),
            };
            emit(&text, path.as_ref(), out)
        }
        Command::Fixture { name, out: path } => {
            let f = load_fixture(&name)?;
            emit(&write_edge_list(&f.graph), path.as_ref(), out)
        }
        Command::Analyze { path, json } => {
            let g = read_graph(&path)?;
            let ts = enumerate_triangles(&g);
            let ew = edge_weight_vector(&g, &ts).expect("enumerated triangles are valid");
            let vw = vertex_weight_vector(&g, &ts).expect("enumerated triangles are valid");
            let mm = ew.min_max();
            let sep = g.check_nonseparable();
            if !sep.is_nonseparable() {
                writeln!(
                    err,
                    "warning: graph is separable or has a vertex of degree < 3"
                )?;
            }
            let report = AnalyzeReport {
                vertices: g.vertex_count(),
                edges: g.edge_count(),
                triangles: ts.len(),
                min: mm.min,
                max: mm.max,
                nonseparable: sep.is_nonseparable(),
                structure: serde_json::to_value(&sep)?,
                edge_weights: ew.counts,
                vertex_weights: vw.counts,
            };
            if json {
                writeln!(out, "{}", serde_json::to_string_pretty(&report)?)?;
            } else {
                writeln!(out, "vertices   {}", report.vertices)?;
                writeln!(out, "edges      {}", report.edges)?;
                writeln!(out, "triangles  {}", report.triangles)?;
                writeln!(out, "MIN/MAX    {}/{}", report.min, report.max)?;
                writeln!(
                    out,
                    "P0         {}",
                    join(report.edge_weights.iter().map(|&w| w as usize))
                )?;
                writeln!(out, "nonseparable {}", report.nonseparable)?;
            }
            Ok(())
        }
        Command::Trace { path, mode, json } => {
            let g = read_graph(&path)?;
            let t = full_trace(&g, mode.into());
            if t.is_empty() {
                writeln!(err, "warning: graph has no triangles")?;
            }
            if json {
                writeln!(out, "{}", serde_json::to_string_pretty(&t.to_document())?)?;
            } else {
                writeln!(
                    out,
                    "{:>3} {:>4} {:>4} {:>6}  min edges",
                    "i", "MIN", "MAX", "|C|"
                )?;
                for r in &t.records {
                    let mark = if Some(r.index) == t.main_index {
                        "*"
                    } else {
                        " "
                    };
                    writeln!(
                        out,
                        "{:>3} {:>4} {:>4} {:>6}{} {}",
                        r.index,
                        r.min,
                        r.max,
                        r.surviving.len(),
                        mark,
                        join(r.min_edges.iter().copied())
                    )?;
                }
            }
            Ok(())
        }
        Command::Clique {
            path,
            all_min_edges,
            mode,
            json,
        } => {
            let g = read_graph(&path)?;
            let opts = ExtractOptions { mode: mode.into() };
            if all_min_edges {
                let per = cliques_per_min_edge(&g, opts);
                if let Some((e, _)) = per.by_edge.iter().find(|(_, r)| !r.verified) {
                    return Err(CliError::Invariant(format!(
                        "result seeded at edge {e} is not a clique"
                    )));
                }
                if per.by_edge.is_empty() {
                    writeln!(err, "warning: graph has no triangles")?;
                }
                let report = PerEdgeReport {
                    main_index: per.main_index,
                    min: per.min,
                    by_edge: per
                        .by_edge
                        .iter()
                        .map(|(e, r)| EdgeClique {
                            edge: *e,
                            clique: r.to_json(),
                        })
                        .collect(),
                    distinct: per.distinct.iter().map(|v| v.to_vec()).collect(),
                };
                if json {
                    writeln!(out, "{}", serde_json::to_string_pretty(&report)?)?;
                } else {
                    for ec in &report.by_edge {
                        writeln!(
                            out,
                            "e{:<4} {}",
                            ec.edge,
                            join(ec.clique.vertices.iter().copied())
                        )?;
                    }
                    writeln!(out, "distinct: {}", report.distinct.len())?;
                    for d in &report.distinct {
                        writeln!(out, "  {}", join(d.iter().copied()))?;
                    }
                }
            } else {
                let r = extract_with(&g, opts);
                if !r.verified {
                    return Err(CliError::Invariant("extracted set is not a clique".into()));
                }
                if json {
                    writeln!(out, "{}", serde_json::to_string_pretty(&r.to_json())?)?;
                } else {
                    writeln!(out, "clique     {}", join(r.vertices.iter()))?;
                    writeln!(out, "size       {}", r.size())?;
                    writeln!(out, "verified   {}", r.verified)?;
                    writeln!(out, "depth      {}", r.depth)?;
                    writeln!(out, "seed edges {}", join(r.seed_edges.iter().copied()))?;
                    if r.degenerate {
                        writeln!(err, "warning: graph has no triangles, result is degenerate")?;
                    }
                    if r.fallback_used {
                        writeln!(err, "warning: vertex-drop fallback was used")?;
                    }
                }
            }
            Ok(())
        }
        Command::Validate {
            path,
            budget,
            clause_budget,
            json,
        } => {
            let g = read_graph(&path)?;
            let report = validate(&g, budget, clause_budget);
            if json {
                writeln!(out, "{}", serde_json::to_string_pretty(&report)?)?;
            } else {
                let opt = |x: Option<usize>| x.map_or("-".to_string(), |v| v.to_string());
                let flag = |x: Option<bool>| x.map_or("-".to_string(), |v| v.to_string());
                writeln!(
                    out,
                    "heuristic  {} ({})",
                    report.heuristic_size,
                    join(report.heuristic_vertices.iter().copied())
                )?;
                writeln!(out, "omega      {}", opt(report.omega))?;
                writeln!(out, "agree      {}", flag(report.agree))?;
                writeln!(out, "maximal    {}", opt(report.count_maximal))?;
                writeln!(out, "maghout    {}", opt(report.maghout_count))?;
                writeln!(out, "oracles agree {}", flag(report.oracles_agree))?;
                let r = &report.runtimes;
                writeln!(
                    out,
                    "runtime ms heuristic {:.3}, b&b {:.3}, pivot {:.3}, maghout {:.3}",
                    r.heuristic_ms, r.branch_and_bound_ms, r.pivot_ms, r.maghout_ms
                )?;
            }
            for e in &report.budget_errors {
                writeln!(err, "warning: {e}")?;
            }
            if !report.verified {
                return Err(CliError::Invariant(
                    "heuristic result is not a clique".into(),
                ));
            }
            if report.omega.is_some_and(|w| report.heuristic_size > w) {
                return Err(CliError::Invariant(
                    "heuristic clique larger than omega".into(),
                ));
            }
            if report.oracles_agree == Some(false) {
                return Err(CliError::Invariant("exact oracles disagree".into()));
            }
            Ok(())
        }
        Command::Oracle {
            path,
            method,
            budget,
        } => {
            let g = read_graph(&path)?;
            let report = match method {
                MethodArg::BranchAndBound => {
                    let b = budget.unwrap_or(DEFAULT_NODE_BUDGET);
                    let ex = max_clique_exact(&g, b)?;
                    let all = enumerate_maximal_cliques(&g, b)?;
                    OracleReport {
                        omega: ex.omega,
                        count_maximal: all.cliques.len(),
                        method: OracleMethod::BranchAndBound,
                        nodes_visited: ex.nodes_visited,
                    }
                }
                MethodArg::Pivot => {
                    let all = enumerate_maximal_cliques(&g, budget.unwrap_or(DEFAULT_NODE_BUDGET))?;
                    OracleReport {
                        omega: all.omega(),
                        count_maximal: all.cliques.len(),
                        method: OracleMethod::Pivot,
                        nodes_visited: all.nodes_visited,
                    }
                }
                MethodArg::Maghout => {
                    let b = budget.map_or(DEFAULT_CLAUSE_BUDGET, |b| b as usize);
                    let cliques = maghout_cliques(&g, b)?;
                    OracleReport {
                        omega: cliques.iter().map(|c| c.len()).max().unwrap_or(0),
                        count_maximal: cliques.len(),
                        method: OracleMethod::Maghout,
                        nodes_visited: g.complement().edge_count() as u64,
                    }
                }
            };
            writeln!(out, "{}", serde_json::to_string_pretty(&report)?)?;
            Ok(())
        }
    }
}
