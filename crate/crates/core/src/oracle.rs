//! Exact clique oracles: maximal-clique enumeration with pivoting,
//! branch-and-bound maximum clique, and Boolean expansion of the
//! complement's edge clauses (Maghout's method).

use crate::extract::{is_clique, CliqueResult, OpCounters};
use crate::graph::Graph;
use crate::set::VertexSet;
use crate::triangles::enumerate_triangles;
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub const DEFAULT_NODE_BUDGET: u64 = 10_000_000;
pub const DEFAULT_CLAUSE_BUDGET: usize = 30;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("search exceeded {budget} nodes")]
    NodeBudgetExceeded { budget: u64 },
    #[error("complement has {clauses} edges, clause budget is {budget}")]
    ClauseBudgetExceeded { clauses: usize, budget: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum OracleMethod {
    BranchAndBound,
    Pivot,
    Maghout,
}

/// JSON summary of an oracle run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleReport {
    pub omega: usize,
    pub count_maximal: usize,
    pub method: OracleMethod,
    pub nodes_visited: u64,
}

#[derive(Clone, Debug)]
pub struct ExactClique {
    pub clique: CliqueResult,
    pub omega: usize,
    pub nodes_visited: u64,
}

#[derive(Clone, Debug)]
pub struct MaximalCliques {
    /// Lexicographically sorted.
    pub cliques: Vec<VertexSet>,
    pub nodes_visited: u64,
}

impl MaximalCliques {
    pub fn omega(&self) -> usize {
        self.cliques.iter().map(VertexSet::len).max().unwrap_or(0)
    }
}

struct Counter {
    nodes: u64,
    budget: u64,
}

impl Counter {
    fn tick(&mut self) -> Result<(), OracleError> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(OracleError::NodeBudgetExceeded {
                budget: self.budget,
            });
        }
        Ok(())
    }
}

/// Maximum clique by branch and bound with a size bound `|R| + |P|`.
/// Among maximum cliques, the lexicographically smallest is returned.
pub fn max_clique_exact(g: &Graph, budget: u64) -> Result<ExactClique, OracleError> {
    let mut counter = Counter { nodes: 0, budget };
    let mut best = VertexSet::from_labels(g.vertex_count(), [1]);
    let mut current = g.empty_vertex_set();
    branch(g, &mut current, g.all_vertices(), &mut best, &mut counter)?;
    let vertices = best;
    let witness_triangles = enumerate_triangles(g)
        .iter()
        .filter(|t| t.within(&vertices))
        .map(|t| t.id)
        .collect();
    let omega = vertices.len();
    Ok(ExactClique {
        clique: CliqueResult {
            verified: is_clique(g, &vertices),
            vertices,
            witness_triangles,
            seed_edges: Vec::new(),
            depth: 0,
            degenerate: false,
            fallback_used: false,
            ops: OpCounters::default(),
        },
        omega,
        nodes_visited: counter.nodes,
    })
}

fn branch(
    g: &Graph,
    current: &mut VertexSet,
    mut candidates: VertexSet,
    best: &mut VertexSet,
    counter: &mut Counter,
) -> Result<(), OracleError> {
    counter.tick()?;
    if candidates.is_empty() {
        if current.len() > best.len() {
            *best = current.clone();
        }
        return Ok(());
    }
    while let Some(v) = candidates.first() {
        if current.len() + candidates.len() <= best.len() {
            break;
        }
        current.insert(v);
        let next = candidates.intersection(g.neighbors(v));
        branch(g, current, next, best, counter)?;
        current.remove(v);
        candidates.remove(v);
    }
    if current.len() > best.len() {
        *best = current.clone();
    }
    Ok(())
}

/// All maximal cliques (Bron-Kerbosch with a maximum-degree pivot).
pub fn enumerate_maximal_cliques(g: &Graph, budget: u64) -> Result<MaximalCliques, OracleError> {
    let mut counter = Counter { nodes: 0, budget };
    let mut out = Vec::new();
    let mut r = g.empty_vertex_set();
    bron_kerbosch(
        g,
        &mut r,
        g.all_vertices(),
        g.empty_vertex_set(),
        &mut out,
        &mut counter,
    )?;
    out.sort();
    Ok(MaximalCliques {
        cliques: out,
        nodes_visited: counter.nodes,
    })
}

fn bron_kerbosch(
    g: &Graph,
    r: &mut VertexSet,
    mut p: VertexSet,
    mut x: VertexSet,
    out: &mut Vec<VertexSet>,
    counter: &mut Counter,
) -> Result<(), OracleError> {
    counter.tick()?;
    if p.is_empty() {
        if x.is_empty() {
            out.push(r.clone());
        }
        return Ok(());
    }
    let pivot = p
        .iter()
        .chain(x.iter())
        .max_by_key(|&u| (g.neighbors(u).intersection_len(&p), std::cmp::Reverse(u)))
        .expect("p is non-empty");
    let branches = p.difference(g.neighbors(pivot));
    for v in branches.iter() {
        let nv = g.neighbors(v);
        r.insert(v);
        bron_kerbosch(g, r, p.intersection(nv), x.intersection(nv), out, counter)?;
        r.remove(v);
        p.remove(v);
        x.insert(v);
    }
    Ok(())
}

/// A conjunction of vertex literals.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct ProductTerm {
    pub vars: VertexSet,
}

/// Drops duplicates and every term that contains another term.
/// Output is sorted.
pub fn absorb(mut terms: Vec<ProductTerm>) -> Vec<ProductTerm> {
    terms.sort_by(|a, b| a.vars.len().cmp(&b.vars.len()).then_with(|| a.cmp(b)));
    terms.dedup();
    let mut kept: Vec<ProductTerm> = Vec::with_capacity(terms.len());
    for t in terms {
        if !kept.iter().any(|k| k.vars.is_subset(&t.vars)) {
            kept.push(t);
        }
    }
    kept.sort();
    kept
}

/// Minimal vertex covers of the complement, found by multiplying out
/// `(a + b)` over its edges in ascending order with absorption after
/// every clause.
pub fn maghout_terms(g: &Graph, clause_budget: usize) -> Result<Vec<ProductTerm>, OracleError> {
    let co = g.complement();
    if co.edge_count() > clause_budget {
        return Err(OracleError::ClauseBudgetExceeded {
            clauses: co.edge_count(),
            budget: clause_budget,
        });
    }
    let mut terms = vec![ProductTerm {
        vars: g.empty_vertex_set(),
    }];
    for (_, (a, b)) in co.edges() {
        let mut next = Vec::with_capacity(terms.len() * 2);
        for t in terms {
            if t.vars.contains(a) || t.vars.contains(b) {
                next.push(t);
                continue;
            }
            for v in [a, b] {
                let mut vars = t.vars.clone();
                vars.insert(v);
                next.push(ProductTerm { vars });
            }
        }
        terms = absorb(next);
    }
    Ok(terms)
}

/// Maximal cliques as complements of the minimal covers, sorted.
pub fn maghout_cliques(g: &Graph, clause_budget: usize) -> Result<Vec<VertexSet>, OracleError> {
    let all = g.all_vertices();
    let mut cliques: Vec<VertexSet> = maghout_terms(g, clause_budget)?
        .iter()
        .map(|t| all.difference(&t.vars))
        .collect();
    cliques.sort();
    Ok(cliques)
}
