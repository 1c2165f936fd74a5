//! Clique extraction from the main iteration of a pruning trace.
//!
//! A minimum-weight edge of the main iteration is chosen and every surviving
//! triangle through it contributes its vertices to a subgraph `H`. A complete
//! `H` is returned as the clique; otherwise the whole procedure is rerun on
//! the subgraph induced by `H`.

use crate::graph::Graph;
use crate::prune::{main_iteration, trace_over, IterationRecord, Trace, TraceMode, WeightUpdate};
use crate::set::VertexSet;
use crate::triangles::{enumerate_triangles, Triangle};
use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExtractError {
    #[error("edge {0} does not exist")]
    UnknownEdge(usize),
    #[error("edge {0} lies on no surviving triangle")]
    ZeroWeight(usize),
    #[error("trace has no main iteration")]
    NoMainIteration,
}

/// Diagnostic operation counts, summed over every recursion level.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct OpCounters {
    pub triangles_enumerated: u64,
    pub iterations: u64,
    /// Edge-weight increments performed while building weight vectors.
    pub weight_updates: u64,
    /// Triangles inspected while assembling edge subgraphs.
    pub subgraph_scans: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliqueResult {
    pub vertices: VertexSet,
    /// Ids (in the input graph's enumeration) of every triangle inside
    /// `vertices`.
    pub witness_triangles: Vec<usize>,
    /// Chosen edge at each recursion level, as ids of the input graph.
    pub seed_edges: Vec<usize>,
    pub verified: bool,
    pub depth: usize,
    /// No triangle was available; the result is an edge or a vertex.
    pub degenerate: bool,
    /// A non-shrinking subgraph forced a vertex to be dropped.
    pub fallback_used: bool,
    pub ops: OpCounters,
}

impl CliqueResult {
    pub fn size(&self) -> usize {
        self.vertices.len()
    }

    pub fn to_json(&self) -> CliqueJson {
        CliqueJson {
            vertices: self.vertices.to_vec(),
            size: self.size(),
            seed_edges: self.seed_edges.clone(),
            depth: self.depth,
            verified: self.verified,
            degenerate: self.degenerate,
            fallback_used: self.fallback_used,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CliqueJson {
    pub vertices: Vec<usize>,
    pub size: usize,
    pub seed_edges: Vec<usize>,
    pub depth: usize,
    pub verified: bool,
    pub degenerate: bool,
    pub fallback_used: bool,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ExtractOptions {
    pub mode: TraceMode,
}

/// Vertices gathered around one edge and the surviving triangles inside them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeSubgraph {
    pub vertices: VertexSet,
    pub triangles: Vec<usize>,
}

/// `H` = union of vertex triples of surviving triangles through `edge`;
/// the returned triangles are the surviving ones lying inside `H`.
pub fn subgraph_for_edge(
    g: &Graph,
    triangles: &[Triangle],
    alive: &[usize],
    edge: usize,
) -> Result<EdgeSubgraph, ExtractError> {
    if edge == 0 || edge > g.edge_count() {
        return Err(ExtractError::UnknownEdge(edge));
    }
    let alive: Vec<&Triangle> = alive.iter().map(|&id| &triangles[id - 1]).collect();
    let mut vertices = g.empty_vertex_set();
    let mut through = 0;
    for t in alive.iter().filter(|t| t.contains_edge(edge)) {
        through += 1;
        for &v in &t.vertices {
            vertices.insert(v);
        }
    }
    if through == 0 {
        return Err(ExtractError::ZeroWeight(edge));
    }
    let inside = alive
        .iter()
        .filter(|t| t.within(&vertices))
        .map(|t| t.id)
        .collect();
    Ok(EdgeSubgraph {
        vertices,
        triangles: inside,
    })
}

/// Every pair of `vs` is an edge of `g`.
pub fn is_clique(g: &Graph, vs: &VertexSet) -> bool {
    let need = vs.len().saturating_sub(1);
    vs.iter()
        .all(|v| g.neighbors(v).intersection_len(vs) == need)
}

pub fn extract_max_clique(g: &Graph) -> CliqueResult {
    extract_with(g, ExtractOptions::default())
}

pub fn extract_with(g: &Graph, opts: ExtractOptions) -> CliqueResult {
    let mut ex = Extractor::new(g, opts);
    let identity: Vec<usize> = g.vertices().collect();
    let found = ex.solve(g, &identity, 0);
    ex.finish(found)
}

/// Extraction seeded at `edge` in the main iteration of `trace`, which
/// must have been computed on `g`.
pub fn extract_from_edge(
    g: &Graph,
    trace: &Trace,
    edge: usize,
    opts: ExtractOptions,
) -> Result<CliqueResult, ExtractError> {
    let main = main_iteration(trace).map_err(|_| ExtractError::NoMainIteration)?;
    let mut ex = Extractor::new(g, opts);
    ex.count_trace(trace);
    let identity: Vec<usize> = g.vertices().collect();
    let found = ex.seeded(g, &identity, trace, main, edge, 0)?;
    Ok(ex.finish(found))
}

/// One extraction per minimum-weight edge of the main iteration.
#[derive(Clone, Debug)]
pub struct PerEdgeCliques {
    pub main_index: Option<usize>,
    pub min: u32,
    /// `(edge id, result)` in edge-id order.
    pub by_edge: Vec<(usize, CliqueResult)>,
    /// Distinct vertex sets, lexicographically sorted.
    pub distinct: Vec<VertexSet>,
}

pub fn cliques_per_min_edge(g: &Graph, opts: ExtractOptions) -> PerEdgeCliques {
    let trace = trace_over(
        g,
        enumerate_triangles(g),
        opts.mode,
        WeightUpdate::Recompute,
    );
    let Ok(main) = main_iteration(&trace) else {
        return PerEdgeCliques {
            main_index: None,
            min: 0,
            by_edge: Vec::new(),
            distinct: Vec::new(),
        };
    };
    let mut by_edge = Vec::new();
    for &e in &main.min_edges {
        let r = extract_from_edge(g, &trace, e, opts).expect("minimum edges have positive weight");
        by_edge.push((e, r));
    }
    let mut distinct: Vec<VertexSet> = by_edge.iter().map(|(_, r)| r.vertices.clone()).collect();
    distinct.sort();
    distinct.dedup();
    PerEdgeCliques {
        main_index: Some(main.index),
        min: main.min,
        by_edge,
        distinct,
    }
}

struct Found {
    vertices: VertexSet,
    seed_edges: Vec<usize>,
    depth: usize,
    degenerate: bool,
    fallback_used: bool,
}

struct Extractor<'a> {
    root: &'a Graph,
    opts: ExtractOptions,
    ops: OpCounters,
}

impl<'a> Extractor<'a> {
    fn new(root: &'a Graph, opts: ExtractOptions) -> Self {
        Extractor {
            root,
            opts,
            ops: OpCounters::default(),
        }
    }

    fn count_trace(&mut self, trace: &Trace) {
        self.ops.triangles_enumerated += trace.triangles.len() as u64;
        self.ops.iterations += trace.records.len() as u64;
        self.ops.weight_updates += trace
            .records
            .iter()
            .map(|r| 3 * r.surviving.len() as u64)
            .sum::<u64>();
    }

    fn lift(&self, to_root: &[usize], local: impl IntoIterator<Item = usize>) -> VertexSet {
        VertexSet::from_labels(
            self.root.vertex_count(),
            local.into_iter().map(|v| to_root[v - 1]),
        )
    }

    fn root_edge(&self, g: &Graph, to_root: &[usize], e: usize) -> usize {
        let (u, v) = g.endpoints(e);
        self.root
            .edge_id(to_root[u - 1], to_root[v - 1])
            .expect("subgraph edges exist in the root graph")
    }

    fn solve(&mut self, g: &Graph, to_root: &[usize], depth: usize) -> Found {
        let trace = trace_over(
            g,
            enumerate_triangles(g),
            self.opts.mode,
            WeightUpdate::Recompute,
        );
        self.count_trace(&trace);
        let Ok(main) = main_iteration(&trace) else {
            return self.degenerate(g, to_root, depth);
        };
        let edge = main.min_edges[0];
        self.seeded(g, to_root, &trace, main, edge, depth)
            .expect("minimum edge has positive weight")
    }

    fn seeded(
        &mut self,
        g: &Graph,
        to_root: &[usize],
        trace: &Trace,
        main: &IterationRecord,
        edge: usize,
        depth: usize,
    ) -> Result<Found, ExtractError> {
        let h = subgraph_for_edge(g, &trace.triangles, &main.surviving, edge)?;
        self.ops.subgraph_scans += main.surviving.len() as u64;
        let seed = self.root_edge(g, to_root, edge);

        if is_clique(g, &h.vertices) {
            return Ok(Found {
                vertices: self.lift(to_root, h.vertices.iter()),
                seed_edges: vec![seed],
                depth,
                degenerate: false,
                fallback_used: false,
            });
        }

        let (keep, fallback) = if h.vertices.len() == g.vertex_count() {
            let mut keep = h.vertices.clone();
            keep.remove(drop_candidate(g, &trace.triangles));
            (keep, true)
        } else {
            (h.vertices, false)
        };

        let mut found = if depth >= self.root.vertex_count() {
            Found {
                vertices: self.lift(to_root, greedy_clique(g, &keep)),
                seed_edges: Vec::new(),
                depth,
                degenerate: false,
                fallback_used: true,
            }
        } else {
            let sub = g
                .induced_subgraph(&keep)
                .expect("subgraph vertex set is non-empty");
            let sub_to_root: Vec<usize> = sub.vertex_map.iter().map(|&v| to_root[v - 1]).collect();
            self.solve(&sub.graph, &sub_to_root, depth + 1)
        };
        found.seed_edges.insert(0, seed);
        found.fallback_used |= fallback;
        Ok(found)
    }

    fn degenerate(&self, g: &Graph, to_root: &[usize], depth: usize) -> Found {
        let local: Vec<usize> = match g.edges().next() {
            Some((_, (u, v))) => vec![u, v],
            None => vec![1],
        };
        let seed_edges = match local.as_slice() {
            [u, v] => vec![self
                .root
                .edge_id(to_root[u - 1], to_root[v - 1])
                .expect("edge")],
            _ => Vec::new(),
        };
        Found {
            vertices: self.lift(to_root, local),
            seed_edges,
            depth,
            degenerate: true,
            fallback_used: false,
        }
    }

    fn finish(self, found: Found) -> CliqueResult {
        let verified = is_clique(self.root, &found.vertices);
        let witness_triangles = if found.vertices.len() >= 3 {
            enumerate_triangles(self.root)
                .iter()
                .filter(|t| t.within(&found.vertices))
                .map(|t| t.id)
                .collect()
        } else {
            Vec::new()
        };
        CliqueResult {
            vertices: found.vertices,
            witness_triangles,
            seed_edges: found.seed_edges,
            verified,
            depth: found.depth,
            degenerate: found.degenerate,
            fallback_used: found.fallback_used,
            ops: self.ops,
        }
    }
}

// Vertex with the most non-neighbours; fewer triangles, then lower label,
// break ties.
fn drop_candidate(g: &Graph, triangles: &[Triangle]) -> usize {
    let mut on_triangles: HashMap<usize, usize> = HashMap::new();
    for t in triangles {
        for &v in &t.vertices {
            *on_triangles.entry(v).or_default() += 1;
        }
    }
    let n = g.vertex_count();
    g.vertices()
        .max_by_key(|&v| {
            let missing = n - 1 - g.degree(v);
            let tri = on_triangles.get(&v).copied().unwrap_or(0);
            (missing, std::cmp::Reverse(tri), std::cmp::Reverse(v))
        })
        .expect("graph has vertices")
}

fn greedy_clique(g: &Graph, within: &VertexSet) -> Vec<usize> {
    let mut chosen: Vec<usize> = Vec::new();
    for v in within.iter() {
        if chosen.iter().all(|&c| g.has_edge(c, v)) {
            chosen.push(v);
        }
    }
    chosen
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, complete_multipartite, moon_moser};
    use crate::prune::full_trace;

    #[test]
    fn complete_graph_is_its_own_clique() {
        let g = complete(4).unwrap();
        let r = extract_max_clique(&g);
        assert_eq!(r.vertices.to_vec(), vec![1, 2, 3, 4]);
        assert!(r.verified && !r.degenerate && !r.fallback_used);
        assert_eq!(r.witness_triangles.len(), 4);
        assert_eq!(r.seed_edges, vec![1]);

        let per = cliques_per_min_edge(&g, ExtractOptions::default());
        assert_eq!(per.by_edge.len(), 6);
        assert_eq!(per.distinct, vec![VertexSet::full(4)]);
    }

    #[test]
    fn is_clique_cases() {
        let g = complete(4).unwrap();
        assert!(is_clique(&g, &VertexSet::from_labels(4, [2])));
        let path = Graph::from_edge_list(3, [(1, 2), (2, 3)]).unwrap();
        assert!(!is_clique(&path, &VertexSet::full(3)));
        assert!(is_clique(&path, &VertexSet::from_labels(3, [2, 3])));
    }

    #[test]
    fn degenerate_inputs() {
        let path = Graph::from_edge_list(3, [(2, 3), (1, 2)]).unwrap();
        let r = extract_max_clique(&path);
        assert!(r.degenerate && r.verified);
        assert_eq!(r.vertices.to_vec(), vec![2, 3]);
        assert_eq!(r.seed_edges, vec![1]);

        let lone = Graph::from_edge_list(2, []).unwrap();
        let r = extract_max_clique(&lone);
        assert!(r.degenerate && r.verified);
        assert_eq!(r.size(), 1);
        assert!(cliques_per_min_edge(&lone, ExtractOptions::default())
            .by_edge
            .is_empty());
    }

    #[test]
    fn moon_moser_recurses_to_size_k() {
        let g = moon_moser(4).unwrap();
        let r = extract_max_clique(&g);
        assert!(r.verified);
        assert_eq!(r.size(), 4);
        assert_eq!(r.vertices.to_vec(), vec![1, 4, 7, 10]);
        assert!(r.depth >= 1);
        assert_eq!(r.seed_edges[0], 1);
    }

    #[test]
    fn turan_first_edge_subgraph() {
        let g = complete_multipartite(&[3, 3, 3, 4]).unwrap();
        let t = full_trace(&g, TraceMode::Exhaustive);
        let main = main_iteration(&t).unwrap();
        let h = subgraph_for_edge(&g, &t.triangles, &main.surviving, 1).unwrap();
        assert_eq!(h.vertices.to_vec(), vec![1, 4, 7, 8, 9, 10, 11, 12, 13]);
    }

    #[test]
    fn drop_candidate_prefers_most_non_neighbours() {
        // K4 on 1..4 plus vertex 5 adjacent to 1 and 2 only
        let g = Graph::from_edge_list(
            5,
            [
                (1, 2),
                (1, 3),
                (1, 4),
                (1, 5),
                (2, 3),
                (2, 4),
                (2, 5),
                (3, 4),
            ],
        )
        .unwrap();
        assert_eq!(drop_candidate(&g, &enumerate_triangles(&g)), 5);
        // ties on deficiency go to fewer triangles, then the lower label
        let c4 = Graph::from_edge_list(4, [(1, 2), (2, 3), (3, 4), (1, 4)]).unwrap();
        assert_eq!(drop_candidate(&c4, &[]), 1);
    }

    #[test]
    fn subgraph_errors() {
        let g = Graph::from_edge_list(4, [(1, 2), (1, 3), (2, 3), (3, 4)]).unwrap();
        let ts = enumerate_triangles(&g);
        assert_eq!(
            subgraph_for_edge(&g, &ts, &[1], 4).unwrap_err(),
            ExtractError::ZeroWeight(4)
        );
        assert_eq!(
            subgraph_for_edge(&g, &ts, &[1], 9).unwrap_err(),
            ExtractError::UnknownEdge(9)
        );
    }

    #[test]
    fn json_schema_fields() {
        let r = extract_max_clique(&complete(3).unwrap());
        let v = serde_json::to_value(r.to_json()).unwrap();
        let keys: Vec<_> = v.as_object().unwrap().keys().cloned().collect();
        assert_eq!(
            keys,
            vec![
                "degenerate",
                "depth",
                "fallback_used",
                "seed_edges",
                "size",
                "verified",
                "vertices"
            ]
        );
    }
}
