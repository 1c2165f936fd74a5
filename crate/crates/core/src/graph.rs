//! Immutable undirected simple graphs with 1-based vertex and edge labels.
//!
//! Edge `j` is the `j`-th pair of the construction sequence, so worked
//! tables that number edges `e_1..e_m` transcribe without renumbering.

use crate::set::{EdgeSet, VertexSet};
use serde::Serialize;
use std::collections::HashMap;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph must have at least one vertex")]
    NoVertices,
    #[error("edge {index}: vertex {vertex} outside 1..={n}")]
    VertexOutOfRange {
        index: usize,
        vertex: usize,
        n: usize,
    },
    #[error("edge {index}: self-loop on vertex {vertex}")]
    SelfLoop { index: usize, vertex: usize },
    #[error("edge {index}: duplicate of edge {first} ({u}, {v})")]
    DuplicateEdge {
        index: usize,
        first: usize,
        u: usize,
        v: usize,
    },
    #[error("vertex subset is empty")]
    EmptyVertexSet,
    #[error("vertex set holds labels up to {got}, graph has {n} vertices")]
    VertexSetMismatch { got: usize, n: usize },
}

#[derive(Clone, Debug)]
pub struct Graph {
    n: usize,
    /// Endpoints with `u < v`, position `j - 1` holds edge `j`.
    edges: Vec<(usize, usize)>,
    adjacency: Vec<VertexSet>,
    incidence: Vec<Vec<usize>>,
    lookup: HashMap<(usize, usize), usize>,
}

impl Graph {
    /// Builds a graph on vertices `1..=n`; edge ids follow `pairs` order.
    pub fn from_edge_list<I>(n: usize, pairs: I) -> Result<Graph, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n == 0 {
            return Err(GraphError::NoVertices);
        }
        let mut edges = Vec::new();
        let mut adjacency = vec![VertexSet::new(n); n];
        let mut incidence = vec![Vec::new(); n];
        let mut lookup = HashMap::new();
        for (k, (a, b)) in pairs.into_iter().enumerate() {
            let index = k + 1;
            for x in [a, b] {
                if x == 0 || x > n {
                    return Err(GraphError::VertexOutOfRange {
                        index,
                        vertex: x,
                        n,
                    });
                }
            }
            if a == b {
                return Err(GraphError::SelfLoop { index, vertex: a });
            }
            let key = (a.min(b), a.max(b));
            if let Some(&first) = lookup.get(&key) {
                return Err(GraphError::DuplicateEdge {
                    index,
                    first,
                    u: key.0,
                    v: key.1,
                });
            }
            lookup.insert(key, index);
            edges.push(key);
            adjacency[a - 1].insert(b);
            adjacency[b - 1].insert(a);
            incidence[a - 1].push(index);
            incidence[b - 1].push(index);
        }
        Ok(Graph {
            n,
            edges,
            adjacency,
            incidence,
            lookup,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> std::ops::RangeInclusive<usize> {
        1..=self.n
    }

    /// Endpoints `(u, v)` with `u < v`. Panics if `e` is not in `1..=m`.
    pub fn endpoints(&self, e: usize) -> (usize, usize) {
        self.edges[e - 1]
    }

    /// `(id, (u, v))` in id order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, (usize, usize))> + '_ {
        self.edges.iter().enumerate().map(|(i, &p)| (i + 1, p))
    }

    pub fn edge_id(&self, u: usize, v: usize) -> Option<usize> {
        self.lookup.get(&(u.min(v), u.max(v))).copied()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && u >= 1 && u <= self.n && self.adjacency[u - 1].contains(v)
    }

    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adjacency[v - 1]
    }

    /// Ids of the edges incident to `v`, ascending.
    pub fn incident_edges(&self, v: usize) -> &[usize] {
        &self.incidence[v - 1]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.incidence[v - 1].len()
    }

    pub fn empty_vertex_set(&self) -> VertexSet {
        VertexSet::new(self.n)
    }

    pub fn all_vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn empty_edge_set(&self) -> EdgeSet {
        EdgeSet::new(self.edges.len())
    }

    /// All absent pairs, emitted lexicographically.
    pub fn complement(&self) -> Graph {
        let mut pairs = Vec::new();
        for u in 1..=self.n {
            for v in u + 1..=self.n {
                if !self.has_edge(u, v) {
                    pairs.push((u, v));
                }
            }
        }
        Graph::from_edge_list(self.n, pairs).expect("complement pairs are simple")
    }

    /// Subgraph induced by `vs`, relabelled `1..=|vs|` in ascending order.
    pub fn induced_subgraph(&self, vs: &VertexSet) -> Result<Subgraph, GraphError> {
        if vs.max_label() != self.n {
            return Err(GraphError::VertexSetMismatch {
                got: vs.max_label(),
                n: self.n,
            });
        }
        if vs.is_empty() {
            return Err(GraphError::EmptyVertexSet);
        }
        let vertex_map: Vec<usize> = vs.to_vec();
        let mut local = vec![0usize; self.n + 1];
        for (i, &v) in vertex_map.iter().enumerate() {
            local[v] = i + 1;
        }
        let mut pairs = Vec::new();
        let mut edge_map = Vec::new();
        for (id, (u, v)) in self.edges() {
            if local[u] != 0 && local[v] != 0 {
                pairs.push((local[u], local[v]));
                edge_map.push(id);
            }
        }
        let graph = Graph::from_edge_list(vertex_map.len(), pairs)?;
        Ok(Subgraph {
            graph,
            vertex_map,
            edge_map,
        })
    }

    /// True when both graphs have the same vertex count and edge set,
    /// regardless of edge numbering.
    pub fn same_edge_set(&self, other: &Graph) -> bool {
        if self.n != other.n || self.edges.len() != other.edges.len() {
            return false;
        }
        self.edges.iter().all(|&(u, v)| other.has_edge(u, v))
    }

    pub fn degree_sum(&self) -> usize {
        self.vertices().map(|v| self.degree(v)).sum()
    }

    pub fn check_nonseparable(&self) -> SeparabilityReport {
        let connected = self.is_connected();
        let (bridges, articulation_points) = self.bridges_and_cut_vertices();
        let min_degree = self.vertices().map(|v| self.degree(v)).min().unwrap_or(0);
        SeparabilityReport {
            connected,
            has_bridge: !bridges.is_empty(),
            has_articulation_point: !articulation_points.is_empty(),
            min_degree,
            min_degree_ok: min_degree >= 3,
            bridges,
            articulation_points,
        }
    }

    fn is_connected(&self) -> bool {
        let mut seen = VertexSet::new(self.n);
        let mut stack = vec![1];
        seen.insert(1);
        while let Some(v) = stack.pop() {
            for w in self.neighbors(v).iter() {
                if seen.insert(w) {
                    stack.push(w);
                }
            }
        }
        seen.len() == self.n
    }

    // Iterative lowlink search over every component.
    fn bridges_and_cut_vertices(&self) -> (Vec<usize>, Vec<usize>) {
        let n = self.n;
        let mut disc = vec![0usize; n + 1];
        let mut low = vec![0usize; n + 1];
        let mut cut = vec![false; n + 1];
        let mut bridges = Vec::new();
        let mut timer = 0;

        for root in 1..=n {
            if disc[root] != 0 {
                continue;
            }
            timer += 1;
            disc[root] = timer;
            low[root] = timer;
            let mut root_children = 0;
            // (vertex, parent edge id, next incidence position)
            let mut stack: Vec<(usize, usize, usize)> = vec![(root, 0, 0)];
            while let Some(&(v, parent_edge, pos)) = stack.last() {
                if let Some(&e) = self.incidence[v - 1].get(pos) {
                    if let Some(top) = stack.last_mut() {
                        top.2 += 1;
                    }
                    if e == parent_edge {
                        continue;
                    }
                    let (a, b) = self.edges[e - 1];
                    let w = if a == v { b } else { a };
                    if disc[w] == 0 {
                        timer += 1;
                        disc[w] = timer;
                        low[w] = timer;
                        if v == root {
                            root_children += 1;
                        }
                        stack.push((w, e, 0));
                    } else {
                        low[v] = low[v].min(disc[w]);
                    }
                } else {
                    stack.pop();
                    if let Some(&(p, _, _)) = stack.last() {
                        low[p] = low[p].min(low[v]);
                        if low[v] > disc[p] {
                            bridges.push(parent_edge);
                        }
                        if p != root && low[v] >= disc[p] {
                            cut[p] = true;
                        }
                    }
                }
            }
            if root_children > 1 {
                cut[root] = true;
            }
        }
        bridges.sort_unstable();
        let cut_vertices = (1..=n).filter(|&v| cut[v]).collect();
        (bridges, cut_vertices)
    }
}

/// Induced subgraph with maps back to the parent's labels.
#[derive(Clone, Debug)]
pub struct Subgraph {
    pub graph: Graph,
    /// `vertex_map[i - 1]` is the parent label of local vertex `i`.
    pub vertex_map: Vec<usize>,
    /// `edge_map[j - 1]` is the parent id of local edge `j`.
    pub edge_map: Vec<usize>,
}

impl Subgraph {
    pub fn parent_vertex(&self, local: usize) -> usize {
        self.vertex_map[local - 1]
    }

    pub fn parent_edge(&self, local: usize) -> usize {
        self.edge_map[local - 1]
    }

    pub fn local_vertex(&self, parent: usize) -> Option<usize> {
        self.vertex_map.binary_search(&parent).ok().map(|i| i + 1)
    }
}

/// Structural checks for the nonseparable-graph preconditions. The
/// extraction heuristic runs regardless; callers decide whether to warn.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SeparabilityReport {
    pub connected: bool,
    pub has_bridge: bool,
    pub has_articulation_point: bool,
    pub min_degree: usize,
    pub min_degree_ok: bool,
    pub bridges: Vec<usize>,
    pub articulation_points: Vec<usize>,
}

impl SeparabilityReport {
    pub fn is_nonseparable(&self) -> bool {
        self.connected && !self.has_bridge && !self.has_articulation_point && self.min_degree_ok
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;
    use proptest::prelude::*;

    fn k4() -> Graph {
        Graph::from_edge_list(4, [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]).unwrap()
    }

    #[test]
    fn builds_k4_in_input_order() {
        let g = k4();
        assert_eq!(g.edge_count(), 6);
        assert_eq!(g.endpoints(4), (2, 3));
        assert_eq!(g.edge_id(4, 3), Some(6));
        assert_eq!(g.incident_edges(1), &[1, 2, 3]);
        assert_eq!(g.degree_sum(), 12);
    }

    #[test]
    fn trivial_graph() {
        let g = Graph::from_edge_list(1, []).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (1, 0));
    }

    #[test]
    fn rejects_malformed_edges() {
        assert_eq!(
            Graph::from_edge_list(3, [(1, 2), (1, 2)]).unwrap_err(),
            GraphError::DuplicateEdge {
                index: 2,
                first: 1,
                u: 1,
                v: 2
            }
        );
        assert_eq!(
            Graph::from_edge_list(3, [(2, 1), (1, 2)]).unwrap_err(),
            GraphError::DuplicateEdge {
                index: 2,
                first: 1,
                u: 1,
                v: 2
            }
        );
        assert_eq!(
            Graph::from_edge_list(3, [(1, 4)]).unwrap_err(),
            GraphError::VertexOutOfRange {
                index: 1,
                vertex: 4,
                n: 3
            }
        );
        assert_eq!(
            Graph::from_edge_list(3, [(1, 2), (0, 2)]).unwrap_err(),
            GraphError::VertexOutOfRange {
                index: 2,
                vertex: 0,
                n: 3
            }
        );
        assert_eq!(
            Graph::from_edge_list(3, [(3, 3)]).unwrap_err(),
            GraphError::SelfLoop {
                index: 1,
                vertex: 3
            }
        );
        assert_eq!(
            Graph::from_edge_list(0, []).unwrap_err(),
            GraphError::NoVertices
        );
    }

    #[test]
    fn complement_cases() {
        assert_eq!(k4().complement().edge_count(), 0);
        let c = generators::moon_moser(3).unwrap().complement();
        assert_eq!(c.vertex_count(), 9);
        let pairs: Vec<_> = c.edges().map(|(_, p)| p).collect();
        assert_eq!(
            pairs,
            vec![
                (1, 2),
                (1, 3),
                (2, 3),
                (4, 5),
                (4, 6),
                (5, 6),
                (7, 8),
                (7, 9),
                (8, 9)
            ]
        );
    }

    #[test]
    fn induced_subgraph_maps() {
        let g = k4();
        let sub = g
            .induced_subgraph(&VertexSet::from_labels(4, [2, 4]))
            .unwrap();
        assert_eq!(sub.graph.edge_count(), 1);
        assert_eq!(sub.parent_edge(1), 5);
        assert_eq!(sub.parent_vertex(2), 4);
        assert_eq!(sub.local_vertex(4), Some(2));
        assert_eq!(sub.local_vertex(3), None);

        let one = g.induced_subgraph(&VertexSet::from_labels(4, [3])).unwrap();
        assert_eq!((one.graph.vertex_count(), one.graph.edge_count()), (1, 0));

        assert_eq!(
            g.induced_subgraph(&VertexSet::new(4)).unwrap_err(),
            GraphError::EmptyVertexSet
        );
    }

    #[test]
    fn nonseparable_report() {
        assert!(k4().check_nonseparable().is_nonseparable());

        let path = Graph::from_edge_list(3, [(1, 2), (2, 3)]).unwrap();
        let r = path.check_nonseparable();
        assert!(r.connected);
        assert_eq!(r.bridges, vec![1, 2]);
        assert_eq!(r.articulation_points, vec![2]);
        assert!(!r.min_degree_ok);

        // two triangles sharing vertex 3
        let bowtie =
            Graph::from_edge_list(5, [(1, 2), (1, 3), (2, 3), (3, 4), (3, 5), (4, 5)]).unwrap();
        let r = bowtie.check_nonseparable();
        assert!(!r.has_bridge);
        assert_eq!(r.articulation_points, vec![3]);

        let split = Graph::from_edge_list(4, [(1, 2), (3, 4)]).unwrap();
        assert!(!split.check_nonseparable().connected);
    }

    fn arb_graph() -> impl Strategy<Value = Graph> {
        (2usize..12).prop_flat_map(|n| {
            prop::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
                let mut pairs = Vec::new();
                let mut k = 0;
                for u in 1..=n {
                    for v in u + 1..=n {
                        if bits[k] {
                            pairs.push((u, v));
                        }
                        k += 1;
                    }
                }
                Graph::from_edge_list(n, pairs).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn structural_invariants(g in arb_graph(), mask in prop::collection::vec(any::<bool>(), 12)) {
            prop_assert_eq!(g.degree_sum(), 2 * g.edge_count());
            for (id, (u, v)) in g.edges() {
                prop_assert!(g.incident_edges(u).contains(&id));
                prop_assert!(g.incident_edges(v).contains(&id));
                prop_assert_eq!(g.edge_id(v, u), Some(id));
            }
            let cc = g.complement().complement();
            prop_assert!(cc.same_edge_set(&g));

            let vs = VertexSet::from_labels(
                g.vertex_count(),
                g.vertices().filter(|&v| mask[v - 1]),
            );
            if let Ok(sub) = g.induced_subgraph(&vs) {
                for a in 1..=sub.graph.vertex_count() {
                    for b in a + 1..=sub.graph.vertex_count() {
                        prop_assert_eq!(
                            sub.graph.has_edge(a, b),
                            g.has_edge(sub.parent_vertex(a), sub.parent_vertex(b))
                        );
                    }
                }
            } else {
                prop_assert!(vs.is_empty());
            }
        }
    }
}
