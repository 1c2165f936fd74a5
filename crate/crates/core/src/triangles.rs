//! Triangle enumeration and triangle-count weight vectors.

use crate::graph::Graph;
use crate::set::{EdgeSet, VertexSet};
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TriangleError {
    #[error("triangle {triangle} references edge {edge}, graph has {m} edges")]
    EdgeOutOfRange {
        triangle: usize,
        edge: usize,
        m: usize,
    },
    #[error("triangle {triangle} references vertex {vertex}, graph has {n} vertices")]
    VertexOutOfRange {
        triangle: usize,
        vertex: usize,
        n: usize,
    },
}

/// A 3-cycle, kept both as its edge triple and its vertex triple.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Triangle {
    /// 1-based position in enumeration order.
    pub id: usize,
    /// Ascending edge ids.
    pub edges: [usize; 3],
    /// Ascending vertex labels.
    pub vertices: [usize; 3],
}

impl Triangle {
    pub fn contains_edge(&self, e: usize) -> bool {
        self.edges.contains(&e)
    }

    pub fn contains_vertex(&self, v: usize) -> bool {
        self.vertices.contains(&v)
    }

    pub fn within(&self, vs: &VertexSet) -> bool {
        self.vertices.iter().all(|&v| vs.contains(v))
    }

    pub fn edge_set(&self, m: usize) -> EdgeSet {
        EdgeSet::from_labels(m, self.edges)
    }
}

/// Every triangle of `g` exactly once, ordered by ascending vertex triple.
///
/// For each edge `u < v` the common neighbours `w > v` close a triangle.
pub fn enumerate_triangles(g: &Graph) -> Vec<Triangle> {
    let mut out = Vec::new();
    for u in g.vertices() {
        let nu = g.neighbors(u);
        for v in nu.iter().filter(|&v| v > u) {
            let common = nu.intersection(g.neighbors(v));
            for w in common.iter().filter(|&w| w > v) {
                let mut edges = [
                    g.edge_id(u, v).expect("adjacent"),
                    g.edge_id(u, w).expect("adjacent"),
                    g.edge_id(v, w).expect("adjacent"),
                ];
                edges.sort_unstable();
                out.push(Triangle {
                    id: out.len() + 1,
                    edges,
                    vertices: [u, v, w],
                });
            }
        }
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum WeightKind {
    PerEdge,
    PerVertex,
}

/// Triangle counts per edge (length `m`) or per vertex (length `n`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WeightVector {
    pub kind: WeightKind,
    pub counts: Vec<u32>,
}

/// `min` ignores zero entries; `all_zero` is set when nothing is positive.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct MinMax {
    pub min: u32,
    pub max: u32,
    pub all_zero: bool,
}

impl WeightVector {
    /// Weight of the element labelled `label` (1-based).
    pub fn get(&self, label: usize) -> u32 {
        self.counts[label - 1]
    }

    pub fn len(&self) -> usize {
        self.counts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().map(|&c| c as u64).sum()
    }

    pub fn min_max(&self) -> MinMax {
        min_max(self)
    }

    /// Labels whose weight equals `w`, ascending.
    pub fn labels_with(&self, w: u32) -> Vec<usize> {
        self.counts
            .iter()
            .enumerate()
            .filter(|&(_, &c)| c == w)
            .map(|(i, _)| i + 1)
            .collect()
    }
}

pub fn min_max(w: &WeightVector) -> MinMax {
    let max = w.counts.iter().copied().max().unwrap_or(0);
    let min = w.counts.iter().copied().filter(|&c| c > 0).min();
    MinMax {
        min: min.unwrap_or(0),
        max,
        all_zero: min.is_none(),
    }
}

pub fn edge_weight_vector<'a, I>(g: &Graph, triangles: I) -> Result<WeightVector, TriangleError>
where
    I: IntoIterator<Item = &'a Triangle>,
{
    let m = g.edge_count();
    let mut counts = vec![0u32; m];
    for t in triangles {
        for &e in &t.edges {
            if e == 0 || e > m {
                return Err(TriangleError::EdgeOutOfRange {
                    triangle: t.id,
                    edge: e,
                    m,
                });
            }
            counts[e - 1] += 1;
        }
    }
    Ok(WeightVector {
        kind: WeightKind::PerEdge,
        counts,
    })
}

pub fn vertex_weight_vector<'a, I>(g: &Graph, triangles: I) -> Result<WeightVector, TriangleError>
where
    I: IntoIterator<Item = &'a Triangle>,
{
    let n = g.vertex_count();
    let mut counts = vec![0u32; n];
    for t in triangles {
        for &v in &t.vertices {
            if v == 0 || v > n {
                return Err(TriangleError::VertexOutOfRange {
                    triangle: t.id,
                    vertex: v,
                    n,
                });
            }
            counts[v - 1] += 1;
        }
    }
    Ok(WeightVector {
        kind: WeightKind::PerVertex,
        counts,
    })
}

/// GF(2) sum of the triangles' edge sets.
pub fn ring_sum<'a, I>(g: &Graph, triangles: I) -> EdgeSet
where
    I: IntoIterator<Item = &'a Triangle>,
{
    let m = g.edge_count();
    triangles.into_iter().fold(EdgeSet::new(m), |acc, t| {
        acc.symmetric_difference(&t.edge_set(m))
    })
}
