//! Worked example graphs bundled with the crate, each with the values
//! published alongside it.
//!
//! Every fixture is an edge-list file plus a JSON sidecar of expected
//! values. Both are embedded at compile time.

use crate::graph::{Graph, GraphError};
use crate::io::{parse_edge_list, ParseError};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum FixtureError {
    #[error("unknown fixture `{0}`")]
    Unknown(String),
    #[error("fixture `{name}`: {source}")]
    Parse {
        name: String,
        #[source]
        source: ParseError,
    },
    #[error("fixture `{name}`: bad metadata: {source}")]
    Metadata {
        name: String,
        #[source]
        source: serde_json::Error,
    },
    #[error("fixture `{name}`: {msg}")]
    Inconsistent { name: String, msg: String },
}

pub const NAMES: [&str; 7] = [
    "g1",
    "g2",
    "g3",
    "g4",
    "turan13",
    "moon-moser-3",
    "moon-moser-4",
];

macro_rules! raw {
    ($name:literal) => {
        (
            include_str!(concat!("../fixtures/", $name, ".edges")),
            include_str!(concat!("../fixtures/", $name, ".expected.json")),
        )
    };
}

fn raw(name: &str) -> Option<(&'static str, &'static str)> {
    Some(match name {
        "g1" => raw!("g1"),
        "g2" => raw!("g2"),
        "g3" => raw!("g3"),
        "g4" => raw!("g4"),
        "turan13" => raw!("turan13"),
        "moon-moser-3" => raw!("moon-moser-3"),
        "moon-moser-4" => raw!("moon-moser-4"),
        _ => return None,
    })
}

/// A triangle as printed: its three edge ids and three vertices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ListedTriangle {
    pub edges: [usize; 3],
    pub vertices: [usize; 3],
}

/// Expected values from the sidecar file. Absent fields were not published.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Expected {
    pub name: String,
    pub source: String,
    pub vertices: usize,
    pub edges: usize,
    pub triangles: usize,
    #[serde(default)]
    pub triangle_listing: Vec<ListedTriangle>,
    /// Per-edge weight vectors `P_0, P_1, ...` as far as printed.
    #[serde(default)]
    pub weights: Vec<Vec<u32>>,
    #[serde(default)]
    pub min_max: Vec<(u32, u32)>,
    /// Surviving triangle count per iteration.
    #[serde(default)]
    pub surviving: Vec<usize>,
    /// Minimum-weight edges of every iteration.
    #[serde(default)]
    pub min_edges: Vec<Vec<usize>>,
    /// Minimum-weight edges of the main iteration, where only those were
    /// published.
    #[serde(default)]
    pub main_min_edges: Vec<usize>,
    pub main_index: Option<usize>,
    #[serde(default)]
    pub cliques: Vec<Vec<usize>>,
    pub maximal_cliques: Option<usize>,
    pub clique_size: Option<usize>,
    #[serde(default)]
    pub parts: Vec<usize>,
    pub triads: Option<usize>,
    #[serde(default)]
    pub incidence_of_vertex_7: Vec<usize>,
    #[serde(default)]
    pub notes: Vec<String>,
}

#[derive(Clone, Debug)]
pub struct Fixture {
    pub name: &'static str,
    pub graph: Graph,
    pub expected: Expected,
}

pub fn load_fixture(name: &str) -> Result<Fixture, FixtureError> {
    let (edges, json) = raw(name).ok_or_else(|| FixtureError::Unknown(name.to_string()))?;
    let name = NAMES
        .iter()
        .copied()
        .find(|n| *n == name)
        .expect("known name");
    let graph = parse_edge_list(edges).map_err(|source| FixtureError::Parse {
        name: name.into(),
        source,
    })?;
    let expected: Expected =
        serde_json::from_str(json).map_err(|source| FixtureError::Metadata {
            name: name.into(),
            source,
        })?;
    let bad = |msg: String| FixtureError::Inconsistent {
        name: name.into(),
        msg,
    };
    if (graph.vertex_count(), graph.edge_count()) != (expected.vertices, expected.edges) {
        return Err(bad(format!(
            "graph has {} vertices and {} edges, metadata says {} and {}",
            graph.vertex_count(),
            graph.edge_count(),
            expected.vertices,
            expected.edges
        )));
    }
    for v in graph.vertices() {
        for u in graph.neighbors(v).iter() {
            if !graph.neighbors(u).contains(v) {
                return Err(bad(format!("adjacency of {v} and {u} is not symmetric")));
            }
        }
    }
    if !expected.triangle_listing.is_empty() {
        let rebuilt = reconstruct_edges_from_triangles(&expected.triangle_listing)
            .map_err(|e| bad(e.to_string()))?;
        let stored: Vec<_> = graph.edges().map(|(_, p)| p).collect();
        if rebuilt != stored {
            return Err(bad("edge file disagrees with the triangle listing".into()));
        }
    }
    Ok(Fixture {
        name,
        graph,
        expected,
    })
}

pub fn all_fixtures() -> Vec<Fixture> {
    NAMES
        .iter()
        .map(|n| load_fixture(n).expect("bundled fixtures load"))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReconstructError {
    #[error("edge {0} is not named by any triangle")]
    Missing(usize),
    #[error("triangles naming edge {0} share {1} vertices, expected 2")]
    Ambiguous(usize, usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Endpoints of every edge id, taken as the vertex pair common to all
/// triangles that name it. Edge ids must be contiguous from 1.
pub fn reconstruct_edges_from_triangles(
    listing: &[ListedTriangle],
) -> Result<Vec<(usize, usize)>, ReconstructError> {
    let mut common: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for t in listing {
        for &e in &t.edges {
            common
                .entry(e)
                .and_modify(|vs| vs.retain(|v| t.vertices.contains(v)))
                .or_insert_with(|| t.vertices.to_vec());
        }
    }
    let m = common.keys().next_back().copied().unwrap_or(0);
    let mut out = Vec::with_capacity(m);
    for e in 1..=m {
        let vs = common.get(&e).ok_or(ReconstructError::Missing(e))?;
        match vs.as_slice() {
            &[u, v] => out.push((u.min(v), u.max(v))),
            other => return Err(ReconstructError::Ambiguous(e, other.len())),
        }
    }
    let n = out.iter().map(|&(_, v)| v).max().unwrap_or(1);
    Graph::from_edge_list(n, out.iter().copied())?;
    Ok(out)
}
