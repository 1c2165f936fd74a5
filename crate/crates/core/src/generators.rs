//! Complete, Moon-Moser and complete multipartite graphs.
//!
//! Edges are emitted lexicographically (`u < v`, `u`-major), skipping
//! same-part pairs. Vertices are numbered consecutively part by part.

use crate::graph::Graph;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeneratorError {
    #[error("complete graph needs at least one vertex")]
    EmptyComplete,
    #[error("Moon-Moser graph needs at least one triad")]
    NoTriads,
    #[error("multipartite graph needs at least two parts, got {0}")]
    TooFewParts(usize),
    #[error("part {0} is empty")]
    EmptyPart(usize),
}

pub fn complete(n: usize) -> Result<Graph, GeneratorError> {
    if n == 0 {
        return Err(GeneratorError::EmptyComplete);
    }
    let pairs = (1..=n).flat_map(|u| (u + 1..=n).map(move |v| (u, v)));
    Ok(Graph::from_edge_list(n, pairs).expect("complete graph is simple"))
}

/// `3k` vertices split into triads `{1,2,3}, {4,5,6}, ...`; every
/// cross-triad pair is an edge. Has `3^k` maximal cliques of size `k`.
pub fn moon_moser(triads: usize) -> Result<Graph, GeneratorError> {
    if triads == 0 {
        return Err(GeneratorError::NoTriads);
    }
    if triads == 1 {
        return Ok(Graph::from_edge_list(3, []).expect("edgeless graph"));
    }
    complete_multipartite(&vec![3; triads])
}

/// Edge count of a Moon-Moser graph on `n = 3k` vertices.
pub fn moon_moser_edge_count(n: usize) -> usize {
    n * n.saturating_sub(3) / 2
}

pub fn complete_multipartite(parts: &[usize]) -> Result<Graph, GeneratorError> {
    if parts.len() < 2 {
        return Err(GeneratorError::TooFewParts(parts.len()));
    }
    if let Some(i) = parts.iter().position(|&s| s == 0) {
        return Err(GeneratorError::EmptyPart(i + 1));
    }
    let part_of = part_labels(parts);
    let n = part_of.len();
    let mut pairs = Vec::new();
    for u in 1..=n {
        for v in u + 1..=n {
            if part_of[u - 1] != part_of[v - 1] {
                pairs.push((u, v));
            }
        }
    }
    Ok(Graph::from_edge_list(n, pairs).expect("multipartite graph is simple"))
}

/// Part index (0-based) of every vertex, in vertex order.
pub fn part_labels(parts: &[usize]) -> Vec<usize> {
    parts
        .iter()
        .enumerate()
        .flat_map(|(i, &s)| std::iter::repeat_n(i, s))
        .collect()
}
