//! Iterative removal of triangles through minimum-weight edges.
//!
//! Iteration `i` holds a surviving triangle set `C_i`. Edge weights `P_i`
//! count surviving triangles per edge; `MIN_i` is the smallest positive
//! weight. Every triangle touching an edge of weight `MIN_i` forms `Q_i`
//! and `C_{i+1} = C_i \ Q_i`. The main iteration is the one with the
//! largest `MIN_i`.

use crate::graph::Graph;
use crate::triangles::{edge_weight_vector, enumerate_triangles, Triangle, WeightVector};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PruneError {
    #[error("surviving triangle set is empty")]
    EmptySet,
    #[error("triangle id {0} is not in the enumeration")]
    UnknownTriangle(usize),
    #[error("trace has no iterations")]
    EmptyTrace,
}

/// When to stop generating iterations.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TraceMode {
    /// Run until every triangle is removed, then pick the largest `MIN`.
    #[default]
    Exhaustive,
    /// Stop at the first iteration with `MIN == MAX`.
    EarlyStop,
}

/// How `P_i` is obtained for each iteration.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum WeightUpdate {
    /// Recount from the surviving set.
    #[default]
    Recompute,
    /// Subtract the removed triangles from the previous vector.
    Differential,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IterationRecord {
    /// 0-based iteration number.
    pub index: usize,
    /// Ids of the surviving triangles `C_i`, ascending.
    pub surviving: Vec<usize>,
    pub weights: WeightVector,
    pub min: u32,
    pub max: u32,
    /// Edges whose weight equals `min`.
    pub min_edges: Vec<usize>,
    /// Ids of `Q_i`, ascending.
    pub removed: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct Trace {
    pub mode: TraceMode,
    /// Full enumeration of the graph; ids index into this.
    pub triangles: Vec<Triangle>,
    pub records: Vec<IterationRecord>,
    /// `None` only for a triangle-free graph.
    pub main_index: Option<usize>,
}

impl Trace {
    pub fn triangle(&self, id: usize) -> &Triangle {
        &self.triangles[id - 1]
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn min_max_sequence(&self) -> Vec<(u32, u32)> {
        self.records.iter().map(|r| (r.min, r.max)).collect()
    }

    pub fn to_document(&self) -> TraceDocument {
        TraceDocument {
            mode: self.mode,
            triangle_count: self.triangles.len(),
            main_index: self.main_index,
            iterations: self
                .records
                .iter()
                .map(|r| IterationJson {
                    i: r.index,
                    min: r.min,
                    max: r.max,
                    min_edges: r.min_edges.clone(),
                    removed_ids: r.removed.clone(),
                    weights: r.weights.counts.clone(),
                })
                .collect(),
        }
    }
}

/// JSON form of one iteration.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IterationJson {
    pub i: usize,
    pub min: u32,
    pub max: u32,
    pub min_edges: Vec<usize>,
    pub removed_ids: Vec<usize>,
    pub weights: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceDocument {
    pub mode: TraceMode,
    pub triangle_count: usize,
    pub main_index: Option<usize>,
    pub iterations: Vec<IterationJson>,
}

fn resolve<'a>(triangles: &'a [Triangle], ids: &[usize]) -> Result<Vec<&'a Triangle>, PruneError> {
    ids.iter()
        .map(|&id| {
            id.checked_sub(1)
                .and_then(|i| triangles.get(i))
                .ok_or(PruneError::UnknownTriangle(id))
        })
        .collect()
}

fn build_record(
    index: usize,
    alive: &[&Triangle],
    weights: WeightVector,
) -> (IterationRecord, Vec<usize>) {
    let mm = weights.min_max();
    let min_edges = weights.labels_with(mm.min);
    let mut removed = Vec::new();
    let mut next = Vec::new();
    for t in alive {
        if t.edges.iter().any(|&e| weights.get(e) == mm.min) {
            removed.push(t.id);
        } else {
            next.push(t.id);
        }
    }
    let record = IterationRecord {
        index,
        surviving: alive.iter().map(|t| t.id).collect(),
        weights,
        min: mm.min,
        max: mm.max,
        min_edges,
        removed,
    };
    (record, next)
}

/// One pruning step on the surviving set `alive` (triangle ids of
/// `triangles`). Returns the record and `C_{i+1}`.
pub fn prune_step(
    g: &Graph,
    triangles: &[Triangle],
    alive: &[usize],
    index: usize,
) -> Result<(IterationRecord, Vec<usize>), PruneError> {
    if alive.is_empty() {
        return Err(PruneError::EmptySet);
    }
    let alive = resolve(triangles, alive)?;
    let weights = edge_weight_vector(g, alive.iter().copied())
        .expect("enumerated triangles reference valid edges");
    Ok(build_record(index, &alive, weights))
}

pub fn full_trace(g: &Graph, mode: TraceMode) -> Trace {
    full_trace_with(g, mode, WeightUpdate::Recompute)
}

pub fn full_trace_with(g: &Graph, mode: TraceMode, update: WeightUpdate) -> Trace {
    trace_over(g, enumerate_triangles(g), mode, update)
}

/// Runs the process over an already enumerated triangle list.
pub fn trace_over(
    g: &Graph,
    triangles: Vec<Triangle>,
    mode: TraceMode,
    update: WeightUpdate,
) -> Trace {
    let mut records = Vec::new();
    let mut alive: Vec<usize> = triangles.iter().map(|t| t.id).collect();
    let mut running =
        edge_weight_vector(g, &triangles).expect("enumerated triangles reference valid edges");

    while !alive.is_empty() {
        let current: Vec<&Triangle> = alive.iter().map(|&id| &triangles[id - 1]).collect();
        let weights = match update {
            WeightUpdate::Recompute => edge_weight_vector(g, current.iter().copied())
                .expect("enumerated triangles reference valid edges"),
            WeightUpdate::Differential => running.clone(),
        };
        let (record, next) = build_record(records.len(), &current, weights);
        if update == WeightUpdate::Differential {
            for &id in &record.removed {
                for &e in &triangles[id - 1].edges {
                    running.counts[e - 1] -= 1;
                }
            }
        }
        let stop = mode == TraceMode::EarlyStop && record.min == record.max;
        records.push(record);
        alive = next;
        if stop {
            break;
        }
    }

    let main_index = select_main(&records);
    Trace {
        mode,
        triangles,
        records,
        main_index,
    }
}

// Largest MIN wins; the earliest iteration wins ties.
fn select_main(records: &[IterationRecord]) -> Option<usize> {
    let mut best: Option<&IterationRecord> = None;
    for r in records {
        if best.is_none_or(|b| r.min > b.min) {
            best = Some(r);
        }
    }
    best.map(|r| r.index)
}

pub fn main_iteration(trace: &Trace) -> Result<&IterationRecord, PruneError> {
    trace
        .main_index
        .map(|i| &trace.records[i])
        .ok_or(PruneError::EmptyTrace)
}
