//! Iteration table for the 12-vertex fixture, exhaustive and early-stop,
//! and a check that differential weight updates match recounting.
//!
//! cargo run --example prune_trace

use triclique::fixtures::load_fixture;
use triclique::prune::{full_trace_with, main_iteration, WeightUpdate};
use triclique::TraceMode;

fn main() {
    let g = load_fixture("g3").unwrap().graph;
    for mode in [TraceMode::Exhaustive, TraceMode::EarlyStop] {
        let t = full_trace_with(&g, mode, WeightUpdate::Recompute);
        println!("{mode:?}: {} iterations", t.len());
        for r in &t.records {
            println!(
                "  i={} MIN={} MAX={} |C|={} removed={}",
                r.index,
                r.min,
                r.max,
                r.surviving.len(),
                r.removed.len()
            );
        }
        println!("  main iteration {}", main_iteration(&t).unwrap().index);
    }

    let a = full_trace_with(&g, TraceMode::Exhaustive, WeightUpdate::Recompute);
    let b = full_trace_with(&g, TraceMode::Exhaustive, WeightUpdate::Differential);
    println!("differential == recompute: {}", a.records == b.records);
}
