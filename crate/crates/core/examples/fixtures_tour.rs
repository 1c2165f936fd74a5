//! Lists the bundled fixtures and checks a few of their expected values.
//!
//! cargo run --example fixtures_tour

use triclique::enumerate_triangles;
use triclique::fixtures::all_fixtures;

fn main() {
    for f in all_fixtures() {
        let triangles = enumerate_triangles(&f.graph).len();
        println!(
            "{:<13} n={:<3} m={:<4} triangles={:<4} (expected {}) {}",
            f.name,
            f.graph.vertex_count(),
            f.graph.edge_count(),
            triangles,
            f.expected.triangles,
            f.expected.source
        );
        for note in &f.expected.notes {
            println!("    note: {note}");
        }
    }
}
