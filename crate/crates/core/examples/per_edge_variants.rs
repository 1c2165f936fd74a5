//! One extraction per minimum-weight edge of the main iteration.
//!
//! cargo run --example per_edge_variants

use triclique::extract::{cliques_per_min_edge, ExtractOptions};
use triclique::fixtures::load_fixture;

fn main() {
    for name in ["g2", "g4"] {
        let g = load_fixture(name).unwrap().graph;
        let per = cliques_per_min_edge(&g, ExtractOptions::default());
        println!(
            "{name}: main iteration {:?}, MIN {}",
            per.main_index, per.min
        );
        for (e, r) in &per.by_edge {
            println!("  e{e:<4} -> {:?}", r.vertices);
        }
        println!("  distinct: {:?}", per.distinct);
    }
}
