//! Heuristic clique extraction on the worked fixtures and on a
//! Moon-Moser graph, where the first subgraph is not complete.
//!
//! cargo run --example extract_clique

use triclique::extract::extract_max_clique;
use triclique::fixtures::load_fixture;
use triclique::generators::moon_moser;

fn main() {
    for name in ["g1", "g3", "g4", "turan13"] {
        let g = load_fixture(name).unwrap().graph;
        let r = extract_max_clique(&g);
        println!(
            "{name}: {:?} size {} verified {} depth {} seeds {:?}",
            r.vertices,
            r.size(),
            r.verified,
            r.depth,
            r.seed_edges
        );
    }
    let r = extract_max_clique(&moon_moser(4).unwrap());
    println!(
        "moon-moser 4: {:?} depth {} fallback {}",
        r.vertices, r.depth, r.fallback_used
    );
    println!("{}", serde_json::to_string(&r.to_json()).unwrap());
}
