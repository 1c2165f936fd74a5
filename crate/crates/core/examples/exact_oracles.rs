//! The three exact methods side by side.
//!
//! cargo run --example exact_oracles

use triclique::fixtures::load_fixture;
use triclique::generators::moon_moser;
use triclique::oracle::{
    enumerate_maximal_cliques, maghout_cliques, maghout_terms, max_clique_exact,
    DEFAULT_NODE_BUDGET,
};

fn main() {
    for k in 1..=4 {
        let g = moon_moser(k).unwrap();
        let all = enumerate_maximal_cliques(&g, DEFAULT_NODE_BUDGET).unwrap();
        println!(
            "moon-moser {k}: {} maximal cliques, omega {}",
            all.cliques.len(),
            all.omega()
        );
    }

    let g = moon_moser(3).unwrap();
    let covers = maghout_terms(&g, 30).unwrap();
    println!("complement covers of moon-moser 3: {}", covers.len());
    println!("first cover {:?}", covers[0].vars);
    let m = maghout_cliques(&g, 30).unwrap();
    println!("first clique {:?}", m[0]);

    let g4 = load_fixture("g4").unwrap().graph;
    let ex = max_clique_exact(&g4, DEFAULT_NODE_BUDGET).unwrap();
    println!(
        "g4: omega {} via {:?}, {} nodes",
        ex.omega, ex.clique.vertices, ex.nodes_visited
    );
    match maghout_cliques(&g4, 30) {
        Ok(c) => println!("g4 maghout: {}", c.len()),
        Err(e) => println!("g4 maghout: {e}"),
    }
}
