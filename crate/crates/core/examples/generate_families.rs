//! Builds the generator families and prints their sizes.
//!
//! cargo run --example generate_families

use triclique::enumerate_triangles;
use triclique::generators::{complete, complete_multipartite, moon_moser, moon_moser_edge_count};
use triclique::io::write_edge_list;

fn main() {
    for k in 1..=5 {
        let g = moon_moser(k).unwrap();
        println!(
            "moon-moser k={k}: n={} m={} (n(n-3)/2 = {}) triangles={}",
            g.vertex_count(),
            g.edge_count(),
            moon_moser_edge_count(3 * k),
            enumerate_triangles(&g).len()
        );
    }

    let t = complete_multipartite(&[3, 3, 3, 4]).unwrap();
    println!(
        "multipartite 3,3,3,4: n={} m={} triangles={}",
        t.vertex_count(),
        t.edge_count(),
        enumerate_triangles(&t).len()
    );

    print!(
        "K4 as an edge list:\n{}",
        write_edge_list(&complete(4).unwrap())
    );
}
