//! Triangles and per-edge / per-vertex weights of a small graph, plus the
//! ring sum of all its triangles.
//!
//! cargo run --example triangle_weights

use triclique::generators::complete_multipartite;
use triclique::triangles::{edge_weight_vector, ring_sum, vertex_weight_vector};
use triclique::{enumerate_triangles, Graph};

fn main() {
    let k4 = Graph::from_edge_list(4, [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]).unwrap();
    let ts = enumerate_triangles(&k4);
    for t in &ts {
        println!("c{}: edges {:?} vertices {:?}", t.id, t.edges, t.vertices);
    }
    println!("ring sum of K4 triangles: {:?}", ring_sum(&k4, &ts));

    let g = complete_multipartite(&[3, 3, 3, 4]).unwrap();
    let ts = enumerate_triangles(&g);
    let p = edge_weight_vector(&g, &ts).unwrap();
    let mm = p.min_max();
    println!(
        "multipartite 3,3,3,4: {} triangles, MIN={} MAX={}",
        ts.len(),
        mm.min,
        mm.max
    );
    for (e, (u, v)) in g.edges().take(12) {
        println!("  e{e} = ({u},{v}) weight {}", p.get(e));
    }
    println!(
        "vertex weights {:?}",
        vertex_weight_vector(&g, &ts).unwrap().counts
    );
}
