//! Heuristic against the exact oracle on seeded random graphs.
//!
//! cargo run --release --example validate_random -- [graphs] [seed]

use triclique::cli::{gnp, validate};

fn main() {
    let mut args = std::env::args().skip(1);
    let count: u64 = args.next().map_or(200, |s| s.parse().expect("graph count"));
    let seed: u64 = args.next().map_or(1, |s| s.parse().expect("seed"));

    let mut agree = 0;
    for i in 0..count {
        let n = 6 + (i % 19) as usize;
        let p = [0.3, 0.5, 0.7][(i % 3) as usize];
        let g = gnp(n, p, seed.wrapping_mul(1_000_003).wrapping_add(i));
        let r = validate(&g, 10_000_000, 30);
        assert!(r.verified);
        if r.agree == Some(true) {
            agree += 1;
        } else {
            println!(
                "n={n} p={p}: heuristic {} vs omega {:?}",
                r.heuristic_size, r.omega
            );
        }
    }
    println!("agreement {agree}/{count}");
}
