#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeSet;
use triclique::cli::gnp;
use triclique::Graph;

/// Adjacency as plain sets, built straight from the edge list.
pub fn adjacency(g: &Graph) -> Vec<BTreeSet<usize>> {
    let mut adj = vec![BTreeSet::new(); g.vertex_count() + 1];
    for (_, (u, v)) in g.edges() {
        adj[u].insert(v);
        adj[v].insert(u);
    }
    adj
}

/// Clique number by plain extension search, sharing no code with the
/// library oracles.
pub fn naive_omega(g: &Graph) -> usize {
    fn grow(adj: &[BTreeSet<usize>], clique: &mut Vec<usize>, from: usize, best: &mut usize) {
        *best = (*best).max(clique.len());
        for v in from..adj.len() {
            if clique.iter().all(|&c| adj[c].contains(&v)) {
                clique.push(v);
                grow(adj, clique, v + 1, best);
                clique.pop();
            }
        }
    }
    let adj = adjacency(g);
    let mut best = 0;
    grow(&adj, &mut Vec::new(), 1, &mut best);
    best
}

/// Maximal cliques by extension search plus a maximality filter.
pub fn naive_maximal_cliques(g: &Graph) -> Vec<Vec<usize>> {
    let adj = adjacency(g);
    let n = g.vertex_count();
    let mut out = Vec::new();
    fn grow(
        adj: &[BTreeSet<usize>],
        n: usize,
        clique: &mut Vec<usize>,
        from: usize,
        out: &mut Vec<Vec<usize>>,
    ) {
        let extendable = (1..=n)
            .filter(|v| !clique.contains(v))
            .any(|v| clique.iter().all(|&c| adj[c].contains(&v)));
        if !extendable && !clique.is_empty() {
            out.push(clique.clone());
        }
        for v in from..=n {
            if clique.iter().all(|&c| adj[c].contains(&v)) {
                clique.push(v);
                grow(adj, n, clique, v + 1, out);
                clique.pop();
            }
        }
    }
    grow(&adj, n, &mut Vec::new(), 1, &mut out);
    out.sort();
    out
}

pub fn naive_triangle_count(g: &Graph) -> usize {
    let adj = adjacency(g);
    let n = g.vertex_count();
    let mut count = 0;
    for a in 1..=n {
        for b in a + 1..=n {
            for c in b + 1..=n {
                if adj[a].contains(&b) && adj[a].contains(&c) && adj[b].contains(&c) {
                    count += 1;
                }
            }
        }
    }
    count
}

pub struct CorpusGraph {
    pub n: usize,
    pub p: f64,
    pub seed: u64,
    pub graph: Graph,
}

/// Seeded random graphs with `n` in `3..=24` and `p` in {0.3, 0.5, 0.7}.
pub fn corpus(count: usize, master_seed: u64) -> Vec<CorpusGraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(master_seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(3..=24);
            let p = [0.3, 0.5, 0.7][rng.gen_range(0..3)];
            let seed = rng.gen();
            CorpusGraph {
                n,
                p,
                seed,
                graph: gnp(n, p, seed),
            }
        })
        .collect()
}
