//! Acceptance criteria, one PASS/FAIL line each. Runs without the libtest
//! harness so the lines always reach the terminal; exits non-zero if any
//! criterion fails.

mod common;

use std::process::ExitCode;
use triclique::extract::{
    cliques_per_min_edge, extract_from_edge, extract_max_clique, is_clique, ExtractOptions,
};
use triclique::fixtures::load_fixture;
use triclique::generators::{complete, complete_multipartite, moon_moser};
use triclique::oracle::{
    enumerate_maximal_cliques, maghout_cliques, max_clique_exact, DEFAULT_NODE_BUDGET,
};
use triclique::prune::{full_trace, full_trace_with, main_iteration, WeightUpdate};
use triclique::triangles::{edge_weight_vector, ring_sum};
use triclique::{enumerate_triangles, EdgeSet, TraceMode, VertexSet};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! check {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn set(n: usize, vs: &[usize]) -> VertexSet {
    VertexSet::from_labels(n, vs.iter().copied())
}

fn moon_moser_counts() -> Outcome {
    for k in 1..=4usize {
        let g = moon_moser(k).unwrap();
        let all = enumerate_maximal_cliques(&g, DEFAULT_NODE_BUDGET).map_err(|e| e.to_string())?;
        let want = 3usize.pow(k as u32);
        check!(
            all.cliques.len() == want,
            "k={k}: {} maximal cliques, want {want}",
            all.cliques.len()
        );
        check!(
            all.cliques.iter().all(|c| c.len() == k),
            "k={k}: a clique has size != {k}"
        );
        if k <= 3 {
            let clauses = g.complement().edge_count();
            check!(
                clauses == 3 * k,
                "k={k}: {clauses} complement clauses, want {}",
                3 * k
            );
            let m = maghout_cliques(&g, 30).map_err(|e| e.to_string())?;
            check!(
                m == all.cliques,
                "k={k}: Boolean expansion disagrees with enumeration"
            );
        }
    }
    Ok("3, 9, 27, 81 maximal cliques; expansion agrees for k <= 3".into())
}

fn edge_and_triangle_formulas() -> Outcome {
    for (k, m) in [(2, 9), (3, 27), (4, 54)] {
        let g = moon_moser(k).unwrap();
        let n = 3 * k;
        check!(
            g.edge_count() == m && m == n * (n - 3) / 2,
            "k={k}: {} edges",
            g.edge_count()
        );
    }
    let t4 = enumerate_triangles(&moon_moser(4).unwrap()).len();
    check!(t4 == 108, "moon_moser(4) has {t4} triangles");
    let t = complete_multipartite(&[3, 3, 3, 4]).unwrap();
    let tt = enumerate_triangles(&t).len();
    check!(
        t.edge_count() == 63 && tt == 135,
        "multipartite: {} edges, {tt} triangles",
        t.edge_count()
    );
    Ok("m = 9, 27, 54; 108 triangles; 63 edges and 135 triangles".into())
}

fn ten_vertex_trace() -> Outcome {
    let g = load_fixture("g1").map_err(|e| e.to_string())?.graph;
    let p0 = [
        5, 4, 3, 3, 2, 3, 5, 3, 3, 3, 3, 4, 3, 3, 2, 3, 3, 3, 3, 4, 5, 3, 3, 3, 3, 3, 5,
    ];
    let ts = enumerate_triangles(&g);
    let w = edge_weight_vector(&g, &ts).unwrap();
    check!(w.counts == p0, "P0 = {:?}", w.counts);
    let t = full_trace(&g, TraceMode::Exhaustive);
    let seq = t.min_max_sequence();
    check!(seq == [(2, 5), (2, 4), (3, 3)], "MIN/MAX sequence {seq:?}");
    let main = main_iteration(&t).unwrap();
    check!(main.index == 2, "main iteration {}", main.index);
    let r = extract_from_edge(&g, &t, 4, ExtractOptions::default()).map_err(|e| e.to_string())?;
    check!(
        r.vertices == set(10, &[1, 2, 3, 4, 5]) && r.verified,
        "seeded clique {:?}",
        r.vertices
    );
    check!(
        r.witness_triangles.len() == 10,
        "{} witness triangles",
        r.witness_triangles.len()
    );
    Ok("P0 exact; (2,5) (2,4) (3,3), main 2; e4 gives {1..5} with 10 witnesses".into())
}

fn twelve_vertex_end_to_end() -> Outcome {
    let g = load_fixture("g3").map_err(|e| e.to_string())?.graph;
    let n = enumerate_triangles(&g).len();
    check!(n == 39, "{n} triangles");
    let t = full_trace(&g, TraceMode::EarlyStop);
    let last = t.records.last().ok_or("empty trace")?;
    check!(
        last.min == 3 && last.max == 3,
        "last record MIN={} MAX={}",
        last.min,
        last.max
    );
    check!(
        last.surviving.len() == 10,
        "{} surviving triangles",
        last.surviving.len()
    );
    let r = extract_max_clique(&g);
    check!(
        r.vertices == set(12, &[1, 2, 3, 8, 11]),
        "clique {:?}",
        r.vertices
    );
    Ok("39 triangles; stops at MIN=MAX=3 with 10 left; clique {1,2,3,8,11}".into())
}

fn overlapping_cliques() -> Outcome {
    let g = load_fixture("g4").map_err(|e| e.to_string())?.graph;
    let n = enumerate_triangles(&g).len();
    check!(n == 173, "{n} triangles");
    let listed = [
        [1, 2, 9, 20, 24],
        [7, 11, 16, 17, 22],
        [11, 14, 15, 17, 22],
        [11, 15, 16, 17, 22],
    ]
    .map(|c| set(27, &c));
    for c in &listed {
        check!(is_clique(&g, c), "{c:?} is not a clique");
    }
    let ex = max_clique_exact(&g, DEFAULT_NODE_BUDGET).map_err(|e| e.to_string())?;
    let naive = common::naive_omega(&g);
    check!(
        ex.omega == 5 && naive == 5,
        "omega {} (naive {naive})",
        ex.omega
    );
    let per = cliques_per_min_edge(&g, ExtractOptions::default());
    let hits = listed.iter().filter(|c| per.distinct.contains(c)).count();
    check!(hits >= 1, "no listed clique among {:?}", per.distinct);
    Ok(format!(
        "173 triangles; 4 cliques valid; omega 5; {hits} of 4 listed sets recovered"
    ))
}

fn per_edge_variants() -> Outcome {
    let g = load_fixture("g2").map_err(|e| e.to_string())?.graph;
    let per = cliques_per_min_edge(&g, ExtractOptions::default());
    let want: Vec<VertexSet> = [
        [1, 2, 3, 6, 7],
        [1, 3, 4, 5, 7],
        [1, 3, 4, 6, 7],
        [1, 3, 5, 6, 7],
    ]
    .iter()
    .map(|c| set(7, c))
    .collect();
    let got: Vec<Vec<usize>> = per.distinct.iter().map(|v| v.to_vec()).collect();
    let invalid: Vec<Vec<usize>> = want
        .iter()
        .filter(|c| !is_clique(&g, c))
        .map(|c| c.to_vec())
        .collect();
    check!(
        per.distinct == want,
        "distinct cliques {got:?}, want the four listed sets; listed but not cliques: {invalid:?}"
    );
    Ok("four distinct 5-cliques".into())
}

fn multipartite_initial_weights() -> Outcome {
    let g = complete_multipartite(&[3, 3, 3, 4]).unwrap();
    let w = edge_weight_vector(&g, &enumerate_triangles(&g)).unwrap();
    let mm = w.min_max();
    check!(
        (mm.min, mm.max) == (6, 7),
        "MIN/MAX = {}/{}",
        mm.min,
        mm.max
    );
    for (e, (u, v)) in g.edges() {
        let want = if v <= 9 { 7 } else { 6 };
        check!(
            w.get(e) == want,
            "e{e} = ({u},{v}) weight {}, want {want}",
            w.get(e)
        );
    }
    Ok("MIN/MAX 6/7; 7 on small-part pairs, 6 toward the 4-part".into())
}

fn property_suite() -> Outcome {
    let corpus = common::corpus(1000, 20_241_019);
    let (mut not_clique, mut too_big, mut agree, mut weight_mismatch, mut bad_internal) =
        (0, 0, 0, 0, 0);
    for c in &corpus {
        let g = &c.graph;
        let r = extract_max_clique(g);
        let adj = common::adjacency(g);
        let vs = r.vertices.to_vec();
        let independent_check = vs
            .iter()
            .all(|&a| vs.iter().all(|&b| a == b || adj[a].contains(&b)));
        if !(r.verified && independent_check) {
            not_clique += 1;
        }
        let omega = max_clique_exact(g, DEFAULT_NODE_BUDGET)
            .map_err(|e| e.to_string())?
            .omega;
        if r.size() > omega {
            too_big += 1;
        }
        if r.size() == omega {
            agree += 1;
        }
        for mode in [TraceMode::Exhaustive, TraceMode::EarlyStop] {
            let a = full_trace_with(g, mode, WeightUpdate::Recompute);
            let b = full_trace_with(g, mode, WeightUpdate::Differential);
            if a.records != b.records {
                weight_mismatch += 1;
            }
        }
        let all = enumerate_maximal_cliques(g, DEFAULT_NODE_BUDGET).map_err(|e| e.to_string())?;
        let ts = enumerate_triangles(g);
        for q in &all.cliques {
            let l = q.len();
            let inside: Vec<_> = ts.iter().filter(|t| t.within(q)).collect();
            for a in q.iter() {
                for b in q.iter().filter(|&b| b > a) {
                    let e = g.edge_id(a, b).expect("clique pair is an edge");
                    let k = inside.iter().filter(|t| t.contains_edge(e)).count();
                    if k != l - 2 {
                        bad_internal += 1;
                    }
                }
            }
        }
    }

    let k4 = complete(4).unwrap();
    let k5 = complete(5).unwrap();
    let k4_sum = ring_sum(&k4, &enumerate_triangles(&k4));
    let k5_sum = ring_sum(&k5, &enumerate_triangles(&k5));

    let total = corpus.len();
    println!(
        "     (c) heuristic size == omega on {agree}/{total} graphs ({:.1}%)",
        100.0 * agree as f64 / total as f64
    );
    check!(not_clique == 0, "(a) {not_clique} results are not cliques");
    check!(too_big == 0, "(b) {too_big} results exceed omega");
    check!(
        weight_mismatch == 0,
        "(d) {weight_mismatch} traces differ between weight updates"
    );
    check!(
        bad_internal == 0,
        "(e) {bad_internal} clique edges with a wrong internal triangle count"
    );
    check!(k4_sum.is_empty(), "(f) K4 ring sum {k4_sum:?}");
    check!(k5_sum == EdgeSet::full(10), "(f) K5 ring sum {k5_sum:?}");
    Ok(format!(
        "{total} random graphs: (a) (b) (d) (e) (f) hold, agreement {agree}/{total}"
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("moon-moser clique counts", moon_moser_counts),
        ("edge and triangle formulas", edge_and_triangle_formulas),
        ("10-vertex trace and seeded clique", ten_vertex_trace),
        ("12-vertex trace and clique", twelve_vertex_end_to_end),
        ("27-vertex overlapping cliques", overlapping_cliques),
        ("7-vertex per-edge variants", per_edge_variants),
        (
            "13-vertex multipartite initial weights",
            multipartite_initial_weights,
        ),
        ("random-graph property suite", property_suite),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        match f() {
            Ok(detail) => println!("PASS {} {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL {} {name}: {detail}", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
