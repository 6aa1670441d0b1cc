//! Fixed graph and hypergraph corpora, and the corpus-wide check of the
//! linear-hypergraph bound `1 - p + p(1-p²)^r`.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::bounds::linear_bound;
use crate::error::Result;
use crate::graph::{complete, complete_bipartite, mantel_plus_one, six_vertex_candidates, Graph};
use crate::hypergraph::{flower, random_linear_hypergraph, CliqueHypergraph};
use crate::rational::{ratio, Rational};
use crate::search::enumerate_graphs;

/// Cycle `C_n`.
pub fn cycle(n: usize) -> Result<Graph> {
    let edges: Vec<(usize, usize)> = (0..n).map(|v| (v, (v + 1) % n)).collect();
    Graph::from_edges(n, &edges)
}

/// Hub `0` joined to every vertex of a cycle on `1..=n`.
pub fn wheel(n: usize) -> Result<Graph> {
    let mut edges: Vec<(usize, usize)> = (1..=n).map(|v| (0, v)).collect();
    edges.extend((0..n).map(|k| (1 + k, 1 + (k + 1) % n)));
    Graph::from_edges(n + 1, &edges)
}

pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for k in 0..5 {
        edges.push((k, (k + 1) % 5));
        edges.push((k, k + 5));
        edges.push((5 + k, 5 + (k + 2) % 5));
    }
    Graph::from_edges(10, &edges).expect("valid edge list")
}

/// `K_{2,2,2}`: `K_6` minus a perfect matching.
pub fn octahedron() -> Graph {
    let edges: Vec<(usize, usize)> =
        (0..6).flat_map(|u| (u + 1..6).map(move |v| (u, v))).filter(|&(u, v)| v != u + 3).collect();
    Graph::from_edges(6, &edges).expect("valid edge list")
}

/// Named graphs used across the checks.
pub fn named_graphs() -> Vec<(String, Graph)> {
    let (g1, g2, g3) = six_vertex_candidates();
    let mut out: Vec<(String, Graph)> = Vec::new();
    for n in 3..=6 {
        out.push((format!("K{n}"), complete(n).expect("small")));
    }
    out.push(("K3,3".into(), complete_bipartite(3, 3).expect("small")));
    out.push(("K2,4".into(), complete_bipartite(2, 4).expect("small")));
    for n in 3..=8 {
        out.push((format!("mantel+1:{n}"), mantel_plus_one(n).expect("small")));
    }
    out.push(("g1".into(), g1));
    out.push(("g2".into(), g2));
    out.push(("g3".into(), g3));
    out.push(("C5".into(), cycle(5).expect("small")));
    out.push(("W5".into(), wheel(5).expect("small")));
    out.push(("petersen".into(), petersen()));
    out.push(("octahedron".into(), octahedron()));
    out
}

/// Every isomorphism class on `1..=max_n` vertices, any edge count.
pub fn all_classes(max_n: usize) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        for m in 0..=n * (n - 1) / 2 {
            out.extend(enumerate_graphs(n, m)?);
        }
    }
    Ok(out)
}

/// Named graphs followed by every class on at most five vertices.
pub fn graph_corpus() -> Result<Vec<(String, Graph)>> {
    let mut out = named_graphs();
    for g in all_classes(5)? {
        out.push((crate::graph6::write_graph6(&g), g));
    }
    Ok(out)
}

/// `(vertices, r, seed)` for the seeded random part of the hypergraph corpus.
pub fn random_hypergraph_params() -> Vec<(usize, usize, u64)> {
    (0..200u64).map(|s| (9 + (s % 6) as usize, (s % 7) as usize, s)).collect()
}

/// Triangle hypergraphs of every class on at most six vertices, flowers up
/// to `r = 6`, and 200 seeded random linear hypergraphs.
pub fn hypergraph_corpus() -> Result<Vec<(String, CliqueHypergraph)>> {
    let mut out = Vec::new();
    for g in all_classes(6)? {
        out.push((format!("triangles({})", crate::graph6::write_graph6(&g)), CliqueHypergraph::from_graph(&g, 3)?));
    }
    for r in 0..=6 {
        out.push((format!("flower({r})"), flower(r)));
    }
    for (v, r, seed) in random_hypergraph_params() {
        out.push((format!("random({v},{r},{seed})"), random_linear_hypergraph(v, r, seed)?));
    }
    Ok(out)
}

/// Probabilities at which the bound is checked.
pub fn bound_check_points() -> [Rational; 5] {
    [ratio(1, 10), ratio(1, 4), ratio(1, 2), ratio(3, 4), ratio(9, 10)]
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundReport {
    pub hypergraphs: usize,
    pub evaluations: usize,
    pub flowers: usize,
    /// Cases where the exact probability exceeds the bound.
    pub violations: Vec<String>,
    /// Equality on a non-flower, or strict inequality on a flower.
    pub equality_mismatches: Vec<String>,
    pub non_linear: Vec<String>,
    pub pass: bool,
}

/// Checks `P(independent) ≤ 1 - p + p(1-p²)^r` on every case, with
/// equality exactly when all hyperedges share a vertex.
pub fn verify_linear_bound(corpus: &[(String, CliqueHypergraph)]) -> Result<BoundReport> {
    let points = bound_check_points();
    let mut report = BoundReport {
        hypergraphs: corpus.len(),
        evaluations: 0,
        flowers: 0,
        violations: Vec::new(),
        equality_mismatches: Vec::new(),
        non_linear: Vec::new(),
        pass: false,
    };
    for (label, h) in corpus {
        if !h.is_linear() {
            report.non_linear.push(label.clone());
            continue;
        }
        let is_flower = h.is_flower();
        report.flowers += usize::from(is_flower);
        let profile = h.independence_profile()?;
        let bound = linear_bound(h.edge_count());
        for p in &points {
            let (lhs, rhs) = (profile.probability(p), bound.eval(p));
            report.evaluations += 1;
            if lhs > rhs {
                report.violations.push(format!("{label} at p={p}: {lhs} > {rhs}"));
            } else if (lhs == rhs) != is_flower {
                let rel = if lhs == rhs { "=" } else { "<" };
                report.equality_mismatches.push(format!("{label} at p={p}: {lhs} {rel} {rhs}"));
            }
        }
    }
    report.pass =
        report.violations.is_empty() && report.equality_mismatches.is_empty() && report.non_linear.is_empty();
    Ok(report)
}

/// Short description used in reports.
pub fn describe(report: &BoundReport) -> String {
    format!(
        "{} hypergraphs ({} flowers), {} evaluations, {} violations, {} equality mismatches",
        report.hypergraphs,
        report.flowers,
        report.evaluations,
        report.violations.len(),
        report.equality_mismatches.len()
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn named_graph_shapes() {
        assert_eq!(petersen().edge_count(), 15);
        assert_eq!(petersen().triangle_count(), 0);
        assert_eq!(octahedron().triangle_count(), 8);
        assert_eq!(wheel(5).unwrap().triangle_count(), 5);
        assert_eq!(cycle(5).unwrap().edge_count(), 5);
    }

    #[test]
    fn flower_detection() {
        assert!(flower(0).is_flower());
        assert!(flower(4).is_flower());
        let two_disjoint = CliqueHypergraph::new(6, alloc::vec![alloc::vec![0, 1, 2], alloc::vec![3, 4, 5]], 3).unwrap();
        assert!(!two_disjoint.is_flower());
    }

    #[test]
    fn linear_bound_on_small_corpus() {
        let mut corpus: Vec<(String, CliqueHypergraph)> =
            (0..=4).map(|r| (format!("flower({r})"), flower(r))).collect();
        corpus.push(("K4".into(), CliqueHypergraph::from_graph(&complete(4).unwrap(), 3).unwrap()));
        let rep = verify_linear_bound(&corpus).unwrap();
        assert!(rep.pass, "{rep:?}");
        assert_eq!(rep.flowers, 5);
    }
}
