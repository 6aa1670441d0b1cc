//! Clique hypergraphs: vertices are the edges of a graph, hyperedges are
//! the edge sets of its `K_k` copies.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rational::{check_closed_unit, pow, Rational};

/// Largest number of hyperedge-covered vertices handled exactly.
pub const MAX_COVERED: usize = 30;

/// Retry budget for [`random_linear_hypergraph`].
pub const RANDOM_ATTEMPTS: usize = 10_000;

/// A uniform hypergraph on vertices `0..vertex_count`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CliqueHypergraph {
    vertex_count: usize,
    hyperedges: Vec<Vec<usize>>,
    /// Order `k` of the source clique (hyperedges have `k(k-1)/2` vertices).
    clique_order: usize,
}

/// `counts[s]` = number of independent vertex subsets of size `s`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndependenceProfile {
    pub counts: Vec<BigInt>,
}

impl CliqueHypergraph {
    /// Builds a hypergraph from explicit hyperedges; each is sorted and must
    /// consist of distinct in-range vertices.
    pub fn new(vertex_count: usize, hyperedges: Vec<Vec<usize>>, clique_order: usize) -> Result<Self> {
        let mut hyperedges = hyperedges;
        for e in &mut hyperedges {
            e.sort_unstable();
            if let Some(&v) = e.iter().find(|&&v| v >= vertex_count) {
                return Err(Error::VertexOutOfRange { vertex: v, n: vertex_count });
            }
            if e.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::InvalidArgument("repeated vertex inside a hyperedge".into()));
            }
            if e.is_empty() {
                return Err(Error::InvalidArgument("empty hyperedge".into()));
            }
        }
        Ok(CliqueHypergraph { vertex_count, hyperedges, clique_order })
    }

    /// The `K_k` hypergraph of `g`: one hyperedge (sorted edge indices) per
    /// copy of `K_k`.
    pub fn from_graph(g: &Graph, k: usize) -> Result<Self> {
        if k < 3 {
            return Err(Error::InvalidArgument(alloc::format!("clique order must be >= 3, got {k}")));
        }
        let idx = g.edge_indexer();
        let hyperedges = g
            .cliques(k)
            .into_iter()
            .map(|c| {
                let mut e = Vec::with_capacity(k * (k - 1) / 2);
                for (i, &u) in c.iter().enumerate() {
                    for &v in &c[i + 1..] {
                        e.push(idx.index(u, v).expect("clique edge present"));
                    }
                }
                e.sort_unstable();
                e
            })
            .collect();
        Ok(CliqueHypergraph { vertex_count: g.edge_count(), hyperedges, clique_order: k })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn hyperedges(&self) -> &[Vec<usize>] {
        &self.hyperedges
    }

    /// Number of hyperedges, `r`.
    pub fn edge_count(&self) -> usize {
        self.hyperedges.len()
    }

    pub fn clique_order(&self) -> usize {
        self.clique_order
    }

    /// Any two hyperedges share at most one vertex.
    pub fn is_linear(&self) -> bool {
        self.hyperedges.iter().enumerate().all(|(i, a)| {
            self.hyperedges[i + 1..].iter().all(|b| a.iter().filter(|v| b.binary_search(v).is_ok()).count() <= 1)
        })
    }

    /// All hyperedges pass through one common vertex (vacuous for `r = 0`).
    /// A linear hypergraph with this property is a flower plus isolated
    /// vertices.
    pub fn is_flower(&self) -> bool {
        let Some((first, rest)) = self.hyperedges.split_first() else {
            return true;
        };
        first.iter().any(|v| rest.iter().all(|e| e.binary_search(v).is_ok()))
    }

    /// Vertices lying in at least one hyperedge, ascending.
    pub fn covered_vertices(&self) -> Vec<usize> {
        let mut seen = vec![false; self.vertex_count];
        for e in &self.hyperedges {
            for &v in e {
                seen[v] = true;
            }
        }
        (0..self.vertex_count).filter(|&v| seen[v]).collect()
    }

    /// The sub-hypergraph on covered vertices, relabeled `0..c` in order.
    pub fn restrict_to_covered(&self) -> CliqueHypergraph {
        let covered = self.covered_vertices();
        let mut pos = vec![usize::MAX; self.vertex_count];
        for (i, &v) in covered.iter().enumerate() {
            pos[v] = i;
        }
        let hyperedges = self.hyperedges.iter().map(|e| e.iter().map(|&v| pos[v]).collect()).collect();
        CliqueHypergraph { vertex_count: covered.len(), hyperedges, clique_order: self.clique_order }
    }

    /// Counts independent sets by size.
    ///
    /// Depth-first search over covered vertices only; each uncovered vertex
    /// is free and enters through a binomial convolution.
    pub fn independence_profile(&self) -> Result<IndependenceProfile> {
        let core = self.restrict_to_covered();
        let c = core.vertex_count;
        if c > MAX_COVERED {
            return Err(Error::LimitExceeded { what: "covered vertices", value: c, limit: MAX_COVERED });
        }
        // hyperedges grouped by their largest vertex, as bitmasks
        let mut closing: Vec<Vec<u64>> = vec![Vec::new(); c];
        for e in &core.hyperedges {
            let mask = e.iter().fold(0u64, |m, &v| m | 1 << v);
            closing[*e.last().expect("non-empty")].push(mask);
        }
        let mut small = vec![0u64; c + 1];
        fn dfs(v: usize, c: usize, chosen: u64, size: usize, closing: &[Vec<u64>], out: &mut [u64]) {
            if v == c {
                out[size] += 1;
                return;
            }
            dfs(v + 1, c, chosen, size, closing, out);
            let with = chosen | 1 << v;
            if closing[v].iter().all(|&m| with & m != m) {
                dfs(v + 1, c, with, size + 1, closing, out);
            }
        }
        dfs(0, c, 0, 0, &closing, &mut small);
        let free = self.vertex_count - c;
        let binom = binomial_row(free);
        let mut counts = vec![BigInt::zero(); self.vertex_count + 1];
        for (s, &k) in small.iter().enumerate() {
            if k == 0 {
                continue;
            }
            let k = BigInt::from(k);
            for (j, b) in binom.iter().enumerate() {
                counts[s + j] += &k * b;
            }
        }
        Ok(IndependenceProfile { counts })
    }

    /// Probability that a `p`-random vertex subset is independent,
    /// `Σ_s counts[s] p^s (1-p)^(v-s)`, computed exactly.
    pub fn independence_probability(&self, p: &Rational) -> Result<Rational> {
        check_closed_unit(p)?;
        let prof = self.independence_profile()?;
        Ok(prof.probability(p))
    }
}

impl IndependenceProfile {
    pub fn probability(&self, p: &Rational) -> Rational {
        let v = self.counts.len() - 1;
        let q = Rational::one() - p;
        self.counts
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(s, c)| Rational::from_integer(c.clone()) * pow(p, s) * pow(&q, v - s))
            .sum()
    }
}

/// `C(n, 0..=n)`.
pub(crate) fn binomial_row(n: usize) -> Vec<BigInt> {
    let mut row = vec![BigInt::one()];
    for k in 0..n {
        let next = &row[k] * BigInt::from(n - k) / BigInt::from(k + 1);
        row.push(next);
    }
    row
}

/// `r` hyperedges `{0, 2i+1, 2i+2}` all through vertex 0.
pub fn flower(r: usize) -> CliqueHypergraph {
    let hyperedges = (0..r).map(|i| vec![0, 2 * i + 1, 2 * i + 2]).collect();
    CliqueHypergraph { vertex_count: 2 * r + 1, hyperedges, clique_order: 3 }
}

/// Seeded random linear 3-uniform hypergraph with exactly `r` hyperedges.
///
/// Samples `r` uniform triples and rejects non-linear draws, up to
/// [`RANDOM_ATTEMPTS`] times. Identical `(vertices, r, seed)` give identical
/// output.
pub fn random_linear_hypergraph(vertices: usize, r: usize, seed: u64) -> Result<CliqueHypergraph> {
    // a linear 3-graph covers each vertex pair at most once
    let pairs = vertices * vertices.saturating_sub(1) / 2;
    if r > 0 && (vertices < 3 || 3 * r > pairs) {
        return Err(Error::Infeasible(alloc::format!(
            "{r} pairwise linear triples do not fit on {vertices} vertices"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut below = |n: usize| (rng.next_u64() % n as u64) as usize;
    for _ in 0..RANDOM_ATTEMPTS {
        let mut hyperedges = Vec::with_capacity(r);
        for _ in 0..r {
            let (a, b, c) = loop {
                let t = (below(vertices), below(vertices), below(vertices));
                if t.0 != t.1 && t.0 != t.2 && t.1 != t.2 {
                    break t;
                }
            };
            let mut e = vec![a, b, c];
            e.sort_unstable();
            hyperedges.push(e);
        }
        let h = CliqueHypergraph { vertex_count: vertices, hyperedges, clique_order: 3 };
        if h.is_linear() {
            return Ok(h);
        }
    }
    Err(Error::Infeasible(alloc::format!(
        "no linear sample with {r} triples on {vertices} vertices after {RANDOM_ATTEMPTS} attempts"
    )))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, complete_bipartite, mantel_plus_one};
    use crate::rational::ratio;

    /// Brute force over all vertex subsets.
    fn brute_probability(h: &CliqueHypergraph, p: &Rational) -> Rational {
        let v = h.vertex_count();
        let masks: Vec<u64> = h.hyperedges().iter().map(|e| e.iter().fold(0, |m, &x| m | 1 << x)).collect();
        let q = Rational::one() - p;
        (0u64..1 << v)
            .filter(|s| masks.iter().all(|&m| s & m != m))
            .map(|s| pow(p, s.count_ones() as usize) * pow(&q, v - s.count_ones() as usize))
            .sum()
    }

    fn flower_bound(r: usize, p: &Rational) -> Rational {
        Rational::one() - p + p * pow(&(Rational::one() - p * p), r)
    }

    #[test]
    fn from_graph_examples() {
        let k4 = complete(4).unwrap();
        let h = CliqueHypergraph::from_graph(&k4, 3).unwrap();
        assert_eq!(h.vertex_count(), 6);
        assert_eq!(h.edge_count(), 4);
        assert!(h.is_linear());
        let h = CliqueHypergraph::from_graph(&complete_bipartite(3, 3).unwrap(), 3).unwrap();
        assert_eq!((h.vertex_count(), h.edge_count()), (9, 0));
        let h = CliqueHypergraph::from_graph(&k4, 4).unwrap();
        assert_eq!(h.edge_count(), 1);
        assert_eq!(h.hyperedges()[0], vec![0, 1, 2, 3, 4, 5]);
        assert!(CliqueHypergraph::from_graph(&k4, 2).is_err());
    }

    #[test]
    fn linearity() {
        let h = CliqueHypergraph::new(4, vec![vec![0, 1, 2], vec![1, 2, 3]], 3).unwrap();
        assert!(!h.is_linear());
        assert!(CliqueHypergraph::new(4, vec![], 3).unwrap().is_linear());
        assert!(CliqueHypergraph::new(3, vec![vec![0, 1, 3]], 3).is_err());
        assert!(CliqueHypergraph::new(3, vec![vec![0, 1, 1]], 3).is_err());
    }

    #[test]
    fn single_hyperedge_is_one_minus_p_cubed() {
        let h = CliqueHypergraph::new(3, vec![vec![0, 1, 2]], 3).unwrap();
        for p in [ratio(1, 10), ratio(1, 2), ratio(9, 10)] {
            let v = h.independence_probability(&p).unwrap();
            assert_eq!(v, Rational::one() - pow(&p, 3));
            assert_eq!(v, flower_bound(1, &p));
        }
        assert_eq!(CliqueHypergraph::new(5, vec![], 3).unwrap().independence_probability(&ratio(1, 3)).unwrap(), ratio(1, 1));
        assert!(h.independence_probability(&ratio(3, 2)).is_err());
    }

    #[test]
    fn flowers_meet_the_bound() {
        for r in 0..=5 {
            let h = flower(r);
            assert_eq!(h.vertex_count(), 2 * r + 1);
            assert!(h.is_linear());
            for p in [ratio(1, 10), ratio(1, 2), ratio(3, 4)] {
                let exact = h.independence_probability(&p).unwrap();
                assert_eq!(exact, flower_bound(r, &p));
                assert_eq!(exact, brute_probability(&h, &p));
            }
        }
    }

    #[test]
    fn disjoint_triples_factor() {
        for r in 1..=4 {
            let edges = (0..r).map(|i| vec![3 * i, 3 * i + 1, 3 * i + 2]).collect();
            let h = CliqueHypergraph::new(3 * r, edges, 3).unwrap();
            let p = ratio(2, 5);
            let expect = pow(&(Rational::one() - pow(&p, 3)), r);
            assert_eq!(h.independence_probability(&p).unwrap(), expect);
            assert_eq!(brute_probability(&h, &p), expect);
        }
    }

    #[test]
    fn flower3_matches_mantel_plus_one_6() {
        let h = CliqueHypergraph::from_graph(&mantel_plus_one(6).unwrap(), 3).unwrap().restrict_to_covered();
        let f = flower(3);
        assert_eq!(h.vertex_count(), f.vertex_count());
        // explicit isomorphism search over all 7! vertex bijections
        let norm = |h: &CliqueHypergraph, perm: &[usize]| {
            let mut es: Vec<Vec<usize>> = h
                .hyperedges()
                .iter()
                .map(|e| {
                    let mut e: Vec<usize> = e.iter().map(|&v| perm[v]).collect();
                    e.sort_unstable();
                    e
                })
                .collect();
            es.sort();
            es
        };
        let target = norm(&f, &[0, 1, 2, 3, 4, 5, 6]);
        let mut perm: Vec<usize> = (0..7).collect();
        let mut found = false;
        loop {
            if norm(&h, &perm) == target {
                found = true;
                break;
            }
            let Some(i) = (1..7).rev().find(|&i| perm[i - 1] < perm[i]) else { break };
            let j = (i..7).rev().find(|&j| perm[j] > perm[i - 1]).unwrap();
            perm.swap(i - 1, j);
            perm[i..].reverse();
        }
        assert!(found);
    }

    #[test]
    fn random_generator() {
        assert_eq!(random_linear_hypergraph(12, 0, 5).unwrap().edge_count(), 0);
        let a = random_linear_hypergraph(12, 4, 1).unwrap();
        let b = random_linear_hypergraph(12, 4, 1).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.edge_count(), 4);
        assert!(a.is_linear());
        assert!(matches!(random_linear_hypergraph(3, 2, 9), Err(Error::Infeasible(_))));
        for seed in 0..20 {
            let h = random_linear_hypergraph(14, 6, seed).unwrap();
            assert!(h.is_linear());
            for e in h.hyperedges() {
                assert!(e[0] < e[1] && e[1] < e[2] && e[2] < 14);
            }
        }
    }

    #[test]
    fn profile_matches_brute_force() {
        for seed in 0..10 {
            let h = random_linear_hypergraph(10, 4, seed).unwrap();
            for p in [ratio(1, 3), ratio(5, 7)] {
                assert_eq!(h.independence_probability(&p).unwrap(), brute_probability(&h, &p));
            }
            let prof = h.independence_profile().unwrap();
            assert_eq!(prof.counts[0], BigInt::one());
            let binom = binomial_row(10);
            for (c, b) in prof.counts.iter().zip(&binom) {
                assert!(c <= b);
            }
        }
    }

    #[test]
    fn binomial_rows() {
        assert_eq!(binomial_row(0), vec![BigInt::one()]);
        let r: Vec<i64> = binomial_row(6).iter().map(|b| i64::try_from(b).unwrap()).collect();
        assert_eq!(r, vec![1, 6, 15, 20, 15, 6, 1]);
    }
}
