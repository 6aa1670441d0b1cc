//! Seeded Monte Carlo estimates of `Φ_p(G)`.
//!
//! Samples are split into fixed blocks of [`BLOCK_SAMPLES`]. Block `b` draws
//! from ChaCha8 seeded with `seed_from_u64(seed)` on stream `b`, so any
//! assignment of blocks to workers yields the same success count. An edge
//! is kept when a uniform `u64` falls below `⌊p · 2^64⌋`.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};
use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::error::Result;
use crate::graph::Graph;
use crate::hypergraph::CliqueHypergraph;
use crate::rational::{check_closed_unit, to_f64, Rational};

/// Samples per generator stream.
pub const BLOCK_SAMPLES: u64 = 1 << 14;

/// Two-sided 95% normal quantile.
const Z95: f64 = 1.959_963_984_540_054;

/// Bernoulli threshold for keeping an edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KeepRule {
    Never,
    Always,
    Below(u64),
}

impl KeepRule {
    pub fn new(p: &Rational) -> Result<Self> {
        check_closed_unit(p)?;
        if p.is_zero() {
            return Ok(KeepRule::Never);
        }
        if p.is_one() {
            return Ok(KeepRule::Always);
        }
        let scaled = (p.numer() << 64u32) / p.denom();
        Ok(KeepRule::Below(scaled.to_u64().expect("p < 1")))
    }

    #[inline]
    pub fn keep(self, rng: &mut impl RngCore) -> bool {
        match self {
            KeepRule::Never => false,
            KeepRule::Always => true,
            KeepRule::Below(t) => rng.next_u64() < t,
        }
    }
}

/// Generator for block `block` of a run seeded with `seed`.
pub fn block_rng(seed: u64, block: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(block);
    rng
}

/// Keeps each edge of `g` (in canonical order) independently.
pub fn sample_subgraph(g: &Graph, rule: KeepRule, rng: &mut impl RngCore) -> Graph {
    let kept: Vec<(usize, usize)> = g.edges().into_iter().filter(|_| rule.keep(rng)).collect();
    Graph::from_edges(g.vertex_count(), &kept).expect("subset of a valid edge set")
}

/// Precomputed sampling state: only clique-covered edges are drawn.
#[derive(Clone, Debug)]
pub struct Sampler {
    covered: usize,
    masks: Vec<Vec<u64>>,
    rule: KeepRule,
}

impl Sampler {
    pub fn new(g: &Graph, clique_order: usize, p: &Rational) -> Result<Self> {
        let h = CliqueHypergraph::from_graph(g, clique_order)?.restrict_to_covered();
        let words = h.vertex_count().div_ceil(64).max(1);
        let masks = h
            .hyperedges()
            .iter()
            .map(|e| {
                let mut m = vec![0u64; words];
                for &v in e {
                    m[v / 64] |= 1 << (v % 64);
                }
                m
            })
            .collect();
        Ok(Sampler { covered: h.vertex_count(), masks, rule: KeepRule::new(p)? })
    }

    /// Triangle-free (clique-free) samples among the `count` draws of one
    /// block.
    pub fn run_block(&self, seed: u64, block: u64, count: u64) -> u64 {
        if self.masks.is_empty() {
            return count;
        }
        let mut rng = block_rng(seed, block);
        let mut kept = vec![0u64; self.covered.div_ceil(64).max(1)];
        let mut ok = 0;
        for _ in 0..count {
            kept.fill(0);
            for v in 0..self.covered {
                if self.rule.keep(&mut rng) {
                    kept[v / 64] |= 1 << (v % 64);
                }
            }
            let hit = self.masks.iter().any(|m| m.iter().zip(&kept).all(|(&m, &k)| k & m == m));
            if !hit {
                ok += 1;
            }
        }
        ok
    }

    /// Number of blocks and the size of block `b` for `samples` draws.
    pub fn blocks(samples: u64) -> u64 {
        samples.div_ceil(BLOCK_SAMPLES)
    }

    pub fn block_len(samples: u64, block: u64) -> u64 {
        (samples - block * BLOCK_SAMPLES).min(BLOCK_SAMPLES)
    }
}

/// Fraction of clique-free samples with its 95% Wilson interval.
#[derive(Clone, Debug, PartialEq)]
pub struct Estimate {
    pub mean: f64,
    pub ci_low: f64,
    pub ci_high: f64,
    pub samples: u64,
    pub successes: u64,
    pub seed: u64,
    pub p: Rational,
}

impl Estimate {
    pub fn from_counts(successes: u64, samples: u64, seed: u64, p: Rational) -> Self {
        let (ci_low, ci_high) = wilson_interval(successes, samples);
        let mean = successes as f64 / samples as f64;
        Estimate { mean, ci_low: ci_low.min(mean), ci_high: ci_high.max(mean), samples, successes, seed, p }
    }

    pub fn contains(&self, x: f64) -> bool {
        self.ci_low <= x && x <= self.ci_high
    }
}

/// 95% Wilson score interval for `k` successes in `n` trials.
pub fn wilson_interval(k: u64, n: u64) -> (f64, f64) {
    let n = n as f64;
    let phat = k as f64 / n;
    let z2 = Z95 * Z95;
    let denom = 1.0 + z2 / n;
    let centre = (phat + z2 / (2.0 * n)) / denom;
    let half = Z95 / denom * libm::sqrt(phat * (1.0 - phat) / n + z2 / (4.0 * n * n));
    ((centre - half).max(0.0), (centre + half).min(1.0))
}

/// Estimates `Φ_p(G)` from `samples` seeded draws (single-threaded).
pub fn estimate_phi(g: &Graph, p: &Rational, samples: u64, seed: u64) -> Result<Estimate> {
    estimate_clique_free(g, 3, p, samples, seed)
}

/// Estimates the probability that `G_p` has no `K_k`.
pub fn estimate_clique_free(g: &Graph, k: usize, p: &Rational, samples: u64, seed: u64) -> Result<Estimate> {
    if samples == 0 {
        return Err(crate::Error::InvalidArgument("at least one sample is required".into()));
    }
    let sampler = Sampler::new(g, k, p)?;
    let ok = (0..Sampler::blocks(samples))
        .map(|b| sampler.run_block(seed, b, Sampler::block_len(samples, b)))
        .sum();
    Ok(Estimate::from_counts(ok, samples, seed, p.clone()))
}

/// Normal-approximation standard error of a mean `x` over `n` draws.
pub fn standard_error(x: &Rational, n: u64) -> f64 {
    let v = to_f64(x);
    libm::sqrt(v * (1.0 - v) / n as f64)
}

/// `p = 2^-bits` as a rational (handy for limit tests).
pub fn dyadic(bits: u32) -> Rational {
    Rational::new(BigInt::one(), BigInt::one() << bits)
}
