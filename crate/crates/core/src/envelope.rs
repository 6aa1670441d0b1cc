//! Upper envelope of `Φ_p` over all graph classes at a fixed edge budget,
//! with exactly isolated crossover points.
//!
//! Candidates are the polynomials that are maximal at some grid point
//! `j/64`. Their envelope is computed exactly: every root in `(0, 1)` of
//! every pairwise difference is isolated, the gaps between roots are
//! sampled, and consecutive gaps with the same winner are merged. An audit
//! then checks every discarded polynomial against the envelope on each
//! segment; any that rises above it joins the candidates and the envelope
//! is rebuilt.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::bounds::EdgeBudget;
use crate::error::Result;
use crate::exact::phi_polynomial;
use crate::graph::Graph;
use crate::graph6::write_graph6;
use crate::poly::Poly;
use crate::rational::{ratio, Rational};
use crate::roots::{bisect_sign_change, decimal_tolerance, isolate_roots, positive_somewhere, IsolatedRoot, RootInterval};
use crate::search::enumerate_graphs;

/// Grid denominator used to pick envelope candidates.
pub const ENVELOPE_GRID: i64 = 64;

/// Default root enclosure width, `10^-12`.
pub fn default_tolerance() -> Rational {
    decimal_tolerance(12)
}

/// Isolates a root of `a - b` on `[lo, hi]` by exact-sign bisection.
pub fn crossover_root(a: &Poly, b: &Poly, lo: &Rational, hi: &Rational, tol: &Rational) -> Result<IsolatedRoot> {
    bisect_sign_change(&(a - b), lo, hi, tol)
}

/// A segment end: `0`, `1`, or a crossover (index into `crossovers`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Endpoint {
    Exact(Rational),
    Crossover(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnvelopeSegment {
    pub start: Endpoint,
    pub end: Endpoint,
    /// Canonical graph6 strings of the classes attaining the maximum.
    pub maximizers: Vec<String>,
    pub polynomial: Poly,
    /// A rational point strictly inside the segment.
    pub sample: Rational,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Crossover {
    pub interval: RootInterval,
    pub approx: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct EnvelopeReport {
    pub n: usize,
    pub i: usize,
    pub classes: usize,
    pub distinct_polynomials: usize,
    /// Polynomials in the final exact envelope computation.
    pub candidates: usize,
    pub segments: Vec<EnvelopeSegment>,
    pub crossovers: Vec<Crossover>,
}

impl EnvelopeReport {
    /// Index of the segment containing `p`, or `None` when `p` falls inside
    /// a crossover enclosure (or outside `(0, 1)`).
    pub fn segment_at(&self, p: &Rational) -> Option<usize> {
        let left_of = |e: &Endpoint| match e {
            Endpoint::Exact(x) => p > x,
            Endpoint::Crossover(k) => *p > self.crossovers[*k].interval.hi,
        };
        let right_of = |e: &Endpoint| match e {
            Endpoint::Exact(x) => p < x,
            Endpoint::Crossover(k) => *p < self.crossovers[*k].interval.lo,
        };
        self.segments.iter().position(|s| left_of(&s.start) && right_of(&s.end))
    }
}

struct Pieces {
    winners: Vec<usize>,
    samples: Vec<Rational>,
    boundaries: Vec<RootInterval>,
}

fn argmax(polys: &[Poly], cand: &[usize], p: &Rational) -> Vec<usize> {
    let vals: Vec<(usize, Rational)> = cand.iter().map(|&c| (c, polys[c].eval(p))).collect();
    let best = vals.iter().map(|(_, v)| v).max().cloned().unwrap_or_else(Rational::zero);
    vals.into_iter().filter(|(_, v)| *v == best).map(|(c, _)| c).collect()
}

fn half(a: &Rational, b: &Rational) -> Rational {
    (a + b) / ratio(2, 1)
}

/// Exact envelope of `polys[cand]` on `(0, 1)`.
fn exact_envelope(polys: &[Poly], cand: &[usize], tol: &Rational) -> Pieces {
    let (zero, one) = (Rational::zero(), Rational::one());
    let mut roots: Vec<RootInterval> = Vec::new();
    for (k, &a) in cand.iter().enumerate() {
        for &b in &cand[k + 1..] {
            let h = &polys[a] - &polys[b];
            roots.extend(isolate_roots(&h, &zero, &one, tol).expect("distinct polynomials"));
        }
    }
    roots.sort_by(|x, y| x.lo.cmp(&y.lo).then(x.hi.cmp(&y.hi)));
    let mut clusters: Vec<RootInterval> = Vec::new();
    for r in roots {
        match clusters.last_mut() {
            Some(last) if r.lo <= last.hi => {
                if r.hi > last.hi {
                    last.hi = r.hi;
                }
            }
            _ => clusters.push(r),
        }
    }
    let mut edges = Vec::with_capacity(clusters.len() + 1);
    let mut prev = zero.clone();
    for c in &clusters {
        edges.push((prev, c.lo.clone()));
        prev = c.hi.clone();
    }
    edges.push((prev, one));
    let samples: Vec<Rational> = edges.iter().map(|(a, b)| half(a, b)).collect();
    let winners: Vec<usize> = samples
        .iter()
        .map(|s| {
            let w = argmax(polys, cand, s);
            debug_assert_eq!(w.len(), 1, "all differences change sign only inside clusters");
            w[0]
        })
        .collect();
    // drop clusters that do not change the winner
    let mut out = Pieces { winners: Vec::new(), samples: Vec::new(), boundaries: Vec::new() };
    for (k, (w, s)) in winners.into_iter().zip(samples).enumerate() {
        if out.winners.last() == Some(&w) {
            continue;
        }
        if k > 0 {
            out.boundaries.push(clusters[k - 1].clone());
        }
        out.winners.push(w);
        out.samples.push(s);
    }
    out
}

/// Upper envelope over the given class representatives.
pub fn envelope_over(budget: EdgeBudget, classes: &[Graph]) -> Result<EnvelopeReport> {
    let tol = default_tolerance();
    let mut by_poly: BTreeMap<Poly, Vec<String>> = BTreeMap::new();
    for g in classes {
        by_poly.entry(phi_polynomial(g, 3)?).or_default().push(write_graph6(g));
    }
    let (polys, names): (Vec<Poly>, Vec<Vec<String>>) = by_poly.into_iter().unzip();
    let mut in_cand = alloc::vec![false; polys.len()];
    let all: Vec<usize> = (0..polys.len()).collect();
    for j in 1..ENVELOPE_GRID {
        for w in argmax(&polys, &all, &ratio(j, ENVELOPE_GRID)) {
            in_cand[w] = true;
        }
    }
    let pieces = loop {
        let cand: Vec<usize> = all.iter().copied().filter(|&c| in_cand[c]).collect();
        let pieces = exact_envelope(&polys, &cand, &tol);
        let mut grew = false;
        for (s, &w) in pieces.winners.iter().enumerate() {
            let lo = if s == 0 { Rational::zero() } else { pieces.boundaries[s - 1].lo.clone() };
            let hi = pieces.boundaries.get(s).map_or_else(Rational::one, |b| b.hi.clone());
            for g in 0..polys.len() {
                if !in_cand[g] && positive_somewhere(&(&polys[g] - &polys[w]), &lo, &hi) {
                    in_cand[g] = true;
                    grew = true;
                }
            }
        }
        if !grew {
            break pieces;
        }
    };
    let crossovers: Vec<Crossover> =
        pieces.boundaries.iter().map(|b| Crossover { interval: b.clone(), approx: b.approx() }).collect();
    let last = pieces.winners.len() - 1;
    let segments = pieces
        .winners
        .iter()
        .zip(&pieces.samples)
        .enumerate()
        .map(|(k, (&w, s))| EnvelopeSegment {
            start: if k == 0 { Endpoint::Exact(Rational::zero()) } else { Endpoint::Crossover(k - 1) },
            end: if k == last { Endpoint::Exact(Rational::one()) } else { Endpoint::Crossover(k) },
            maximizers: names[w].clone(),
            polynomial: polys[w].clone(),
            sample: s.clone(),
        })
        .collect();
    Ok(EnvelopeReport {
        n: budget.n,
        i: budget.i,
        classes: classes.len(),
        distinct_polynomials: polys.len(),
        candidates: in_cand.iter().filter(|&&c| c).count(),
        segments,
        crossovers,
    })
}

/// Upper envelope over every class with `⌊n²/4⌋ + i` edges.
pub fn envelope(n: usize, i: usize) -> Result<EnvelopeReport> {
    let budget = EdgeBudget::new(n, i)?;
    envelope_over(budget, &enumerate_graphs(n, budget.m)?)
}
