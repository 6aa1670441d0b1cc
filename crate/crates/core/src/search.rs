//! Exhaustive search over `n`-vertex graphs with a fixed edge count.
//!
//! Labeled edge subsets of `K_n` are generated in lexicographic order of
//! their edge-index combinations and deduplicated by canonical form. Every
//! combination has a rank, so the stream can be cut into independent rank
//! ranges and the per-range class sets merged afterwards.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::bounds::{linear_bound, ls_min_triangles, t1_formula, EdgeBudget};
use crate::canon::canonical_graph;
use crate::error::{Error, Result};
use crate::exact::phi_polynomial;
use crate::graph::{mantel_plus_one, Graph};
use crate::graph6::{encode, write_graph6};
use crate::rational::{check_open_unit, ratio, Rational};

/// Largest vertex count accepted for exhaustive enumeration.
pub const ENUM_MAX_VERTICES: usize = 8;

/// Canonical graph6 string -> canonically labeled representative.
pub type ClassMap = BTreeMap<Vec<u8>, Graph>;

/// Number of labeled graphs on `n` vertices with `m` edges, `C(C(n,2), m)`.
pub fn labeled_count(n: usize, m: usize) -> Result<u64> {
    check_limits(n, m)?;
    Ok(binomial_u64(n * (n - 1) / 2, m))
}

fn check_limits(n: usize, m: usize) -> Result<()> {
    if n > ENUM_MAX_VERTICES {
        return Err(Error::LimitExceeded { what: "vertices for enumeration", value: n, limit: ENUM_MAX_VERTICES });
    }
    if n == 0 {
        return Err(Error::InvalidArgument("enumeration needs at least one vertex".into()));
    }
    let pairs = n * (n - 1) / 2;
    if m > pairs {
        return Err(Error::InvalidArgument(alloc::format!("{m} edges exceed C({n},2) = {pairs}")));
    }
    Ok(())
}

fn binomial_u64(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u64 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u64 / (i + 1) as u64;
    }
    acc
}

/// The `rank`-th `m`-subset of `0..total` in lexicographic order.
fn unrank(total: usize, m: usize, mut rank: u64) -> Vec<usize> {
    let mut out = Vec::with_capacity(m);
    let mut next = 0;
    for slot in 0..m {
        let remaining = m - slot - 1;
        loop {
            let with_next = binomial_u64(total - next - 1, remaining);
            if rank < with_next {
                break;
            }
            rank -= with_next;
            next += 1;
        }
        out.push(next);
        next += 1;
    }
    out
}

/// Advances to the next lexicographic combination; `false` at the end.
fn advance(comb: &mut [usize], total: usize) -> bool {
    let m = comb.len();
    for i in (0..m).rev() {
        if comb[i] < total - m + i {
            comb[i] += 1;
            for j in i + 1..m {
                comb[j] = comb[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Canonical classes among labeled graphs with ranks in `start..end`.
pub fn enumerate_rank_range(n: usize, m: usize, start: u64, end: u64) -> Result<ClassMap> {
    let total_ranks = labeled_count(n, m)?;
    let end = end.min(total_ranks);
    let mut out = ClassMap::new();
    if start >= end {
        return Ok(out);
    }
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let mut comb = unrank(pairs.len(), m, start);
    let mut rows = [0u64; ENUM_MAX_VERTICES];
    for _ in start..end {
        rows[..n].fill(0);
        for &e in &comb {
            let (u, v) = pairs[e];
            rows[u] |= 1 << v;
            rows[v] |= 1 << u;
        }
        let g = Graph::from_rows(&rows[..n])?;
        let c = canonical_graph(&g)?;
        out.entry(encode(&c)).or_insert(c);
        if !advance(&mut comb, pairs.len()) {
            break;
        }
    }
    Ok(out)
}

/// One representative per isomorphism class of `n`-vertex `m`-edge graphs,
/// ordered by canonical form.
pub fn enumerate_graphs(n: usize, m: usize) -> Result<Vec<Graph>> {
    let total = labeled_count(n, m)?;
    Ok(enumerate_rank_range(n, m, 0, total)?.into_values().collect())
}

/// Outcome of maximising `Φ_p` over all classes at one edge budget.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchReport {
    pub n: usize,
    pub i: usize,
    pub p: Rational,
    /// Canonical graph6 strings of every maximiser, sorted.
    pub maximizers: Vec<String>,
    pub max_value: Rational,
    pub enumerated: usize,
    pub pruned: usize,
    /// Filled in by drivers that time the run.
    pub runtime_ms: Option<u64>,
}

/// Maximises `Φ_p` over the given class representatives.
///
/// Classes are visited in ascending triangle count. With `prune`, a class
/// whose bound `1 - p + p(1-p²)^t(G)` is already below the best exact value
/// is skipped; the bound only weakens as `t` grows, so the rest are skipped
/// too.
pub fn maximize_over(budget: EdgeBudget, classes: &[Graph], p: &Rational, prune: bool) -> Result<SearchReport> {
    check_open_unit(p)?;
    let mut order: Vec<(usize, String, &Graph)> =
        classes.iter().map(|g| (g.triangle_count(), write_graph6(g), g)).collect();
    order.sort();
    let mut best: Option<Rational> = None;
    let mut maximizers: Vec<String> = Vec::new();
    let mut pruned = 0;
    for (k, (t, canon, g)) in order.iter().enumerate() {
        if prune {
            if let Some(b) = &best {
                if linear_bound(*t).eval(p) < *b {
                    pruned = order.len() - k;
                    break;
                }
            }
        }
        let value = phi_polynomial(g, 3)?.eval(p);
        match &best {
            Some(b) if value < *b => {}
            Some(b) if value == *b => maximizers.push(canon.clone()),
            _ => {
                best = Some(value);
                maximizers.clear();
                maximizers.push(canon.clone());
            }
        }
    }
    maximizers.sort();
    Ok(SearchReport {
        n: budget.n,
        i: budget.i,
        p: p.clone(),
        maximizers,
        max_value: best.unwrap_or_else(Rational::zero),
        enumerated: classes.len(),
        pruned,
        runtime_ms: None,
    })
}

/// [`maximize_over`] on a freshly enumerated class list.
pub fn maximize_phi(n: usize, i: usize, p: &Rational, prune: bool) -> Result<SearchReport> {
    check_open_unit(p)?;
    let budget = EdgeBudget::new(n, i)?;
    let classes = enumerate_graphs(n, budget.m)?;
    maximize_over(budget, &classes, p, prune)
}

/// Probabilities at which the one-edge optimum is checked.
pub fn t1_check_points() -> [Rational; 3] {
    [ratio(1, 10), ratio(1, 2), ratio(9, 10)]
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct T1Check {
    pub p: Rational,
    pub formula_value: Rational,
    pub max_value: Rational,
    /// Classes attaining the formula value.
    pub equality_classes: Vec<String>,
    /// Classes strictly above the formula value.
    pub violations: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct T1Report {
    pub n: usize,
    pub m: usize,
    pub classes: usize,
    pub construction: String,
    pub checks: Vec<T1Check>,
    pub pass: bool,
}

/// Checks that every class with `⌊n²/4⌋ + 1` edges has `Φ_p ≤ 1 - p +
/// p(1-p²)^⌊n/2⌋` at each check point, with equality exactly on the
/// construction's class.
pub fn verify_t1_over(n: usize, classes: &[Graph]) -> Result<T1Report> {
    let budget = EdgeBudget::new(n, 1)?;
    let formula = t1_formula(n)?;
    let construction = write_graph6(&canonical_graph(&mantel_plus_one(n)?)?);
    let polys: Vec<(String, crate::poly::Poly)> = classes
        .iter()
        .map(|g| Ok((write_graph6(g), phi_polynomial(g, 3)?)))
        .collect::<Result<_>>()?;
    let mut checks = Vec::new();
    let mut pass = true;
    for p in t1_check_points() {
        let formula_value = formula.eval(&p);
        let mut max_value = Rational::zero();
        let mut equality_classes = Vec::new();
        let mut violations = Vec::new();
        for (canon, phi) in &polys {
            let v = phi.eval(&p);
            if v > max_value {
                max_value = v.clone();
            }
            if v == formula_value {
                equality_classes.push(canon.clone());
            } else if v > formula_value {
                violations.push(canon.clone());
            }
        }
        pass &= violations.is_empty() && equality_classes == [construction.clone()];
        checks.push(T1Check { p, formula_value, max_value, equality_classes, violations });
    }
    Ok(T1Report { n, m: budget.m, classes: classes.len(), construction, checks, pass })
}

pub fn verify_t1(n: usize) -> Result<T1Report> {
    let budget = EdgeBudget::new(n, 1)?;
    verify_t1_over(n, &enumerate_graphs(n, budget.m)?)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LsReport {
    pub n: usize,
    pub i: usize,
    pub m: usize,
    pub bound: usize,
    pub in_range: bool,
    pub classes: usize,
    pub min_triangles: usize,
    pub violations: Vec<String>,
    pub pass: bool,
}

/// Checks `t(G) ≥ i⌊n/2⌋` on every class.
pub fn verify_ls_over(n: usize, i: usize, classes: &[Graph]) -> Result<LsReport> {
    let budget = EdgeBudget::new(n, i)?;
    let bound = ls_min_triangles(n, i);
    let mut min_triangles = usize::MAX;
    let mut violations = Vec::new();
    for g in classes {
        let t = g.triangle_count();
        min_triangles = min_triangles.min(t);
        if t < bound.value {
            violations.push(write_graph6(g));
        }
    }
    Ok(LsReport {
        n,
        i,
        m: budget.m,
        bound: bound.value,
        in_range: bound.in_range,
        classes: classes.len(),
        min_triangles,
        pass: violations.is_empty(),
        violations,
    })
}

pub fn verify_ls(n: usize, i: usize) -> Result<LsReport> {
    let budget = EdgeBudget::new(n, i)?;
    verify_ls_over(n, i, &enumerate_graphs(n, budget.m)?)
}
