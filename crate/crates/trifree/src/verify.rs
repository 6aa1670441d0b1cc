//! Checkable claims assembled from the core library, one
//! [`ClaimReport`] each.

use num_traits::Zero;
use trifree_core::bounds::{mantel_max_edges, ClaimReport, EdgeBudget, Relation};
use trifree_core::corpus::{hypergraph_corpus, verify_linear_bound};
use trifree_core::envelope::{crossover_root, default_tolerance};
use trifree_core::exact::phi_polynomial;
use trifree_core::graph::six_vertex_candidates;
use trifree_core::rational::{ratio, to_f64};
use trifree_core::roots::RootInterval;
use trifree_core::search::{verify_ls_over, verify_t1_over};
use trifree_core::{Poly, Rational};

use crate::error::Result;
use crate::parallel::{enumerate_parallel, Progress};

/// Largest `n` for the exhaustive checks.
pub const EXHAUSTIVE_MAX_N: usize = 7;

/// Expected `Φ_p` of the two six-vertex, eleven-edge candidates.
pub const G1_COEFFS: [i64; 12] = [1, 0, 0, -6, 0, 9, 6, -14, -3, 12, -6, 1];
pub const G2_COEFFS: [i64; 11] = [1, 0, 0, -6, 0, 10, 2, -10, 0, 4, -1];

/// `p³ - 2p² - p + 1`, whose root in `(0, 1)` separates the candidates.
pub fn crossover_cubic() -> Poly {
    Poly::from_i64s(&[1, -1, -2, 1])
}

/// `-p⁵ (1-p)³ (p³ - 2p² - p + 1)`.
pub fn expected_difference() -> Poly {
    -&(&(&Poly::x().pow(5) * &Poly::one_minus_x().pow(3)) * &crossover_cubic())
}

fn decimal(x: &Rational) -> String {
    format!("{:.15}", to_f64(x))
}

/// The enclosure of the crossover between the two candidates, from
/// bisection on `[1/2, 3/4]`.
pub fn crossover_interval() -> Result<RootInterval> {
    let (g1, g2, _) = six_vertex_candidates();
    let (a, b) = (phi_polynomial(&g2, 3)?, phi_polynomial(&g1, 3)?);
    Ok(crossover_root(&a, &b, &ratio(1, 2), &ratio(3, 4), &default_tolerance())?.interval)
}

/// Polynomials, factorisation, crossover and the dominance of the second
/// candidate over the third.
pub fn candidate_claims() -> Result<Vec<ClaimReport>> {
    let (g1, g2, g3) = six_vertex_candidates();
    let (p1, p2, p3) = (phi_polynomial(&g1, 3)?, phi_polynomial(&g2, 3)?, phi_polynomial(&g3, 3)?);
    let diff = &p1 - &p2;
    let mut out = vec![
        ClaimReport::compare("Phi(G1)", p1.to_text(), Relation::Eq, Poly::from_i64s(&G1_COEFFS).to_text(), None),
        ClaimReport::compare("Phi(G2)", p2.to_text(), Relation::Eq, Poly::from_i64s(&G2_COEFFS).to_text(), None),
        ClaimReport::compare(
            "Phi(G1) - Phi(G2) = -p^5 (1-p)^3 (p^3 - 2p^2 - p + 1)",
            diff.to_text(),
            Relation::Eq,
            expected_difference().to_text(),
            None,
        ),
        ClaimReport::compare(
            "(1-p)^3 (p^3 - 2p^2 - p + 1) divides Phi(G1) - Phi(G2)",
            diff.divisible_by(&(&Poly::one_minus_x().pow(3) * &crossover_cubic())),
            Relation::Eq,
            true,
            None,
        ),
    ];
    let root = crossover_interval()?;
    let witness = Some(format!("p0 in [{}, {}] ~ {}", decimal(&root.lo), decimal(&root.hi), decimal(&root.midpoint())));
    out.push(ClaimReport::compare("crossover enclosure width", root.width(), Relation::Le, default_tolerance(), witness.clone()));
    out.push(ClaimReport::compare("crossover lower end", root.lo.clone(), Relation::Gt, ratio(5549, 10000), witness.clone()));
    out.push(ClaimReport::compare("crossover upper end", root.hi.clone(), Relation::Lt, ratio(5550, 10000), witness.clone()));
    let cubic = crossover_cubic();
    out.push(ClaimReport::compare(
        "p^3 - 2p^2 - p + 1 changes sign on the enclosure",
        cubic.sign_at(&root.lo) * cubic.sign_at(&root.hi),
        Relation::Lt,
        0,
        witness,
    ));
    for (p, better, worse, label) in [(ratio(1, 4), &p2, &p1, "Phi(G2) > Phi(G1) at p = 1/4"), (ratio(3, 4), &p1, &p2, "Phi(G1) > Phi(G2) at p = 3/4")] {
        out.push(ClaimReport::compare(label, better.eval(&p), Relation::Gt, worse.eval(&p), None));
    }
    let gap = &p2 - &p3;
    let (argmin, min) = (1..=50)
        .map(|j| {
            let p = ratio(j, 51);
            let v = gap.eval(&p);
            (p, v)
        })
        .min_by(|a, b| a.1.cmp(&b.1))
        .expect("non-empty grid");
    out.push(ClaimReport::compare(
        "min of Phi(G2) - Phi(G3) over p = j/51, j = 1..50",
        min,
        Relation::Gt,
        Rational::zero(),
        Some(format!("attained at p = {argmin}")),
    ));
    Ok(out)
}

/// One-edge optimum at `n`: bound and equality class at each check point.
pub fn t1_claims(n: usize, jobs: usize, progress: Progress<'_>) -> Result<Vec<ClaimReport>> {
    let budget = EdgeBudget::new(n, 1)?;
    let classes = enumerate_parallel(n, budget.m, jobs, None, progress)?;
    let rep = verify_t1_over(n, &classes)?;
    let mut out = Vec::new();
    for c in &rep.checks {
        let witness = (!c.violations.is_empty()).then(|| c.violations.join(" "));
        out.push(ClaimReport::compare(
            format!("n={n}: max Phi_p over {} classes <= 1 - p + p(1-p^2)^{} at p = {}", rep.classes, n / 2, c.p),
            c.max_value.clone(),
            Relation::Le,
            c.formula_value.clone(),
            witness,
        ));
        out.push(ClaimReport::compare(
            format!("n={n}: classes attaining the formula at p = {}", c.p),
            c.equality_classes.join(" "),
            Relation::Eq,
            rep.construction.clone(),
            None,
        ));
    }
    Ok(out)
}

/// Minimum triangle count at `⌊n²/4⌋ + i` edges against `i⌊n/2⌋`.
pub fn ls_claim(n: usize, i: usize, jobs: usize, progress: Progress<'_>) -> Result<ClaimReport> {
    let budget = EdgeBudget::new(n, i)?;
    let classes = enumerate_parallel(n, budget.m, jobs, None, progress)?;
    let rep = verify_ls_over(n, i, &classes)?;
    let range = if rep.in_range { "" } else { " (outside 1 <= i <= n/2)" };
    let witness = (!rep.violations.is_empty()).then(|| {
        let shown: Vec<&str> = rep.violations.iter().take(5).map(String::as_str).collect();
        format!("{} violating classes, e.g. {}", rep.violations.len(), shown.join(" "))
    });
    Ok(ClaimReport::compare(
        format!("n={n} i={i}: min t(G) over {} classes with {} edges >= i*floor(n/2){range}", rep.classes, rep.m),
        rep.min_triangles,
        Relation::Ge,
        rep.bound,
        witness,
    ))
}

/// `(n, i)` pairs with `n ≤ max_n` and `1 ≤ i ≤ n/2` that fit on `n` vertices.
pub fn ls_cases(max_n: usize) -> Vec<(usize, usize)> {
    (1..=max_n)
        .flat_map(|n| (1..=n / 2).map(move |i| (n, i)))
        .filter(|&(n, i)| mantel_max_edges(n) + i <= n * (n - 1) / 2)
        .collect()
}

/// The linear-hypergraph bound over the fixed corpus.
pub fn linear_bound_claims() -> Result<Vec<ClaimReport>> {
    let corpus = hypergraph_corpus()?;
    let rep = verify_linear_bound(&corpus)?;
    let label = format!("{} hypergraphs x 5 values of p", rep.hypergraphs);
    let first = |v: &[String]| v.first().cloned();
    Ok(vec![
        ClaimReport::compare(
            format!("P(independent) <= 1 - p + p(1-p^2)^r: violations over {label}"),
            rep.violations.len(),
            Relation::Eq,
            0,
            first(&rep.violations),
        ),
        ClaimReport::compare(
            format!("equality exactly on flowers ({} of them): mismatches over {label}", rep.flowers),
            rep.equality_mismatches.len(),
            Relation::Eq,
            0,
            first(&rep.equality_mismatches),
        ),
        ClaimReport::compare("non-linear corpus members", rep.non_linear.len(), Relation::Eq, 0, first(&rep.non_linear)),
    ])
}
