//! Closed forms and checkable inequalities: the Mantel threshold, the
//! minimum triangle count above it, the one-edge-above-threshold optimum
//! `1 - p + p(1 - p²)^⌊n/2⌋`, and the linear-hypergraph bound
//! `1 - p + p(1 - p²)^r`.

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::exact::{phi_polynomial, tf_profile, PhiPolynomial};
use crate::graph::Graph;
use crate::hypergraph::binomial_row;
use crate::poly::Poly;
use crate::rational::{check_closed_unit, Rational};

/// `n` vertices with `⌊n²/4⌋ + i` edges.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EdgeBudget {
    pub n: usize,
    pub i: usize,
    pub m: usize,
}

impl EdgeBudget {
    pub fn new(n: usize, i: usize) -> Result<Self> {
        if i == 0 {
            return Err(Error::InvalidArgument("surplus i must be at least 1".into()));
        }
        let m = mantel_max_edges(n) + i;
        if m > n * n.saturating_sub(1) / 2 {
            return Err(Error::InvalidArgument(alloc::format!(
                "{m} edges do not fit on {n} vertices"
            )));
        }
        Ok(EdgeBudget { n, i, m })
    }
}

/// `⌊n²/4⌋`, the largest triangle-free edge count on `n` vertices.
pub fn mantel_max_edges(n: usize) -> usize {
    n * n / 4
}

/// Lower bound on triangles at `⌊n²/4⌋ + i` edges.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TriangleBound {
    pub value: usize,
    /// `false` when `i > n/2`: the bound is reported, not claimed.
    pub in_range: bool,
}

/// `i·⌊n/2⌋`, flagged when `i` lies outside `1 ≤ i ≤ n/2`.
pub fn ls_min_triangles(n: usize, i: usize) -> TriangleBound {
    TriangleBound { value: i * (n / 2), in_range: i >= 1 && 2 * i <= n }
}

/// `1 - p + p(1 - p²)^r`.
pub fn linear_bound(r: usize) -> PhiPolynomial {
    let x = Poly::x();
    let one_minus_x2 = &Poly::one() - &x.pow(2);
    &Poly::one_minus_x() + &(&x * &one_minus_x2.pow(r as u32))
}

/// `1 - p + p(1 - p²)^⌊n/2⌋`, the optimum at one edge above the threshold.
pub fn t1_formula(n: usize) -> Result<PhiPolynomial> {
    if n < 3 {
        return Err(Error::InvalidArgument(alloc::format!("t1_formula needs n >= 3, got {n}")));
    }
    Ok(linear_bound(n / 2))
}

/// Upper bound on `Φ_p(G)` from the linear triangle hypergraph with
/// `r = t(G)` hyperedges.
pub fn phi_upper_bound(g: &Graph, p: &Rational) -> Result<Rational> {
    check_closed_unit(p)?;
    Ok(linear_bound(g.triangle_count()).eval(p))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    Eq,
    Le,
    Ge,
    Lt,
    Gt,
}

impl Relation {
    pub fn symbol(self) -> &'static str {
        match self {
            Relation::Eq => "==",
            Relation::Le => "<=",
            Relation::Ge => ">=",
            Relation::Lt => "<",
            Relation::Gt => ">",
        }
    }

    pub fn holds<T: PartialOrd>(self, lhs: &T, rhs: &T) -> bool {
        match self {
            Relation::Eq => lhs == rhs,
            Relation::Le => lhs <= rhs,
            Relation::Ge => lhs >= rhs,
            Relation::Lt => lhs < rhs,
            Relation::Gt => lhs > rhs,
        }
    }
}

/// One checked claim, `lhs relation rhs`, with an optional witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClaimReport {
    pub claim: String,
    pub lhs: String,
    pub rhs: String,
    pub relation: Relation,
    pub witness: Option<String>,
    pub pass: bool,
}

impl ClaimReport {
    pub fn compare<T: PartialOrd + ToString>(
        claim: impl Into<String>,
        lhs: T,
        relation: Relation,
        rhs: T,
        witness: Option<String>,
    ) -> Self {
        let pass = relation.holds(&lhs, &rhs);
        ClaimReport { claim: claim.into(), lhs: lhs.to_string(), rhs: rhs.to_string(), relation, witness, pass }
    }
}

/// Checks `tf(G,3) = C(m,3) - t(G)` and that the `p³` coefficient of
/// `Φ_p(G)` is `-t(G)` (the `p` and `p²` coefficients vanish).
pub fn small_p_checks(g: &Graph) -> Result<Vec<ClaimReport>> {
    let t = BigInt::from(g.triangle_count());
    let m = g.edge_count();
    let prof = tf_profile(g, 3)?;
    let phi = phi_polynomial(g, 3)?;
    let choose3 = binomial_row(m).get(3).cloned().unwrap_or_default();
    let tf3 = prof.counts.get(3).cloned().unwrap_or_default();
    let witness = Some(alloc::format!("m={m}, t(G)={t}"));
    Ok(alloc::vec![
        ClaimReport::compare("tf(G,3) = C(m,3) - t(G)", tf3, Relation::Eq, &choose3 - &t, witness.clone()),
        ClaimReport::compare("coeff_1(Phi) = 0", phi.coeff(1), Relation::Eq, BigInt::default(), witness.clone()),
        ClaimReport::compare("coeff_2(Phi) = 0", phi.coeff(2), Relation::Eq, BigInt::default(), witness.clone()),
        ClaimReport::compare("coeff_3(Phi) = -t(G)", phi.coeff(3), Relation::Eq, -t, witness),
    ])
}
