//! Exact triangle-free (and `K_k`-free) subgraph counts and the
//! probability polynomial `Φ_p(G) = Σ_s tf(G,s) p^s (1-p)^(m-s)`.
//!
//! Only edges lying in some clique copy are enumerated, in Gray-code order
//! with an incremental count of fully present cliques. Edges in no copy are
//! free: they convolve the profile with a binomial row and drop out of the
//! polynomial entirely.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::hypergraph::{binomial_row, CliqueHypergraph, MAX_COVERED};
use crate::poly::Poly;
use crate::rational::{check_closed_unit, Rational};

/// `Φ_p(G)` in the power basis of `p`.
pub type PhiPolynomial = Poly;

/// `counts[s]` = number of `K_k`-free `s`-edge subgraphs, `s = 0..=m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TfProfile {
    pub m: usize,
    pub counts: Vec<BigInt>,
    pub clique_order: usize,
}

/// Free-subset counts over the covered edges only.
struct CoveredCounts {
    covered: usize,
    total: usize,
    counts: Vec<u64>,
}

fn covered_counts(g: &Graph, k: usize) -> Result<CoveredCounts> {
    let h = CliqueHypergraph::from_graph(g, k)?.restrict_to_covered();
    let c = h.vertex_count();
    if c > MAX_COVERED {
        return Err(Error::LimitExceeded { what: "clique-covered edges", value: c, limit: MAX_COVERED });
    }
    let size = h.hyperedges().first().map_or(0, Vec::len) as u8;
    let mut incident: Vec<Vec<u32>> = vec![Vec::new(); c];
    for (i, e) in h.hyperedges().iter().enumerate() {
        for &v in e {
            incident[v].push(i as u32);
        }
    }
    let mut present = vec![0u8; h.edge_count()];
    let mut full = 0usize;
    let mut counts = vec![0u64; c + 1];
    counts[0] = 1;
    let mut state = 0u64;
    let mut weight = 0usize;
    for step in 1u64..1u64 << c {
        let e = step.trailing_zeros() as usize;
        state ^= 1 << e;
        if state >> e & 1 == 1 {
            weight += 1;
            for &i in &incident[e] {
                let cnt = &mut present[i as usize];
                *cnt += 1;
                if *cnt == size {
                    full += 1;
                }
            }
        } else {
            weight -= 1;
            for &i in &incident[e] {
                let cnt = &mut present[i as usize];
                if *cnt == size {
                    full -= 1;
                }
                *cnt -= 1;
            }
        }
        if full == 0 {
            counts[weight] += 1;
        }
    }
    Ok(CoveredCounts { covered: c, total: g.edge_count(), counts })
}

/// Counts `K_k`-free edge subsets of `g` by size.
pub fn tf_profile(g: &Graph, clique_order: usize) -> Result<TfProfile> {
    let cc = covered_counts(g, clique_order)?;
    let binom = binomial_row(cc.total - cc.covered);
    let mut counts = vec![BigInt::zero(); cc.total + 1];
    for (s, &k) in cc.counts.iter().enumerate() {
        if k == 0 {
            continue;
        }
        let k = BigInt::from(k);
        for (j, b) in binom.iter().enumerate() {
            counts[s + j] += &k * b;
        }
    }
    Ok(TfProfile { m: cc.total, counts, clique_order })
}

/// `Σ_s a[s] p^s (1-p)^(n-s)` expanded in powers of `p`.
fn bernstein_sum(a: impl Iterator<Item = BigInt> + Clone, n: usize) -> Poly {
    let mut coeffs = vec![BigInt::zero(); n + 1];
    for (s, a_s) in a.enumerate() {
        if a_s.is_zero() {
            continue;
        }
        // p^s (1-p)^(n-s) = Σ_t C(n-s, t) (-1)^t p^(s+t)
        for (t, b) in binomial_row(n - s).into_iter().enumerate() {
            let term = &a_s * b;
            if t % 2 == 0 {
                coeffs[s + t] += term;
            } else {
                coeffs[s + t] -= term;
            }
        }
    }
    Poly::new(coeffs)
}

impl TfProfile {
    /// Expands `Σ_s counts[s] p^s (1-p)^(m-s)` directly.
    pub fn to_polynomial(&self) -> PhiPolynomial {
        bernstein_sum(self.counts.iter().cloned(), self.m)
    }
}

/// `Φ_p(G)` for `K_k`-freeness, exact.
pub fn phi_polynomial(g: &Graph, clique_order: usize) -> Result<PhiPolynomial> {
    let cc = covered_counts(g, clique_order)?;
    Ok(bernstein_sum(cc.counts.iter().map(|&c| BigInt::from(c)), cc.covered))
}

/// Exact value of `poly` at `p ∈ [0, 1]`.
pub fn phi_eval(poly: &PhiPolynomial, p: &Rational) -> Result<Rational> {
    check_closed_unit(p)?;
    Ok(poly.eval(p))
}

/// Coefficient-wise difference `a - b`.
pub fn poly_sub(a: &Poly, b: &Poly) -> Poly {
    a - b
}

/// Whether `b` divides `a` exactly.
pub fn poly_divides_check(a: &Poly, b: &Poly) -> bool {
    a.divisible_by(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, complete_bipartite, mantel_plus_one, six_vertex_candidates};
    use crate::rational::ratio;

    fn ints(v: &[BigInt]) -> Vec<i64> {
        v.iter().map(|b| i64::try_from(b).unwrap()).collect()
    }

    #[test]
    fn profiles() {
        assert_eq!(ints(&tf_profile(&complete(3).unwrap(), 3).unwrap().counts), vec![1, 3, 3, 0]);
        assert_eq!(ints(&tf_profile(&complete(4).unwrap(), 3).unwrap().counts), vec![1, 6, 15, 16, 3, 0, 0]);
        assert_eq!(
            ints(&tf_profile(&complete_bipartite(3, 3).unwrap(), 3).unwrap().counts),
            vec![1, 9, 36, 84, 126, 126, 84, 36, 9, 1]
        );
    }

    #[test]
    fn k4_free_profile_of_k4() {
        // only the full edge set contains K4
        let prof = tf_profile(&complete(4).unwrap(), 4).unwrap();
        assert_eq!(ints(&prof.counts), vec![1, 6, 15, 20, 15, 6, 0]);
        let phi = phi_polynomial(&complete(4).unwrap(), 4).unwrap();
        assert_eq!(phi, Poly::from_i64s(&[1, 0, 0, 0, 0, 0, -1]));
    }

    #[test]
    fn six_vertex_polynomials() {
        let (g1, g2, _) = six_vertex_candidates();
        let p1 = phi_polynomial(&g1, 3).unwrap();
        let p2 = phi_polynomial(&g2, 3).unwrap();
        assert_eq!(p1, Poly::from_i64s(&[1, 0, 0, -6, 0, 9, 6, -14, -3, 12, -6, 1]));
        assert_eq!(p2, Poly::from_i64s(&[1, 0, 0, -6, 0, 10, 2, -10, 0, 4, -1]));
        let claimed = -&(&(&Poly::x().pow(5) * &Poly::one_minus_x().pow(3)) * &Poly::from_i64s(&[1, -1, -2, 1]));
        assert_eq!(poly_sub(&p1, &p2), claimed);
        assert!(poly_divides_check(&poly_sub(&p1, &p2), &Poly::one_minus_x().pow(3)));
        assert!(poly_sub(&p1, &p1).is_zero());
    }

    #[test]
    fn mantel_plus_one_6() {
        let phi = phi_polynomial(&mantel_plus_one(6).unwrap(), 3).unwrap();
        assert_eq!(phi, Poly::from_i64s(&[1, 0, 0, -3, 0, 3, 0, -1]));
        assert_eq!(phi_eval(&phi, &ratio(1, 2)).unwrap(), ratio(91, 128));
    }

    #[test]
    fn evaluations() {
        let k4 = phi_polynomial(&complete(4).unwrap(), 3).unwrap();
        assert_eq!(phi_eval(&k4, &ratio(1, 2)).unwrap(), ratio(41, 64));
        let k3 = phi_polynomial(&complete(3).unwrap(), 3).unwrap();
        assert_eq!(phi_eval(&k3, &ratio(1, 2)).unwrap(), ratio(7, 8));
        assert_eq!(phi_eval(&k3, &ratio(0, 1)).unwrap(), ratio(1, 1));
        assert!(phi_eval(&k3, &ratio(-1, 2)).is_err());
    }

    #[test]
    fn degenerate_edgeless() {
        let g = Graph::empty(4).unwrap();
        assert_eq!(ints(&tf_profile(&g, 3).unwrap().counts), vec![1]);
        assert_eq!(phi_polynomial(&g, 3).unwrap(), Poly::one());
    }

    #[test]
    fn profile_expansion_matches_covered_route() {
        for g in [complete(5).unwrap(), mantel_plus_one(7).unwrap(), six_vertex_candidates().2] {
            let prof = tf_profile(&g, 3).unwrap();
            assert_eq!(prof.to_polynomial(), phi_polynomial(&g, 3).unwrap());
        }
    }

    #[test]
    fn size_limit() {
        // K9 has 36 edges, all in triangles
        assert!(matches!(tf_profile(&complete(9).unwrap(), 3), Err(Error::LimitExceeded { .. })));
    }
}
