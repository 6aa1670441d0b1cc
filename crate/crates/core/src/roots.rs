//! Exact real-root isolation on rational intervals.
//!
//! Root counting uses a Sturm sequence of the square-free part; refinement
//! is plain sign bisection. All arithmetic is exact.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::rational::{ratio, to_f64, Rational};

/// Polynomial with rational coefficients, used only for gcd/Sturm work.
#[derive(Clone, Debug, PartialEq)]
struct RatPoly(Vec<Rational>);

impl RatPoly {
    fn from_int(p: &Poly) -> Self {
        RatPoly(p.coeffs().iter().map(|c| Rational::from_integer(c.clone())).collect())
    }

    fn trim(mut self) -> Self {
        while self.0.last().is_some_and(Zero::is_zero) {
            self.0.pop();
        }
        self
    }

    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    fn eval(&self, x: &Rational) -> Rational {
        self.0.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
    }

    fn sign_at(&self, x: &Rational) -> i8 {
        let v = self.eval(x);
        if v.is_zero() {
            0
        } else if v.is_positive() {
            1
        } else {
            -1
        }
    }

    fn derivative(&self) -> Self {
        RatPoly(self.0.iter().enumerate().skip(1).map(|(j, c)| c * Rational::from_integer(BigInt::from(j))).collect())
            .trim()
    }

    fn div_rem(&self, d: &RatPoly) -> (RatPoly, RatPoly) {
        let mut rem = self.0.clone();
        if rem.len() < d.0.len() {
            return (RatPoly(Vec::new()), self.clone());
        }
        let dd = d.degree();
        let lead = d.0.last().expect("non-zero divisor").clone();
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let q = &rem[k + dd] / &lead;
            if q.is_zero() {
                continue;
            }
            for (i, c) in d.0.iter().enumerate() {
                rem[k + i] -= &q * c;
            }
            quot[k] = q;
        }
        rem.truncate(dd);
        (RatPoly(quot).trim(), RatPoly(rem).trim())
    }

    /// Scales to a monic polynomial (keeps magnitudes small).
    fn monic(self) -> Self {
        match self.0.last().cloned() {
            Some(l) if !l.is_zero() => RatPoly(self.0.into_iter().map(|c| c / &l).collect()),
            _ => self,
        }
    }
}

fn gcd(a: &RatPoly, b: &RatPoly) -> RatPoly {
    let (mut a, mut b) = (a.clone(), b.clone());
    while !b.is_zero() {
        let (_, r) = a.div_rem(&b);
        a = b;
        b = r.monic();
    }
    a.monic()
}

/// Square-free part of a non-zero polynomial.
fn square_free(p: &Poly) -> RatPoly {
    let f = RatPoly::from_int(p).trim();
    let d = f.derivative();
    if d.is_zero() {
        return f;
    }
    let g = gcd(&f, &d);
    f.div_rem(&g).0.monic()
}

struct Sturm {
    chain: Vec<RatPoly>,
}

impl Sturm {
    fn new(f: RatPoly) -> Self {
        let mut chain = vec![f.clone(), f.derivative()];
        while !chain.last().expect("non-empty").is_zero() {
            let n = chain.len();
            let (_, r) = chain[n - 2].div_rem(&chain[n - 1]);
            chain.push(RatPoly(r.0.into_iter().map(|c| -c).collect()));
        }
        chain.pop();
        Sturm { chain }
    }

    fn variations(&self, x: &Rational) -> usize {
        let mut last = 0i8;
        let mut v = 0;
        for s in self.chain.iter().map(|p| p.sign_at(x)).filter(|&s| s != 0) {
            if last != 0 && s != last {
                v += 1;
            }
            last = s;
        }
        v
    }

    /// Distinct roots in the half-open interval `(a, b]`.
    fn count(&self, a: &Rational, b: &Rational) -> usize {
        self.variations(a) - self.variations(b)
    }

    /// Distinct roots in the open interval `(a, b)`.
    fn count_open(&self, f: &RatPoly, a: &Rational, b: &Rational) -> usize {
        self.count(a, b) - usize::from(f.sign_at(b) == 0)
    }
}

/// One isolated real root: either known exactly (`lo == hi`), or strictly
/// inside `(lo, hi)` where the square-free part changes sign.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootInterval {
    pub lo: Rational,
    pub hi: Rational,
}

impl RootInterval {
    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) / ratio(2, 1)
    }

    /// Midpoint as a float.
    pub fn approx(&self) -> f64 {
        to_f64(&self.midpoint())
    }
}

fn half(a: &Rational, b: &Rational) -> Rational {
    (a + b) / Rational::from_integer(BigInt::from(2))
}

/// Shrinks `(lo, hi)` around a simple root by sign bisection on `f`;
/// requires `f(lo) * f(hi) < 0`.
fn refine(f: &RatPoly, mut lo: Rational, mut hi: Rational, tol: &Rational) -> RootInterval {
    let s_lo = f.sign_at(&lo);
    while &hi - &lo > *tol {
        let mid = half(&lo, &hi);
        match f.sign_at(&mid) {
            0 => return RootInterval { lo: mid.clone(), hi: mid },
            s if s == s_lo => lo = mid,
            _ => hi = mid,
        }
    }
    RootInterval { lo, hi }
}

/// Isolates every distinct real root of `p` in the open interval
/// `(lo, hi)`, each to width at most `tol`, in increasing order.
/// The zero polynomial is rejected.
pub fn isolate_roots(p: &Poly, lo: &Rational, hi: &Rational, tol: &Rational) -> Result<Vec<RootInterval>> {
    if p.is_zero() {
        return Err(Error::InvalidArgument("cannot isolate roots of the zero polynomial".into()));
    }
    if lo >= hi {
        return Ok(Vec::new());
    }
    let f = square_free(p);
    if f.degree() == 0 {
        return Ok(Vec::new());
    }
    let sturm = Sturm::new(f.clone());
    let mut out = Vec::new();
    let mut stack = vec![(lo.clone(), hi.clone(), sturm.count_open(&f, lo, hi))];
    while let Some((a, b, k)) = stack.pop() {
        match k {
            0 => {}
            1 => out.push(isolate_single(&f, &sturm, a, b, tol)),
            _ => {
                let mid = half(&a, &b);
                let left = sturm.count_open(&f, &a, &mid);
                let at_mid = usize::from(f.sign_at(&mid) == 0);
                if at_mid == 1 {
                    out.push(RootInterval { lo: mid.clone(), hi: mid.clone() });
                }
                stack.push((mid.clone(), b, k - left - at_mid));
                stack.push((a, mid, left));
            }
        }
    }
    out.sort_by(|x, y| x.lo.cmp(&y.lo));
    Ok(out)
}

/// Exactly one root of `f` lies in the open interval `(a, b)`; narrow to an
/// exact point or an interval whose ends are not roots, then refine.
fn isolate_single(f: &RatPoly, sturm: &Sturm, mut a: Rational, mut b: Rational, tol: &Rational) -> RootInterval {
    while f.sign_at(&a) == 0 || f.sign_at(&b) == 0 {
        let mid = half(&a, &b);
        if f.sign_at(&mid) == 0 {
            return RootInterval { lo: mid.clone(), hi: mid };
        }
        if sturm.count_open(f, &a, &mid) == 1 {
            b = mid;
        } else {
            a = mid;
        }
    }
    refine(f, a, b, tol)
}

/// Result of bisecting a sign change.
#[derive(Clone, Debug, PartialEq)]
pub struct IsolatedRoot {
    pub interval: RootInterval,
    pub approx: f64,
}

/// Bisects `f` on `[lo, hi]` using exact signs until the enclosing interval
/// has width at most `tol`. The endpoint signs must be non-zero and opposite.
pub fn bisect_sign_change(f: &Poly, lo: &Rational, hi: &Rational, tol: &Rational) -> Result<IsolatedRoot> {
    let (s_lo, s_hi) = (f.sign_at(lo), f.sign_at(hi));
    if s_lo == 0 || s_hi == 0 || s_lo == s_hi || lo >= hi {
        return Err(Error::NoSignChange);
    }
    let (mut a, mut b) = (lo.clone(), hi.clone());
    while &b - &a > *tol {
        let mid = half(&a, &b);
        match f.sign_at(&mid) {
            0 => {
                a = mid.clone();
                b = mid;
                break;
            }
            s if s == s_lo => a = mid,
            _ => b = mid,
        }
    }
    let interval = RootInterval { lo: a, hi: b };
    let approx = interval.approx();
    Ok(IsolatedRoot { interval, approx })
}

/// Whether `h > 0` somewhere on the closed interval `[lo, hi]`.
pub fn positive_somewhere(h: &Poly, lo: &Rational, hi: &Rational) -> bool {
    if h.is_zero() {
        return false;
    }
    if h.sign_at(lo) > 0 || h.sign_at(hi) > 0 {
        return true;
    }
    if lo >= hi {
        return false;
    }
    let tol = hi - lo;
    let roots = isolate_roots(h, lo, hi, &tol).expect("non-zero polynomial");
    // every open region between consecutive roots contains one of these points
    let mut pts = vec![lo.clone()];
    for r in &roots {
        pts.push(r.lo.clone());
        pts.push(r.hi.clone());
    }
    pts.push(hi.clone());
    pts.sort();
    pts.dedup();
    let mids: Vec<Rational> = pts.windows(2).map(|w| half(&w[0], &w[1])).collect();
    pts.iter().chain(mids.iter()).any(|x| h.sign_at(x) > 0)
}

/// `1 / 10^digits`.
pub fn decimal_tolerance(digits: u32) -> Rational {
    Rational::new(BigInt::one(), num_traits::pow(BigInt::from(10u8), digits as usize))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cubic() -> Poly {
        // p^3 - 2p^2 - p + 1
        Poly::from_i64s(&[1, -1, -2, 1])
    }

    #[test]
    fn isolates_cubic_roots() {
        let tol = decimal_tolerance(12);
        let roots = isolate_roots(&cubic(), &ratio(-2, 1), &ratio(3, 1), &tol).unwrap();
        assert_eq!(roots.len(), 3);
        let approx: Vec<f64> = roots.iter().map(|r| r.approx()).collect();
        assert!((approx[0] + 0.801937735804838).abs() < 1e-9);
        assert!((approx[1] - 0.554958132087371).abs() < 1e-9);
        assert!((approx[2] - 2.246979603717467).abs() < 1e-9);
        for r in &roots {
            assert!(r.width() <= tol);
            assert!(cubic().sign_at(&r.lo) * cubic().sign_at(&r.hi) < 0);
        }
        let unit = isolate_roots(&cubic(), &ratio(0, 1), &ratio(1, 1), &tol).unwrap();
        assert_eq!(unit.len(), 1);
    }

    #[test]
    fn exact_and_repeated_roots() {
        // (2p - 1)^2 (p - 1/4)... scaled: (2p-1)^2 (4p-1)
        let f = &Poly::from_i64s(&[-1, 2]).pow(2) * &Poly::from_i64s(&[-1, 4]);
        let roots = isolate_roots(&f, &ratio(0, 1), &ratio(1, 1), &decimal_tolerance(6)).unwrap();
        assert_eq!(roots.len(), 2);
        assert!(roots.iter().all(|r| r.lo <= r.hi));
        assert!(roots[0].lo <= ratio(1, 4) && ratio(1, 4) <= roots[0].hi);
        assert!(roots[1].lo <= ratio(1, 2) && ratio(1, 2) <= roots[1].hi);
        // roots at the open ends are excluded
        let g = Poly::from_i64s(&[0, -1, 1]);
        assert!(isolate_roots(&g, &ratio(0, 1), &ratio(1, 1), &decimal_tolerance(6)).unwrap().is_empty());
        assert!(isolate_roots(&Poly::zero(), &ratio(0, 1), &ratio(1, 1), &decimal_tolerance(6)).is_err());
    }

    #[test]
    fn bisection_needs_sign_change() {
        let tol = decimal_tolerance(12);
        let r = bisect_sign_change(&cubic(), &ratio(1, 2), &ratio(3, 4), &tol).unwrap();
        assert!(r.interval.width() <= tol);
        assert!((r.approx - 0.554958132087371).abs() < 1e-11);
        assert_eq!(
            bisect_sign_change(&cubic(), &ratio(0, 1), &ratio(1, 2), &tol),
            Err(Error::NoSignChange)
        );
    }

    #[test]
    fn positivity_detection() {
        // -(2p-1)^2 touches zero but is never positive
        let f = -&Poly::from_i64s(&[-1, 2]).pow(2);
        assert!(!positive_somewhere(&f, &ratio(0, 1), &ratio(1, 1)));
        // small bump above zero between 0.49 and 0.51
        let bump = &(&f * &Poly::constant(BigInt::from(10000))) + &Poly::one();
        assert!(!positive_somewhere(&bump, &ratio(0, 1), &ratio(1, 4)));
        assert!(positive_somewhere(&bump, &ratio(0, 1), &ratio(1, 1)));
        assert!(positive_somewhere(&cubic(), &ratio(0, 1), &ratio(1, 2)));
    }
}
