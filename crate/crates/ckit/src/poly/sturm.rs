//! Sturm chains and exact real-root isolation over the rationals.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{IntPoly, RatPoly};

fn sturm_chain(p: &RatPoly) -> Vec<RatPoly> {
    let mut chain = vec![p.clone(), p.derivative()];
    loop {
        let n = chain.len();
        if chain[n - 1].is_zero() {
            chain.pop();
            break;
        }
        let (_, r) = chain[n - 2].div_rem(&chain[n - 1]);
        if r.is_zero() {
            break;
        }
        chain.push(-&r);
    }
    chain
}

fn variations(chain: &[RatPoly], x: &BigRational) -> usize {
    let mut signs = Vec::new();
    for q in chain {
        let v = q.eval(x);
        if !v.is_zero() {
            signs.push(v.is_positive());
        }
    }
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Number of distinct real roots of p in the half-open interval (lo, hi].
pub fn count_roots(p: &IntPoly, lo: &BigRational, hi: &BigRational) -> usize {
    let sf = RatPoly::from_int(&p.squarefree_part());
    let chain = sturm_chain(&sf);
    variations(&chain, lo) - variations(&chain, hi)
}

/// Cauchy-style bound: all real roots lie in (-B, B).
pub fn root_bound(p: &IntPoly) -> BigRational {
    let lc = p.leading();
    let mut m = BigRational::zero();
    for c in p.coeffs() {
        let q = BigRational::new(c.abs(), lc.abs());
        if q > m {
            m = q;
        }
    }
    m + BigRational::one()
}

/// Isolating intervals (open, rational endpoints, pairwise disjoint) for the
/// distinct real roots of p inside (lo, hi). Endpoints are never roots.
pub fn isolate_roots(p: &IntPoly, lo: &BigRational, hi: &BigRational) -> Vec<(BigRational, BigRational)> {
    let sf = p.squarefree_part();
    let chain = sturm_chain(&RatPoly::from_int(&sf));
    let sfq = RatPoly::from_int(&sf);
    // nudge an endpoint off a root
    let adjust = |mut x: BigRational, dir: i32| {
        let mut step = BigRational::new(BigInt::one(), BigInt::from(1024));
        while sfq.eval(&x).is_zero() {
            x += BigRational::from_integer(BigInt::from(dir)) * &step;
            step /= BigInt::from(2);
        }
        x
    };
    let lo = adjust(lo.clone(), 1);
    let hi = adjust(hi.clone(), -1);
    if lo >= hi {
        return vec![];
    }
    let mut out = Vec::new();
    let mut stack = vec![(lo, hi)];
    while let Some((a, b)) = stack.pop() {
        let n = variations(&chain, &a) - variations(&chain, &b);
        if n == 0 {
            continue;
        }
        if n == 1 {
            out.push((a, b));
            continue;
        }
        let mid = (&a + &b) / BigRational::from_integer(BigInt::from(2));
        let mid = adjust(mid, 1);
        stack.push((a, mid.clone()));
        stack.push((mid, b));
    }
    out.sort_by(|x, y| x.0.cmp(&y.0));
    out
}

/// Shrinks an isolating interval until it no longer meets `other`'s intervals.
pub fn refine(p: &IntPoly, iv: &mut (BigRational, BigRational)) {
    let sf = RatPoly::from_int(&p.squarefree_part());
    let two = BigRational::from_integer(BigInt::from(2));
    let sa = sf.eval(&iv.0).is_positive();
    let mid = (&iv.0 + &iv.1) / &two;
    let v = sf.eval(&mid);
    if v.is_zero() {
        // root exactly at midpoint: shrink both sides around it, staying
        // inside the current interval
        let q = (&iv.1 - &iv.0) / BigRational::from_integer(BigInt::from(4));
        iv.0 = &mid - &q;
        iv.1 = &mid + &q;
        return;
    }
    if v.is_positive() == sa {
        iv.0 = mid;
    } else {
        iv.1 = mid;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn counts_and_isolation() {
        // u^2 - 3u + 1: roots (3 +- sqrt 5)/2, one inside (-2, 2)
        let p = IntPoly::from_i64(&[1, -3, 1]);
        assert_eq!(count_roots(&p, &r(-2, 1), &r(2, 1)), 1);
        assert_eq!(count_roots(&p, &r(-2, 1), &r(3, 1)), 2);
        let ivs = isolate_roots(&p, &r(-2, 1), &r(2, 1));
        assert_eq!(ivs.len(), 1);
        // u^2 - 2u - 1: roots 1 +- sqrt 2; one inside (-2,2)
        let p = IntPoly::from_i64(&[-1, -2, 1]);
        assert_eq!(count_roots(&p, &r(-2, 1), &r(2, 1)), 1);
    }

    #[test]
    fn squareful_input() {
        let q = IntPoly::from_i64(&[1, -1, 1]);
        let p = &q * &q; // no real roots at all
        assert_eq!(count_roots(&p, &r(-10, 1), &r(10, 1)), 0);
    }

    #[test]
    fn endpoint_root_nudging() {
        let p = IntPoly::from_i64(&[0, 1]); // t
        let ivs = isolate_roots(&p, &r(0, 1), &r(1, 1));
        assert!(ivs.is_empty()); // root sits exactly on the endpoint, outside the open interval after nudge
        let ivs = isolate_roots(&p, &r(-1, 1), &r(1, 1));
        assert_eq!(ivs.len(), 1);
    }
}
