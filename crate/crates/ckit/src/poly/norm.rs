//! The norm polynomial N_q(p): the product of p(zeta_q^i x) over i,
//! re-expressed in t = x^q; equivalently the polynomial whose roots are the
//! q-th powers of the roots of p.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::IntPoly;
use crate::error::{CkError, Result};

/// Computed as res_x(p(x), x^q - t), evaluated at deg(p)+1 points and
/// interpolated; sign normalized so the constant term is positive.
pub fn norm_np(p: &IntPoly, q: u32) -> Result<IntPoly> {
    if p.is_zero() {
        return Err(CkError::ZeroAlexander);
    }
    assert!(q >= 2, "norm_np needs q >= 2");
    let d = p.degree();
    if d == 0 {
        return Ok(IntPoly::one());
    }
    // evaluate t -> res_x(p(x), x^q - t0) at t0 = 0..d
    let mut points = Vec::with_capacity(d + 1);
    for t0 in 0..=d as i64 {
        let mut g = vec![BigInt::from(-t0)];
        g.extend(std::iter::repeat(BigInt::zero()).take(q as usize - 1));
        g.push(BigInt::from(1));
        let gp = IntPoly::new(g);
        points.push((BigInt::from(t0), p.resultant(&gp)));
    }
    let poly = lagrange_int(&points)?;
    // exactness guard: the interpolated polynomial must reproduce one more value
    let t_extra = BigInt::from(d as i64 + 1);
    let mut g = vec![-&t_extra];
    g.extend(std::iter::repeat(BigInt::zero()).take(q as usize - 1));
    g.push(BigInt::from(1));
    if poly.eval(&t_extra) != p.resultant(&IntPoly::new(g)) {
        return Err(CkError::Internal("norm polynomial interpolation drift".into()));
    }
    let mut out = poly;
    // constant-term sign normalization (degree is preserved, roots are q-th powers)
    let c0 = out.constant_term();
    if c0.is_negative() || (c0.is_zero() && out.leading().is_negative()) {
        out = -&out;
    }
    Ok(out)
}

/// Exact interpolation of an integer-valued polynomial through the points.
pub(crate) fn lagrange_int(points: &[(BigInt, BigInt)]) -> Result<IntPoly> {
    let n = points.len();
    let mut acc = vec![BigRational::zero(); n];
    for (i, (xi, yi)) in points.iter().enumerate() {
        // basis polynomial prod_{j != i} (t - xj) / (xi - xj)
        let mut numer = vec![BigRational::from_integer(BigInt::from(1))];
        let mut denom = BigRational::from_integer(BigInt::from(1));
        for (j, (xj, _)) in points.iter().enumerate() {
            if i == j {
                continue;
            }
            let mut next = vec![BigRational::zero(); numer.len() + 1];
            for (k, c) in numer.iter().enumerate() {
                next[k + 1] += c;
                next[k] -= c * BigRational::from_integer(xj.clone());
            }
            numer = next;
            denom *= BigRational::from_integer(xi - xj);
        }
        let scale = BigRational::from_integer(yi.clone()) / denom;
        for (k, c) in numer.iter().enumerate() {
            acc[k] += c * &scale;
        }
    }
    let mut out = Vec::with_capacity(n);
    for c in acc {
        if !c.denom().abs().eq(&BigInt::from(1)) {
            return Err(CkError::Internal(
                "norm polynomial is not integral".into(),
            ));
        }
        out.push(c.to_integer());
    }
    Ok(IntPoly::new(out))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(cs: &[i64]) -> IntPoly {
        IntPoly::from_i64(cs)
    }

    #[test]
    fn n3_of_the_quartic() {
        assert_eq!(
            norm_np(&p(&[1, -2, 1, -2, 1]), 3).unwrap(),
            p(&[1, -8, 10, -8, 1])
        );
    }

    #[test]
    fn trivial_cases() {
        assert_eq!(norm_np(&IntPoly::one(), 5).unwrap(), IntPoly::one());
        // N_2(t - 1): roots {1}, so t - 1 up to unit; constant becomes positive
        let n = norm_np(&p(&[-1, 1]), 2).unwrap();
        assert!(n == p(&[-1, 1]) || n == p(&[1, -1]));
    }

    #[test]
    fn slice_pair_stays_paired() {
        // N_3((2t-1)(t-2)) = (t-8)(8t-1) up to sign
        let n = norm_np(&p(&[2, -5, 2]), 3).unwrap();
        assert_eq!(n, p(&[8, -65, 8]));
    }

    #[test]
    fn degree_preserved() {
        for q in [2u32, 3, 5] {
            let f = p(&[3, 1, -4, 1]);
            assert_eq!(norm_np(&f, q).unwrap().degree(), f.degree());
        }
    }
}
