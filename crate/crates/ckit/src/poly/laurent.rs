//! Laurent polynomials and Alexander-polynomial normalization.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::IntPoly;
use crate::error::{CkError, Result};

/// Integer Laurent polynomial: entry i of `coeffs` is the coefficient of t^(offset + i).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentPoly {
    pub coeffs: Vec<BigInt>,
    pub offset: i64,
}

impl LaurentPoly {
    pub fn new(coeffs: Vec<BigInt>, offset: i64) -> Self {
        let mut l = LaurentPoly { coeffs, offset };
        l.normalize();
        l
    }

    pub fn from_i64(cs: &[i64], offset: i64) -> Self {
        Self::new(cs.iter().map(|&c| BigInt::from(c)).collect(), offset)
    }

    pub fn from_poly(p: &IntPoly) -> Self {
        Self::new(p.coeffs().to_vec(), 0)
    }

    fn normalize(&mut self) {
        while self.coeffs.last().map_or(false, |c| c.is_zero()) {
            self.coeffs.pop();
        }
        while self.coeffs.first().map_or(false, |c| c.is_zero()) {
            self.coeffs.remove(0);
            self.offset += 1;
        }
        if self.coeffs.is_empty() {
            self.offset = 0;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

/// Shifts by the power of t making the constant term nonzero, and fixes the
/// sign so the constant term is positive.
pub fn normalize_alexander(p: &LaurentPoly) -> Result<IntPoly> {
    if p.is_zero() {
        return Err(CkError::ZeroAlexander);
    }
    let mut cs = p.coeffs.clone();
    if cs[0].is_negative() {
        for c in &mut cs {
            *c = -&*c;
        }
    }
    Ok(IntPoly::new(cs))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn monomial_shift_and_sign() {
        // t^-2 (1 - 3t + 3t^2 - 3t^3 + t^4)
        let l = LaurentPoly::from_i64(&[1, -3, 3, -3, 1], -2);
        assert_eq!(
            normalize_alexander(&l).unwrap(),
            IntPoly::from_i64(&[1, -3, 3, -3, 1])
        );
        // constant -1 -> 1
        let l = LaurentPoly::from_i64(&[-1], 5);
        assert_eq!(normalize_alexander(&l).unwrap(), IntPoly::one());
        // t^3 - t^5 -> 1 - t^2
        let l = LaurentPoly::from_i64(&[1, 0, -1], 3);
        assert_eq!(
            normalize_alexander(&l).unwrap(),
            IntPoly::from_i64(&[1, 0, -1])
        );
    }

    #[test]
    fn zero_rejected() {
        assert!(normalize_alexander(&LaurentPoly::from_i64(&[], 0)).is_err());
    }
}
