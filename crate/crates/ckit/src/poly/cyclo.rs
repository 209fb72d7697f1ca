//! Exact arithmetic in Q(zeta_n) in the power basis mod the n-th cyclotomic
//! polynomial (small conductors only).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{IntPoly, RatPoly};

/// Phi_n as an integer polynomial, by dividing t^n - 1 by the lower Phi_d.
pub fn cyclotomic_poly(n: u32) -> IntPoly {
    assert!(n >= 1);
    let mut num = IntPoly::monomial(BigInt::one(), n as usize);
    num = &num - &IntPoly::one();
    for d in 1..n {
        if n % d == 0 {
            let phi_d = cyclotomic_poly(d);
            num = num.div_exact(&phi_d).expect("cyclotomic division is exact");
        }
    }
    num
}

/// Element of Q(zeta_n) in the power basis 1, z, ..., z^(phi(n)-1).
#[derive(Clone, PartialEq, Eq)]
pub struct CycloElement {
    pub n: u32,
    pub coeffs: Vec<BigRational>, // length = deg Phi_n
}

impl CycloElement {
    pub fn zero(n: u32) -> Self {
        let d = cyclotomic_poly(n).degree();
        CycloElement {
            n,
            coeffs: vec![BigRational::zero(); d],
        }
    }

    pub fn from_rational(n: u32, c: BigRational) -> Self {
        let mut e = Self::zero(n);
        if !e.coeffs.is_empty() {
            e.coeffs[0] = c;
        } else {
            // n = 1 or 2 gives degree-1 Phi, still one coefficient
            e.coeffs = vec![c];
        }
        e
    }

    pub fn from_int(n: u32, c: i64) -> Self {
        Self::from_rational(n, BigRational::from_integer(BigInt::from(c)))
    }

    /// zeta_n^k reduced into the power basis.
    pub fn root_power(n: u32, k: i64) -> Self {
        let kk = k.rem_euclid(n as i64) as usize;
        let phi = cyclotomic_poly(n);
        let mono = RatPoly::new(
            (0..=kk)
                .map(|i| {
                    if i == kk {
                        BigRational::one()
                    } else {
                        BigRational::zero()
                    }
                })
                .collect(),
        );
        Self::reduce(n, &mono, &phi)
    }

    fn reduce(n: u32, p: &RatPoly, phi: &IntPoly) -> Self {
        let (_, r) = p.div_rem(&RatPoly::from_int(phi));
        let d = phi.degree();
        let mut coeffs = vec![BigRational::zero(); d];
        for (i, c) in r.coeffs().iter().enumerate() {
            coeffs[i] = c.clone();
        }
        CycloElement { n, coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_rational(&self) -> Option<BigRational> {
        if self.coeffs.iter().skip(1).all(|c| c.is_zero()) {
            Some(self.coeffs.first().cloned().unwrap_or_else(BigRational::zero))
        } else {
            None
        }
    }

    /// Complex conjugation zeta -> zeta^(n-1).
    pub fn conj(&self) -> Self {
        let phi = cyclotomic_poly(self.n);
        let mut acc = RatPoly::zero();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let zk = Self::root_power(self.n, -(i as i64));
            let term = RatPoly::new(zk.coeffs.clone());
            let scaled = RatPoly::new(term.coeffs().iter().map(|x| x * c).collect());
            acc = &acc + &scaled;
        }
        Self::reduce(self.n, &acc, &phi)
    }
}

impl Add for &CycloElement {
    type Output = CycloElement;
    fn add(self, rhs: &CycloElement) -> CycloElement {
        assert_eq!(self.n, rhs.n);
        CycloElement {
            n: self.n,
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &CycloElement {
    type Output = CycloElement;
    fn sub(self, rhs: &CycloElement) -> CycloElement {
        assert_eq!(self.n, rhs.n);
        CycloElement {
            n: self.n,
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Neg for &CycloElement {
    type Output = CycloElement;
    fn neg(self) -> CycloElement {
        CycloElement {
            n: self.n,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &CycloElement {
    type Output = CycloElement;
    fn mul(self, rhs: &CycloElement) -> CycloElement {
        assert_eq!(self.n, rhs.n);
        let a = RatPoly::new(self.coeffs.clone());
        let b = RatPoly::new(rhs.coeffs.clone());
        CycloElement::reduce(self.n, &(&a * &b), &cyclotomic_poly(self.n))
    }
}

impl fmt::Debug for CycloElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyclo(n={}, {:?})", self.n, self.coeffs)
    }
}

/// p evaluated at zeta_n, reduced in the power basis.
pub fn eval_cyclotomic(p: &IntPoly, n: u32) -> CycloElement {
    assert!(n >= 1);
    let z = CycloElement::root_power(n, 1);
    let mut acc = CycloElement::zero(n);
    for c in p.coeffs().iter().rev() {
        acc = &(&acc * &z) + &CycloElement::from_rational(n, BigRational::from_integer(c.clone()));
    }
    acc
}

/// Polynomials with coefficients in Q(zeta_n); just enough for the quadratic
/// factor checks over Q(zeta_8).
#[derive(Clone, Debug, PartialEq)]
pub struct CycloPoly {
    pub n: u32,
    pub coeffs: Vec<CycloElement>,
}

impl CycloPoly {
    pub fn new(n: u32, mut coeffs: Vec<CycloElement>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        CycloPoly { n, coeffs }
    }

    pub fn from_int_poly(n: u32, p: &IntPoly) -> Self {
        Self::new(
            n,
            p.coeffs()
                .iter()
                .map(|c| CycloElement::from_rational(n, BigRational::from_integer(c.clone())))
                .collect(),
        )
    }

    pub fn mul(&self, rhs: &CycloPoly) -> CycloPoly {
        assert_eq!(self.n, rhs.n);
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return CycloPoly::new(self.n, vec![]);
        }
        let mut v = vec![CycloElement::zero(self.n); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                v[i + j] = &v[i + j] + &(a * b);
            }
        }
        CycloPoly::new(self.n, v)
    }

    pub fn conj(&self) -> CycloPoly {
        CycloPoly::new(self.n, self.coeffs.iter().map(|c| c.conj()).collect())
    }

    /// Palindromic test (constant and leading agree, coefficients reverse).
    pub fn is_palindromic(&self) -> bool {
        let n = self.coeffs.len();
        (0..n).all(|i| self.coeffs[i] == self.coeffs[n - 1 - i])
    }
}
