//! Dense integer polynomials, lowest degree first.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::linalg::MatZ;

/// Integer polynomial; `coeffs[i]` is the coefficient of `t^i`.
/// The leading coefficient is nonzero unless the polynomial is zero.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64(cs: &[i64]) -> Self {
        Self::new(cs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// c * t^k
    pub fn monomial(c: BigInt, k: usize) -> Self {
        let mut v = vec![BigInt::zero(); k + 1];
        v[k] = c;
        Self::new(v)
    }

    pub fn t() -> Self {
        Self::monomial(BigInt::one(), 1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree; zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn leading(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeff(0)
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_one()
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_rat(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from_integer(c.clone());
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    /// Coefficient reversal t^deg * p(1/t).
    pub fn reverse(&self) -> Self {
        let mut v = self.coeffs.clone();
        v.reverse();
        Self::new(v)
    }

    /// gcd of all coefficients (nonnegative), 0 for the zero polynomial.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
        }
        g
    }

    /// Primitive part with positive leading coefficient; sign returned separately.
    pub fn primitive(&self) -> (BigInt, Self) {
        if self.is_zero() {
            return (BigInt::zero(), Self::zero());
        }
        let mut c = self.content();
        if self.leading().is_negative() {
            c = -c;
        }
        let p = Self::new(self.coeffs.iter().map(|x| x / &c).collect());
        (c, p)
    }

    /// Exact division; None when self is not divisible by d over the integers.
    pub fn div_exact(&self, d: &IntPoly) -> Option<IntPoly> {
        assert!(!d.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Some(Self::zero());
        }
        if self.degree() < d.degree() {
            return None;
        }
        let mut rem = self.coeffs.clone();
        let n = d.coeffs.len();
        let mut q = vec![BigInt::zero(); rem.len() - n + 1];
        for i in (0..q.len()).rev() {
            let head = rem[i + n - 1].clone();
            if head.is_zero() {
                continue;
            }
            let (c, r) = head.div_rem(&d.coeffs[n - 1]);
            if !r.is_zero() {
                return None;
            }
            q[i] = c.clone();
            for j in 0..n {
                rem[i + j] -= &c * &d.coeffs[j];
            }
        }
        if rem.iter().any(|x| !x.is_zero()) {
            return None;
        }
        Some(Self::new(q))
    }

    /// True iff d divides self over the rationals.
    pub fn divisible_by(&self, d: &IntPoly) -> bool {
        // scale self by lc(d)^k to make the pseudo-division exact
        let k = if self.degree() >= d.degree() {
            self.degree() - d.degree() + 1
        } else {
            return self.is_zero();
        };
        let lc = d.leading();
        let scaled = self.scale(&lc.pow(k as u32));
        scaled.div_exact(d).is_some()
    }

    /// Primitive polynomial gcd (subresultant-free; fine at these degrees).
    pub fn gcd(&self, other: &IntPoly) -> IntPoly {
        let (mut a, mut b) = (self.primitive().1, other.primitive().1);
        if a.is_zero() {
            return b;
        }
        while !b.is_zero() {
            if a.degree() < b.degree() {
                std::mem::swap(&mut a, &mut b);
                continue;
            }
            // pseudo-remainder of a by b
            let k = a.degree() - b.degree() + 1;
            let scaled = a.scale(&b.leading().pow(k as u32));
            let r = scaled.rem_by(&b);
            a = b;
            b = r.primitive().1;
        }
        a.primitive().1
    }

    fn rem_by(&self, d: &IntPoly) -> IntPoly {
        // exact long division remainder; caller must have scaled appropriately
        let n = d.coeffs.len();
        if self.coeffs.len() < n {
            return self.clone();
        }
        let mut rem = self.coeffs.clone();
        for i in (0..=rem.len() - n).rev() {
            let head = rem[i + n - 1].clone();
            if head.is_zero() {
                continue;
            }
            let c = &head / &d.coeffs[n - 1];
            debug_assert!((&head % &d.coeffs[n - 1]).is_zero());
            for j in 0..n {
                rem[i + j] -= &c * &d.coeffs[j];
            }
        }
        Self::new(rem)
    }

    /// Squarefree part p / gcd(p, p'), primitive with positive leading coefficient.
    pub fn squarefree_part(&self) -> IntPoly {
        assert!(!self.is_zero());
        let p = self.primitive().1;
        let g = p.gcd(&p.derivative());
        if g.degree() == 0 {
            return p;
        }
        let k = p.degree() - g.degree() + 1;
        let scaled = p.scale(&g.leading().pow(k as u32));
        scaled.div_exact(&g).expect("gcd divides").primitive().1
    }

    /// Determinant of the Sylvester matrix of p and q.
    pub fn resultant(&self, other: &IntPoly) -> BigInt {
        assert!(!self.is_zero() && !other.is_zero(), "resultant of zero");
        let (m, n) = (self.degree(), other.degree());
        if m == 0 {
            return self.coeffs[0].pow(n as u32);
        }
        if n == 0 {
            return other.coeffs[0].pow(m as u32);
        }
        let size = m + n;
        let mut s = MatZ::zero(size, size);
        for row in 0..n {
            for (i, c) in self.coeffs.iter().enumerate() {
                s.set(row, row + m - i, c.clone());
            }
        }
        for row in 0..m {
            for (i, c) in other.coeffs.iter().enumerate() {
                s.set(n + row, row + n - i, c.clone());
            }
        }
        s.det()
    }

    /// Discriminant (-1)^{d(d-1)/2} res(p, p') / lc(p).
    pub fn discriminant(&self) -> BigInt {
        let d = self.degree();
        assert!(d >= 1, "discriminant needs degree >= 1");
        if d == 1 {
            return BigInt::one();
        }
        let r = self.resultant(&self.derivative());
        let (q, rem) = r.div_rem(&self.leading());
        debug_assert!(rem.is_zero());
        if (d * (d - 1) / 2) % 2 == 1 {
            -q
        } else {
            q
        }
    }

    /// True iff p equals +- its coefficient reversal.
    pub fn is_symmetric(&self) -> bool {
        assert!(!self.is_zero());
        let r = self.reverse();
        *self == r || *self == -&r
    }

    /// p(c * t)
    pub fn compose_scale(&self, c: &BigInt) -> IntPoly {
        let mut pw = BigInt::one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            out.push(a * &pw);
            pw *= c;
        }
        Self::new(out)
    }

    /// Writes a symmetric even-degree polynomial as t^{d/2} P(u), u = t + 1/t.
    /// Returns P. Requires p(t) = +t^d p(1/t) with d even.
    pub fn trace_poly(&self) -> IntPoly {
        let d = self.degree();
        assert!(d % 2 == 0, "trace_poly needs even degree");
        assert_eq!(*self, self.reverse(), "trace_poly needs +1-symmetric input");
        let h = d / 2;
        // pi_k(u) = t^k + t^-k: pi_0 = 2, pi_1 = u, pi_{k+1} = u pi_k - pi_{k-1}
        let mut pis: Vec<IntPoly> = vec![IntPoly::constant(BigInt::from(2)), IntPoly::t()];
        for k in 2..=h {
            let next = &(&IntPoly::t() * &pis[k - 1]) - &pis[k - 2];
            pis.push(next);
        }
        let mut out = IntPoly::constant(self.coeff(h));
        for k in 1..=h {
            out = &out + &pis[k].scale(&self.coeff(h + k));
        }
        out
    }

    /// Real root count in the open interval (lo, hi) via Sturm chains.
    pub fn count_real_roots_between(&self, lo: &BigRational, hi: &BigRational) -> usize {
        crate::poly::sturm::count_roots(self, lo, hi)
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            let a = c.abs();
            first = false;
            match i {
                0 => write!(f, "{a}")?,
                _ => {
                    if a.is_one() {
                        write!(f, "t")?;
                    } else {
                        write!(f, "{a}t")?;
                    }
                    if i > 1 {
                        write!(f, "^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut v = Vec::with_capacity(n);
        for i in 0..n {
            v.push(self.coeff(i) + rhs.coeff(i));
        }
        IntPoly::new(v)
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut v = Vec::with_capacity(n);
        for i in 0..n {
            v.push(self.coeff(i) - rhs.coeff(i));
        }
        IntPoly::new(v)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut v = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        IntPoly::new(v)
    }
}
