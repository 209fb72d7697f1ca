//! Gaussian rationals and Hermitian congruence diagonalization, for exact
//! Levine-Tristram signatures.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaussRat {
    pub re: BigRational,
    pub im: BigRational,
}

impl GaussRat {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        GaussRat { re, im }
    }

    pub fn zero() -> Self {
        GaussRat::new(BigRational::zero(), BigRational::zero())
    }

    pub fn one() -> Self {
        GaussRat::new(BigRational::one(), BigRational::zero())
    }

    pub fn from_rat(re: BigRational) -> Self {
        GaussRat::new(re, BigRational::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        GaussRat::new(self.re.clone(), -self.im.clone())
    }

    pub fn norm_sq(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inv(&self) -> Self {
        let n = self.norm_sq();
        assert!(!n.is_zero(), "inverse of zero Gaussian rational");
        GaussRat::new(&self.re / &n, -&self.im / &n)
    }
}

impl Add for &GaussRat {
    type Output = GaussRat;
    fn add(self, o: &GaussRat) -> GaussRat {
        GaussRat::new(&self.re + &o.re, &self.im + &o.im)
    }
}

impl Sub for &GaussRat {
    type Output = GaussRat;
    fn sub(self, o: &GaussRat) -> GaussRat {
        GaussRat::new(&self.re - &o.re, &self.im - &o.im)
    }
}

impl Neg for &GaussRat {
    type Output = GaussRat;
    fn neg(self) -> GaussRat {
        GaussRat::new(-self.re.clone(), -self.im.clone())
    }
}

impl Mul for &GaussRat {
    type Output = GaussRat;
    fn mul(self, o: &GaussRat) -> GaussRat {
        GaussRat::new(
            &self.re * &o.re - &self.im * &o.im,
            &self.re * &o.im + &self.im * &o.re,
        )
    }
}

/// Hermitian matrix over Q(i): the (i, j) entry is the conjugate of (j, i).
pub struct HermMat {
    pub n: usize,
    pub data: Vec<GaussRat>,
}

impl HermMat {
    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> GaussRat) -> Self {
        let data = (0..n * n)
            .map(|k| f(k / n, k % n))
            .collect::<Vec<_>>();
        HermMat { n, data }
    }

    fn get(&self, i: usize, j: usize) -> &GaussRat {
        &self.data[i * self.n + j]
    }

    pub fn is_hermitian(&self) -> bool {
        (0..self.n).all(|i| (0..=i).all(|j| *self.get(i, j) == self.get(j, i).conj()))
    }

    /// (signature, rank-deficiency) of the Hermitian form, by congruence
    /// diagonalization. The diagonal is real throughout.
    pub fn signature_and_nullity(&self) -> (i64, usize) {
        let n = self.n;
        let mut work: Vec<Vec<GaussRat>> = (0..n)
            .map(|i| (0..n).map(|j| self.get(i, j).clone()).collect())
            .collect();
        let mut sig = 0i64;
        let mut nullity = 0usize;
        let mut size = n;
        while size > 0 {
            let mut piv = (0..size).find(|&i| !work[i][i].is_zero());
            if piv.is_none() {
                let mut pair = None;
                'find: for i in 0..size {
                    for j in i + 1..size {
                        if !work[i][j].is_zero() {
                            pair = Some((i, j));
                            break 'find;
                        }
                    }
                }
                match pair {
                    None => {
                        nullity += size;
                        break;
                    }
                    Some((i, j)) => {
                        // basis change e_i' = e_i + conj(c) e_j with c = h_ij:
                        // both diagonals are zero here, so the new (i,i) entry
                        // is 2|h_ij|^2 > 0
                        let c = work[i][j].clone();
                        for k in 0..size {
                            let v = &work[i][k] + &(&c * &work[j][k]);
                            work[i][k] = v;
                        }
                        let cbar = c.conj();
                        for row in work.iter_mut().take(size) {
                            let v = &row[i] + &(&cbar * &row[j]);
                            row[i] = v;
                        }
                        assert!(!work[i][i].is_zero(), "pivot creation failed");
                        piv = Some(i);
                    }
                }
            }
            let piv = piv.unwrap();
            if piv != 0 {
                work.swap(0, piv);
                for row in work.iter_mut().take(size) {
                    row.swap(0, piv);
                }
            }
            let d = work[0][0].clone();
            debug_assert!(d.im.is_zero(), "Hermitian diagonal must be real");
            sig += if d.re.is_positive() { 1 } else { -1 };
            let dinv = d.inv();
            let mut next: Vec<Vec<GaussRat>> = Vec::with_capacity(size - 1);
            for i in 1..size {
                let mut row = Vec::with_capacity(size - 1);
                for j in 1..size {
                    // b_ij = a_ij - a_i0 a_0j / d
                    let v = &work[i][j] - &(&(&work[i][0] * &work[0][j]) * &dinv);
                    row.push(v);
                }
                next.push(row);
            }
            work = next;
            size -= 1;
        }
        (sig, nullity)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn r(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    #[test]
    fn gauss_arithmetic() {
        let i = GaussRat::new(r(0), r(1));
        assert_eq!(&i * &i, GaussRat::new(r(-1), r(0)));
        let z = GaussRat::new(r(3), r(4));
        assert_eq!(&z * &z.inv(), GaussRat::one());
        assert_eq!(z.norm_sq(), r(25));
    }

    #[test]
    fn hermitian_signature() {
        // diag(2, -3)
        let h = HermMat::from_fn(2, |i, j| {
            if i == j {
                GaussRat::from_rat(r(if i == 0 { 2 } else { -3 }))
            } else {
                GaussRat::zero()
            }
        });
        assert!(h.is_hermitian());
        assert_eq!(h.signature_and_nullity(), (0, 0));
        // [[0, i], [-i, 0]] has eigenvalues +-1
        let h = HermMat::from_fn(2, |i, j| match (i, j) {
            (0, 1) => GaussRat::new(r(0), r(1)),
            (1, 0) => GaussRat::new(r(0), r(-1)),
            _ => GaussRat::zero(),
        });
        assert!(h.is_hermitian());
        assert_eq!(h.signature_and_nullity(), (0, 0));
        // singular: [[1, 1], [1, 1]]
        let h = HermMat::from_fn(2, |_, _| GaussRat::one());
        assert_eq!(h.signature_and_nullity(), (1, 1));
    }
}
