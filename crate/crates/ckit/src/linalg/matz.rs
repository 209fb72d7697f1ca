//! Integer matrices: fraction-free determinants and Smith normal form.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatZ {
    pub rows: usize,
    pub cols: usize,
    data: Vec<BigInt>,
}

impl MatZ {
    pub fn zero(rows: usize, cols: usize) -> Self {
        MatZ {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn from_rows(rows: &[Vec<BigInt>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c));
        MatZ {
            rows: r,
            cols: c,
            data: rows.iter().flat_map(|x| x.iter().cloned()).collect(),
        }
    }

    pub fn from_i64(rows: &[Vec<i64>]) -> Self {
        Self::from_rows(
            &rows
                .iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect::<Vec<_>>(),
        )
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.cols + j] = v;
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> MatZ {
        let mut out = MatZ::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    /// Fraction-free (Bareiss) determinant.
    pub fn det(&self) -> BigInt {
        assert!(self.is_square());
        let n = self.rows;
        if n == 0 {
            return BigInt::from(1);
        }
        let mut a: Vec<Vec<BigInt>> = (0..n)
            .map(|i| (0..n).map(|j| self.get(i, j).clone()).collect())
            .collect();
        let mut sign = 1i32;
        let mut prev = BigInt::from(1);
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&s| !a[s][k].is_zero()) {
                    Some(s) => {
                        a.swap(k, s);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                    a[i][j] = v;
                }
            }
            prev = a[k][k].clone();
        }
        let d = a[n - 1][n - 1].clone();
        if sign < 0 {
            -d
        } else {
            d
        }
    }

    /// Smith normal form diagonal d_1 | d_2 | ..., all nonnegative, for any
    /// shape; zeros at the end.
    ///
    /// Classical gcd-driven elimination: re-pick the globally smallest entry
    /// after every single reduction step, clear the pivot cross exactly, and
    /// enforce divisibility against the remaining block before advancing.
    /// Re-picking keeps the intermediate entries from compounding.
    pub fn smith_diagonal(&self) -> Vec<BigInt> {
        let mut a: Vec<Vec<BigInt>> = (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j).clone()).collect())
            .collect();
        let (r, c) = (self.rows, self.cols);
        let n = r.min(c);
        let mut out = Vec::with_capacity(n);
        let mut top = 0usize;
        'outer: while top < n {
            // globally smallest nonzero entry of the block as the pivot
            let mut piv: Option<(usize, usize)> = None;
            for i in top..r {
                for j in top..c {
                    if !a[i][j].is_zero()
                        && piv.map_or(true, |(pi, pj)| a[i][j].abs() < a[pi][pj].abs())
                    {
                        piv = Some((i, j));
                    }
                }
            }
            let (pi, pj) = match piv {
                Some(p) => p,
                None => break,
            };
            a.swap(top, pi);
            for row in a.iter_mut() {
                row.swap(top, pj);
            }
            // one reduction step at a time; any surviving remainder becomes
            // the strictly smaller pivot of the next round
            for i in top + 1..r {
                if a[i][top].is_zero() {
                    continue;
                }
                let q = div_nearest(&a[i][top], &a[top][top]);
                if !q.is_zero() {
                    for j in top..c {
                        let v = &a[i][j] - &q * &a[top][j];
                        a[i][j] = v;
                    }
                }
                if !a[i][top].is_zero() {
                    continue 'outer;
                }
            }
            for j in top + 1..c {
                if a[top][j].is_zero() {
                    continue;
                }
                let q = div_nearest(&a[top][j], &a[top][top]);
                if !q.is_zero() {
                    for i in top..r {
                        let v = &a[i][j] - &a[i][top] * &q;
                        a[i][j] = v;
                    }
                }
                if !a[top][j].is_zero() {
                    continue 'outer;
                }
            }
            // pivot cross is clear; fold any non-divisible block entry into
            // the pivot row so the next pass shrinks the pivot to a gcd
            let p = a[top][top].clone();
            for i in top + 1..r {
                if a[i].iter().skip(top + 1).any(|v| !(v % &p).is_zero()) {
                    let row: Vec<BigInt> = a[i].clone();
                    for (k, v) in row.into_iter().enumerate() {
                        let s = &a[top][k] + v;
                        a[top][k] = s;
                    }
                    continue 'outer;
                }
            }
            out.push(p.abs());
            top += 1;
        }
        // the diagonal is a divisor chain by construction; zeros at the end
        let zeros = n - out.len();
        out.extend(std::iter::repeat(BigInt::zero()).take(zeros));
        out
    }
}

/// Quotient minimizing |a - q b|.
fn div_nearest(a: &BigInt, b: &BigInt) -> BigInt {
    let (q, r) = a.div_rem(b);
    if r.abs() * 2 > b.abs() {
        if r.is_negative() == b.is_negative() {
            q + 1
        } else {
            q - 1
        }
    } else {
        q
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn det_small() {
        let m = MatZ::from_i64(&[vec![0, 1], vec![-1, 0]]);
        assert_eq!(m.det(), BigInt::from(1));
        let m = MatZ::from_i64(&[vec![2, 1, 0], vec![1, 2, 1], vec![0, 1, 2]]);
        assert_eq!(m.det(), BigInt::from(4));
        assert_eq!(MatZ::zero(0, 0).det(), BigInt::from(1));
    }

    #[test]
    fn smith_basics() {
        let m = MatZ::from_i64(&[vec![2, 0], vec![0, 3]]);
        assert_eq!(m.smith_diagonal(), vec![BigInt::from(1), BigInt::from(6)]);
        let m = MatZ::from_i64(&[vec![2, 4], vec![4, 8]]);
        assert_eq!(m.smith_diagonal(), vec![BigInt::from(2), BigInt::zero()]);
        // trefoil double cover: V + V^t presents Z/3
        let m = MatZ::from_i64(&[vec![-2, 1], vec![1, -2]]);
        assert_eq!(m.smith_diagonal(), vec![BigInt::from(1), BigInt::from(3)]);
    }

    #[test]
    fn smith_divisibility_chain() {
        let m = MatZ::from_i64(&[vec![6, 0, 0], vec![0, 10, 0], vec![0, 0, 15]]);
        let d = m.smith_diagonal();
        assert_eq!(d, vec![BigInt::from(1), BigInt::from(30), BigInt::from(30)]);
    }
}
