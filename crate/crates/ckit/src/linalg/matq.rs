//! Dense rational matrices with the exact operations the concordance
//! computations need: inverses, characteristic polynomials, column spans,
//! kernels, congruence diagonalization.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::poly::RatPoly;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatQ {
    pub rows: usize,
    pub cols: usize,
    data: Vec<BigRational>,
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl MatQ {
    pub fn zero(rows: usize, cols: usize) -> Self {
        MatQ {
            rows,
            cols,
            data: vec![BigRational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.set(i, i, BigRational::one());
        }
        m
    }

    pub fn from_rows(rows: &[Vec<BigRational>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c));
        MatQ {
            rows: r,
            cols: c,
            data: rows.iter().flat_map(|x| x.iter().cloned()).collect(),
        }
    }

    pub fn from_int_rows(rows: &[Vec<BigInt>]) -> Self {
        Self::from_rows(
            &rows
                .iter()
                .map(|r| r.iter().map(|x| BigRational::from_integer(x.clone())).collect())
                .collect::<Vec<_>>(),
        )
    }

    pub fn from_i64(rows: &[Vec<i64>]) -> Self {
        Self::from_rows(
            &rows
                .iter()
                .map(|r| r.iter().map(|&x| rat(x)).collect())
                .collect::<Vec<_>>(),
        )
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigRational) {
        self.data[i * self.cols + j] = v;
    }

    pub fn transpose(&self) -> MatQ {
        let mut out = MatQ::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn mul(&self, o: &MatQ) -> MatQ {
        assert_eq!(self.cols, o.rows);
        let mut out = MatQ::zero(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let v = out.get(i, j) + a * o.get(k, j);
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    pub fn add(&self, o: &MatQ) -> MatQ {
        assert!(self.rows == o.rows && self.cols == o.cols);
        let mut out = self.clone();
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.get(i, j) + o.get(i, j));
            }
        }
        out
    }

    pub fn sub(&self, o: &MatQ) -> MatQ {
        assert!(self.rows == o.rows && self.cols == o.cols);
        let mut out = self.clone();
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.get(i, j) - o.get(i, j));
            }
        }
        out
    }

    pub fn neg(&self) -> MatQ {
        let mut out = self.clone();
        for v in &mut out.data {
            *v = -&*v;
        }
        out
    }

    pub fn scale(&self, c: &BigRational) -> MatQ {
        let mut out = self.clone();
        for v in &mut out.data {
            *v = &*v * c;
        }
        out
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|v| v.is_zero())
    }

    pub fn block_diag(&self, o: &MatQ) -> MatQ {
        let mut out = MatQ::zero(self.rows + o.rows, self.cols + o.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.get(i, j).clone());
            }
        }
        for i in 0..o.rows {
            for j in 0..o.cols {
                out.set(self.rows + i, self.cols + j, o.get(i, j).clone());
            }
        }
        out
    }

    pub fn det(&self) -> BigRational {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut a: Vec<Vec<BigRational>> = (0..n)
            .map(|i| (0..n).map(|j| self.get(i, j).clone()).collect())
            .collect();
        let mut det = BigRational::one();
        for k in 0..n {
            let piv = match (k..n).find(|&i| !a[i][k].is_zero()) {
                Some(p) => p,
                None => return BigRational::zero(),
            };
            if piv != k {
                a.swap(k, piv);
                det = -det;
            }
            det *= a[k][k].clone();
            let inv = BigRational::one() / a[k][k].clone();
            for i in k + 1..n {
                if a[i][k].is_zero() {
                    continue;
                }
                let f = &a[i][k] * &inv;
                for j in k..n {
                    let v = &a[i][j] - &f * &a[k][j];
                    a[i][j] = v;
                }
            }
        }
        det
    }

    pub fn inverse(&self) -> Option<MatQ> {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut a: Vec<Vec<BigRational>> = (0..n)
            .map(|i| {
                let mut row: Vec<BigRational> = (0..n).map(|j| self.get(i, j).clone()).collect();
                row.extend((0..n).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }));
                row
            })
            .collect();
        for k in 0..n {
            let piv = (k..n).find(|&i| !a[i][k].is_zero())?;
            a.swap(k, piv);
            let inv = BigRational::one() / a[k][k].clone();
            for j in 0..2 * n {
                a[k][j] = &a[k][j] * &inv;
            }
            for i in 0..n {
                if i == k || a[i][k].is_zero() {
                    continue;
                }
                let f = a[i][k].clone();
                for j in 0..2 * n {
                    let v = &a[i][j] - &f * &a[k][j];
                    a[i][j] = v;
                }
            }
        }
        let mut out = MatQ::zero(n, n);
        for i in 0..n {
            for j in 0..n {
                out.set(i, j, a[i][n + j].clone());
            }
        }
        Some(out)
    }

    /// Solves self * X = B (self square invertible).
    pub fn solve(&self, b: &MatQ) -> Option<MatQ> {
        Some(self.inverse()?.mul(b))
    }

    /// Characteristic polynomial det(tI - M), monic, by Faddeev-LeVerrier.
    pub fn char_poly(&self) -> RatPoly {
        assert_eq!(self.rows, self.cols);
        let n = self.rows;
        let mut coeffs = vec![BigRational::zero(); n + 1];
        coeffs[n] = BigRational::one();
        let mut m = MatQ::zero(n, n);
        let mut c = BigRational::one();
        for k in 1..=n {
            // M_k = A (M_{k-1} + c_{k-1} I)
            let mut t = m.clone();
            for i in 0..n {
                let v = t.get(i, i) + &c;
                t.set(i, i, v);
            }
            m = self.mul(&t);
            let tr: BigRational = (0..n).map(|i| m.get(i, i).clone()).sum();
            c = -tr / rat(k as i64);
            coeffs[n - k] = c.clone();
        }
        RatPoly::new(coeffs)
    }

    pub fn trace(&self) -> BigRational {
        (0..self.rows).map(|i| self.get(i, i).clone()).sum()
    }

    /// Column-space basis as a matrix whose columns span the image (reduced
    /// column echelon pivots, deterministic).
    pub fn column_space(&self) -> MatQ {
        // row-reduce the transpose, keep nonzero rows, transpose back
        let t = self.transpose();
        let (rr, pivots) = t.row_echelon();
        let nz: Vec<Vec<BigRational>> = rr.into_iter().take(pivots.len()).collect();
        MatQ::from_rows(&nz).transpose()
    }

    fn row_echelon(&self) -> (Vec<Vec<BigRational>>, Vec<usize>) {
        let mut a: Vec<Vec<BigRational>> = (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j).clone()).collect())
            .collect();
        let mut pivots = Vec::new();
        let mut r = 0usize;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let piv = match (r..self.rows).find(|&i| !a[i][c].is_zero()) {
                Some(p) => p,
                None => continue,
            };
            a.swap(r, piv);
            let inv = BigRational::one() / a[r][c].clone();
            for j in 0..self.cols {
                a[r][j] = &a[r][j] * &inv;
            }
            for i in 0..self.rows {
                if i == r || a[i][c].is_zero() {
                    continue;
                }
                let f = a[i][c].clone();
                for j in 0..self.cols {
                    let v = &a[i][j] - &f * &a[r][j];
                    a[i][j] = v;
                }
            }
            pivots.push(c);
            r += 1;
        }
        (a, pivots)
    }

    pub fn rank(&self) -> usize {
        self.row_echelon().1.len()
    }

    /// Kernel basis (columns).
    pub fn kernel(&self) -> MatQ {
        let (ech, pivots) = self.row_echelon();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Vec::new();
        for &f in &free {
            let mut v = vec![BigRational::zero(); self.cols];
            v[f] = BigRational::one();
            for (ri, &p) in pivots.iter().enumerate() {
                v[p] = -ech[ri][f].clone();
            }
            basis.push(v);
        }
        MatQ::from_rows(&basis).transpose()
    }

    /// Evaluates an integer polynomial at the matrix.
    pub fn eval_int_poly(&self, p: &crate::poly::IntPoly) -> MatQ {
        let n = self.rows;
        let mut acc = MatQ::zero(n, n);
        for c in p.coeffs().iter().rev() {
            acc = self.mul(&acc);
            for i in 0..n {
                let v = acc.get(i, i) + BigRational::from_integer(c.clone());
                acc.set(i, i, v);
            }
        }
        acc
    }

    /// Signature of a symmetric matrix by exact congruence diagonalization.
    pub fn signature(&self) -> i64 {
        let d = self.congruence_diagonal();
        d.iter()
            .map(|x| {
                if x.is_positive() {
                    1
                } else if x.is_negative() {
                    -1
                } else {
                    0
                }
            })
            .sum()
    }

    /// Diagonal of a congruence-diagonalization (symmetric input).
    /// Zero entries appear iff the form is degenerate.
    pub fn congruence_diagonal(&self) -> Vec<BigRational> {
        assert!(self.is_symmetric(), "congruence_diagonal needs symmetric input");
        let n = self.rows;
        let mut work: Vec<Vec<BigRational>> = (0..n)
            .map(|i| (0..n).map(|j| self.get(i, j).clone()).collect())
            .collect();
        let mut out = Vec::with_capacity(n);
        let mut size = n;
        while size > 0 {
            // find a nonzero diagonal pivot, creating one if needed
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
                        out.extend(std::iter::repeat(BigRational::zero()).take(size));
                        return out;
                    }
                    Some((i, j)) => {
                        // e_i += e_j: new (i,i) entry is 2 a_ij (+ a_jj = 0);
                        // when that still vanishes, e_i -= 2 e_j works instead
                        for k in 0..size {
                            let v = &work[i][k] + &work[j][k];
                            work[i][k] = v;
                        }
                        for row in work.iter_mut().take(size) {
                            let v = &row[i] + &row[j];
                            row[i] = v;
                        }
                        if work[i][i].is_zero() {
                            for k in 0..size {
                                let v = &work[i][k] - rat(2) * &work[j][k];
                                work[i][k] = v;
                            }
                            for row in work.iter_mut().take(size) {
                                let v = &row[i] - rat(2) * &row[j];
                                row[i] = v;
                            }
                        }
                        assert!(!work[i][i].is_zero());
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
            out.push(d.clone());
            // Schur complement: b[i][j] = a[i][j] - a[i][0] a[0][j] / d
            let mut next: Vec<Vec<BigRational>> = Vec::with_capacity(size - 1);
            for i in 1..size {
                let mut row = Vec::with_capacity(size - 1);
                for j in 1..size {
                    row.push(&work[i][j] - &work[i][0] * &work[0][j] / &d);
                }
                next.push(row);
            }
            work = next;
            size -= 1;
        }
        out
    }
}
