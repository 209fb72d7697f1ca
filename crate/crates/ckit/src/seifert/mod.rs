//! Seifert-matrix invariants: the Alexander polynomial, classical and
//! Levine-Tristram signatures, the isometric-structure map, invertible
//! representatives and knot-record ingestion.

mod profile;

pub use profile::{lt_signature_at, signature_profile, CirclePoint, SignatureProfile};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Deserialize;

use crate::error::{CkError, Result};
use crate::isometric::IsometricStructure;
use crate::linalg::{MatQ, MatZ};
use crate::poly::{normalize_alexander, IntPoly, LaurentPoly};

/// Square integer matrix V of even size with det(V - V^t) = +-1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeifertMatrix {
    entries: Vec<Vec<BigInt>>,
    orientation: i8, // sign of det(V - V^t)
}

impl SeifertMatrix {
    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn genus(&self) -> usize {
        self.size() / 2
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.entries
    }

    /// Sign of det(V - V^t); -1 inputs are accepted and flagged.
    pub fn orientation(&self) -> i8 {
        self.orientation
    }

    pub fn to_matz(&self) -> MatZ {
        MatZ::from_rows(&self.entries)
    }

    pub fn to_matq(&self) -> MatQ {
        MatQ::from_int_rows(&self.entries)
    }

    /// Connected sum: block direct sum.
    pub fn block_sum(&self, o: &SeifertMatrix) -> SeifertMatrix {
        let n = self.size() + o.size();
        let mut rows = vec![vec![BigInt::zero(); n]; n];
        for (i, r) in self.entries.iter().enumerate() {
            for (j, v) in r.iter().enumerate() {
                rows[i][j] = v.clone();
            }
        }
        for (i, r) in o.entries.iter().enumerate() {
            for (j, v) in r.iter().enumerate() {
                rows[self.size() + i][self.size() + j] = v.clone();
            }
        }
        validate_rows(rows).expect("block sum of Seifert matrices is a Seifert matrix")
    }

    /// Mirror with reversed orientation: -V^t.
    pub fn mirror_reverse(&self) -> SeifertMatrix {
        let n = self.size();
        let mut rows = vec![vec![BigInt::zero(); n]; n];
        for i in 0..n {
            for j in 0..n {
                rows[i][j] = -self.entries[j][i].clone();
            }
        }
        validate_rows(rows).expect("mirror of a Seifert matrix is a Seifert matrix")
    }
}

/// Accepts a square integer matrix of even size with det(V - V^t) = +-1.
pub fn validate(matrix: &[Vec<i64>]) -> Result<SeifertMatrix> {
    validate_rows(
        matrix
            .iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect(),
    )
}

pub fn validate_rows(entries: Vec<Vec<BigInt>>) -> Result<SeifertMatrix> {
    let n = entries.len();
    if entries.iter().any(|r| r.len() != n) {
        return Err(CkError::NotSeifert("matrix is not square".into()));
    }
    if n % 2 != 0 {
        return Err(CkError::NotSeifert(format!("odd size {n}")));
    }
    let v = MatZ::from_rows(&entries);
    let mut skew = MatZ::zero(n, n);
    for i in 0..n {
        for j in 0..n {
            skew.set(i, j, v.get(i, j) - v.get(j, i));
        }
    }
    let d = skew.det();
    if !d.clone().abs().is_one() {
        return Err(CkError::NotSeifert(format!("det(V - V^t) = {d}, want +-1")));
    }
    Ok(SeifertMatrix {
        entries,
        orientation: if d.is_one() { 1 } else { -1 },
    })
}

/// Normalized Alexander polynomial det(V - t V^t) (positive constant term).
pub fn alexander(v: &SeifertMatrix) -> IntPoly {
    let n = v.size();
    if n == 0 {
        return IntPoly::one();
    }
    // interpolate det(V - t V^t) from n+1 integer points
    let mut points = Vec::with_capacity(n + 1);
    for k in 0..=n as i64 {
        let kb = BigInt::from(k);
        let mut m = MatZ::zero(n, n);
        for i in 0..n {
            for j in 0..n {
                m.set(i, j, &v.entries[i][j] - &kb * &v.entries[j][i]);
            }
        }
        points.push((kb, m.det()));
    }
    let p = crate::poly::interpolate_int(&points).expect("determinant polynomial is integral");
    if p.is_zero() {
        // det(V - tV^t) never vanishes identically for det(V - V^t) = +-1
        unreachable!("Alexander polynomial of a Seifert matrix cannot be 0");
    }
    normalize_alexander(&LaurentPoly::from_poly(&p)).expect("nonzero by construction")
}

/// Signature of the symmetrized form V + V^t.
pub fn signature(v: &SeifertMatrix) -> i64 {
    let q = v.to_matq();
    q.add(&q.transpose()).signature()
}

/// The isometric structure (V + V^t, V^{-1} V^t); requires det V != 0.
pub fn isometric_structure(v: &SeifertMatrix) -> Result<IsometricStructure> {
    let vq = v.to_matq();
    let inv = vq
        .inverse()
        .ok_or_else(|| CkError::Singular("call invertible_representative first".into()))?;
    let q = vq.add(&vq.transpose());
    let t = inv.mul(&vq.transpose());
    IsometricStructure::new(q, t)
}

/// Elementary congruence helper: paired row/col operation e_j += c e_i,
/// realized on the matrix as row_j += c row_i and col_j += c col_i.
fn congruence_add(m: &mut Vec<Vec<BigInt>>, j: usize, c: &BigInt, i: usize) {
    let n = m.len();
    for k in 0..n {
        let v = &m[j][k] + c * &m[i][k];
        m[j][k] = v;
    }
    for row in m.iter_mut() {
        let v = &row[j] + c * &row[i];
        row[j] = v;
    }
}

fn congruence_swap(m: &mut [Vec<BigInt>], i: usize, j: usize) {
    m.swap(i, j);
    for row in m.iter_mut() {
        row.swap(i, j);
    }
}

fn congruence_negate(m: &mut Vec<Vec<BigInt>>, i: usize) {
    let n = m.len();
    for k in 0..n {
        m[i][k] = -&m[i][k];
    }
    for row in m.iter_mut().take(n) {
        row[i] = -&row[i];
    }
}

/// Reduces a tracked vector to +e_target by Euclid steps, mirroring every
/// step on the matrix as a congruence. `allowed` limits which basis indices
/// may participate.
///
/// `covariant` selects the transformation law of the tracked vector: false
/// for coordinate vectors (transform by B^-1), true for value columns like
/// V e_k (transform by B^t).
fn reduce_vector_to_unit(
    m: &mut Vec<Vec<BigInt>>,
    w: &mut Vec<BigInt>,
    target: usize,
    allowed: &[usize],
    covariant: bool,
) {
    loop {
        let nonzero: Vec<usize> = allowed
            .iter()
            .copied()
            .filter(|&i| !w[i].is_zero())
            .collect();
        assert!(!nonzero.is_empty(), "tracked vector vanished");
        if nonzero.len() == 1 {
            let k = nonzero[0];
            assert!(w[k].clone().abs().is_one(), "vector not primitive");
            if w[k].is_negative() {
                congruence_negate(m, k);
                w[k] = -&w[k];
            }
            if k != target {
                congruence_swap(m, k, target);
                w.swap(k, target);
            }
            return;
        }
        let &imin = nonzero
            .iter()
            .min_by_key(|&&i| w[i].clone().abs())
            .unwrap();
        for &j in &nonzero {
            if j == imin {
                continue;
            }
            // w[j] -= c * w[imin], |c| >= 1 by minimality of imin
            let c = &w[j] / &w[imin];
            if c.is_zero() {
                continue;
            }
            if covariant {
                // column law: op e_j += (-c) e_imin adds -c * w[imin] to w[j]
                congruence_add(m, j, &-c.clone(), imin);
            } else {
                // coordinate law: op e_imin += c e_j subtracts c * w[imin] from w[j]
                congruence_add(m, imin, &c, j);
            }
            let v = &w[j] - &c * &w[imin];
            w[j] = v;
        }
    }
}

/// An invertible Seifert matrix representing the same algebraic concordance
/// class: splits off trivial pairs along kernel vectors until nonsingular.
pub fn invertible_representative(v: &SeifertMatrix) -> SeifertMatrix {
    let alex_before = alexander(v);
    let sig_before = signature(v);
    let mut m = v.entries.clone();
    loop {
        let n = m.len();
        if n == 0 {
            break;
        }
        let mz = MatZ::from_rows(&m);
        if !mz.det().is_zero() {
            break;
        }
        // primitive integer vector with w^t V = 0
        let vt = MatQ::from_int_rows(&m).transpose();
        let ker = vt.kernel();
        assert!(ker.cols > 0);
        let mut denom = BigInt::one();
        for i in 0..n {
            denom = num_integer::lcm(denom, ker.get(i, 0).denom().clone());
        }
        let mut w: Vec<BigInt> = (0..n)
            .map(|i| {
                (ker.get(i, 0) * num_rational::BigRational::from_integer(denom.clone()))
                    .to_integer()
            })
            .collect();
        let mut content = BigInt::zero();
        for x in &w {
            content = num_integer::Integer::gcd(&content, x);
        }
        for x in &mut w {
            *x = &*x / &content;
        }
        // step 1: basis change making the kernel vector e_2 (row 2 of V becomes 0)
        let all: Vec<usize> = (0..n).collect();
        reduce_vector_to_unit(&mut m, &mut w, 1, &all, false);
        debug_assert!(m[1].iter().all(|x| x.is_zero()));
        // step 2: column 2 (= V e_2) is primitive with zero second entry;
        // reduce it to e_1 using ops away from index 1
        let mut c: Vec<BigInt> = (0..n).map(|i| m[i][1].clone()).collect();
        debug_assert!(c[1].is_zero());
        let others: Vec<usize> = (0..n).filter(|&i| i != 1).collect();
        reduce_vector_to_unit(&mut m, &mut c, 0, &others, true);
        debug_assert!(m[0][1].is_one());
        debug_assert!((2..n).all(|i| m[i][1].is_zero()));
        debug_assert!(m[1].iter().all(|x| x.is_zero()));
        // step 3: clear the rest of row 1 by adding multiples of e_2
        for j in 2..n {
            let cj = m[0][j].clone();
            if !cj.is_zero() {
                congruence_add(&mut m, j, &-cj, 1);
            }
        }
        // delete rows/cols 1 and 2
        let mut next = Vec::with_capacity(n - 2);
        for (i, row) in m.into_iter().enumerate() {
            if i <= 1 {
                continue;
            }
            let r: Vec<BigInt> = row
                .into_iter()
                .enumerate()
                .filter(|(j, _)| *j > 1)
                .map(|(_, x)| x)
                .collect();
            next.push(r);
        }
        m = next;
    }
    let out = validate_rows(m).expect("reduction preserves the Seifert condition");
    // the reduction is a sequence of exact inverse-enlargements
    assert_eq!(alexander(&out), alex_before, "reduction changed the Alexander polynomial");
    assert_eq!(signature(&out), sig_before, "reduction changed the signature");
    out
}

/// A named knot with its Seifert matrix and optional table data.
#[derive(Clone, Debug)]
pub struct KnotRecord {
    pub name: String,
    pub seifert: SeifertMatrix,
    pub genus3: Option<u32>,
    pub g4_upper: Option<u32>,
    pub notes: String,
}

#[derive(Deserialize)]
struct RawRecord {
    name: String,
    seifert_matrix: Vec<Vec<i64>>,
    #[serde(default)]
    genus3: Option<u32>,
    #[serde(default)]
    g4_upper: Option<u32>,
    #[serde(default)]
    notes: Option<String>,
}

/// Parses and validates a knot file (JSON array of records).
pub fn ingest(text: &str) -> Result<Vec<KnotRecord>> {
    let raw: Vec<RawRecord> =
        serde_json::from_str(text).map_err(|e| CkError::Parse(e.to_string()))?;
    let mut out = Vec::with_capacity(raw.len());
    for r in raw {
        let seifert = validate(&r.seifert_matrix)
            .map_err(|e| CkError::Parse(format!("record '{}': {e}", r.name)))?;
        if let Some(g3) = r.genus3 {
            let deg = alexander(&seifert).degree();
            if (2 * g3 as usize) < deg {
                return Err(CkError::Parse(format!(
                    "record '{}': genus3 = {g3} inconsistent with Alexander degree {deg}",
                    r.name
                )));
            }
        }
        out.push(KnotRecord {
            name: r.name,
            seifert,
            genus3: r.genus3,
            g4_upper: r.g4_upper,
            notes: r.notes.unwrap_or_default(),
        });
    }
    Ok(out)
}
