//! The Levine-Tristram signature function with exact jump detection.
//!
//! Circle points are parameterized rationally: omega = ((1-s^2) + 2si)/(1+s^2)
//! sweeps the upper semicircle as s runs over [0, oo), with s = 0 at omega = 1
//! and the limit s -> oo at omega = -1. All signatures are signatures of
//! Hermitian matrices over Q(i), computed by exact congruence.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{alexander, SeifertMatrix};
use crate::error::{CkError, Result};
use crate::linalg::{GaussRat, HermMat};
use crate::poly::{factor_rational, sturm, IntPoly};

/// Exact point on the unit circle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CirclePoint {
    /// None encodes omega = -1 (the s -> oo limit).
    s: Option<BigRational>,
}

impl CirclePoint {
    pub fn new(s: BigRational) -> Self {
        CirclePoint { s: Some(s) }
    }

    pub fn from_i64(num: i64, den: i64) -> Self {
        Self::new(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn minus_one() -> Self {
        CirclePoint { s: None }
    }

    pub fn is_one(&self) -> bool {
        matches!(&self.s, Some(s) if s.is_zero())
    }

    /// (re, im) with re^2 + im^2 = 1 exactly.
    pub fn omega(&self) -> (BigRational, BigRational) {
        match &self.s {
            None => (-BigRational::one(), BigRational::zero()),
            Some(s) => {
                let s2 = s * s;
                let den = &s2 + BigRational::one();
                let re = (BigRational::one() - &s2) / &den;
                let im = (BigRational::from_integer(BigInt::from(2)) * s) / &den;
                (re, im)
            }
        }
    }
}

/// Exact signature of (1-omega)V + (1-conj omega)V^t at a circle point.
/// Errors when omega = 1 or when omega is a root of the Alexander polynomial.
pub fn lt_signature_at(v: &SeifertMatrix, w: &CirclePoint) -> Result<i64> {
    if w.is_one() {
        return Err(CkError::Domain(
            "signature at omega = 1 is not defined; the form vanishes".into(),
        ));
    }
    let (re, im) = w.omega();
    let one_minus = GaussRat::new(BigRational::one() - &re, -im.clone());
    let one_minus_bar = one_minus.conj();
    let n = v.size();
    let rows = v.rows();
    let h = HermMat::from_fn(n, |i, j| {
        let a = GaussRat::from_rat(BigRational::from_integer(rows[i][j].clone()));
        let b = GaussRat::from_rat(BigRational::from_integer(rows[j][i].clone()));
        &(&one_minus * &a) + &(&one_minus_bar * &b)
    });
    debug_assert!(h.is_hermitian());
    let (sig, nullity) = h.signature_and_nullity();
    if nullity > 0 {
        return Err(CkError::SignatureAtJump);
    }
    Ok(sig)
}

/// One plateau of the signature function, in the s-parameter: the open
/// interval (lo, hi) with hi = None meaning "through omega = -1".
#[derive(Clone, Debug)]
pub struct Plateau {
    pub lo: BigRational,
    pub hi: Option<BigRational>,
    pub value: i64,
}

/// Signature function data: plateaus, jumps attributed to the symmetric
/// irreducible factors owning the jump root, and the value at -1.
#[derive(Clone, Debug)]
pub struct SignatureProfile {
    pub jump_roots: Vec<(IntPoly, i64)>,
    pub plateau_values: Vec<Plateau>,
    pub sigma_minus_one: i64,
}

impl SignatureProfile {
    /// Largest |signature| over all plateaus.
    pub fn max_abs(&self) -> i64 {
        self.plateau_values
            .iter()
            .map(|p| p.value.abs())
            .max()
            .unwrap_or(0)
    }

    /// True when every plateau is 0.
    pub fn is_identically_zero(&self) -> bool {
        self.plateau_values.iter().all(|p| p.value == 0)
    }

    /// Factors with a nonzero jump.
    pub fn jumping_factors(&self) -> Vec<IntPoly> {
        self.jump_roots
            .iter()
            .filter(|(_, j)| *j != 0)
            .map(|(f, _)| f.clone())
            .collect()
    }
}

/// Substitute u = 2(1-s^2)/(1+s^2) into P(u) and clear denominators:
/// the positive real roots in s correspond to the roots of P in (-2, 2).
fn u_poly_to_s_poly(p: &IntPoly) -> IntPoly {
    let m = p.degree();
    // sum_k c_k (2(1-s^2))^k (1+s^2)^(m-k)
    let one_plus = IntPoly::from_i64(&[1, 0, 1]);
    let two_minus = IntPoly::from_i64(&[2, 0, -2]);
    let mut acc = IntPoly::zero();
    let mut lo_pow = IntPoly::one(); // (2(1-s^2))^k
    for k in 0..=m {
        let mut term = lo_pow.scale(&p.coeff(k));
        for _ in 0..(m - k) {
            term = &term * &one_plus;
        }
        acc = &acc + &term;
        lo_pow = &lo_pow * &two_minus;
    }
    acc
}

/// Isolates the unit-circle roots of the Alexander polynomial factor-by-
/// factor and samples exact signatures strictly between them.
pub fn signature_profile(v: &SeifertMatrix) -> Result<SignatureProfile> {
    let delta = alexander(v);
    let fac = factor_rational(&delta)?;
    // candidate jump factors: symmetric irreducible with roots on the circle
    let mut root_intervals: Vec<(usize, BigRational, BigRational)> = Vec::new();
    let mut factors: Vec<IntPoly> = Vec::new();
    let two = BigRational::from_integer(BigInt::from(2));
    for (f, _, sym) in &fac.factors {
        if !*sym || f.degree() % 2 != 0 {
            continue;
        }
        // symmetric irreducible factors of even degree satisfy f = +reverse
        let fp = if *f == f.reverse() { f.clone() } else { -f };
        debug_assert_eq!(fp, fp.reverse());
        let up = fp.trace_poly();
        if up.count_real_roots_between(&-&two, &two) == 0 {
            continue;
        }
        let sp = u_poly_to_s_poly(&up);
        let bound = sturm::root_bound(&sp);
        let idx = factors.len();
        factors.push(f.clone());
        for iv in sturm::isolate_roots(&sp, &BigRational::zero(), &bound) {
            root_intervals.push((idx, iv.0, iv.1));
        }
    }
    // refine intervals until pairwise disjoint
    loop {
        root_intervals.sort_by(|a, b| a.1.cmp(&b.1));
        let mut overlap = None;
        for i in 0..root_intervals.len().saturating_sub(1) {
            if root_intervals[i].2 >= root_intervals[i + 1].1 {
                overlap = Some(i);
                break;
            }
        }
        match overlap {
            None => break,
            Some(i) => {
                for k in [i, i + 1] {
                    let f = factors[root_intervals[k].0].clone();
                    let fp = if f == f.reverse() { f.clone() } else { -&f };
                    let sp = u_poly_to_s_poly(&fp.trace_poly());
                    let mut iv = (root_intervals[k].1.clone(), root_intervals[k].2.clone());
                    sturm::refine(&sp, &mut iv);
                    root_intervals[k].1 = iv.0;
                    root_intervals[k].2 = iv.1;
                }
            }
        }
    }
    // sample points: before the first root, between roots, after the last
    let mut samples: Vec<BigRational> = Vec::new();
    if root_intervals.is_empty() {
        samples.push(BigRational::one());
    } else {
        let first_lo = &root_intervals[0].1;
        samples.push(if first_lo.is_positive() {
            first_lo / &two
        } else {
            BigRational::new(BigInt::one(), BigInt::from(1024))
        });
        for i in 0..root_intervals.len() - 1 {
            samples.push((&root_intervals[i].2 + &root_intervals[i + 1].1) / &two);
        }
        samples.push(&root_intervals[root_intervals.len() - 1].2 + BigRational::one());
    }
    let mut plateau_values = Vec::new();
    let mut values = Vec::new();
    for (k, s) in samples.iter().enumerate() {
        // nudge off an accidental root of Delta
        let mut sp = s.clone();
        let val = loop {
            match lt_signature_at(v, &CirclePoint::new(sp.clone())) {
                Ok(x) => break x,
                Err(CkError::SignatureAtJump) => {
                    sp += BigRational::new(BigInt::one(), BigInt::from(65537));
                }
                Err(e) => return Err(e),
            }
        };
        values.push(val);
        let lo = if k == 0 {
            BigRational::zero()
        } else {
            root_intervals[k - 1].2.clone()
        };
        let hi = root_intervals.get(k).map(|iv| iv.1.clone());
        plateau_values.push(Plateau { lo, hi, value: val });
    }
    if values.first() != Some(&0) {
        return Err(CkError::Internal(
            "signature near omega = 1 must vanish".into(),
        ));
    }
    let sigma_minus_one = lt_signature_at(v, &CirclePoint::minus_one())?;
    if values.last() != Some(&sigma_minus_one) {
        return Err(CkError::Internal(
            "last plateau must reach the value at -1".into(),
        ));
    }
    let mut jump_roots: Vec<(IntPoly, i64)> = Vec::new();
    for (i, (fi, _, _)) in root_intervals.iter().enumerate() {
        let jump = values[i + 1] - values[i];
        jump_roots.push((factors[*fi].clone(), jump));
    }
    // merge jumps of the same factor (conjugate root pairs counted separately)
    let mut merged: Vec<(IntPoly, i64)> = Vec::new();
    for (f, j) in jump_roots {
        if let Some(e) = merged.iter_mut().find(|(g, _)| *g == f) {
            if j.abs() > e.1.abs() {
                e.1 = j;
            }
        } else {
            merged.push((f, j));
        }
    }
    Ok(SignatureProfile {
        jump_roots: merged,
        plateau_values,
        sigma_minus_one,
    })
}
