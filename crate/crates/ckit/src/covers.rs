//! Branched cyclic covers and the order-2 character obstruction chain:
//! Fox's order formula, homology via Smith normal form, the metabolizer
//! character search, norm polynomials for trivial characters, the exact
//! Q(zeta_8) factor check, and quartic Galois classification.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::collections::{BTreeMap, BTreeSet};

use crate::arith::is_perfect_square;
use crate::error::{CkError, Result};
use crate::linalg::MatZ;
use crate::poly::{cyclotomic_poly, norm_np, CycloElement, CycloPoly, IntPoly};
use crate::seifert::SeifertMatrix;

/// Finite abelian group by invariant factors d_1 | d_2 | ... (each > 1).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbelianGroup {
    pub invariant_factors: Vec<BigInt>,
}

impl AbelianGroup {
    pub fn order(&self) -> BigInt {
        let mut o = BigInt::one();
        for d in &self.invariant_factors {
            o *= d;
        }
        o
    }

    pub fn is_trivial(&self) -> bool {
        self.invariant_factors.is_empty()
    }

    /// Plans doubling: the invariant-factor multiset splits into two equal
    /// halves.
    pub fn is_doubled(&self) -> bool {
        let mut counts: BTreeMap<&BigInt, usize> = BTreeMap::new();
        for d in &self.invariant_factors {
            *counts.entry(d).or_default() += 1;
        }
        counts.values().all(|c| c % 2 == 0)
    }

    /// The 2-primary parts of the invariant factors (powers of two > 1).
    pub fn two_torsion_shape(&self) -> Vec<BigInt> {
        let mut out = Vec::new();
        for d in &self.invariant_factors {
            let mut t = BigInt::one();
            let mut m = d.clone();
            while (&m % 2u32).is_zero() {
                t *= 2;
                m /= 2;
            }
            if !t.is_one() {
                out.push(t);
            }
        }
        out
    }
}

/// |prod_{i=1}^{p-1} d(zeta_p^i)| via the resultant with the p-th cyclotomic
/// polynomial; zero means infinite homology and is an error.
pub fn cover_order(d: &IntPoly, p: u32) -> Result<BigInt> {
    if d.is_zero() {
        return Err(CkError::ZeroAlexander);
    }
    let phi = cyclotomic_poly(p);
    let r = phi.resultant(d);
    if r.is_zero() {
        return Err(CkError::Domain(format!(
            "Alexander polynomial vanishes at a {p}-th root of unity"
        )));
    }
    Ok(r.abs())
}

/// H_1 of the p-fold branched cover, presented by the (p-1) x (p-1) block
/// Toeplitz matrix with diagonal V + V^t, superdiagonal V^t and subdiagonal V.
/// The convention is validated against Fox's order formula and Plans' theorem
/// by the callers' tests.
pub fn cover_homology(v: &SeifertMatrix, p: u32) -> Result<AbelianGroup> {
    assert!(p >= 2);
    let g2 = v.size();
    let rows = v.rows();
    let n = (p as usize - 1) * g2;
    let mut m = MatZ::zero(n, n);
    for b in 0..p as usize - 1 {
        for i in 0..g2 {
            for j in 0..g2 {
                let sym = &rows[i][j] + &rows[j][i];
                m.set(b * g2 + i, b * g2 + j, sym);
                if b + 1 < p as usize - 1 {
                    m.set(b * g2 + i, (b + 1) * g2 + j, rows[j][i].clone());
                    m.set((b + 1) * g2 + i, b * g2 + j, rows[i][j].clone());
                }
            }
        }
    }
    let diag = m.smith_diagonal();
    if diag.iter().any(|d| d.is_zero()) {
        return Err(CkError::Domain(format!(
            "infinite homology: the Alexander polynomial vanishes at a {p}-th root of unity"
        )));
    }
    Ok(AbelianGroup {
        invariant_factors: diag.into_iter().filter(|d| !d.is_one()).collect(),
    })
}

/// The twisted polynomial for the trivial character is the norm polynomial.
pub fn twisted_poly_trivial_char(d: &IntPoly, p: u32) -> Result<IntPoly> {
    norm_np(d, p)
}

// ---------------------------------------------------------------------------
// character search over the fixed 2-torsion group Z/8 + Z/8 + Z/2 + Z/2

const MODULI: [i64; 4] = [8, 8, 2, 2];

type Elt = [i64; 4];

/// Dense index of an element: a*32 + b*4 + c*2 + d.
fn elt_index(e: Elt) -> usize {
    (e[0].rem_euclid(8) * 32 + e[1].rem_euclid(8) * 4 + e[2].rem_euclid(2) * 2 + e[3].rem_euclid(2))
        as usize
}

fn elt_of_index(i: usize) -> Elt {
    [(i / 32) as i64, ((i / 4) % 8) as i64, ((i / 2) % 2) as i64, (i % 2) as i64]
}

/// Subgroups as 256-bit sets.
type Bits = [u64; 4];

fn bit_get(b: &Bits, i: usize) -> bool {
    b[i / 64] >> (i % 64) & 1 == 1
}

fn bit_set(b: &mut Bits, i: usize) {
    b[i / 64] |= 1 << (i % 64);
}

fn add_table() -> Vec<[u8; 256]> {
    let mut t = vec![[0u8; 256]; 256];
    for i in 0..256 {
        let a = elt_of_index(i);
        for j in 0..256 {
            let b = elt_of_index(j);
            let c = [
                (a[0] + b[0]).rem_euclid(8),
                (a[1] + b[1]).rem_euclid(8),
                (a[2] + b[2]).rem_euclid(2),
                (a[3] + b[3]).rem_euclid(2),
            ];
            t[i][j] = elt_index(c) as u8;
        }
    }
    t
}

#[cfg(test)]
fn closure_bits(gens: &[usize], table: &[[u8; 256]]) -> Bits {
    let mut set: Bits = [0; 4];
    bit_set(&mut set, 0);
    let mut frontier = vec![0usize];
    while let Some(x) = frontier.pop() {
        for &g in gens {
            let y = table[x][g] as usize;
            if !bit_get(&set, y) {
                bit_set(&mut set, y);
                frontier.push(y);
            }
        }
    }
    set
}

/// Extends a subgroup (given as a bitset) by one element: the union of the
/// cosets H + k g.
fn extend_subgroup(h: &Bits, g: usize, table: &[[u8; 256]]) -> Bits {
    // union of the cosets H + kg until kg lands back in H
    let mut out = *h;
    let mut shift = g;
    while !bit_get(h, shift) {
        for i in 0..256 {
            if bit_get(h, i) {
                bit_set(&mut out, table[i][shift] as usize);
            }
        }
        shift = table[shift][g] as usize;
    }
    out
}

fn elements_of(b: &Bits) -> Vec<Elt> {
    (0..256).filter(|&i| bit_get(b, i)).map(elt_of_index).collect()
}

#[cfg(test)]
fn closure(gens: &[Elt]) -> BTreeSet<Elt> {
    let table = add_table();
    let idxs: Vec<usize> = gens.iter().map(|&g| elt_index(g)).collect();
    elements_of(&closure_bits(&idxs, &table)).into_iter().collect()
}

/// All subgroups of Z/8 + Z/8 + Z/2 + Z/2, by closing one extra generator at
/// a time starting from the trivial subgroup.
fn all_subgroups() -> Vec<BTreeSet<Elt>> {
    let table = add_table();
    let mut trivial: Bits = [0; 4];
    bit_set(&mut trivial, 0);
    let mut seen: BTreeSet<Bits> = BTreeSet::new();
    seen.insert(trivial);
    let mut out = vec![trivial];
    let mut frontier = vec![trivial];
    while let Some(h) = frontier.pop() {
        for g in 1..256 {
            if bit_get(&h, g) {
                continue;
            }
            let sub = extend_subgroup(&h, g, &table);
            if seen.insert(sub) {
                out.push(sub);
                frontier.push(sub);
            }
        }
    }
    out.into_iter()
        .map(|b| elements_of(&b).into_iter().collect())
        .collect()
}

/// Independent count of order-16 subgroups: index-16 sublattices of Z^4
/// containing the relation lattice diag(8,8,2,2) Z^4, enumerated by column
/// Hermite normal forms.
fn hnf_order16_count() -> usize {
    // lower-triangular column HNF: H[j][j] > 0, 0 <= H[i][j] < H[i][i] for i > j
    // (columns generate the lattice); det = product of diagonals = index 16
    let mut count = 0usize;
    let divisors = |n: i64| -> Vec<i64> { (1..=n).filter(|d| n % d == 0).collect() };
    // diagonal tuples (d0,d1,d2,d3) with product 16
    let mut diags = Vec::new();
    for d0 in divisors(16) {
        for d1 in divisors(16 / d0) {
            for d2 in divisors(16 / (d0 * d1)) {
                let rest = 16 / (d0 * d1 * d2);
                diags.push([d0, d1, d2, rest]);
            }
        }
    }
    for diag in diags {
        // off-diagonal entries H[i][j], i > j, range over 0..diag[i]
        let ranges: Vec<(usize, usize)> =
            vec![(1, 0), (2, 0), (2, 1), (3, 0), (3, 1), (3, 2)];
        let sizes: Vec<i64> = ranges.iter().map(|&(i, _)| diag[i]).collect();
        let total: i64 = sizes.iter().product();
        for mut code in 0..total {
            let mut h = [[0i64; 4]; 4];
            for k in 0..4 {
                h[k][k] = diag[k];
            }
            for (slot, &(i, j)) in ranges.iter().enumerate() {
                let r = sizes[slot];
                h[i][j] = code % r;
                code /= r;
            }
            // containment: diag(8,8,2,2) e_j must be an integer combination of
            // the columns of h (forward substitution on the lower triangle)
            let mut ok = true;
            'cols: for j in 0..4 {
                let mut target = [0i64; 4];
                target[j] = MODULI[j];
                let mut coef = [0i64; 4];
                for i in 0..4 {
                    let mut acc = target[i];
                    for k in 0..i {
                        acc -= h[i][k] * coef[k];
                    }
                    if acc % h[i][i] != 0 {
                        ok = false;
                        break 'cols;
                    }
                    coef[i] = acc / h[i][i];
                }
            }
            if ok {
                count += 1;
            }
        }
    }
    count
}

/// Outcome of the exhaustive order-16 subgroup search.
#[derive(Clone, Debug)]
pub struct CharacterSearchReport {
    pub subgroups_total: usize,
    pub order16_count: usize,
    pub order16_independent_count: usize,
    pub all_admit_character: bool,
    pub counterexamples: Vec<Vec<[i64; 4]>>,
    pub branch_rule_agrees: bool,
}

/// The three candidate characters vanish on the last two coordinates; a
/// character (e1, e2) sends (a,b,c,d) to e1 a + e2 b mod 2.
fn character_vanishes(chi: (i64, i64), sub: &BTreeSet<Elt>) -> bool {
    sub.iter()
        .all(|x| (chi.0 * x[0] + chi.1 * x[1]) % 2 == 0)
}

/// The triangular-generating-set branch rule: pick the character from the
/// parities of the echelonized generators.
fn branch_character(sub: &BTreeSet<Elt>) -> Option<(i64, i64)> {
    let a1_odd = sub.iter().any(|x| x[0] % 2 == 1);
    if !a1_odd {
        return Some((1, 0));
    }
    // a1 odd: elements with first coordinate divisible by 8 (i.e. 0 in Z/8)
    let b2_odd = sub.iter().any(|x| x[0] == 0 && x[1] % 2 == 1);
    if b2_odd {
        return None; // the subgroup would have order >= 64: impossible at 16
    }
    let g0 = sub.iter().find(|x| x[0] % 2 == 1).unwrap();
    if g0[1] % 2 == 0 {
        Some((0, 1))
    } else {
        Some((1, 1))
    }
}

/// Enumerates every order-16 subgroup of Z/8 + Z/8 + Z/2 + Z/2 and checks that
/// a nontrivial Z/2 character vanishing on it (and on the last two
/// coordinates) exists; also reproduces the triangular case analysis and an
/// independent lattice count.
pub fn character_search() -> CharacterSearchReport {
    let subs = all_subgroups();
    let of16: Vec<&BTreeSet<Elt>> = subs.iter().filter(|s| s.len() == 16).collect();
    let mut all_ok = true;
    let mut branch_ok = true;
    let mut counterexamples = Vec::new();
    for sub in &of16 {
        let found: Vec<(i64, i64)> = [(1, 0), (0, 1), (1, 1)]
            .into_iter()
            .filter(|&chi| character_vanishes(chi, sub))
            .collect();
        if found.is_empty() {
            all_ok = false;
            counterexamples.push(sub.iter().cloned().collect::<Vec<_>>());
            continue;
        }
        match branch_character(sub) {
            Some(chi) => {
                if !character_vanishes(chi, sub) || !found.contains(&chi) {
                    branch_ok = false;
                }
            }
            None => branch_ok = false,
        }
    }
    CharacterSearchReport {
        subgroups_total: subs.len(),
        order16_count: of16.len(),
        order16_independent_count: hnf_order16_count(),
        all_admit_character: all_ok,
        counterexamples,
        branch_rule_agrees: branch_ok,
    }
}

// ---------------------------------------------------------------------------
// Q(zeta_8) factorization and quartic Galois classification

/// Multiplies the two quadratic factors with coefficients in Q(zeta_8) and
/// compares against t^4 - 8t^3 + 10t^2 - 8t + 1; also checks that each factor
/// is fixed by conjugation (real coefficients) and palindromic.
pub fn verify_zeta8_factorization() -> bool {
    let n = 8u32;
    let c = |coeffs: [i64; 4]| CycloElement {
        n,
        coeffs: coeffs
            .iter()
            .map(|&x| num_rational::BigRational::from_integer(BigInt::from(x)))
            .collect(),
    };
    // 2 z - 2 z^3 - 4 and -2 z + 2 z^3 - 4
    let c1 = c([-4, 2, 0, -2]);
    let c2 = c([-4, -2, 0, 2]);
    let one = CycloElement::from_int(n, 1);
    let f1 = CycloPoly::new(n, vec![one.clone(), c1.clone(), one.clone()]);
    let f2 = CycloPoly::new(n, vec![one.clone(), c2.clone(), one.clone()]);
    let target = CycloPoly::from_int_poly(n, &IntPoly::from_i64(&[1, -8, 10, -8, 1]));
    let product_ok = f1.mul(&f2) == target;
    let conj_fixes = f1.conj() == f1 && f2.conj() == f2;
    let distinct = f1 != f2;
    let palindromic = f1.is_palindromic() && f2.is_palindromic();
    product_ok && conj_fixes && distinct && palindromic
}

/// Galois group of an irreducible quartic over Q.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QuarticGaloisClass {
    C4,
    V4,
    D4,
    A4,
    S4,
}

impl QuarticGaloisClass {
    pub fn order(&self) -> u32 {
        match self {
            QuarticGaloisClass::C4 | QuarticGaloisClass::V4 => 4,
            QuarticGaloisClass::D4 => 8,
            QuarticGaloisClass::A4 => 12,
            QuarticGaloisClass::S4 => 24,
        }
    }

    pub fn is_abelian(&self) -> bool {
        matches!(self, QuarticGaloisClass::C4 | QuarticGaloisClass::V4)
    }
}

fn rational_roots_of_cubic(r: &IntPoly) -> Vec<BigInt> {
    // rational roots of a monic integer cubic are integers dividing the
    // constant term of the t^k-free part
    let mut out = Vec::new();
    let mut core = r.clone();
    while core.coeff(0).is_zero() && core.degree() > 0 {
        out.push(BigInt::zero());
        core = core.div_exact(&IntPoly::t()).expect("t divides");
    }
    let c0 = core.coeff(0);
    if !c0.is_zero() {
        let bound = c0.clone().abs();
        let mut d = BigInt::one();
        while &d <= &bound {
            if (&c0 % &d).is_zero() {
                for cand in [d.clone(), -d.clone()] {
                    if r.eval(&cand).is_zero() {
                        out.push(cand);
                    }
                }
            }
            d += 1;
        }
    }
    out.sort();
    out.dedup();
    out
}

/// Classification by the resolvent cubic and discriminant square tests.
/// The input must be an irreducible quartic (monic after a scale change).
pub fn quartic_galois(p: &IntPoly) -> Result<QuarticGaloisClass> {
    if p.degree() != 4 {
        return Err(CkError::Domain(format!(
            "quartic_galois needs a quartic, got degree {}",
            p.degree()
        )));
    }
    let fac = crate::poly::factor_rational(p)?;
    if fac.t_power != 0
        || fac.factors.len() != 1
        || fac.factors[0].1 != 1
        || fac.factors[0].0.degree() != 4
    {
        return Err(CkError::Domain("not irreducible".into()));
    }
    // monicize (Galois group is invariant under t -> t/lc)
    let lc = p.leading();
    let monic = if lc.is_one() {
        p.clone()
    } else {
        let mut v = vec![BigInt::zero(); 5];
        for (i, c) in p.coeffs().iter().enumerate() {
            v[i] = if i == 4 { BigInt::one() } else { c * lc.pow((3 - i) as u32) };
        }
        IntPoly::new(v)
    };
    let b = monic.coeff(3);
    let c = monic.coeff(2);
    let d = monic.coeff(1);
    let e = monic.coeff(0);
    // resolvent cubic y^3 - c y^2 + (bd - 4e) y - (b^2 e - 4 c e + d^2)
    let resolvent = IntPoly::new(vec![
        -(&b * &b * &e - BigInt::from(4) * &c * &e + &d * &d),
        &b * &d - BigInt::from(4) * &e,
        -c.clone(),
        BigInt::one(),
    ]);
    let disc = monic.discriminant();
    let disc_square = is_perfect_square(&disc);
    let roots = rational_roots_of_cubic(&resolvent);
    match roots.len() {
        0 => Ok(if disc_square {
            QuarticGaloisClass::A4
        } else {
            QuarticGaloisClass::S4
        }),
        3 => Ok(QuarticGaloisClass::V4),
        1 => {
            // C4 vs D4: C4 iff both auxiliary quadratics split over Q(sqrt disc)
            let r = &roots[0];
            let d1 = r * r - BigInt::from(4) * &e;
            let d2 = &b * &b - BigInt::from(4) * (&c - r);
            let splits = |dd: &BigInt| -> bool {
                if dd.is_zero() {
                    return true;
                }
                if is_perfect_square(dd) {
                    return true;
                }
                let prod = dd * &disc;
                !prod.is_negative() && is_perfect_square(&prod)
            };
            if splits(&d1) && splits(&d2) {
                Ok(QuarticGaloisClass::C4)
            } else {
                Ok(QuarticGaloisClass::D4)
            }
        }
        _ => Err(CkError::Internal(
            "cubic resolvent with two rational roots".into(),
        )),
    }
}

/// True iff the splitting field cannot embed in any 2-power cyclotomic field,
/// certified by a nonabelian Galois group. The false branch only means "no
/// obstruction from this test".
pub fn cyclotomic_embedding_obstruction(p: &IntPoly) -> Result<bool> {
    Ok(!quartic_galois(p)?.is_abelian())
}
