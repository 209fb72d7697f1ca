//! Factorization over Q (squarefree decomposition, lift mod p, Hensel,
//! subset recombination), with the reciprocal-pairing bookkeeping needed for
//! slice obstructions.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use std::collections::BTreeMap;
use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};

use super::mod_poly::{factor_squarefree, ModPoly};
use super::IntPoly;
use crate::error::{CkError, Result};

/// Complete factorization over Q of an integer polynomial, up to a power of t.
///
/// `factors` are primitive irreducible with positive leading coefficient;
/// `pairing[i] = Some(j)` links a non-symmetric factor to its reciprocal
/// partner when the partner occurs (j is an index into `factors`).
/// `content` carries the integer content (signed); it is 1 or -1 for the
/// normalized Alexander polynomials in scope.
#[derive(Clone, Debug)]
pub struct SymmetricFactorization {
    pub content: BigInt,
    pub t_power: usize,
    pub factors: Vec<(IntPoly, u32, bool)>, // (irreducible, exponent, symmetric?)
    pub pairing: BTreeMap<usize, usize>,
}

impl SymmetricFactorization {
    /// Multiplies the factorization back out (including content and t power).
    pub fn expand(&self) -> IntPoly {
        let mut acc = IntPoly::monomial(self.content.clone(), self.t_power);
        for (f, e, _) in &self.factors {
            for _ in 0..*e {
                acc = &acc * f;
            }
        }
        acc
    }
}

fn poly_seed(p: &IntPoly) -> u64 {
    let mut h = DefaultHasher::new();
    p.coeffs().hash(&mut h);
    h.finish()
}

/// Yun's squarefree decomposition of a primitive polynomial with positive
/// leading coefficient: returns [(g_i, i)] with p = prod g_i^i.
fn squarefree_decomposition(p: &IntPoly) -> Vec<(IntPoly, u32)> {
    let mut out = Vec::new();
    let g = p.gcd(&p.derivative());
    if g.degree() == 0 {
        out.push((p.clone(), 1));
        return out;
    }
    let mut w = exact_quotient(p, &g);
    let mut y = exact_quotient(&p.derivative(), &g);
    let mut i = 1u32;
    loop {
        let z = &y - &w.derivative();
        if z.is_zero() {
            if w.degree() > 0 {
                out.push((w, i));
            }
            break;
        }
        let gi = w.gcd(&z);
        if gi.degree() > 0 {
            out.push((gi.clone(), i));
        }
        w = exact_quotient(&w, &gi);
        y = exact_quotient(&z, &gi);
        i += 1;
    }
    out
}

/// Quotient of a by b when b divides a over Q, computed exactly over Z.
fn exact_quotient(a: &IntPoly, b: &IntPoly) -> IntPoly {
    if a.is_zero() {
        return IntPoly::zero();
    }
    let k = a.degree() - b.degree() + 1;
    let denom = b.leading().pow(k as u32);
    let scaled = a.scale(&denom);
    let q = scaled.div_exact(b).expect("exact_quotient: not divisible");
    let q0 = q
        .coeffs()
        .iter()
        .map(|x| {
            let (d, rem) = x.div_rem(&denom);
            debug_assert!(rem.is_zero(), "exact_quotient scaling");
            d
        })
        .collect::<Vec<_>>();
    IntPoly::new(q0)
}

/// Mignotte-style bound on factor coefficients of a monic integer polynomial.
fn factor_bound(p: &IntPoly) -> BigInt {
    let d = p.degree() as u32;
    let norm2_sq: BigInt = p.coeffs().iter().map(|c| c * c).sum();
    let norm2 = norm2_sq.sqrt() + 1;
    (BigInt::one() << d) * norm2
}

mod pk {
    //! Polynomials with coefficients mod p^k, for Hensel lifting (monic case).
    use num_bigint::BigInt;
    use num_integer::Integer;
    use num_traits::Zero;

    #[derive(Clone, Debug, PartialEq)]
    pub struct Pk {
        pub coeffs: Vec<BigInt>,
    }

    pub fn red(v: Vec<BigInt>, m: &BigInt) -> Pk {
        let mut v: Vec<BigInt> = v.into_iter().map(|c| c.mod_floor(m)).collect();
        while v.last().map_or(false, |c| c.is_zero()) {
            v.pop();
        }
        Pk { coeffs: v }
    }

    impl Pk {
        pub fn coeff(&self, i: usize) -> BigInt {
            self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
        }
        pub fn degree(&self) -> usize {
            self.coeffs.len().saturating_sub(1)
        }
        pub fn is_zero(&self) -> bool {
            self.coeffs.is_empty()
        }
    }

    pub fn add(a: &Pk, b: &Pk, m: &BigInt) -> Pk {
        let n = a.coeffs.len().max(b.coeffs.len());
        red((0..n).map(|i| a.coeff(i) + b.coeff(i)).collect(), m)
    }

    pub fn sub(a: &Pk, b: &Pk, m: &BigInt) -> Pk {
        let n = a.coeffs.len().max(b.coeffs.len());
        red((0..n).map(|i| a.coeff(i) - b.coeff(i)).collect(), m)
    }

    pub fn mul(a: &Pk, b: &Pk, m: &BigInt) -> Pk {
        if a.is_zero() || b.is_zero() {
            return Pk { coeffs: vec![] };
        }
        let mut v = vec![BigInt::zero(); a.coeffs.len() + b.coeffs.len() - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            for (j, y) in b.coeffs.iter().enumerate() {
                v[i + j] += x * y;
            }
        }
        red(v, m)
    }

    /// Division by a monic divisor, mod m.
    pub fn div_rem_monic(a: &Pk, d: &Pk, m: &BigInt) -> (Pk, Pk) {
        assert!(d.coeffs.last().map_or(false, |c| c == &BigInt::from(1)), "divisor must be monic");
        if a.degree() < d.degree() || a.is_zero() {
            return (Pk { coeffs: vec![] }, a.clone());
        }
        let n = d.coeffs.len();
        let mut rem = a.coeffs.clone();
        let mut q = vec![BigInt::zero(); rem.len() - n + 1];
        for i in (0..q.len()).rev() {
            let c = rem[i + n - 1].mod_floor(m);
            if c.is_zero() {
                rem[i + n - 1] = BigInt::zero();
                continue;
            }
            q[i] = c.clone();
            for j in 0..n {
                let t = &rem[i + j] - &c * &d.coeffs[j];
                rem[i + j] = t.mod_floor(m);
            }
        }
        (red(q, m), red(rem, m))
    }
}

/// One quadratic Hensel step: from mod m to mod m^2 (all polys monic where
/// required; f = g*h, s*g + t*h = 1 mod m).
fn hensel_step(
    f: &IntPoly,
    m: &BigInt,
    g: &pk::Pk,
    h: &pk::Pk,
    s: &pk::Pk,
    t: &pk::Pk,
) -> (pk::Pk, pk::Pk, pk::Pk, pk::Pk) {
    let m2 = m * m;
    let fm = pk::red(f.coeffs().to_vec(), &m2);
    let e = pk::sub(&fm, &pk::mul(g, h, &m2), &m2);
    let (q, r) = pk::div_rem_monic(&pk::mul(s, &e, &m2), h, &m2);
    let gstar = pk::add(&pk::add(g, &pk::mul(t, &e, &m2), &m2), &pk::mul(&q, g, &m2), &m2);
    let hstar = pk::add(h, &r, &m2);
    let one = pk::red(vec![BigInt::one()], &m2);
    let b = pk::sub(
        &pk::add(&pk::mul(s, &gstar, &m2), &pk::mul(t, &hstar, &m2), &m2),
        &one,
        &m2,
    );
    let (c, d) = pk::div_rem_monic(&pk::mul(s, &b, &m2), &hstar, &m2);
    let sstar = pk::sub(s, &d, &m2);
    let tstar = pk::sub(&pk::sub(t, &pk::mul(t, &b, &m2), &m2), &pk::mul(&c, &gstar, &m2), &m2);
    (gstar, hstar, sstar, tstar)
}

fn to_pk(mp: &ModPoly, m: &BigInt) -> pk::Pk {
    pk::red(mp.coeffs.iter().map(|&c| BigInt::from(c)).collect(), m)
}

/// Lifts the factorization f = prod factors (mod p) to mod p^(2^j) >= bound.
fn hensel_lift_tree(f: &IntPoly, factors: &[ModPoly], p: u64, target: &BigInt) -> Vec<pk::Pk> {
    if factors.len() == 1 {
        let mut m = BigInt::from(p);
        while &m < target {
            m = &m * &m;
        }
        return vec![pk::red(f.coeffs().to_vec(), &m)];
    }
    let mid = factors.len() / 2;
    let (left, right) = factors.split_at(mid);
    let mut gp = ModPoly::one(p);
    for q in left {
        gp = gp.mul(q);
    }
    let mut hp = ModPoly::one(p);
    for q in right {
        hp = hp.mul(q);
    }
    let (one, s, t) = gp.xgcd(&hp);
    assert_eq!(one.degree(), 0, "modular factors not coprime");
    let mut m = BigInt::from(p);
    let mut g = to_pk(&gp, &m);
    let mut h = to_pk(&hp, &m);
    let mut sg = to_pk(&s, &m);
    let mut th = to_pk(&t, &m);
    while &m < target {
        let (g2, h2, s2, t2) = hensel_step(f, &m, &g, &h, &sg, &th);
        m = &m * &m;
        g = g2;
        h = h2;
        sg = s2;
        th = t2;
    }
    let gi = IntPoly::new(centered(&g, &m));
    let hi = IntPoly::new(centered(&h, &m));
    let mut out = hensel_lift_tree(&gi, left, p, target);
    out.extend(hensel_lift_tree(&hi, right, p, target));
    out
}

fn centered(q: &pk::Pk, m: &BigInt) -> Vec<BigInt> {
    let half = m / 2;
    q.coeffs
        .iter()
        .map(|c| {
            let r = c.mod_floor(m);
            if r > half {
                r - m
            } else {
                r
            }
        })
        .collect()
}

/// Factors a primitive squarefree polynomial (positive lc) into primitive
/// irreducibles over Q.
fn factor_squarefree_z(p: &IntPoly) -> Vec<IntPoly> {
    let d = p.degree();
    if d <= 1 {
        return vec![p.clone()];
    }
    // monicize: g(t) = lc^(d-1) p(t/lc), so g_i = p_i lc^(d-1-i) and g_d = 1
    let lc = p.leading();
    let g = if lc.is_one() {
        p.clone()
    } else {
        let mut v = vec![BigInt::zero(); d + 1];
        for (i, c) in p.coeffs().iter().enumerate() {
            if i == d {
                v[i] = BigInt::one();
            } else {
                v[i] = c * lc.pow((d - 1 - i) as u32);
            }
        }
        IntPoly::new(v)
    };
    debug_assert!(g.is_monic());
    // pick an odd prime where g stays squarefree
    let mut prime = 3u64;
    let modp = loop {
        let cs: Vec<u64> = g
            .coeffs()
            .iter()
            .map(|c| c.mod_floor(&BigInt::from(prime)).to_u64().unwrap())
            .collect();
        let mp = ModPoly::new(prime, cs);
        if mp.degree() == d && mp.is_squarefree() {
            break mp;
        }
        prime = next_prime(prime);
    };
    let mod_factors = factor_squarefree(&modp, poly_seed(p));
    if mod_factors.len() == 1 {
        return vec![p.clone()];
    }
    let bound = factor_bound(&g) * BigInt::from(2);
    let lifted = hensel_lift_tree(&g, &mod_factors, prime, &bound);
    let mut m = BigInt::from(prime);
    while m < bound {
        m = &m * &m;
    }
    // subset recombination against g (monic), translating back to p at the end
    let mut avail: Vec<IntPoly> = lifted
        .iter()
        .map(|q| IntPoly::new(centered(q, &m)))
        .collect();
    let mut found_monic: Vec<IntPoly> = Vec::new();
    let mut rest = g.clone();
    let mut size = 1usize;
    while 2 * size <= avail.len() {
        let mut done_at_this_size = false;
        'subsets: for subset in subsets(avail.len(), size) {
            let mut cand = pk::red(vec![BigInt::one()], &m);
            for &i in &subset {
                cand = pk::mul(&cand, &pk::red(avail[i].coeffs().to_vec(), &m), &m);
            }
            let cand = IntPoly::new(centered(&cand, &m));
            if let Some(q) = rest.div_exact(&cand) {
                found_monic.push(cand);
                rest = q;
                let mut keep = Vec::new();
                for (i, f) in avail.into_iter().enumerate() {
                    if !subset.contains(&i) {
                        keep.push(f);
                    }
                }
                avail = keep;
                done_at_this_size = true;
                break 'subsets;
            }
        }
        if !done_at_this_size {
            size += 1;
        }
    }
    if rest.degree() > 0 {
        found_monic.push(rest);
    }
    // map factors of g back to factors of p: h(t) -> primitive(h(lc * t))
    found_monic
        .into_iter()
        .map(|h| {
            if lc.is_one() {
                h
            } else {
                h.compose_scale(&lc).primitive().1
            }
        })
        .collect()
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    go(0, n, k, &mut cur, &mut out);
    out
}

fn next_prime(p: u64) -> u64 {
    let mut q = p + 2;
    while !crate::arith::is_prime_u64(q) {
        q += 2;
    }
    q
}

/// Normalized reciprocal: primitive reverse with positive leading coefficient.
fn reciprocal_normed(p: &IntPoly) -> IntPoly {
    p.reverse().primitive().1
}

/// Complete irreducible factorization over Q with symmetry flags and
/// reciprocal pairing.
pub fn factor_rational(p: &IntPoly) -> Result<SymmetricFactorization> {
    if p.is_zero() {
        return Err(CkError::ZeroAlexander);
    }
    // strip power of t
    let mut t_power = 0usize;
    let mut cs = p.coeffs().to_vec();
    while cs.first().map_or(false, |c| c.is_zero()) {
        cs.remove(0);
        t_power += 1;
    }
    let stripped = IntPoly::new(cs);
    let (content, prim) = stripped.primitive();
    let mut factors: Vec<(IntPoly, u32, bool)> = Vec::new();
    if prim.degree() == 0 {
        return Ok(SymmetricFactorization {
            content: &content * prim.coeff(0),
            t_power,
            factors,
            pairing: BTreeMap::new(),
        });
    }
    for (sf, mult) in squarefree_decomposition(&prim) {
        for irr in factor_squarefree_z(&sf) {
            let sym = irr.is_symmetric();
            factors.push((irr, mult, sym));
        }
    }
    factors.sort_by(|a, b| {
        (a.0.degree(), a.0.coeffs(), a.1).cmp(&(b.0.degree(), b.0.coeffs(), b.1))
    });
    // merge duplicates (same irreducible from different multiplicities cannot
    // occur by construction, but be safe)
    let mut merged: Vec<(IntPoly, u32, bool)> = Vec::new();
    for (f, e, s) in factors {
        if let Some(last) = merged.last_mut() {
            if last.0 == f {
                last.1 += e;
                continue;
            }
        }
        merged.push((f, e, s));
    }
    let mut pairing = BTreeMap::new();
    for i in 0..merged.len() {
        if merged[i].2 {
            continue;
        }
        let rec = reciprocal_normed(&merged[i].0);
        if let Some(j) = merged.iter().position(|(f, _, _)| *f == rec) {
            pairing.insert(i, j);
        }
    }
    Ok(SymmetricFactorization {
        content,
        t_power,
        factors: merged,
        pairing,
    })
}

/// Fox-Milnor test: does p factor (over Q, up to units and powers of t) as
/// f(t) f(1/t)?  Decided by parity of symmetric factors and reciprocal
/// pairing of the others.
pub fn fox_milnor_form(p: &IntPoly) -> Result<bool> {
    let fac = factor_rational(p)?;
    for (i, (f, e, sym)) in fac.factors.iter().enumerate() {
        if *sym {
            if e % 2 == 1 {
                return Ok(false);
            }
        } else {
            match fac.pairing.get(&i) {
                Some(&j) => {
                    if fac.factors[j].1 != *e {
                        return Ok(false);
                    }
                }
                None => {
                    let _ = f;
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Minimal Alexander degree over the concordance class, given the set of
/// obstructed symmetric irreducible factors.
pub fn min_concordant_degree(p: &IntPoly, obstructed: &[IntPoly]) -> Result<usize> {
    let fac = factor_rational(p)?;
    for ob in obstructed {
        if !p.divisible_by(ob) {
            return Err(CkError::Domain(format!(
                "obstructed factor {ob} does not divide {p}"
            )));
        }
    }
    let mut total = 0usize;
    for (f, e, sym) in &fac.factors {
        if !*sym {
            continue;
        }
        let e_eff = if e % 2 == 1 {
            1
        } else if obstructed.iter().any(|ob| ob == f || *ob == -f) {
            2
        } else {
            0
        };
        total += e_eff * f.degree();
    }
    Ok(total)
}
