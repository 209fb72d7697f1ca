//! Property suites: the module-level invariants, each backed by an
//! independent oracle where one is called for.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use ckit::covers::{cover_order, quartic_galois, twisted_poly_trivial_char};
use ckit::engine::{analyze, resolve_name, AnalyzeOptions};
use ckit::isometric::{decompose, witt_trivial_sum, Verdict};
use ckit::linalg::MatQ;
use ckit::poly::{
    cyclotomic_poly, eval_cyclotomic, factor_rational, fox_milnor_form, min_concordant_degree,
    normalize_alexander, norm_np, IntPoly, LaurentPoly,
};
use ckit::seifert::{
    alexander, ingest, invertible_representative, isometric_structure, lt_signature_at,
    signature, signature_profile, CirclePoint, KnotRecord,
};
use ckit::witt::{
    boundary_p, boundary_p_unit, diagonalize, finite_trivial, hilbert_symbol, is_square_qp,
    trivial_over_q, trivial_over_qp, DiagonalForm, Place, SymForm,
};

fn fixtures() -> Vec<KnotRecord> {
    let text = std::fs::read_to_string(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/../../fixtures/knots.json"
    ))
    .unwrap();
    ingest(&text).unwrap()
}

fn rng(salt: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(0xC0FFEE ^ salt)
}

fn random_poly(rng: &mut ChaCha8Rng, deg: usize, bound: i64) -> IntPoly {
    loop {
        let cs: Vec<i64> = (0..=deg).map(|_| rng.gen_range(-bound..=bound)).collect();
        let p = IntPoly::from_i64(&cs);
        if p.degree() == deg && !p.is_zero() {
            return p;
        }
    }
}

// ---------------------------------------------------------------------------
// poly

#[test]
fn normalize_idempotent_and_multiplicative() {
    let mut r = rng(1);
    for _ in 0..60 {
        let a = { let d = r.gen_range(0..5); random_poly(&mut r, d, 6) };
        let b = { let d = r.gen_range(0..5); random_poly(&mut r, d, 6) };
        if a.constant_term().is_zero() || b.constant_term().is_zero() {
            // shifts are exercised through Laurent input below
        }
        let off_a = r.gen_range(-3i64..3);
        let la = LaurentPoly::new(a.coeffs().to_vec(), off_a);
        let na = normalize_alexander(&la).unwrap();
        // idempotent
        let n2 = normalize_alexander(&LaurentPoly::from_poly(&na)).unwrap();
        assert_eq!(na, n2);
        // multiplicative up to unit (and powers of t)
        let prod = &a * &b;
        let np = normalize_alexander(&LaurentPoly::new(prod.coeffs().to_vec(), 0)).unwrap();
        let nb = normalize_alexander(&LaurentPoly::new(b.coeffs().to_vec(), 0)).unwrap();
        let direct = &na * &nb;
        let direct = normalize_alexander(&LaurentPoly::from_poly(&direct)).unwrap();
        assert_eq!(np, direct);
    }
}

/// Kronecker's method: an independent certificate that a polynomial has no
/// factor of degree <= deg/2 (interpolation through divisor tuples).
fn kronecker_irreducible(p: &IntPoly) -> bool {
    let d = p.degree();
    if d <= 1 {
        return true;
    }
    let divisors = |n: &BigInt| -> Vec<BigInt> {
        let mut out = Vec::new();
        let na = n.abs();
        let mut k = BigInt::one();
        while &k * &k <= na {
            if (&na % &k).is_zero() {
                let other = &na / &k;
                for v in [k.clone(), -k.clone(), other.clone(), -other] {
                    if !out.contains(&v) {
                        out.push(v);
                    }
                }
            }
            k += 1;
        }
        out
    };
    for fd in 1..=d / 2 {
        // evaluation points 0..fd
        let points: Vec<BigInt> = (0..=fd as i64).map(BigInt::from).collect();
        let values: Vec<BigInt> = points.iter().map(|x| p.eval(x)).collect();
        if values.iter().any(|v| v.is_zero()) {
            return false; // integer root
        }
        let choice_lists: Vec<Vec<BigInt>> = values.iter().map(divisors).collect();
        let mut stack: Vec<Vec<BigInt>> = vec![vec![]];
        for list in &choice_lists {
            let mut next = Vec::new();
            for partial in &stack {
                for v in list {
                    let mut p2 = partial.clone();
                    p2.push(v.clone());
                    next.push(p2);
                }
            }
            stack = next;
        }
        for combo in stack {
            let pts: Vec<(BigInt, BigInt)> = points.iter().cloned().zip(combo).collect();
            if let Some(candidate) = interpolate(&pts) {
                if candidate.degree() == fd
                    && !candidate.is_zero()
                    && candidate.degree() < d
                    && p.divisible_by(&candidate)
                {
                    return false;
                }
            }
        }
    }
    true
}

fn interpolate(points: &[(BigInt, BigInt)]) -> Option<IntPoly> {
    let n = points.len();
    let mut acc = vec![BigRational::zero(); n];
    for (i, (xi, yi)) in points.iter().enumerate() {
        let mut numer = vec![BigRational::one()];
        let mut denom = BigRational::one();
        for (j, (xj, _)) in points.iter().enumerate() {
            if i == j {
                continue;
            }
            let mut next = vec![BigRational::zero(); numer.len() + 1];
            for (k, c) in numer.iter().enumerate() {
                next[k + 1] += c;
                next[k] -= c * BigRational::from_integer(xj.clone());
            }
            numer = next;
            denom *= BigRational::from_integer(xi - xj);
        }
        let scale = BigRational::from_integer(yi.clone()) / denom;
        for (k, c) in numer.iter().enumerate() {
            acc[k] += c * &scale;
        }
    }
    let mut out = Vec::with_capacity(n);
    for c in acc {
        if !c.denom().is_one() {
            return None;
        }
        out.push(c.to_integer());
    }
    Some(IntPoly::new(out))
}

#[test]
fn factorization_round_trip_and_certificates() {
    let mut r = rng(2);
    let knot_polys = [
        IntPoly::from_i64(&[1, -5, 10, -13, 10, -5, 1]),
        IntPoly::from_i64(&[1, -4, 8, -12, 13, -12, 8, -4, 1]),
        IntPoly::from_i64(&[1, -3, 3, -3, 1]),
        IntPoly::from_i64(&[1, -7, 18, -23, 18, -7, 1]),
    ];
    for p in knot_polys {
        let fac = factor_rational(&p).unwrap();
        assert_eq!(fac.expand(), p, "round trip for {p:?}");
        for (f, _, _) in &fac.factors {
            assert!(kronecker_irreducible(f), "{f:?} fails the Kronecker check");
        }
    }
    for _ in 0..25 {
        let a = { let d = r.gen_range(1..4); random_poly(&mut r, d, 4) };
        let b = { let d = r.gen_range(1..4); random_poly(&mut r, d, 4) };
        let prod = &a * &b;
        if prod.is_zero() {
            continue;
        }
        let fac = factor_rational(&prod).unwrap();
        assert_eq!(fac.expand(), prod, "round trip for {a:?} * {b:?}");
        for (f, _, _) in &fac.factors {
            if f.degree() <= 8 {
                assert!(kronecker_irreducible(f), "{f:?}");
            }
        }
    }
}

#[test]
fn fox_milnor_on_reciprocal_products() {
    let mut r = rng(3);
    let mut done = 0;
    while done < 200 {
        let p = { let d = r.gen_range(1..=5); random_poly(&mut r, d, 5) };
        if p.constant_term().is_zero() {
            continue;
        }
        let prod = &p * &p.reverse();
        assert!(
            fox_milnor_form(&prod).unwrap(),
            "p = {p:?} gives {prod:?}"
        );
        done += 1;
    }
}

#[test]
fn norm_polynomial_roots_are_powers() {
    let mut r = rng(4);
    for _ in 0..40 {
        let q = [2u32, 3, 5][r.gen_range(0..3)];
        let p = random_poly(&mut r, 4, 5);
        if p.constant_term().is_zero() {
            continue;
        }
        let n = norm_np(&p, q).unwrap();
        assert_eq!(n.degree(), p.degree(), "degree for {p:?}, q = {q}");
        // exact root-multiset oracle: every root r of p satisfies N(r^q) = 0,
        // so p divides N(x^q); with matching degrees and multiplicities this
        // pins the multiset exactly
        let mut composed = vec![BigInt::zero(); n.degree() * q as usize + 1];
        for (i, c) in n.coeffs().iter().enumerate() {
            composed[i * q as usize] = c.clone();
        }
        let composed = IntPoly::new(composed);
        assert!(
            composed.divisible_by(&p),
            "p = {p:?}, q = {q}: N(x^q) not divisible by p"
        );
    }
}

#[test]
fn resultant_vanishes_iff_common_factor() {
    let mut r = rng(5);
    for _ in 0..80 {
        let a = { let d = r.gen_range(1..4); random_poly(&mut r, d, 3) };
        let b = { let d = r.gen_range(1..4); random_poly(&mut r, d, 3) };
        let res = a.resultant(&b);
        let g = a.gcd(&b);
        assert_eq!(res.is_zero(), g.degree() >= 1, "a = {a:?}, b = {b:?}");
    }
}

#[test]
fn cyclotomic_norms_are_integers() {
    let mut r = rng(6);
    for n in [3u32, 5, 8, 12] {
        let phi = cyclotomic_poly(n);
        for _ in 0..12 {
            let p = { let d = r.gen_range(0..4); random_poly(&mut r, d, 4) };
            // the full conjugate product is the resultant, a rational integer
            let res = phi.resultant(&p);
            // evaluate p at zeta and multiply over the primitive classes by
            // multiplying the conjugates pairwise through the power basis
            let e = eval_cyclotomic(&p, n);
            let _ = e; // the element itself is exercised; the norm identity:
            if p.is_zero() {
                continue;
            }
            // n = 3 positivity: |p(zeta_3)|^2 = res when nonzero
            if n == 3 && !res.is_zero() {
                assert!(res.is_positive(), "norm at zeta_3 must be positive: {p:?}");
            }
        }
    }
    // spot identity: product of p(zeta) over conjugates equals the resultant
    let p = IntPoly::from_i64(&[1, -1, 1]);
    let e = eval_cyclotomic(&p, 3);
    let c = e.conj();
    let prod = &e * &c;
    assert_eq!(prod.is_rational(), Some(BigRational::from_integer(4.into())));
    assert_eq!(cyclotomic_poly(3).resultant(&p), BigInt::from(4));
}

// ---------------------------------------------------------------------------
// seifert

#[test]
fn alexander_symmetry_and_determinant_unit() {
    for k in fixtures() {
        let d = alexander(&k.seifert);
        let rev = d.reverse();
        assert!(d == rev || d == -&rev, "{}: Delta not symmetric", k.name);
        let at_one = d.eval(&BigInt::one());
        assert!(at_one.abs().is_one(), "{}: |Delta(1)| != 1", k.name);
    }
}

#[test]
fn signatures_additive_and_consistent() {
    let recs = fixtures();
    let a = resolve_name(&recs, "6_2").unwrap().seifert;
    let b = resolve_name(&recs, "9_40").unwrap().seifert;
    let sum = a.block_sum(&b);
    assert_eq!(signature(&sum), signature(&a) + signature(&b));
    let w = CirclePoint::from_i64(3, 5);
    assert_eq!(
        lt_signature_at(&sum, &w).unwrap(),
        lt_signature_at(&a, &w).unwrap() + lt_signature_at(&b, &w).unwrap()
    );
    for k in &recs {
        assert_eq!(
            lt_signature_at(&k.seifert, &CirclePoint::minus_one()).unwrap(),
            signature(&k.seifert),
            "{}",
            k.name
        );
    }
}

#[test]
fn profiles_start_at_zero_and_jump_where_allowed() {
    for k in fixtures() {
        let prof = signature_profile(&k.seifert).unwrap();
        assert_eq!(prof.plateau_values[0].value, 0, "{}", k.name);
        assert_eq!(
            prof.plateau_values.last().unwrap().value,
            prof.sigma_minus_one,
            "{}",
            k.name
        );
        // jumps only at symmetric factors with unit-circle roots
        let d = alexander(&k.seifert);
        let fac = factor_rational(&d).unwrap();
        for (f, j) in &prof.jump_roots {
            if *j != 0 {
                assert!(
                    fac.factors.iter().any(|(g, _, s)| g == f && *s),
                    "{}: jump at a non-factor",
                    k.name
                );
            }
        }
    }
}

#[test]
fn invertible_representative_preserves_class_data() {
    let recs = fixtures();
    let k942 = resolve_name(&recs, "9_42").unwrap().seifert;
    let red = invertible_representative(&k942);
    assert_eq!(red.size(), 4);
    assert_eq!(alexander(&red), alexander(&k942));
    let p1 = signature_profile(&k942).unwrap();
    let p2 = signature_profile(&red).unwrap();
    assert_eq!(p1.sigma_minus_one, p2.sigma_minus_one);
    let v1: Vec<i64> = p1.plateau_values.iter().map(|p| p.value).collect();
    let v2: Vec<i64> = p2.plateau_values.iter().map(|p| p.value).collect();
    assert_eq!(v1, v2);
    // factor exponent parity is preserved (here: equality of polynomials)
    assert_eq!(
        factor_rational(&alexander(&red)).unwrap().expand(),
        factor_rational(&alexander(&k942)).unwrap().expand()
    );
}

#[test]
fn stabilized_matrix_reduces_to_the_same_witt_class() {
    // hyperbolic + V2 reduces to a 4x4 matrix Witt-equivalent to V2
    let recs = fixtures();
    let v2 = resolve_name(&recs, "10_82_quartic_rep").unwrap().seifert;
    let hy = resolve_name(&recs, "unknot").unwrap().seifert;
    let stab = hy.block_sum(&v2);
    let red = invertible_representative(&stab);
    assert_eq!(red.size(), 4);
    let s1 = isometric_structure(&red).unwrap();
    let s2 = isometric_structure(&v2).unwrap();
    let v = witt_trivial_sum(&[s1, s2.negate()]);
    assert_eq!(v.value, Verdict::Trivial, "{}", v.witness);
}

#[test]
fn bundle_contains_the_table_knots() {
    let recs = fixtures();
    for name in ["6_2", "8_18", "9_40", "9_42", "10_82"] {
        let k = resolve_name(&recs, name).unwrap();
        assert!(k.genus3.is_some(), "{name} carries table data");
    }
    assert_eq!(
        recs.iter().filter(|r| r.genus3.is_some()).count(),
        6 // five table knots plus the unknot
    );
}

#[test]
fn relevant_primes_of_the_quartic_representative() {
    let recs = fixtures();
    let v2 = resolve_name(&recs, "10_82_quartic_rep").unwrap().seifert;
    let s = isometric_structure(&v2).unwrap();
    // det(V2 + V2^t) = -7, disc(quartic) = -448 = -(2^6) 7
    assert_eq!(
        ckit::isometric::relevant_primes(&s),
        vec![BigInt::from(2), BigInt::from(7)]
    );
}

#[test]
fn isometric_structure_satisfies_the_isometry_equation() {
    for k in fixtures() {
        let red = invertible_representative(&k.seifert);
        if red.size() == 0 {
            continue;
        }
        let s = isometric_structure(&red).unwrap();
        let lhs = s.t().transpose().mul(s.q()).mul(s.t());
        assert_eq!(&lhs, s.q(), "{}", k.name);
        assert!(!s.q().det().is_zero());
    }
}

// ---------------------------------------------------------------------------
// witt

fn random_diag(r: &mut ChaCha8Rng, rank: usize, bound: i64) -> DiagonalForm {
    DiagonalForm {
        entries: (0..rank)
            .map(|_| loop {
                let v = r.gen_range(-bound..=bound);
                if v != 0 {
                    break ckit::arith::squarefree_part(&BigInt::from(v));
                }
            })
            .collect(),
    }
}

#[test]
fn diagonalize_preserves_invariants() {
    let mut r = rng(7);
    let mut done = 0;
    while done < 40 {
        let n = r.gen_range(2..=5);
        let mut m = vec![vec![0i64; n]; n];
        for i in 0..n {
            for j in 0..=i {
                let v = r.gen_range(-6i64..=6);
                m[i][j] = v;
                m[j][i] = v;
            }
        }
        let q = MatQ::from_i64(&m);
        if q.det().is_zero() {
            continue;
        }
        done += 1;
        let form = SymForm::new(q.clone()).unwrap();
        let d = diagonalize(&form).unwrap();
        assert_eq!(d.rank(), n);
        assert_eq!(d.signature(), q.signature());
        // discriminants agree modulo squares
        let det = q.det();
        let disc_q = ckit::arith::squarefree_part(&(det.numer() * det.denom()));
        assert_eq!(d.disc(), disc_q);
    }
}

#[test]
fn boundary_maps_are_additive_and_kill_inverses() {
    let mut r = rng(8);
    for _ in 0..50 {
        let d = { let d = r.gen_range(1..=4); random_diag(&mut r, d, 30) };
        let e = { let d = r.gen_range(1..=4); random_diag(&mut r, d, 30) };
        for pr in [3i64, 5, 7] {
            let p = BigInt::from(pr);
            let dd = d.direct_sum(&d.negate());
            assert!(finite_trivial(&boundary_p(&dd, &p)), "{dd:?} at {pr}");
            // additivity: classes concatenate
            let sum = d.direct_sum(&e);
            let mut joined = boundary_p(&d, &p).entries;
            joined.extend(boundary_p(&e, &p).entries);
            assert_eq!(boundary_p(&sum, &p).entries, joined);
        }
    }
}

/// Isotropy oracle: for rank-4 forms over Q_p (p odd), Witt triviality is
/// equivalent to square discriminant plus isotropy. Witnesses are certified
/// by a unit gradient (Hensel-liftable); misses are flagged, not failed.
#[test]
fn local_trivaility_matches_isotropy_search() {
    let mut r = rng(9);
    let mut flagged = 0usize;
    for _ in 0..100 {
        let d = random_diag(&mut r, 4, 30);
        for pr in [3u64, 5, 7] {
            let p = BigInt::from(pr);
            let trivial = trivial_over_qp(&d, &p);
            let disc_sq = is_square_qp(&d.disc(), &p);
            let witness = isotropy_witness_mod_p(&d, pr);
            match (trivial, disc_sq, witness) {
                (true, ds, Some(_)) => assert!(ds, "trivial but disc not square: {d:?} at {pr}"),
                (true, _, None) => {
                    // trivial forms are isotropic; the witness search can only
                    // miss when every witness needs a deep Hensel lift
                    flagged += 1;
                    println!("flagged (no shallow witness): {:?} at {pr}", d.entries);
                }
                (false, true, Some(w)) => {
                    panic!("nontrivial rank-4 with square disc cannot be isotropic: {d:?} at {pr}, witness {w:?}")
                }
                (false, _, _) => {}
            }
        }
    }
    println!("isotropy oracle: {flagged} flagged cases");
}

fn isotropy_witness_mod_p(d: &DiagonalForm, p: u64) -> Option<[u64; 4]> {
    let entries: Vec<i64> = d
        .entries
        .iter()
        .map(|e| {
            let m = e % BigInt::from(p);
            let mut v = 0i64;
            let mut digits = m.to_string().parse::<i64>().unwrap_or(0);
            digits = digits.rem_euclid(p as i64);
            v += digits;
            v
        })
        .collect();
    for x0 in 0..p {
        for x1 in 0..p {
            for x2 in 0..p {
                for x3 in 0..p {
                    let xs = [x0, x1, x2, x3];
                    if xs.iter().all(|&x| x == 0) {
                        continue;
                    }
                    let q: i64 = xs
                        .iter()
                        .zip(&entries)
                        .map(|(&x, &a)| a * (x * x) as i64)
                        .sum();
                    if q.rem_euclid(p as i64) != 0 {
                        continue;
                    }
                    // unit gradient: 2 a_i x_i nonzero mod p for some i
                    let grad_unit = xs
                        .iter()
                        .zip(&entries)
                        .any(|(&x, &a)| (2 * a * x as i64).rem_euclid(p as i64) != 0);
                    if grad_unit {
                        return Some(xs);
                    }
                }
            }
        }
    }
    None
}

#[test]
fn global_triviality_properties() {
    let mut r = rng(10);
    for _ in 0..100 {
        let d = { let d = r.gen_range(1..=4); random_diag(&mut r, d, 20) };
        let dd = d.direct_sum(&d.negate());
        assert!(trivial_over_q(&dd), "{dd:?}");
        if trivial_over_q(&d) {
            assert_eq!(d.signature(), 0);
            assert_eq!(d.rank() % 2, 0);
        }
    }
}

// ---------------------------------------------------------------------------
// isometric

#[test]
fn decompose_component_invariants() {
    let recs = fixtures();
    for name in ["8_18", "9_40", "10_82"] {
        let k = resolve_name(&recs, name).unwrap();
        let s = isometric_structure(&invertible_representative(&k.seifert)).unwrap();
        let dec = decompose(&s).unwrap();
        let total_dim: usize = dec.components.iter().map(|c| c.structure.dim()).sum();
        assert_eq!(total_dim, s.dim(), "{name}: dimensions");
        let total_sig: i64 = dec.components.iter().map(|c| c.structure.signature()).sum();
        assert_eq!(total_sig, s.signature(), "{name}: signatures");
        // discriminant square classes multiply up
        let disc = |q: &MatQ| {
            let det = q.det();
            ckit::arith::squarefree_part(&(det.numer() * det.denom()))
        };
        let mut prod = BigInt::one();
        for c in &dec.components {
            prod *= disc(c.structure.q());
        }
        assert_eq!(
            ckit::arith::squarefree_part(&prod),
            disc(s.q()),
            "{name}: discriminants"
        );
        for c in &dec.components {
            // char poly of the component is delta^exponent (checked inside
            // decompose); Corollary-6 guard: delta divides the total char poly
            assert!(
                s.char_poly_primitive().divisible_by(&c.delta),
                "{name}: {:?}",
                c.delta
            );
        }
    }
}

#[test]
fn per_delta_difference_components_are_trivial() {
    let recs = fixtures();
    for name in ["6_2", "8_18", "9_40", "9_42", "10_82", "10_82_quartic_rep"] {
        let k = resolve_name(&recs, name).unwrap();
        let s = isometric_structure(&invertible_representative(&k.seifert)).unwrap();
        let v = witt_trivial_sum(&[s.clone(), s.negate()]);
        assert_eq!(v.value, Verdict::Trivial, "{name}: {}", v.witness);
    }
}

#[test]
fn seifert_recovery_round_trips_on_fixtures() {
    let recs = fixtures();
    for k in &recs {
        let red = invertible_representative(&k.seifert);
        if red.size() == 0 {
            continue;
        }
        let s = isometric_structure(&red).unwrap();
        match ckit::isometric::seifert_from(&s).unwrap() {
            ckit::isometric::SeifertRecovery::Seifert(m) => assert_eq!(m, red, "{}", k.name),
            other => panic!("{}: expected exact recovery, got {other:?}", k.name),
        }
    }
}

// ---------------------------------------------------------------------------
// covers

#[test]
fn fox_order_equals_presentation_order_on_fixtures() {
    for k in fixtures() {
        let d = alexander(&k.seifert);
        for p in [3u32, 5] {
            let order = cover_order(&d, p).unwrap();
            let h = ckit::covers::cover_homology(&k.seifert, p).unwrap();
            assert_eq!(h.order(), order, "{} at p = {p}", k.name);
            assert!(h.is_doubled(), "{} at p = {p}: Plans fails", k.name);
        }
    }
}

#[test]
fn cover_order_is_multiplicative() {
    let mut r = rng(11);
    for _ in 0..30 {
        let a = { let d = r.gen_range(1..4); random_poly(&mut r, d, 4) };
        let b = { let d = r.gen_range(1..4); random_poly(&mut r, d, 4) };
        for p in [3u32, 5] {
            let oa = cover_order(&a, p);
            let ob = cover_order(&b, p);
            let oab = cover_order(&(&a * &b), p);
            match (oa, ob, oab) {
                (Ok(x), Ok(y), Ok(z)) => assert_eq!(x * y, z),
                _ => {} // vanishing at a root of unity propagates to the product
            }
        }
    }
}

#[test]
fn twisted_polynomials_preserve_fox_milnor() {
    let mut r = rng(12);
    let mut done = 0;
    while done < 50 {
        let f = { let d = r.gen_range(1..=3); random_poly(&mut r, d, 4) };
        if f.constant_term().is_zero() {
            continue;
        }
        let paired = &f * &f.reverse();
        assert!(fox_milnor_form(&paired).unwrap());
        let p = [2u32, 3][r.gen_range(0..2)];
        let n = match twisted_poly_trivial_char(&paired, p) {
            Ok(n) => n,
            Err(_) => continue,
        };
        if n.degree() == 0 {
            done += 1;
            continue;
        }
        assert!(
            fox_milnor_form(&n).unwrap(),
            "N_{p} of {paired:?} is {n:?}"
        );
        done += 1;
    }
}

// ---------------------------------------------------------------------------
// quartic Galois oracle: float roots and permutation relations

#[derive(Clone, Copy)]
struct C64 {
    re: f64,
    im: f64,
}

impl C64 {
    fn new(re: f64, im: f64) -> Self {
        C64 { re, im }
    }
    fn add(self, o: C64) -> C64 {
        C64::new(self.re + o.re, self.im + o.im)
    }
    fn sub(self, o: C64) -> C64 {
        C64::new(self.re - o.re, self.im - o.im)
    }
    fn mul(self, o: C64) -> C64 {
        C64::new(
            self.re * o.re - self.im * o.im,
            self.re * o.im + self.im * o.re,
        )
    }
    fn div(self, o: C64) -> C64 {
        let d = o.re * o.re + o.im * o.im;
        C64::new(
            (self.re * o.re + self.im * o.im) / d,
            (self.im * o.re - self.re * o.im) / d,
        )
    }
}

fn durand_kerner(p: &IntPoly) -> Vec<C64> {
    let d = p.degree();
    let lc = p.leading().to_string().parse::<f64>().unwrap();
    let cs: Vec<f64> = p
        .coeffs()
        .iter()
        .map(|c| c.to_string().parse::<f64>().unwrap() / lc)
        .collect();
    let eval = |z: C64| -> C64 {
        let mut acc = C64::new(0.0, 0.0);
        for c in cs.iter().rev() {
            acc = acc.mul(z).add(C64::new(*c, 0.0));
        }
        acc
    };
    let mut roots: Vec<C64> = (0..d)
        .map(|k| {
            let th = 2.0 * std::f64::consts::PI * k as f64 / d as f64 + 0.4;
            C64::new(1.3 * th.cos(), 1.3 * th.sin())
        })
        .collect();
    for _ in 0..300 {
        let mut next = roots.clone();
        for i in 0..d {
            let mut denom = C64::new(1.0, 0.0);
            for j in 0..d {
                if i != j {
                    denom = denom.mul(roots[i].sub(roots[j]));
                }
            }
            next[i] = roots[i].sub(eval(roots[i]).div(denom));
        }
        roots = next;
    }
    roots
}

/// Permutations of the roots preserving all detected small-height relations:
/// a supergroup of the Galois group. The classification must stay consistent
/// with it.
#[test]
fn galois_classes_against_float_relation_oracle() {
    let mut r = rng(13);
    let mut tested = 0;
    let mut quartics: Vec<IntPoly> = vec![
        IntPoly::from_i64(&[1, -8, 10, -8, 1]),
        IntPoly::from_i64(&[1, 0, -10, 0, 1]),
        IntPoly::from_i64(&[1, 0, 0, 0, 1]),
    ];
    while quartics.len() < 23 {
        let p = random_poly(&mut r, 4, 6);
        if p.constant_term().is_zero() {
            continue;
        }
        quartics.push(p);
    }
    for p in quartics {
        let class = match quartic_galois(&p) {
            Ok(c) => c,
            Err(_) => continue, // reducible random quartic
        };
        tested += 1;
        assert!(24 % class.order() == 0);
        let disc = p.discriminant();
        if ckit::arith::is_perfect_square(&disc) {
            assert!(
                matches!(
                    class,
                    ckit::covers::QuarticGaloisClass::A4 | ckit::covers::QuarticGaloisClass::V4
                ),
                "square discriminant forces an even group: {p:?} -> {class:?}"
            );
        }
        let roots = durand_kerner(&p);
        let admissible = admissible_permutations(&roots);
        assert!(
            class.order() as usize <= admissible.len(),
            "{p:?}: class {class:?} larger than the relation-preserving set {}",
            admissible.len()
        );
        assert!(admissible.len() <= 24);
    }
    assert!(tested >= 20, "need at least 20 classified quartics");
}

fn admissible_permutations(roots: &[C64]) -> Vec<[usize; 4]> {
    // relations: r_i + r_j - r_k - r_l = c and r_i r_j = c for small integer c
    let tol = 1e-6;
    let close_int = |x: C64| -> Option<i64> {
        if x.im.abs() > tol {
            return None;
        }
        let r = x.re.round();
        if (x.re - r).abs() < tol && r.abs() <= 64.0 {
            Some(r as i64)
        } else {
            None
        }
    };
    let mut rel_sum: Vec<((usize, usize, usize, usize), i64)> = Vec::new();
    let mut rel_prod: Vec<((usize, usize), i64)> = Vec::new();
    for i in 0..4 {
        for j in 0..4 {
            if i < j {
                if let Some(c) = close_int(roots[i].mul(roots[j])) {
                    rel_prod.push(((i, j), c));
                }
            }
            for k in 0..4 {
                for l in 0..4 {
                    if i != k && i != l && j != k && j != l && i <= j && k <= l {
                        let v = roots[i].add(roots[j]).sub(roots[k]).sub(roots[l]);
                        if let Some(c) = close_int(v) {
                            rel_sum.push(((i, j, k, l), c));
                        }
                    }
                }
            }
        }
    }
    let perms = all_permutations();
    perms
        .into_iter()
        .filter(|pi| {
            rel_sum.iter().all(|&((i, j, k, l), c)| {
                let v = roots[pi[i]]
                    .add(roots[pi[j]])
                    .sub(roots[pi[k]])
                    .sub(roots[pi[l]]);
                close_int(v) == Some(c)
            }) && rel_prod.iter().all(|&((i, j), c)| {
                close_int(roots[pi[i]].mul(roots[pi[j]])) == Some(c)
            })
        })
        .collect()
}

fn all_permutations() -> Vec<[usize; 4]> {
    let mut out = Vec::new();
    let mut idx = [0usize, 1, 2, 3];
    permute(&mut idx, 0, &mut out);
    out
}

fn permute(arr: &mut [usize; 4], k: usize, out: &mut Vec<[usize; 4]>) {
    if k == 4 {
        out.push(*arr);
        return;
    }
    for i in k..4 {
        arr.swap(k, i);
        permute(arr, k + 1, out);
        arr.swap(k, i);
    }
}

// ---------------------------------------------------------------------------
// engine

#[test]
fn reports_satisfy_the_genus_chain() {
    let recs = fixtures();
    for k in &recs {
        let r = analyze(k, AnalyzeOptions::default()).unwrap();
        assert!(r.gc_lower <= r.g3_lower, "{}", k.name);
        assert!(r.g4_lower <= r.gc_lower, "{}", k.name);
        if let Some(g4u) = r.g4_upper {
            if g4u == 0 {
                assert_eq!(r.gc_lower, 0, "{}: slice case", k.name);
            }
        }
        assert_eq!(
            r.g4_lower,
            (r.max_abs_lt_signature as u32).div_ceil(2),
            "{}: Murasugi consistency",
            k.name
        );
    }
}

#[test]
fn obstruction_monotonicity() {
    let d = IntPoly::from_i64(&[1, -5, 10, -13, 10, -5, 1]);
    let none = min_concordant_degree(&d, &[]).unwrap();
    let one = min_concordant_degree(&d, &[IntPoly::from_i64(&[1, -1, 1])]).unwrap();
    let both = min_concordant_degree(
        &d,
        &[IntPoly::from_i64(&[1, -1, 1]), IntPoly::from_i64(&[1, -3, 1])],
    )
    .unwrap();
    assert!(none <= one && one <= both);
    assert_eq!((none, one, both), (2, 6, 6));
}

#[test]
fn boundary_unit_map_behaviour() {
    // spot checks of the unit-boundary map used by the local analysis
    let d = DiagonalForm::from_i64(&[-14, -2, 7, 1]);
    let e3 = boundary_p_unit(&d, &BigInt::from(3));
    assert_eq!(e3.entries.len(), 4);
    assert!(finite_trivial(&e3));
    let h = hilbert_symbol(&BigInt::from(-1), &BigInt::from(-1), &Place::Real);
    assert_eq!(h, -1);
}

// ---------------------------------------------------------------------------
// worked-example checks tied to the bundled fixtures

#[test]
fn profile_shapes_of_the_table_knots() {
    let recs = fixtures();
    // 8_18: identically zero
    let k = resolve_name(&recs, "8_18").unwrap();
    let p = signature_profile(&k.seifert).unwrap();
    assert!(p.is_identically_zero());
    assert!(p.jumping_factors().is_empty());
    // 9_40: plateau of absolute value 2 arising from t^2 - t + 1
    let k = resolve_name(&recs, "9_40").unwrap();
    let p = signature_profile(&k.seifert).unwrap();
    assert_eq!(p.max_abs(), 2);
    assert_eq!(p.jumping_factors(), vec![IntPoly::from_i64(&[1, -1, 1])]);
    // 10_82: jumps only at the unit root of the quartic, not at zeta_6
    let k = resolve_name(&recs, "10_82").unwrap();
    let p = signature_profile(&k.seifert).unwrap();
    assert_eq!(
        p.jumping_factors(),
        vec![IntPoly::from_i64(&[1, -2, 1, -2, 1])]
    );
    for (f, j) in &p.jump_roots {
        if f == &IntPoly::from_i64(&[1, -1, 1]) {
            assert_eq!(*j, 0, "no jump at the hex root");
        }
    }
}

#[test]
fn structure_char_poly_of_8_18() {
    let recs = fixtures();
    let k = resolve_name(&recs, "8_18").unwrap();
    let s = isometric_structure(&invertible_representative(&k.seifert)).unwrap();
    let want = &(&IntPoly::from_i64(&[1, -1, 1]) * &IntPoly::from_i64(&[1, -1, 1]))
        * &IntPoly::from_i64(&[1, -3, 1]);
    assert_eq!(s.char_poly_primitive(), want);
}

#[test]
fn decomposition_dimensions_match_the_worked_examples() {
    let recs = fixtures();
    let k = resolve_name(&recs, "8_18").unwrap();
    let s = isometric_structure(&invertible_representative(&k.seifert)).unwrap();
    let dec = decompose(&s).unwrap();
    let mut dims: Vec<(IntPoly, usize)> = dec
        .components
        .iter()
        .map(|c| (c.delta.clone(), c.structure.dim()))
        .collect();
    dims.sort_by_key(|(_, d)| *d);
    assert_eq!(
        dims,
        vec![
            (IntPoly::from_i64(&[1, -3, 1]), 2),
            (IntPoly::from_i64(&[1, -1, 1]), 4),
        ]
    );
    let k = resolve_name(&recs, "10_82").unwrap();
    let s = isometric_structure(&invertible_representative(&k.seifert)).unwrap();
    let dec = decompose(&s).unwrap();
    let dims: Vec<usize> = dec.components.iter().map(|c| c.structure.dim()).collect();
    assert_eq!(dims, vec![4, 4]);
}

#[test]
fn component_verdicts_for_the_worked_examples() {
    use ckit::isometric::component_trivial;
    let recs = fixtures();
    // 8_18 at t^2 - t + 1: nontrivial with a p-adic boundary witness
    let k = resolve_name(&recs, "8_18").unwrap();
    let s = isometric_structure(&invertible_representative(&k.seifert)).unwrap();
    let dec = decompose(&s).unwrap();
    let hex = dec
        .components
        .iter()
        .find(|c| c.delta == IntPoly::from_i64(&[1, -1, 1]))
        .unwrap();
    let v = component_trivial(hex);
    assert_eq!(v.value, Verdict::Nontrivial);
    assert!(v.witness.contains("form nontrivial"), "{}", v.witness);
    // the boundary at 3 is nontrivial, matching the printed reduction (1,1)
    let d = diagonalize(&SymForm::new(hex.structure.q().clone()).unwrap()).unwrap();
    assert!(!finite_trivial(&boundary_p(&d, &BigInt::from(3))));
    // 9_40 at t^2 - 3t + 1: nontrivial (the boundary at 5 is the decider for
    // the printed form; the component form is also nontrivial locally)
    let k = resolve_name(&recs, "9_40").unwrap();
    let s = isometric_structure(&invertible_representative(&k.seifert)).unwrap();
    let dec = decompose(&s).unwrap();
    let c = dec
        .components
        .iter()
        .find(|c| c.delta == IntPoly::from_i64(&[1, -3, 1]))
        .unwrap();
    assert_eq!(c.exponent, 2);
    let v = component_trivial(c);
    assert_eq!(v.value, Verdict::Nontrivial, "{}", v.witness);
    let d = diagonalize(&SymForm::new(c.structure.q().clone()).unwrap()).unwrap();
    assert!(!finite_trivial(&boundary_p(&d, &BigInt::from(5))));
}

#[test]
fn quartic_component_matches_the_printed_pair() {
    let recs = fixtures();
    let k = resolve_name(&recs, "10_82").unwrap();
    let s = isometric_structure(&invertible_representative(&k.seifert)).unwrap();
    let dec = decompose(&s).unwrap();
    let quartic = dec
        .components
        .iter()
        .find(|c| c.delta == IntPoly::from_i64(&[1, -2, 1, -2, 1]))
        .unwrap();
    let printed = ckit::isometric::IsometricStructure::from_i64(
        &[
            vec![0, 2, 0, 0],
            vec![2, 0, 0, -2],
            vec![0, 0, -4, -2],
            vec![0, -2, -2, -8],
        ],
        &[
            vec![1, 1, -1, 1],
            vec![1, 0, 0, -1],
            vec![0, 0, 1, 1],
            vec![-1, 0, 0, 0],
        ],
    )
    .unwrap();
    assert_eq!(
        quartic.structure.char_poly_primitive(),
        printed.char_poly_primitive()
    );
    assert_eq!(quartic.structure.signature(), printed.signature());
    // equal Witt invariants of the form parts: the difference is trivial over Q
    let d1 = diagonalize(&SymForm::new(quartic.structure.q().clone()).unwrap()).unwrap();
    let d2 = diagonalize(&SymForm::new(printed.q().clone()).unwrap()).unwrap();
    assert!(trivial_over_q(&d1.direct_sum(&d2.negate())));
    // and the structures themselves are Witt equivalent
    let v = witt_trivial_sum(&[quartic.structure.clone(), printed.negate()]);
    assert_eq!(v.value, Verdict::Trivial, "{}", v.witness);
}

#[test]
fn scaling_preserves_signature_and_dimensions() {
    let recs = fixtures();
    let k = resolve_name(&recs, "10_82").unwrap();
    let s = isometric_structure(&invertible_representative(&k.seifert)).unwrap();
    let scaled = ckit::isometric::scale_by_two(&s);
    assert_eq!(scaled.signature(), s.signature());
    let d1: Vec<usize> = decompose(&s)
        .unwrap()
        .components
        .iter()
        .map(|c| c.structure.dim())
        .collect();
    let d2: Vec<usize> = decompose(&scaled)
        .unwrap()
        .components
        .iter()
        .map(|c| c.structure.dim())
        .collect();
    assert_eq!(d1, d2);
}

#[test]
fn galois_chain_refuses_other_shapes() {
    let recs = fixtures();
    // 6_2 has an odd-exponent symmetric quartic but 3-cover torsion (5,5)
    let k = resolve_name(&recs, "6_2").unwrap();
    let r = analyze(&k, AnalyzeOptions { galois: true }).unwrap();
    assert_eq!(r.gc_lower, 2, "no escalation");
    assert!(
        r.notes.iter().any(|n| n.contains("2-torsion shape")),
        "{:?}",
        r.notes
    );
    // 8_18 has no odd-exponent quartic at all
    let k = resolve_name(&recs, "8_18").unwrap();
    let r = analyze(&k, AnalyzeOptions { galois: true }).unwrap();
    assert_eq!(r.gc_lower, 3);
    assert!(
        r.notes
            .iter()
            .any(|n| n.contains("odd-exponent symmetric quartic")),
        "{:?}",
        r.notes
    );
}

#[test]
fn non_monic_alexander_polynomials_work_end_to_end() {
    // a genus-1 matrix with determinant 2: Delta = 2 - 3t + 2t^2 (leading
    // coefficient 2 exercises the monicization paths everywhere)
    let v = ckit::seifert::validate(&[vec![1, 1], vec![0, 2]]).unwrap();
    let d = alexander(&v);
    assert_eq!(d, IntPoly::from_i64(&[2, -3, 2]));
    let fac = factor_rational(&d).unwrap();
    assert_eq!(fac.factors.len(), 1);
    assert_eq!(fac.factors[0].1, 1);
    assert!(fac.factors[0].2, "2t^2 - 3t + 2 is symmetric");
    let prof = signature_profile(&v).unwrap();
    assert_eq!(prof.sigma_minus_one.abs(), 2);
    assert_eq!(prof.jumping_factors(), vec![d.clone()]);
    let s = isometric_structure(&v).unwrap();
    let dec = decompose(&s).unwrap();
    assert_eq!(dec.components.len(), 1);
    assert_eq!(dec.components[0].exponent, 1);
    let k = KnotRecord {
        name: "twistlike".into(),
        seifert: v,
        genus3: Some(1),
        g4_upper: Some(1),
        notes: String::new(),
    };
    let r = analyze(&k, AnalyzeOptions::default()).unwrap();
    assert_eq!(r.gc_lower, 1);
    assert_eq!(r.g4_lower, 1);
    // its own double is concordant to itself
    let sum = k.seifert.block_sum(&k.seifert);
    let v2 = ckit::isometric::alg_concordant(&sum, &sum);
    assert_eq!(v2.value, Verdict::Trivial, "{}", v2.witness);
}

#[test]
fn analyze_handles_every_bundled_record() {
    let recs = fixtures();
    for k in &recs {
        let r = analyze(k, AnalyzeOptions::default()).unwrap();
        assert!(r.gc_lower <= r.g3_lower, "{}", k.name);
    }
    // 9_42 through the singular presentation: quartic with odd exponent
    let k = resolve_name(&recs, "9_42").unwrap();
    let r = analyze(&k, AnalyzeOptions::default()).unwrap();
    assert_eq!(r.gc_lower, 2);
    assert_eq!(r.signature.abs(), 2);
    // the quartic representative record
    let k = resolve_name(&recs, "10_82_quartic_rep").unwrap();
    let r = analyze(&k, AnalyzeOptions::default()).unwrap();
    assert_eq!(r.gc_lower, 2);
}

#[test]
fn slice_sum_reports_zero_bound_with_honest_notes() {
    // 6_2 # -6_2 is the slice pattern: squared factor, flat signature
    let recs = fixtures();
    let k = resolve_name(&recs, "6_2#-6_2").unwrap();
    let r = analyze(&k, AnalyzeOptions::default()).unwrap();
    assert_eq!(r.gc_lower, 0, "no obstruction may fire on a slice pattern");
    assert_eq!(r.signature, 0);
    assert_eq!(r.max_abs_lt_signature, 0);
    assert!(ckit::poly::fox_milnor_form(&r_alex(&r)).unwrap());
    // the quartic component has even exponent, zero signature, and one
    // uncertifiable completion: it must be reported, not guessed
    assert!(
        r.notes.iter().any(|n| n.contains("undetermined")),
        "{:?}",
        r.notes
    );
}

fn r_alex(r: &ckit::engine::GenusReport) -> IntPoly {
    IntPoly::new(r.alexander.iter().map(|c| c.parse().unwrap()).collect())
}

#[test]
fn reduction_survives_random_scrambled_enlargements() {
    let mut r = rng(14);
    let bases: Vec<Vec<Vec<i64>>> = vec![
        vec![vec![-1, 1], vec![0, -1]],
        vec![vec![1, 1], vec![0, -1]],
        vec![vec![1, 1], vec![0, 2]],
        vec![
            vec![0, 1, 0, 1],
            vec![0, 0, 0, -1],
            vec![0, 0, -1, 0],
            vec![-1, 0, -1, -2],
        ],
    ];
    for round in 0..25 {
        let base = &bases[r.gen_range(0..bases.len())];
        let n = base.len();
        // enlarge: [[V, xi, 0], [0, x, 1], [0, 0, 0]]
        let mut m = vec![vec![0i64; n + 2]; n + 2];
        for i in 0..n {
            for j in 0..n {
                m[i][j] = base[i][j];
            }
            m[i][n] = r.gen_range(-2i64..=2);
        }
        m[n][n] = r.gen_range(-2i64..=2);
        m[n][n + 1] = 1;
        // scramble with random paired row/column operations
        for _ in 0..12 {
            let i = r.gen_range(0..n + 2);
            let j = r.gen_range(0..n + 2);
            if i == j {
                continue;
            }
            let c = r.gen_range(-2i64..=2);
            for k in 0..n + 2 {
                m[j][k] += c * m[i][k];
            }
            for row in m.iter_mut() {
                row[j] += c * row[i];
            }
        }
        let v = match ckit::seifert::validate(&m) {
            Ok(v) => v,
            Err(e) => panic!("round {round}: scramble broke validity: {e}"),
        };
        assert_eq!(v.to_matq().det(), num_rational::BigRational::from_integer(0.into()));
        // the reduction's internal postconditions assert Delta and signature
        let red = invertible_representative(&v);
        assert!(red.size() <= n,
            "round {round}: reduction did not shrink below the enlargement");
        assert_eq!(alexander(&red), alexander(&v), "round {round}");
        // and the cover presentations agree with the order formula
        let d = alexander(&v);
        if let Ok(order) = cover_order(&d, 3) {
            let h = ckit::covers::cover_homology(&v, 3).unwrap();
            assert_eq!(h.order(), order, "round {round}");
        }
    }
}

#[test]
fn degree_six_factors_still_decide_self_differences() {
    // the (2,7) torus pattern: banded 6x6, Alexander polynomial of degree 6,
    // irreducible, all roots on the circle (three conjugate pairs)
    let m: Vec<Vec<i64>> = (0..6)
        .map(|i| {
            (0..6)
                .map(|j| {
                    if i == j {
                        -1
                    } else if j == i + 1 {
                        1
                    } else {
                        0
                    }
                })
                .collect()
        })
        .collect();
    let v = ckit::seifert::validate(&m).unwrap();
    let d = alexander(&v);
    assert_eq!(d, IntPoly::from_i64(&[1, -1, 1, -1, 1, -1, 1]));
    let prof = signature_profile(&v).unwrap();
    assert_eq!(prof.sigma_minus_one, -6);
    assert_eq!(prof.max_abs(), 6);
    assert_eq!(prof.plateau_values.len(), 4, "three jumps, four plateaus");
    // a knot is always concordant to itself, even with a degree-6 factor
    let r = ckit::isometric::alg_concordant(&v, &v);
    assert_eq!(r.value, Verdict::Trivial, "{}", r.witness);
    let k = KnotRecord {
        name: "t27".into(),
        seifert: v,
        genus3: Some(3),
        g4_upper: Some(3),
        notes: String::new(),
    };
    let rep = analyze(&k, AnalyzeOptions::default()).unwrap();
    assert_eq!(rep.gc_lower, 3);
    assert_eq!(rep.g4_lower, 3);
}

#[test]
fn reduction_handles_kernel_of_dimension_two() {
    // two nested enlargements produce a rank-deficiency of two
    let v2: Vec<Vec<i64>> = vec![
        vec![0, 1, 0, 1],
        vec![0, 0, 0, -1],
        vec![0, 0, -1, 0],
        vec![-1, 0, -1, -2],
    ];
    let mut m = vec![vec![0i64; 8]; 8];
    for i in 0..4 {
        for j in 0..4 {
            m[i][j] = v2[i][j];
        }
        m[i][4] = [1, -1, 0, 2][i];
        m[i][6] = [0, 1, 1, -1][i];
    }
    m[4][4] = 1;
    m[4][5] = 1;
    m[6][6] = -2;
    m[6][7] = 1;
    // cross terms between the two enlargement columns keep it interesting
    m[4][6] = 1;
    let v = ckit::seifert::validate(&m).unwrap();
    assert_eq!(v.to_matq().rank(), 6);
    let red = invertible_representative(&v);
    assert_eq!(red.size(), 4);
    assert_eq!(alexander(&red), alexander(&v));
    let s1 = isometric_structure(&red).unwrap();
    let s2 = isometric_structure(&ckit::seifert::validate(&v2).unwrap()).unwrap();
    let r = witt_trivial_sum(&[s1, s2.negate()]);
    assert_eq!(r.value, Verdict::Trivial, "{}", r.witness);
}

#[test]
fn minus_one_minus_one_at_two_by_exhaustion() {
    // x^2 + y^2 + z^2 = 0 has no primitive solution mod 16, so the form
    // <1,1,1> is anisotropic over Q_2 and (-1,-1)_2 = -1
    let mut found = false;
    for x in 0i64..16 {
        for y in 0..16 {
            for z in 0..16 {
                if (x, y, z) == (0, 0, 0) {
                    continue;
                }
                if x % 2 == 0 && y % 2 == 0 && z % 2 == 0 {
                    continue; // non-primitive: descend by halving
                }
                if (x * x + y * y + z * z) % 16 == 0 {
                    found = true;
                }
            }
        }
    }
    assert!(!found);
    assert_eq!(
        hilbert_symbol(
            &BigInt::from(-1),
            &BigInt::from(-1),
            &Place::Prime(BigInt::from(2))
        ),
        -1
    );
}

#[test]
fn relevant_primes_always_include_two() {
    // hyperbolic structure: unit determinant and unit discriminant still
    // report the even prime
    let s = ckit::isometric::IsometricStructure::from_i64(
        &[vec![0, 1], vec![1, 0]],
        &[vec![1, 0], vec![0, 1]],
    )
    .unwrap();
    assert_eq!(ckit::isometric::relevant_primes(&s), vec![BigInt::from(2)]);
}
