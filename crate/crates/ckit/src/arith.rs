//! Integer utilities: primality, factorization, residue symbols, p-adic valuations.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Deterministic Miller-Rabin, valid for all u64.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % p == 0 {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    let mul = |a: u64, b: u64| ((a as u128 * b as u128) % n as u128) as u64;
    let powm = |mut b: u64, mut e: u64| {
        let mut acc = 1u64;
        b %= n;
        while e > 0 {
            if e & 1 == 1 {
                acc = mul(acc, b);
            }
            b = mul(b, b);
            e >>= 1;
        }
        acc
    };
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = powm(a, d);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul(x, x);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn pollard_rho(n: u64) -> u64 {
    if n % 2 == 0 {
        return 2;
    }
    let mul = |a: u64, b: u64| ((a as u128 * b as u128) % n as u128) as u64;
    let mut c = 1u64;
    loop {
        let f = |x: u64| (mul(x, x) + c) % n;
        let (mut x, mut y, mut d) = (2u64, 2u64, 1u64);
        while d == 1 {
            x = f(x);
            y = f(f(y));
            d = x.abs_diff(y).gcd(&n);
        }
        if d != n {
            return d;
        }
        c += 1;
    }
}

fn factor_u64_into(n: u64, out: &mut Vec<(u64, u32)>) {
    let mut n = n;
    let mut small = Vec::new();
    for p in 2u64.. {
        if p * p > n || p > 100_000 {
            break;
        }
        while n % p == 0 {
            small.push(p);
            n /= p;
        }
    }
    let mut stack = vec![n];
    while let Some(m) = stack.pop() {
        if m == 1 {
            continue;
        }
        if is_prime_u64(m) {
            small.push(m);
        } else {
            let d = pollard_rho(m);
            stack.push(d);
            stack.push(m / d);
        }
    }
    small.sort_unstable();
    for p in small {
        if let Some(last) = out.last_mut() {
            if last.0 == p {
                last.1 += 1;
                continue;
            }
        }
        out.push((p, 1));
    }
}

/// Prime factorization of |n|, smallest prime first. Panics on 0.
pub fn factor(n: &BigInt) -> Vec<(BigInt, u32)> {
    assert!(!n.is_zero(), "factor(0)");
    let mut n = n.abs();
    let mut out: Vec<(BigInt, u32)> = Vec::new();
    // strip small primes so the remaining cofactor fits u64 in practice
    for p in 2u64..=100_000 {
        let pb = BigInt::from(p);
        if &pb * &pb > n {
            break;
        }
        let mut e = 0u32;
        loop {
            let (q, r) = n.div_rem(&pb);
            if r.is_zero() {
                n = q;
                e += 1;
            } else {
                break;
            }
        }
        if e > 0 {
            out.push((pb, e));
        }
    }
    if !n.is_one() {
        if let Some(m) = n.to_u64() {
            let mut f = Vec::new();
            factor_u64_into(m, &mut f);
            for (p, e) in f {
                out.push((BigInt::from(p), e));
            }
        } else if is_probable_prime(&n) {
            out.push((n, 1));
        } else {
            // composite beyond u64 after small-prime stripping: out of scope
            panic!("factor: cofactor {n} too large");
        }
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out
}

/// Miller-Rabin with fixed witnesses (probabilistic beyond u64 range).
fn is_probable_prime(n: &BigInt) -> bool {
    if let Some(m) = n.to_u64() {
        return is_prime_u64(m);
    }
    let one = BigInt::one();
    let two = BigInt::from(2);
    let nm1 = n - &one;
    let mut d = nm1.clone();
    let mut s = 0u32;
    while (&d % &two).is_zero() {
        d /= &two;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let ab = BigInt::from(a);
        if &ab >= n {
            continue;
        }
        let mut x = ab.modpow(&d, n);
        if x == one || x == nm1 {
            continue;
        }
        for _ in 1..s {
            x = x.modpow(&two, n);
            if x == nm1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Distinct prime divisors of |n| (n nonzero).
pub fn prime_divisors(n: &BigInt) -> Vec<BigInt> {
    factor(n).into_iter().map(|(p, _)| p).collect()
}

/// Squarefree part of a nonzero integer, keeping the sign.
pub fn squarefree_part(n: &BigInt) -> BigInt {
    let mut out = n.signum();
    for (p, e) in factor(n) {
        if e % 2 == 1 {
            out *= p;
        }
    }
    out
}

/// p-adic valuation and unit part of a nonzero integer.
pub fn val_unit(n: &BigInt, p: &BigInt) -> (u32, BigInt) {
    assert!(!n.is_zero());
    let mut v = 0u32;
    let mut u = n.clone();
    loop {
        let (q, r) = u.div_rem(p);
        if r.is_zero() {
            u = q;
            v += 1;
        } else {
            break;
        }
    }
    (v, u)
}

/// Legendre symbol (a/p) for odd prime p: 0, 1 or -1.
pub fn legendre(a: &BigInt, p: &BigInt) -> i32 {
    let m = a.mod_floor(p);
    if m.is_zero() {
        return 0;
    }
    let e = (p - 1u32) / 2u32;
    let r = m.modpow(&e, p);
    if r.is_one() {
        1
    } else {
        -1
    }
}

/// True iff n is a perfect square (n >= 0).
pub fn is_perfect_square(n: &BigInt) -> bool {
    if n.is_negative() {
        return false;
    }
    let r = n.sqrt();
    &r * &r == *n
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factor_small() {
        let f = factor(&BigInt::from(-21504));
        assert_eq!(
            f,
            vec![(BigInt::from(2), 10), (BigInt::from(3), 1), (BigInt::from(7), 1)]
        );
    }

    #[test]
    fn squarefree() {
        assert_eq!(squarefree_part(&BigInt::from(-448)), BigInt::from(-7));
        assert_eq!(squarefree_part(&BigInt::from(12)), BigInt::from(3));
        assert_eq!(squarefree_part(&BigInt::from(1)), BigInt::from(1));
    }

    #[test]
    fn legendre_euler() {
        let p = BigInt::from(7);
        let squares: Vec<i64> = vec![1, 2, 4];
        for a in 1..7 {
            let want = if squares.contains(&a) { 1 } else { -1 };
            assert_eq!(legendre(&BigInt::from(a), &p), want);
        }
    }

    #[test]
    fn big_prime_cofactors() {
        // 2^89 - 1 is prime and far beyond u64
        let m89 = (BigInt::from(1) << 89) - 1;
        let f = factor(&(&m89 * 6));
        assert_eq!(
            f,
            vec![
                (BigInt::from(2), 1),
                (BigInt::from(3), 1),
                (m89, 1)
            ]
        );
    }

    #[test]
    fn primality() {
        assert!(is_prime_u64(2));
        assert!(is_prime_u64(1_000_000_007));
        assert!(!is_prime_u64(1_000_000_007u64 * 3));
    }
}
