//! Polynomial arithmetic and factorization over F_p (p a small odd prime).

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModPoly {
    pub p: u64,
    pub coeffs: Vec<u64>, // low -> high, leading nonzero
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn powmod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, b, p);
        }
        b = mulmod(b, b, p);
        e >>= 1;
    }
    acc
}

fn invmod(a: u64, p: u64) -> u64 {
    powmod(a, p - 2, p)
}

impl ModPoly {
    pub fn new(p: u64, mut coeffs: Vec<u64>) -> Self {
        for c in &mut coeffs {
            *c %= p;
        }
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        ModPoly { p, coeffs }
    }

    pub fn zero(p: u64) -> Self {
        ModPoly { p, coeffs: vec![] }
    }

    pub fn one(p: u64) -> Self {
        ModPoly { p, coeffs: vec![1] }
    }

    pub fn x(p: u64) -> Self {
        ModPoly { p, coeffs: vec![0, 1] }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn leading(&self) -> u64 {
        *self.coeffs.last().unwrap_or(&0)
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let inv = invmod(self.leading(), self.p);
        ModPoly::new(
            self.p,
            self.coeffs.iter().map(|&c| mulmod(c, inv, self.p)).collect(),
        )
    }

    pub fn add(&self, o: &ModPoly) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        let mut v = vec![0u64; n];
        for i in 0..n {
            let a = self.coeffs.get(i).copied().unwrap_or(0);
            let b = o.coeffs.get(i).copied().unwrap_or(0);
            v[i] = (a + b) % self.p;
        }
        ModPoly::new(self.p, v)
    }

    pub fn sub(&self, o: &ModPoly) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        let mut v = vec![0u64; n];
        for i in 0..n {
            let a = self.coeffs.get(i).copied().unwrap_or(0);
            let b = o.coeffs.get(i).copied().unwrap_or(0);
            v[i] = (a + self.p - b) % self.p;
        }
        ModPoly::new(self.p, v)
    }

    pub fn mul(&self, o: &ModPoly) -> Self {
        if self.is_zero() || o.is_zero() {
            return ModPoly::zero(self.p);
        }
        let mut v = vec![0u64; self.coeffs.len() + o.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in o.coeffs.iter().enumerate() {
                v[i + j] = (v[i + j] + mulmod(a, b, self.p)) % self.p;
            }
        }
        ModPoly::new(self.p, v)
    }

    pub fn div_rem(&self, d: &ModPoly) -> (ModPoly, ModPoly) {
        assert!(!d.is_zero());
        if self.degree() < d.degree() || self.is_zero() {
            return (ModPoly::zero(self.p), self.clone());
        }
        let p = self.p;
        let mut rem = self.coeffs.clone();
        let n = d.coeffs.len();
        let inv = invmod(d.leading(), p);
        let mut q = vec![0u64; rem.len() - n + 1];
        for i in (0..q.len()).rev() {
            let c = mulmod(rem[i + n - 1], inv, p);
            if c == 0 {
                continue;
            }
            q[i] = c;
            for j in 0..n {
                rem[i + j] = (rem[i + j] + p - mulmod(c, d.coeffs[j], p)) % p;
            }
        }
        (ModPoly::new(p, q), ModPoly::new(p, rem))
    }

    pub fn rem(&self, d: &ModPoly) -> ModPoly {
        self.div_rem(d).1
    }

    pub fn gcd(&self, o: &ModPoly) -> ModPoly {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Extended gcd: returns (g, s, t) with s*self + t*o = g (g monic).
    pub fn xgcd(&self, o: &ModPoly) -> (ModPoly, ModPoly, ModPoly) {
        let p = self.p;
        let (mut r0, mut r1) = (self.clone(), o.clone());
        let (mut s0, mut s1) = (ModPoly::one(p), ModPoly::zero(p));
        let (mut t0, mut t1) = (ModPoly::zero(p), ModPoly::one(p));
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            let ns = s0.sub(&q.mul(&s1));
            let nt = t0.sub(&q.mul(&t1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = ns;
            t0 = t1;
            t1 = nt;
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let inv = invmod(r0.leading(), p);
        let scale = |q: &ModPoly| {
            ModPoly::new(p, q.coeffs.iter().map(|&c| mulmod(c, inv, p)).collect())
        };
        (scale(&r0), scale(&s0), scale(&t0))
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return ModPoly::zero(self.p);
        }
        ModPoly::new(
            self.p,
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| mulmod(c, (i as u64) % self.p, self.p))
                .collect(),
        )
    }

    pub fn pow_mod(&self, mut e: u64, m: &ModPoly) -> ModPoly {
        let mut acc = ModPoly::one(self.p);
        let mut b = self.rem(m);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&b).rem(m);
            }
            b = b.mul(&b).rem(m);
            e >>= 1;
        }
        acc
    }

    pub fn is_squarefree(&self) -> bool {
        self.gcd(&self.derivative()).degree() == 0
    }

    /// True iff self (assumed monic) is irreducible over F_p.
    pub fn is_irreducible(&self) -> bool {
        let n = self.degree();
        if n == 0 {
            return false;
        }
        if n == 1 {
            return true;
        }
        let p = self.p;
        // x^(p^n) == x mod f, and gcd(x^(p^(n/q)) - x, f) trivial for prime q | n
        let x = ModPoly::x(p);
        let mut xp = x.clone();
        for _ in 0..n {
            xp = frobenius(&xp, self);
        }
        if xp != x.rem(self) {
            return false;
        }
        let mut m = n;
        let mut qs = vec![];
        let mut q = 2;
        while q * q <= m {
            if m % q == 0 {
                qs.push(q);
                while m % q == 0 {
                    m /= q;
                }
            }
            q += 1;
        }
        if m > 1 {
            qs.push(m);
        }
        for q in qs {
            let mut xq = x.clone();
            for _ in 0..n / q {
                xq = frobenius(&xq, self);
            }
            if self.gcd(&xq.sub(&x)).degree() != 0 {
                return false;
            }
        }
        true
    }
}

/// g -> g^p mod f.
fn frobenius(g: &ModPoly, f: &ModPoly) -> ModPoly {
    g.pow_mod(g.p, f)
}

/// Factors a monic squarefree polynomial over F_p into monic irreducibles.
pub fn factor_squarefree(f: &ModPoly, seed: u64) -> Vec<ModPoly> {
    let p = f.p;
    let f = f.monic();
    let mut out = Vec::new();
    // distinct-degree
    let mut rest = f.clone();
    let mut h = ModPoly::x(p);
    let mut d = 0usize;
    let mut stages: Vec<(usize, ModPoly)> = Vec::new();
    while rest.degree() >= 1 {
        d += 1;
        if 2 * d > rest.degree() {
            stages.push((rest.degree(), rest.clone()));
            break;
        }
        h = frobenius(&h, &f); // x^(p^d) mod f  (mod f is fine; gcds taken against rest)
        let g = rest.gcd(&h.sub(&ModPoly::x(p)));
        if g.degree() > 0 {
            stages.push((d, g.clone()));
            rest = rest.div_rem(&g).0;
        }
    }
    // equal-degree split (Cantor-Zassenhaus)
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed);
    for (d, block) in stages {
        let mut work = vec![block];
        while let Some(b) = work.pop() {
            if b.degree() == d {
                out.push(b.monic());
                continue;
            }
            let e = (pow_u128(p, d as u32) - 1) / 2;
            loop {
                let r = ModPoly::new(
                    p,
                    (0..b.degree()).map(|_| rng.gen_range(0..p)).collect(),
                );
                if r.is_zero() {
                    continue;
                }
                let w = pow_mod_u128(&r, e, &b);
                let g = b.gcd(&w.sub(&ModPoly::one(p)));
                if g.degree() > 0 && g.degree() < b.degree() {
                    let q = b.div_rem(&g).0;
                    work.push(g);
                    work.push(q);
                    break;
                }
            }
        }
    }
    out.sort_by(|a, b| (a.degree(), &a.coeffs).cmp(&(b.degree(), &b.coeffs)));
    out
}

fn pow_u128(p: u64, d: u32) -> u128 {
    (0..d).fold(1u128, |acc, _| acc * p as u128)
}

fn pow_mod_u128(b: &ModPoly, mut e: u128, m: &ModPoly) -> ModPoly {
    let mut acc = ModPoly::one(b.p);
    let mut base = b.rem(m);
    while e > 0 {
        if e & 1 == 1 {
            acc = acc.mul(&base).rem(m);
        }
        base = base.mul(&base).rem(m);
        e >>= 1;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factor_mod_5() {
        // t^2 + 1 = (t+2)(t+3) mod 5
        let f = ModPoly::new(5, vec![1, 0, 1]);
        let fs = factor_squarefree(&f, 1);
        assert_eq!(fs.len(), 2);
        assert_eq!(fs[0].mul(&fs[1]), f);
    }

    #[test]
    fn irreducibility() {
        // t^2 - t + 1 mod 3 = (t+1)^2
        assert!(!ModPoly::new(3, vec![1, 2, 1]).is_irreducible());
        assert!(ModPoly::new(5, vec![1, 4, 1]).is_irreducible()); // t^2-t+1 mod 5: disc -3 = 2, non-residue
    }

    #[test]
    fn quartic_mod_3_irreducible() {
        // t^4 - 2t^3 + t^2 - 2t + 1 mod 3
        let f = ModPoly::new(3, vec![1, 1, 1, 1, 1]);
        assert!(f.is_irreducible());
    }

    #[test]
    fn quartic_mod_7_splits_partially() {
        // mod 7 it acquires the double root -1
        let f = ModPoly::new(7, vec![1, 5, 1, 5, 1]);
        assert!(!f.is_squarefree());
        assert!(!f.is_irreducible());
    }
}
