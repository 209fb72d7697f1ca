//! Witt groups of symmetric bilinear forms: exact diagonalization, square-free
//! reduction, hyperbolic cancellation, the boundary maps into W(Z/pZ), p-adic
//! square and Hilbert-symbol tests, and local-global triviality over Q.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::{legendre, prime_divisors, squarefree_part, val_unit};
use crate::error::{CkError, Result};
use crate::linalg::MatQ;

/// Symmetric rational form (square matrix).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymForm {
    mat: MatQ,
}

impl SymForm {
    pub fn new(mat: MatQ) -> Result<Self> {
        if !mat.is_symmetric() {
            return Err(CkError::Domain("form matrix is not symmetric".into()));
        }
        Ok(SymForm { mat })
    }

    pub fn from_i64(rows: &[Vec<i64>]) -> Result<Self> {
        Self::new(MatQ::from_i64(rows))
    }

    pub fn matrix(&self) -> &MatQ {
        &self.mat
    }

    pub fn rank(&self) -> usize {
        self.mat.rows
    }

    pub fn signature(&self) -> i64 {
        self.mat.signature()
    }
}

/// Diagonalized form with square-free nonzero integer entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagonalForm {
    pub entries: Vec<BigInt>,
}

impl DiagonalForm {
    pub fn from_i64(entries: &[i64]) -> Self {
        DiagonalForm {
            entries: entries.iter().map(|&e| BigInt::from(e)).collect(),
        }
    }

    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    pub fn signature(&self) -> i64 {
        self.entries
            .iter()
            .map(|e| if e.is_positive() { 1 } else { -1 })
            .sum()
    }

    pub fn direct_sum(&self, o: &DiagonalForm) -> DiagonalForm {
        let mut entries = self.entries.clone();
        entries.extend(o.entries.iter().cloned());
        DiagonalForm { entries }
    }

    pub fn negate(&self) -> DiagonalForm {
        DiagonalForm {
            entries: self.entries.iter().map(|e| -e).collect(),
        }
    }

    /// Discriminant (product of entries); square-class representative.
    pub fn disc(&self) -> BigInt {
        let mut d = BigInt::one();
        for e in &self.entries {
            d *= e;
        }
        squarefree_part(&d)
    }
}

/// Class in W(Z/pZ), p an odd prime, given by reduced nonzero residues.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteWittClass {
    pub p: BigInt,
    pub entries: Vec<BigInt>,
}

impl FiniteWittClass {
    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    /// Discriminant as a residue mod p (1 for the empty class).
    pub fn disc(&self) -> BigInt {
        let mut d = BigInt::one();
        for e in &self.entries {
            d = (d * e).mod_floor(&self.p);
        }
        d
    }
}

/// Congruence-diagonalization followed by square-free reduction of each entry.
pub fn diagonalize(q: &SymForm) -> Result<DiagonalForm> {
    let diag = q.matrix().congruence_diagonal();
    let mut entries = Vec::with_capacity(diag.len());
    for d in diag {
        if d.is_zero() {
            return Err(CkError::DegenerateForm);
        }
        // a/b ~ ab modulo squares
        let v = d.numer() * d.denom();
        entries.push(squarefree_part(&v));
    }
    Ok(DiagonalForm { entries })
}

/// Repeatedly deletes pairs {a, -a}.
pub fn cancel_hyperbolic(d: &DiagonalForm) -> DiagonalForm {
    let mut entries = d.entries.clone();
    loop {
        let mut removed = false;
        'outer: for i in 0..entries.len() {
            for j in i + 1..entries.len() {
                if entries[i] == -(&entries[j]) {
                    entries.remove(j);
                    entries.remove(i);
                    removed = true;
                    break 'outer;
                }
            }
        }
        if !removed {
            return DiagonalForm { entries };
        }
    }
}

/// Keep entries divisible by p, divide by p, reduce mod p.
pub fn boundary_p(d: &DiagonalForm, p: &BigInt) -> FiniteWittClass {
    let entries = d
        .entries
        .iter()
        .filter(|e| (*e % p).is_zero())
        .map(|e| (e / p).mod_floor(p))
        .collect();
    FiniteWittClass {
        p: p.clone(),
        entries,
    }
}

/// Keep entries coprime to p, reduce mod p.
pub fn boundary_p_unit(d: &DiagonalForm, p: &BigInt) -> FiniteWittClass {
    let entries = d
        .entries
        .iter()
        .filter(|e| !(*e % p).is_zero())
        .map(|e| e.mod_floor(p))
        .collect();
    FiniteWittClass {
        p: p.clone(),
        entries,
    }
}

/// Triviality in W(Z/pZ): even rank and discriminant in the square class of
/// (-1)^(rank/2).
pub fn finite_trivial(c: &FiniteWittClass) -> bool {
    if c.rank() % 2 != 0 {
        return false;
    }
    if c.rank() == 0 {
        return true;
    }
    let want = if (c.rank() / 2) % 2 == 0 {
        BigInt::one()
    } else {
        &c.p - 1u32
    };
    let ratio = (c.disc() * want).mod_floor(&c.p);
    legendre(&ratio, &c.p) == 1
}

/// Is n a square in Q_p (p = 2 allowed)?
pub fn is_square_qp(n: &BigInt, p: &BigInt) -> bool {
    assert!(!n.is_zero());
    let (v, u) = val_unit(n, p);
    if v % 2 != 0 {
        return false;
    }
    if *p == BigInt::from(2) {
        u.mod_floor(&BigInt::from(8)) == BigInt::one()
    } else {
        legendre(&u, p) == 1
    }
}

/// Place of Q for Hilbert symbols.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Place {
    Real,
    Prime(BigInt),
}

/// Classical Hilbert symbol (a, b)_v in {+1, -1}.
pub fn hilbert_symbol(a: &BigInt, b: &BigInt, place: &Place) -> i32 {
    assert!(!a.is_zero() && !b.is_zero());
    match place {
        Place::Real => {
            if a.is_negative() && b.is_negative() {
                -1
            } else {
                1
            }
        }
        Place::Prime(p) if *p == BigInt::from(2) => {
            let (alpha, u) = val_unit(a, p);
            let (beta, v) = val_unit(b, p);
            let eps = |x: &BigInt| -> u32 {
                // (x - 1)/2 mod 2 for odd x (sign-aware)
                let m = x.mod_floor(&BigInt::from(4));
                u32::from(m == BigInt::from(3))
            };
            let omega = |x: &BigInt| -> u32 {
                // (x^2 - 1)/8 mod 2 for odd x
                let m = x.mod_floor(&BigInt::from(8));
                u32::from(m == BigInt::from(3) || m == BigInt::from(5))
            };
            let e = eps(&u) * eps(&v) + alpha % 2 * omega(&v) + beta % 2 * omega(&u);
            if e % 2 == 0 {
                1
            } else {
                -1
            }
        }
        Place::Prime(p) => {
            let (alpha, u) = val_unit(a, p);
            let (beta, v) = val_unit(b, p);
            let mut s = 1i32;
            if alpha % 2 == 1 && beta % 2 == 1 && (p - 1u32).mod_floor(&BigInt::from(4)) == BigInt::from(2) {
                s = -s;
            }
            if beta % 2 == 1 {
                s *= legendre(&u, p);
            }
            if alpha % 2 == 1 {
                s *= legendre(&v, p);
            }
            s
        }
    }
}

/// Hasse invariant: product of Hilbert symbols over ordered pairs.
pub fn hasse_invariant(d: &DiagonalForm, place: &Place) -> i32 {
    let mut s = 1;
    for i in 0..d.entries.len() {
        for j in i + 1..d.entries.len() {
            s *= hilbert_symbol(&d.entries[i], &d.entries[j], place);
        }
    }
    s
}

/// Witt triviality of the form over Q_p.
///
/// Odd p: both boundary classes must vanish in W(Z/pZ).
/// p = 2: even rank, discriminant a 2-adic square relative to the split form,
/// and matching Hasse invariant.
pub fn trivial_over_qp(d: &DiagonalForm, p: &BigInt) -> bool {
    if *p == BigInt::from(2) {
        if d.rank() % 2 != 0 {
            return false;
        }
        if d.rank() == 0 {
            return true;
        }
        let half = (d.rank() / 2) as u32;
        let split_disc = if half % 2 == 0 {
            BigInt::one()
        } else {
            BigInt::from(-1)
        };
        if !is_square_qp(&(d.disc() * split_disc), p) {
            return false;
        }
        let split = DiagonalForm {
            entries: (0..d.rank())
                .map(|i| if i % 2 == 0 { BigInt::one() } else { BigInt::from(-1) })
                .collect(),
        };
        hasse_invariant(d, &Place::Prime(p.clone()))
            == hasse_invariant(&split, &Place::Prime(p.clone()))
    } else {
        finite_trivial(&boundary_p(d, p)) && finite_trivial(&boundary_p_unit(d, p))
    }
}

/// Witt triviality over Q: zero signature, trivial boundary at every odd
/// prime dividing an entry, and triviality over Q_2.
pub fn trivial_over_q(d: &DiagonalForm) -> bool {
    if d.signature() != 0 {
        return false;
    }
    let mut primes = std::collections::BTreeSet::new();
    for e in &d.entries {
        for p in prime_divisors(e) {
            if p.is_odd() {
                primes.insert(p);
            }
        }
    }
    for p in primes {
        if !finite_trivial(&boundary_p(d, &p)) {
            return false;
        }
    }
    trivial_over_qp(d, &BigInt::from(2))
}
