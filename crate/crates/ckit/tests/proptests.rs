//! Randomized algebraic invariants via proptest.

use num_bigint::BigInt;
use proptest::prelude::*;

use ckit::poly::{normalize_alexander, IntPoly, LaurentPoly};
use ckit::witt::{boundary_p, trivial_over_q, DiagonalForm};

fn poly_strategy(max_deg: usize, bound: i64) -> impl Strategy<Value = IntPoly> {
    prop::collection::vec(-bound..=bound, 1..=max_deg + 1).prop_map(|cs| IntPoly::from_i64(&cs))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_laws(a in poly_strategy(5, 8), b in poly_strategy(5, 8), c in poly_strategy(4, 8)) {
        let left = &(&a + &b) * &c;
        let right = &(&a * &c) + &(&b * &c);
        prop_assert_eq!(left, right);
        prop_assert_eq!(&a * &b, &b * &a);
    }

    #[test]
    fn resultant_is_multiplicative(
        a in poly_strategy(3, 5),
        b in poly_strategy(3, 5),
        c in poly_strategy(3, 5),
    ) {
        prop_assume!(!a.is_zero() && !b.is_zero() && !c.is_zero());
        let ab = &a * &b;
        prop_assert_eq!(ab.resultant(&c), a.resultant(&c) * b.resultant(&c));
    }

    #[test]
    fn reversal_preserves_resultant_shape(a in poly_strategy(4, 6)) {
        prop_assume!(!a.is_zero());
        // deg(reverse) <= deg; double reversal is identity on t-free parts
        prop_assume!(!a.constant_term().eq(&BigInt::from(0)));
        prop_assert_eq!(a.reverse().reverse(), a);
    }

    #[test]
    fn normalization_strips_monomials(cs in prop::collection::vec(-9i64..=9, 1..=6), off in -4i64..=4) {
        let l = LaurentPoly::from_i64(&cs, off);
        prop_assume!(!l.is_zero());
        let n = normalize_alexander(&l).unwrap();
        prop_assert!(!n.constant_term().eq(&BigInt::from(0)));
        prop_assert!(n.constant_term() > BigInt::from(0));
    }

    #[test]
    fn self_inverse_forms_are_globally_trivial(
        es in prop::collection::vec((-25i64..=25).prop_filter("nonzero", |v| *v != 0), 1..=4)
    ) {
        let d = DiagonalForm {
            entries: es.iter().map(|&v| ckit::arith::squarefree_part(&BigInt::from(v))).collect(),
        };
        let dd = d.direct_sum(&d.negate());
        prop_assert!(trivial_over_q(&dd));
        let b = boundary_p(&dd, &BigInt::from(3));
        prop_assert!(ckit::witt::finite_trivial(&b));
    }
}
