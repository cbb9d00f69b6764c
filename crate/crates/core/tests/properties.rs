//! Property tests for the structural invariants of the combinatorial and
//! polynomial layers.

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use ctp_core::lr::lr_coefficient;
use ctp_core::oracle::{schur_pair_decompose, schur_poly, MultiPoly};
use ctp_core::partition::{falling_factorial, Partition, SkewShape};
use ctp_core::poly::{BivarPoly, Var};

fn arb_partition(max_part: u32, max_len: usize) -> impl Strategy<Value = Partition> {
    proptest::collection::vec(1..=max_part, 0..=max_len).prop_map(|mut parts| {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(parts).unwrap()
    })
}

fn arb_poly(max_terms: usize) -> impl Strategy<Value = BivarPoly> {
    proptest::collection::vec(((0u32..6, 0u32..6), -20i64..=20, 1i64..=9), 0..=max_terms)
        .prop_map(|terms| {
            let mut out = BivarPoly::zero();
            for ((i, j), numer, denom) in terms {
                let coeff = BigRational::new(BigInt::from(numer), BigInt::from(denom));
                out = &out + &BivarPoly::monomial(i, j, coeff);
            }
            out
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn conjugation_is_an_involution(lambda in arb_partition(8, 8)) {
        let conj = lambda.conjugate();
        prop_assert_eq!(conj.conjugate(), lambda.clone());
        prop_assert_eq!(conj.weight(), lambda.weight());
    }

    #[test]
    fn hook_product_is_conjugation_invariant(lambda in arb_partition(6, 6)) {
        prop_assert_eq!(lambda.hook_product(), lambda.conjugate().hook_product());
    }

    #[test]
    fn skew_content_flips_sign_under_conjugation(rho in arb_partition(5, 4)) {
        // (e | rho - sigma) = (-1)^{boxes} (e | rho* - sigma*) at -e
        for sigma in rho.subpartitions() {
            let shape = SkewShape::new(rho.clone(), sigma.clone()).unwrap();
            let conj_shape = SkewShape::new(rho.conjugate(), sigma.conjugate()).unwrap();
            let lhs = shape.content_poly_in(Var::E);
            let mut rhs = conj_shape.content_poly_in(Var::E).negate_var(Var::E);
            if shape.box_count() % 2 == 1 {
                rhs = -&rhs;
            }
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn falling_factorial_matches_column_contents(a in -10i64..=10, k in 0u32..=10) {
        let column = Partition::new(vec![1; k as usize]).unwrap();
        prop_assert_eq!(falling_factorial(a, k), column.content_poly(a));
    }

    #[test]
    fn ring_axioms(p in arb_poly(8), q in arb_poly(8), r in arb_poly(8)) {
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        prop_assert_eq!(&p + &q, &q + &p);
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(&p - &p, BivarPoly::zero());
    }

    #[test]
    fn evaluation_is_a_ring_homomorphism(
        p in arb_poly(6),
        q in arb_poly(6),
        a in -6i64..=6,
        b in -6i64..=6,
    ) {
        prop_assert_eq!((&p * &q).evaluate(a, b), p.evaluate(a, b) * q.evaluate(a, b));
        prop_assert_eq!((&p + &q).evaluate(a, b), p.evaluate(a, b) + q.evaluate(a, b));
    }

    #[test]
    fn lr_coefficients_commute(
        lambda in arb_partition(3, 3),
        mu in arb_partition(3, 3),
        nu in arb_partition(4, 5),
    ) {
        prop_assert_eq!(
            lr_coefficient(&lambda, &mu, &nu),
            lr_coefficient(&mu, &lambda, &nu)
        );
        prop_assert_eq!(
            lr_coefficient(&lambda, &mu, &nu),
            lr_coefficient(&lambda.conjugate(), &mu.conjugate(), &nu.conjugate())
        );
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn decompose_inverts_reconstruction(
        picks in proptest::collection::vec(
            (arb_partition(2, 2), arb_partition(2, 2), -9i64..=9),
            0..=10,
        )
    ) {
        let (e, f) = (2u32, 2u32);
        let trunc = 8;
        let nvars = (e + f) as usize;
        let x_vars: Vec<usize> = (0..e as usize).collect();
        let y_vars: Vec<usize> = (e as usize..nvars).collect();
        let mut combo = MultiPoly::zero(nvars, trunc);
        let mut expected: std::collections::BTreeMap<(Partition, Partition), BigInt> =
            std::collections::BTreeMap::new();
        for (lambda, mu, c) in picks {
            if c == 0 {
                continue;
            }
            let term = schur_poly(&lambda, nvars, trunc, &x_vars)
                .mul(&schur_poly(&mu, nvars, trunc, &y_vars))
                .scale(&BigInt::from(c));
            combo = combo.add(&term);
            let entry = expected.entry((lambda, mu)).or_default();
            *entry += BigInt::from(c);
        }
        expected.retain(|_, c| !num_traits::Zero::is_zero(c));
        let decomposed = schur_pair_decompose(&combo, e, f).unwrap();
        prop_assert_eq!(decomposed, expected);
    }
}
