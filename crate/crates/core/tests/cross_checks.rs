//! Cross-checks against independent brute-force oracles that live only
//! in the test suite: a standard-tableau backtracking counter, the
//! bialternant formula for Schur polynomials, and the multivariate
//! expansion route for Schur products.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use ctp_core::lr::{
    dim_gl, dim_sym, lr_coefficient, schur_product, shifted_schur_eval, skew_dim,
};
use ctp_core::oracle::{expand_tensor_chern, schur_pair_decompose, schur_poly};
use ctp_core::partition::{partitions_up_to_weight, Partition, SkewShape};
use ctp_core::tensor::Calculator;

fn p(parts: &[u32]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

/// Counts standard Young tableaux of a skew shape by placing the entries
/// `1..n` one at a time on addable cells.  Deliberately knows nothing
/// about Littlewood-Richardson coefficients or hook lengths.
fn count_standard_tableaux(outer: &Partition, inner: &Partition) -> BigInt {
    let rows = outer.len();
    let mut filled: Vec<u32> = (0..rows).map(|i| inner.part(i)).collect();
    fn rec(outer: &Partition, inner: &Partition, filled: &mut Vec<u32>, left: u32) -> BigInt {
        if left == 0 {
            return BigInt::one();
        }
        let mut total = BigInt::zero();
        for i in 0..filled.len() {
            let j = filled[i];
            if j >= outer.part(i) {
                continue;
            }
            // the cell above must be occupied (or belong to the inner shape)
            if i > 0 && j >= filled[i - 1] {
                continue;
            }
            filled[i] += 1;
            total += rec(outer, inner, filled, left - 1);
            filled[i] -= 1;
        }
        total
    }
    let boxes = outer.weight() - inner.weight();
    rec(outer, inner, &mut filled, boxes)
}

#[test]
fn skew_dim_matches_backtracking_enumeration() {
    for outer in partitions_up_to_weight(8) {
        for inner in outer.subpartitions() {
            let shape = SkewShape::new(outer.clone(), inner.clone()).unwrap();
            assert_eq!(
                skew_dim(&shape),
                count_standard_tableaux(&outer, &inner),
                "skew dimension mismatch at {outer}/{inner}"
            );
        }
    }
}

#[test]
fn dim_sym_matches_backtracking_enumeration() {
    for rho in partitions_up_to_weight(9) {
        assert_eq!(dim_sym(&rho), count_standard_tableaux(&rho, &Partition::empty()));
    }
}

#[test]
fn branching_rule_and_first_shifted_value() {
    for rho in partitions_up_to_weight(10) {
        if rho.is_empty() {
            continue;
        }
        let mut sum = BigInt::zero();
        for i in 0..rho.len() {
            if rho.part(i) > rho.part(i + 1) {
                let mut parts: Vec<u32> = rho.parts().to_vec();
                parts[i] -= 1;
                let smaller = Partition::new(parts).unwrap();
                sum += dim_sym(&smaller);
            }
        }
        assert_eq!(sum, dim_sym(&rho), "branching rule fails at {rho}");
        assert_eq!(
            shifted_schur_eval(&p(&[1]), &rho),
            BigRational::from_integer(BigInt::from(rho.weight())),
        );
    }
}

/// Schur evaluation via the bialternant ratio
/// `det(a_i^{lambda_j + n - j}) / det(a_i^{n - j})` at distinct points.
fn bialternant(lambda: &Partition, points: &[BigRational]) -> BigRational {
    let n = points.len();
    let numer = det_rational(&(0..n)
        .map(|i| {
            (0..n)
                .map(|j| pow_rational(&points[i], lambda.part(j) + (n - 1 - j) as u32))
                .collect::<Vec<_>>()
        })
        .collect::<Vec<_>>());
    let denom = det_rational(&(0..n)
        .map(|i| {
            (0..n)
                .map(|j| pow_rational(&points[i], (n - 1 - j) as u32))
                .collect::<Vec<_>>()
        })
        .collect::<Vec<_>>());
    numer / denom
}

fn pow_rational(base: &BigRational, exp: u32) -> BigRational {
    let mut out = BigRational::one();
    for _ in 0..exp {
        out *= base;
    }
    out
}

fn det_rational(matrix: &[Vec<BigRational>]) -> BigRational {
    let n = matrix.len();
    if n == 0 {
        return BigRational::one();
    }
    let mut det = BigRational::zero();
    for j in 0..n {
        let minor: Vec<Vec<BigRational>> = (1..n)
            .map(|r| {
                (0..n)
                    .filter(|&c| c != j)
                    .map(|c| matrix[r][c].clone())
                    .collect()
            })
            .collect();
        let term = &matrix[0][j] * det_rational(&minor);
        if j % 2 == 0 {
            det += term;
        } else {
            det -= term;
        }
    }
    det
}

#[test]
fn giambelli_matches_bialternant_at_sample_points() {
    let point_sets: [&[i64]; 3] = [&[2, 3], &[2, 3, 5], &[-2, 3, 5, 7]];
    for raw in point_sets {
        let n = raw.len();
        let points: Vec<BigRational> = raw
            .iter()
            .map(|&v| BigRational::new(BigInt::from(v), BigInt::from(2)))
            .collect();
        let vars: Vec<usize> = (0..n).collect();
        for lambda in partitions_up_to_weight(6) {
            if lambda.len() > n {
                continue;
            }
            let poly = schur_poly(&lambda, n, lambda.weight().max(1) * 4, &vars);
            assert_eq!(
                poly.evaluate(&points),
                bialternant(&lambda, &points),
                "bialternant mismatch at {lambda} in {n} variables"
            );
        }
    }
}

/// Expands `s_alpha s_beta` the slow way: multiply the actual Schur
/// polynomials in enough variables and decompose.
fn product_via_polynomials(alpha: &Partition, beta: &Partition) -> BTreeMap<Partition, BigInt> {
    let n = (alpha.weight() + beta.weight()).max(1) as usize;
    let trunc = (alpha.weight() + beta.weight()) * 2;
    let vars: Vec<usize> = (0..n).collect();
    let product = schur_poly(alpha, n, trunc, &vars).mul(&schur_poly(beta, n, trunc, &vars));
    schur_pair_decompose(&product, n as u32, 0)
        .expect("product of symmetric polynomials is symmetric")
        .into_iter()
        .map(|((nu, _), c)| (nu, c))
        .collect()
}

#[test]
fn schur_product_matches_polynomial_expansion() {
    for alpha in partitions_up_to_weight(3) {
        for beta in partitions_up_to_weight(3) {
            let fast = schur_product(&alpha, &beta);
            let slow = product_via_polynomials(&alpha, &beta);
            assert_eq!(fast.len(), slow.len(), "support mismatch at {alpha} * {beta}");
            for (nu, c) in fast.iter() {
                assert_eq!(&slow[nu], c, "coefficient mismatch at {alpha} * {beta} -> {nu}");
            }
        }
    }
    // one asymmetric pair of larger weight
    let alpha = p(&[3, 1]);
    let beta = p(&[2]);
    let fast = schur_product(&alpha, &beta);
    let slow = product_via_polynomials(&alpha, &beta);
    for (nu, c) in fast.iter() {
        assert_eq!(&slow[nu], c);
    }
}

#[test]
fn lr_dimension_consistency() {
    for alpha in partitions_up_to_weight(4) {
        for beta in partitions_up_to_weight(4) {
            let product = schur_product(&alpha, &beta);
            for n in 1..=6i64 {
                let lhs: BigInt = product.iter().map(|(nu, c)| c * dim_gl(nu, n)).sum();
                let rhs = dim_gl(&alpha, n) * dim_gl(&beta, n);
                assert_eq!(lhs, rhs, "dimension consistency fails at {alpha} * {beta}, n={n}");
            }
        }
    }
}

#[test]
fn lr_coefficient_symmetries() {
    for lambda in partitions_up_to_weight(4) {
        for mu in partitions_up_to_weight(4) {
            for (nu, c) in schur_product(&lambda, &mu).iter() {
                assert_eq!(&lr_coefficient(&mu, &lambda, nu), c);
                assert_eq!(
                    &lr_coefficient(&lambda.conjugate(), &mu.conjugate(), &nu.conjugate()),
                    c
                );
            }
        }
    }
}

#[test]
fn small_master_check_against_oracle() {
    let calc = Calculator::new();
    for (e, f) in [(1u32, 1u32), (2, 1), (2, 2)] {
        let degree = 4;
        let expansion = calc.chern_expansion(e, f, degree, false);
        let oracle = expand_tensor_chern(e, f, degree, usize::MAX).unwrap();
        let decomposed = schur_pair_decompose(&oracle, e, f).unwrap();
        let nonzero: Vec<_> = decomposed.iter().filter(|(_, c)| !c.is_zero()).collect();
        assert_eq!(nonzero.len(), expansion.len(), "term count differs at ({e},{f})");
        for ((lambda, mu), c) in nonzero {
            assert_eq!(
                expansion.coefficient(lambda, mu),
                BigRational::from_integer(c.clone()),
                "coefficient mismatch at ({lambda},{mu}) for ranks ({e},{f})"
            );
        }
    }
}
