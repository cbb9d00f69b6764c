//! The Littlewood-Richardson rule and dimension formulas.
//!
//! `c_{lambda,mu}^nu` is computed by counting skew semistandard tableaux
//! of shape `nu/lambda` and content `mu` whose reverse reading word is a
//! lattice word.  Schur products are generated directly, as chains of
//! horizontal strips satisfying the lattice condition, so only partitions
//! with nonzero coefficient are ever visited.  On top of the rule sit the
//! hook-length dimension formula for symmetric groups, the content-
//! polynomial dimension formula for general linear groups, skew
//! dimensions, shifted Schur evaluations and generalized Kostka
//! coefficients (iterated column Pieri rule).

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::partition::{factorial, falling_factorial, Partition, SkewShape};
use crate::poly::{BivarPoly, Var};

/// A finite integer combination of Schur functions, keyed by partition.
///
/// Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct SchurExpansion {
    terms: BTreeMap<Partition, BigInt>,
}

impl SchurExpansion {
    pub fn new() -> Self {
        SchurExpansion { terms: BTreeMap::new() }
    }

    /// The expansion consisting of a single Schur function.
    pub fn single(p: Partition) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(p, BigInt::one());
        SchurExpansion { terms }
    }

    pub fn coefficient(&self, p: &Partition) -> BigInt {
        self.terms.get(p).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn add_term(&mut self, p: Partition, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use alloc::collections::btree_map::Entry;
        match self.terms.entry(p) {
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
            Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &BigInt)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

impl FromIterator<(Partition, BigInt)> for SchurExpansion {
    fn from_iter<T: IntoIterator<Item = (Partition, BigInt)>>(iter: T) -> Self {
        let mut out = SchurExpansion::new();
        for (p, c) in iter {
            out.add_term(p, c);
        }
        out
    }
}

/// Littlewood-Richardson coefficient `c_{lambda,mu}^nu`.
///
/// Counts skew semistandard tableaux of shape `nu/lambda` and content
/// `mu` whose reverse reading word is a lattice word.  Out-of-domain
/// triples simply yield zero.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> BigInt {
    if nu.weight() != lambda.weight() + mu.weight()
        || !nu.contains(lambda)
        || !nu.contains(mu)
    {
        return BigInt::zero();
    }
    if mu.is_empty() {
        return BigInt::one();
    }
    let rows = nu.len();
    let mut grid: Vec<Vec<u32>> = nu.parts().iter().map(|&r| vec![0; r as usize]).collect();
    let mut counts = vec![0u32; mu.len()];
    let mut total = 0u64;
    fill_boxes(nu, lambda, Some(mu), &mut grid, &mut counts, 0, rows, &mut |_| total += 1);
    BigInt::from(total)
}

/// Expands `s_{outer/inner}` in the Schur basis:
/// the coefficient of `s_sigma` is `c_{inner,sigma}^outer`.
pub fn skew_schur_expansion(shape: &SkewShape) -> SchurExpansion {
    let outer = shape.outer();
    let inner = shape.inner();
    if outer == inner {
        return SchurExpansion::single(Partition::empty());
    }
    let rows = outer.len();
    let mut grid: Vec<Vec<u32>> = outer.parts().iter().map(|&r| vec![0; r as usize]).collect();
    let mut counts = vec![0u32; rows];
    let mut out = SchurExpansion::new();
    fill_boxes(outer, inner, None, &mut grid, &mut counts, 0, rows, &mut |counts| {
        let mut parts: Vec<u32> = counts.to_vec();
        while parts.last() == Some(&0) {
            parts.pop();
        }
        let sigma = Partition::new(parts).expect("lattice content is weakly decreasing");
        out.add_term(sigma, BigInt::one());
    });
    out
}

/// Backtracking filler shared by the counting and expansion entry points.
///
/// Boxes are visited in reverse reading order (rows top to bottom, right
/// to left within a row), so the lattice condition can be maintained
/// incrementally.  With `content = Some(mu)` the filling is constrained
/// to that exact content; with `None` every lattice filling is visited
/// and `emit` receives the final content counts.
#[allow(clippy::too_many_arguments)]
fn fill_boxes(
    outer: &Partition,
    inner: &Partition,
    content: Option<&Partition>,
    grid: &mut Vec<Vec<u32>>,
    counts: &mut Vec<u32>,
    pos: usize,
    rows: usize,
    emit: &mut impl FnMut(&[u32]),
) {
    // locate the box for linear position `pos`: row-major, right-to-left
    let mut remaining = pos;
    let mut row = 0;
    loop {
        if row == rows {
            emit(counts);
            return;
        }
        let width = (outer.part(row) - inner.part(row)) as usize;
        if remaining < width {
            break;
        }
        remaining -= width;
        row += 1;
    }
    let col = outer.part(row) as usize - 1 - remaining;

    let max_value = match content {
        Some(mu) => mu.len().min(row + 1),
        None => row + 1,
    };
    for value in 1..=max_value as u32 {
        let idx = value as usize - 1;
        if let Some(mu) = content {
            if counts[idx] >= mu.part(idx) {
                continue;
            }
        }
        // lattice: after placing, #value must not exceed #(value-1)
        if value > 1 && counts[idx] >= counts[idx - 1] {
            continue;
        }
        // weakly increasing along the row (right neighbour filled earlier)
        if col + 1 < outer.part(row) as usize && value > grid[row][col + 1] {
            continue;
        }
        // strictly increasing down the column
        if row > 0 && col >= inner.part(row - 1) as usize && value <= grid[row - 1][col] {
            continue;
        }
        grid[row][col] = value;
        counts[idx] += 1;
        fill_boxes(outer, inner, content, grid, counts, pos + 1, rows, emit);
        counts[idx] -= 1;
        grid[row][col] = 0;
    }
}

/// Schur product `s_alpha * s_beta` expanded in the Schur basis.
///
/// Candidate partitions are generated directly: entry `t` of a
/// Littlewood-Richardson filling occupies a horizontal strip, so the
/// product is a sum over chains of horizontal strip additions of sizes
/// `beta_1, beta_2, ...` subject to the lattice condition between
/// consecutive strips.
pub fn schur_product(alpha: &Partition, beta: &Partition) -> SchurExpansion {
    let mut out = SchurExpansion::new();
    let mut shape: Vec<u32> = alpha.parts().to_vec();
    // prefix sums per row of the previous strip's increments
    let prev: Vec<u32> = Vec::new();
    chain_strips(beta.parts(), 0, &mut shape, &prev, &mut out);
    out
}

fn chain_strips(
    strip_sizes: &[u32],
    t: usize,
    shape: &mut Vec<u32>,
    prev_prefix: &[u32],
    out: &mut SchurExpansion,
) {
    if t == strip_sizes.len() {
        let mut parts = shape.clone();
        while parts.last() == Some(&0) {
            parts.pop();
        }
        out.add_term(Partition::new(parts).expect("strip chains keep shapes decreasing"), BigInt::one());
        return;
    }
    let size = strip_sizes[t];
    let rows = shape.len() + 1;
    let mut increments = vec![0u32; rows];
    add_strip_rows(size, 0, rows, t, shape, prev_prefix, &mut increments, &mut |shape, prefix| {
        chain_strips(strip_sizes, t + 1, shape, prefix, out)
    });
}

/// Chooses row increments for one horizontal strip, top row first.
#[allow(clippy::too_many_arguments)]
fn add_strip_rows(
    remaining: u32,
    row: usize,
    rows: usize,
    t: usize,
    shape: &mut Vec<u32>,
    prev_prefix: &[u32],
    increments: &mut Vec<u32>,
    next: &mut impl FnMut(&mut Vec<u32>, &[u32]),
) {
    if row == rows {
        if remaining == 0 {
            let mut prefix = vec![0u32; rows + 1];
            for r in 0..rows {
                prefix[r + 1] = prefix[r] + increments[r];
            }
            next(shape, &prefix);
        }
        return;
    }
    let old = if row < shape.len() { shape[row] } else { 0 };
    // strip condition: new row value must not exceed the previous row's
    // *old* value, so each column gains at most one box
    let cap = if row == 0 { remaining } else { (shape_old(shape, row - 1, increments) - old).min(remaining) };
    let prefix_before: u32 = increments[..row].iter().sum();
    for d in 0..=cap {
        // lattice between strip t-1 and t (no constraint for the first strip)
        if t > 0 {
            let bound = if row == 0 { 0 } else { prev_prefix.get(row).copied().unwrap_or(*prev_prefix.last().unwrap()) };
            if prefix_before + d > bound {
                continue;
            }
        }
        increments[row] = d;
        let grew = row == shape.len() && d > 0;
        if grew {
            shape.push(d);
        } else if row < shape.len() {
            shape[row] = old + d;
        }
        add_strip_rows(remaining - d, row + 1, rows, t, shape, prev_prefix, increments, next);
        if grew {
            shape.pop();
        } else if row < shape.len() {
            shape[row] = old;
        }
        increments[row] = 0;
    }
}

/// The pre-strip value of `shape[row]`, reconstructed from the increments
/// already applied above the current row.
fn shape_old(shape: &[u32], row: usize, increments: &[u32]) -> u32 {
    shape[row] - increments[row]
}

/// Dimension of the irreducible symmetric-group representation indexed by
/// `rho`: the hook-length formula `|rho|! / h(rho)`.
pub fn dim_sym(rho: &Partition) -> BigInt {
    exact_div(factorial(rho.weight()), &rho.hook_product())
}

/// Dimension of the Schur module for the general linear group of rank
/// `n`: `(n|rho) / h(rho)`.  Zero when `rho` has more than `n >= 0` rows.
pub fn dim_gl(rho: &Partition, n: i64) -> BigInt {
    exact_div(rho.content_poly(n), &rho.hook_product())
}

/// Same dimension as a polynomial in a formal rank variable.
pub fn dim_gl_poly(rho: &Partition, var: Var) -> BivarPoly {
    let h = BigRational::from_integer(rho.hook_product());
    rho.content_poly_in(var).scale(&h.recip())
}

fn exact_div(num: BigInt, den: &BigInt) -> BigInt {
    let (q, r) = num_integer::Integer::div_rem(&num, den);
    debug_assert!(r.is_zero(), "division expected to be exact");
    q
}

/// Number of standard tableaux of a skew shape, via the expansion
/// `dim[outer/inner] = sum_sigma c_{sigma,inner}^outer dim[sigma]`.
pub fn skew_dim(shape: &SkewShape) -> BigInt {
    skew_schur_expansion(shape)
        .iter()
        .map(|(sigma, c)| c * dim_sym(sigma))
        .sum()
}

/// Shifted Schur function evaluated on a partition:
/// `s*_mu(rho) = (dim[rho/mu] / dim[rho]) * (|rho| | |mu|)`,
/// and zero when `mu` is not contained in `rho`.
pub fn shifted_schur_eval(mu: &Partition, rho: &Partition) -> BigRational {
    if !rho.contains(mu) {
        return BigRational::zero();
    }
    let shape = SkewShape::new(rho.clone(), mu.clone()).expect("containment checked");
    let numer = skew_dim(&shape) * falling_factorial(rho.weight() as i64, mu.weight());
    BigRational::new(numer, dim_sym(rho))
}

/// All partitions obtained from `lambda` by adding a vertical strip of
/// `k` boxes; partitions longer than `max_rows` (when given) are dropped.
pub fn vertical_strip_additions(lambda: &Partition, k: u32, max_rows: Option<u32>) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current: Vec<u32> = lambda.parts().to_vec();
    fn rec(
        lambda: &[u32],
        row: usize,
        remaining: u32,
        current: &mut Vec<u32>,
        max_rows: Option<u32>,
        out: &mut Vec<Partition>,
    ) {
        if row == lambda.len() {
            // any leftover boxes become new rows of one box each
            let total_rows = lambda.len() + remaining as usize;
            if let Some(cap) = max_rows {
                if total_rows as u32 > cap {
                    return;
                }
            }
            let mut parts = current.clone();
            parts.extend(core::iter::repeat(1).take(remaining as usize));
            out.push(Partition::new(parts).expect("strip addition keeps shape decreasing"));
            return;
        }
        for add in 0..=1u32.min(remaining) {
            let value = lambda[row] + add;
            if row > 0 && value > current[row - 1] {
                continue;
            }
            current[row] = value;
            rec(lambda, row + 1, remaining - add, current, max_rows, out);
            current[row] = lambda[row];
        }
    }
    rec(lambda.parts(), 0, k, &mut current, max_rows, &mut out);
    out.sort();
    out
}

/// Multiplies an expansion by the elementary symmetric function `e_k`
/// (column Pieri rule).
pub fn multiply_by_elementary(
    expansion: &SchurExpansion,
    k: u32,
    max_rows: Option<u32>,
) -> SchurExpansion {
    let mut out = SchurExpansion::new();
    for (lambda, c) in expansion.iter() {
        for nu in vertical_strip_additions(lambda, k, max_rows) {
            out.add_term(nu, c.clone());
        }
    }
    out
}

/// Generalized Kostka coefficient: the multiplicity of `s_lambda` in
/// `s_alpha e_1^{sigma_1} ... e_m^{sigma_m}`, with `sigma[k-1]` the
/// exponent of `e_k`.
pub fn generalized_kostka(lambda: &Partition, alpha: &Partition, sigma: &[u32]) -> BigInt {
    let added: u32 = sigma.iter().enumerate().map(|(i, &s)| (i as u32 + 1) * s).sum();
    if lambda.weight() != alpha.weight() + added || !lambda.contains(alpha) {
        return BigInt::zero();
    }
    let cap = Some(lambda.len() as u32);
    let mut expansion = SchurExpansion::single(alpha.clone());
    for (i, &times) in sigma.iter().enumerate() {
        for _ in 0..times {
            expansion = multiply_by_elementary(&expansion, i as u32 + 1, cap);
        }
    }
    expansion.coefficient(lambda)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn big(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn lr_pieri_and_zero_cases() {
        assert_eq!(lr_coefficient(&p(&[1]), &p(&[1]), &p(&[2])), big(1));
        assert_eq!(lr_coefficient(&p(&[1]), &p(&[1]), &p(&[1, 1])), big(1));
        assert_eq!(lr_coefficient(&p(&[1]), &p(&[1]), &p(&[3])), big(0));
        assert_eq!(lr_coefficient(&p(&[2]), &p(&[1]), &p(&[2, 2])), big(0));
    }

    #[test]
    fn lr_multiplicity_two() {
        assert_eq!(lr_coefficient(&p(&[2, 1]), &p(&[2, 1]), &p(&[3, 2, 1])), big(2));
        assert_eq!(lr_coefficient(&p(&[2, 1]), &p(&[2, 1]), &p(&[4, 2])), big(1));
    }

    #[test]
    fn schur_product_identity_element() {
        let beta = p(&[3, 1]);
        let prod = schur_product(&Partition::empty(), &beta);
        assert_eq!(prod.len(), 1);
        assert_eq!(prod.coefficient(&beta), big(1));
        // and on the other side
        let prod = schur_product(&beta, &Partition::empty());
        assert_eq!(prod.coefficient(&beta), big(1));
    }

    #[test]
    fn schur_product_pieri() {
        let prod = schur_product(&p(&[1]), &p(&[1]));
        assert_eq!(prod.len(), 2);
        assert_eq!(prod.coefficient(&p(&[2])), big(1));
        assert_eq!(prod.coefficient(&p(&[1, 1])), big(1));
    }

    #[test]
    fn schur_product_hook_squared() {
        // s_(2,1)^2: seven partitions, multiplicity two at (3,2,1)
        let prod = schur_product(&p(&[2, 1]), &p(&[2, 1]));
        let expected: &[(&[u32], i64)] = &[
            (&[4, 2], 1),
            (&[4, 1, 1], 1),
            (&[3, 3], 1),
            (&[3, 2, 1], 2),
            (&[3, 1, 1, 1], 1),
            (&[2, 2, 2], 1),
            (&[2, 2, 1, 1], 1),
        ];
        assert_eq!(prod.len(), expected.len());
        let total: BigInt = prod.iter().map(|(_, c)| c.clone()).sum();
        assert_eq!(total, big(8));
        for &(parts, c) in expected {
            assert_eq!(prod.coefficient(&p(parts)), big(c));
        }
    }

    #[test]
    fn schur_product_agrees_with_lr_counting() {
        let cases = [
            (p(&[2, 1]), p(&[2, 1])),
            (p(&[3, 1]), p(&[2])),
            (p(&[2, 2]), p(&[2, 1])),
            (p(&[1, 1, 1]), p(&[2, 1])),
        ];
        for (a, b) in cases {
            let prod = schur_product(&a, &b);
            for (nu, c) in prod.iter() {
                assert_eq!(&lr_coefficient(&a, &b, nu), c, "mismatch at {a} * {b} -> {nu}");
                assert_eq!(nu.weight(), a.weight() + b.weight());
                assert!(nu.contains(&a) && nu.contains(&b));
            }
            // and no partition outside the support has a nonzero count
            for nu in crate::partition::partitions_of_weight(a.weight() + b.weight()) {
                assert_eq!(lr_coefficient(&a, &b, &nu), prod.coefficient(&nu));
            }
        }
    }

    #[test]
    fn dim_sym_examples() {
        assert_eq!(dim_sym(&Partition::empty()), big(1));
        assert_eq!(dim_sym(&p(&[1])), big(1));
        assert_eq!(dim_sym(&p(&[2, 1])), big(2));
        assert_eq!(dim_sym(&p(&[2, 2])), big(2));
    }

    #[test]
    fn dim_gl_examples() {
        assert_eq!(dim_gl(&p(&[2]), 2), big(3));
        assert_eq!(dim_gl(&p(&[1, 1]), 2), big(1));
        assert_eq!(dim_gl(&p(&[1, 1, 1]), 2), big(0));
        assert_eq!(dim_gl_poly(&p(&[1]), Var::E), BivarPoly::var(Var::E));
    }

    #[test]
    fn skew_dim_examples() {
        let rho = p(&[3, 2]);
        assert_eq!(skew_dim(&SkewShape::new(rho.clone(), rho).unwrap()), big(1));
        assert_eq!(skew_dim(&SkewShape::new(p(&[2, 1]), p(&[1])).unwrap()), big(2));
        assert_eq!(skew_dim(&SkewShape::new(p(&[2, 2]), p(&[1])).unwrap()), big(2));
    }

    #[test]
    fn shifted_schur_examples() {
        use num_traits::One;
        let rho = p(&[2, 1]);
        assert_eq!(shifted_schur_eval(&Partition::empty(), &rho), BigRational::one());
        assert_eq!(shifted_schur_eval(&p(&[3]), &rho), BigRational::zero());
        // s*_(1)(rho) = |rho|
        assert_eq!(
            shifted_schur_eval(&p(&[1]), &rho),
            BigRational::from_integer(big(3))
        );
        for parts in [&[2u32, 2] as &[u32], &[3, 1], &[4, 2, 1]] {
            let rho = p(parts);
            assert_eq!(
                shifted_schur_eval(&p(&[1]), &rho),
                BigRational::from_integer(big(rho.weight() as i64))
            );
        }
    }

    #[test]
    fn vertical_strips() {
        assert_eq!(vertical_strip_additions(&Partition::empty(), 1, None), vec![p(&[1])]);
        assert_eq!(
            vertical_strip_additions(&p(&[1]), 1, None),
            vec![p(&[2]), p(&[1, 1])]
        );
        assert_eq!(
            vertical_strip_additions(&p(&[1]), 2, None),
            vec![p(&[2, 1]), p(&[1, 1, 1])]
        );
        assert_eq!(vertical_strip_additions(&p(&[1]), 2, Some(2)), vec![p(&[2, 1])]);
    }

    #[test]
    fn multiply_by_elementary_examples() {
        let start = SchurExpansion::single(Partition::empty());
        let e1 = multiply_by_elementary(&start, 1, None);
        assert_eq!(e1.len(), 1);
        assert_eq!(e1.coefficient(&p(&[1])), big(1));
        let e1_sq = multiply_by_elementary(&e1, 1, None);
        assert_eq!(e1_sq.coefficient(&p(&[2])), big(1));
        assert_eq!(e1_sq.coefficient(&p(&[1, 1])), big(1));
    }

    #[test]
    fn generalized_kostka_examples() {
        assert_eq!(generalized_kostka(&p(&[2, 1]), &p(&[2, 1]), &[]), big(1));
        assert_eq!(generalized_kostka(&p(&[2, 1]), &p(&[2, 1]), &[0, 0]), big(1));
        assert_eq!(generalized_kostka(&p(&[1, 1]), &Partition::empty(), &[0, 1]), big(1));
        assert_eq!(generalized_kostka(&p(&[2, 1]), &p(&[1]), &[2]), big(2));
        // weight mismatch
        assert_eq!(generalized_kostka(&p(&[2, 1]), &p(&[1]), &[1]), big(0));
    }

    #[test]
    fn skew_expansion_coefficients_are_lr() {
        let outer = p(&[3, 2, 1]);
        for inner in outer.subpartitions() {
            let shape = SkewShape::new(outer.clone(), inner.clone()).unwrap();
            let expansion = skew_schur_expansion(&shape);
            for (sigma, c) in expansion.iter() {
                assert_eq!(&lr_coefficient(&inner, sigma, &outer), c);
            }
        }
    }
}
