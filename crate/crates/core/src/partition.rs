//! Partitions, skew shapes, hooks, contents and content polynomials.
//!
//! A partition is a weakly decreasing sequence of positive integers; its
//! Young diagram is drawn with left-justified rows, boxes indexed by
//! `(row, col)` starting at `(1, 1)`.  Everything else in the crate is
//! built on the operations here: conjugation, hook lengths
//! `h(i,j) = lambda_i + lambda*_j - i - j + 1`, contents `c(i,j) = j - i`,
//! content polynomials `(a|rho) = prod_{boxes} (a + c)`, complements in
//! rectangles, vertical-strip removal and partition enumeration.

use core::cmp::Ordering;
use core::fmt;
use core::str::FromStr;

use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::poly::{BivarPoly, Var};

/// An integer partition: weakly decreasing positive parts.
///
/// Zero parts are normalized away at construction, so equality is
/// structural and canonical.  The ordering is graded: first by weight,
/// then lexicographically with larger first parts earlier, which matches
/// the enumeration order of [`partitions_up_to_weight`].
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds a partition, dropping trailing zeros.  The input must be
    /// weakly decreasing once zeros are ignored.
    pub fn new(parts: impl Into<Vec<u32>>) -> Result<Self> {
        let mut parts = parts.into();
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(Error::NotWeaklyDecreasing(alloc::format!("{parts:?}")));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    /// The empty partition.
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The rectangle with `count` parts all equal to `part`.
    pub fn rectangle(part: u32, count: u32) -> Self {
        if part == 0 {
            return Partition::empty();
        }
        Partition { parts: vec![part; count as usize] }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// The `i`-th part (0-indexed), zero beyond the length.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Number of (positive) parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The first part, zero for the empty partition.
    pub fn first(&self) -> u32 {
        self.part(0)
    }

    /// The weight `|lambda|`, i.e. the number of boxes.
    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// The conjugate partition: `conjugate(lambda)_j = #{k : lambda_k >= j}`.
    pub fn conjugate(&self) -> Partition {
        let cols = self.first() as usize;
        let mut parts = vec![0u32; cols];
        for &p in &self.parts {
            for entry in parts.iter_mut().take(p as usize) {
                *entry += 1;
            }
        }
        Partition { parts }
    }

    /// Componentwise containment of Young diagrams.
    pub fn contains(&self, other: &Partition) -> bool {
        other.parts.iter().enumerate().all(|(i, &p)| self.part(i) >= p)
    }

    /// Whether the diagram fits in `rows` rows and `cols` columns.
    pub fn fits_in(&self, rows: u32, cols: u32) -> bool {
        self.len() as u32 <= rows && self.first() <= cols
    }

    /// Hook length of the box `(i, j)`, 1-indexed:
    /// `lambda_i + lambda*_j - i - j + 1`.
    pub fn hook_length(&self, i: u32, j: u32) -> Result<u32> {
        if i == 0 || j == 0 || self.part(i as usize - 1) < j {
            return Err(Error::BoxOutsideShape { row: i, col: j });
        }
        let conj = self.conjugate();
        Ok(self.part(i as usize - 1) + conj.part(j as usize - 1) + 1 - i - j)
    }

    /// Product of all hook lengths; 1 for the empty partition.
    pub fn hook_product(&self) -> BigInt {
        let conj = self.conjugate();
        let mut prod = BigInt::one();
        for (i, &row) in self.parts.iter().enumerate() {
            for j in 0..row as usize {
                let hook = row - 1 - j as u32 + conj.part(j) - i as u32;
                prod *= BigInt::from(hook);
            }
        }
        prod
    }

    /// Iterates the boxes of the diagram as 1-indexed `(row, col)` pairs.
    pub fn boxes(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &row)| (1..=row).map(move |j| (i as u32 + 1, j)))
    }

    /// Content polynomial `(a|lambda) = prod (a + c(box))` at an integer.
    pub fn content_poly(&self, a: i64) -> BigInt {
        let mut prod = BigInt::one();
        for (i, j) in self.boxes() {
            prod *= BigInt::from(a + content(i, j));
        }
        prod
    }

    /// Content polynomial in a formal rank variable.
    pub fn content_poly_in(&self, var: Var) -> BivarPoly {
        let mut prod = BivarPoly::one();
        for (i, j) in self.boxes() {
            prod = &prod * &BivarPoly::var_plus(var, content(i, j));
        }
        prod
    }

    /// Complement of `self` inside the rectangle with `e` rows and `f`
    /// columns: the partition `(e - lambda*_f, ..., e - lambda*_1)`.
    ///
    /// The result has at most `f` parts, each at most `e`, so it lives in
    /// the transposed rectangle [`Partition::rectangle`]`(e, f)`.
    pub fn rectangle_complement(&self, e: u32, f: u32) -> Result<Partition> {
        if !self.fits_in(e, f) {
            return Err(Error::DoesNotFit { rows: e, cols: f });
        }
        let conj = self.conjugate();
        let mut parts: Vec<u32> = (0..f as usize).rev().map(|i| e - conj.part(i)).collect();
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    /// Complement of `self` inside its own bounding rectangle
    /// (`len` rows of length `first`), rotated by a half turn.
    ///
    /// Empty input yields the empty partition (degenerate 0 x 0 rectangle).
    pub fn inner_rectangle_complement(&self) -> Partition {
        let width = self.first();
        let mut parts: Vec<u32> = self.parts.iter().rev().map(|&p| width - p).collect();
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition { parts }
    }

    /// All partitions obtained by removing a vertical strip (at most one
    /// box per row), including `self` itself (the empty strip).
    pub fn remove_vertical_strips(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut current = self.parts.clone();
        collect_strips(&self.parts, 0, &mut current, &mut out);
        out.sort();
        out
    }

    /// All subpartitions `mu` with `mu` contained in `self`, in canonical
    /// order.
    pub fn subpartitions(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut current: Vec<u32> = Vec::new();
        collect_subpartitions(&self.parts, 0, u32::MAX, &mut current, &mut out);
        out.sort();
        out
    }
}

fn collect_strips(parts: &[u32], row: usize, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if row == parts.len() {
        let mut p = current.clone();
        while p.last() == Some(&0) {
            p.pop();
        }
        out.push(Partition { parts: p });
        return;
    }
    for drop in 0..=1u32 {
        if parts[row] < drop {
            continue;
        }
        let value = parts[row] - drop;
        // keep the result weakly decreasing
        if row > 0 && current[row - 1] < value {
            continue;
        }
        current[row] = value;
        collect_strips(parts, row + 1, current, out);
        current[row] = parts[row];
    }
}

fn collect_subpartitions(
    parts: &[u32],
    row: usize,
    prev: u32,
    current: &mut Vec<u32>,
    out: &mut Vec<Partition>,
) {
    if row == parts.len() {
        let mut p = current.clone();
        while p.last() == Some(&0) {
            p.pop();
        }
        out.push(Partition { parts: p });
        return;
    }
    for value in 0..=parts[row].min(prev) {
        current.push(value);
        collect_subpartitions(parts, row + 1, value, current, out);
        current.pop();
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight()
            .cmp(&other.weight())
            // within a weight class, lexicographically larger parts first
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses the textual form: comma-separated parts such as `"3,1"`.
    /// The empty string and `"0"` both denote the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "0" {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for piece in s.split(',') {
            let n: u32 = piece
                .trim()
                .parse()
                .map_err(|_| Error::PartitionParse(s.to_string()))?;
            if n == 0 {
                return Err(Error::PartitionParse(s.to_string()));
            }
            parts.push(n);
        }
        Partition::new(parts)
    }
}

/// A skew shape `outer / inner` with `inner` contained in `outer`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::NotContained {
                outer: outer.to_string(),
                inner: inner.to_string(),
            });
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    /// Number of boxes, `|outer| - |inner|`.
    pub fn box_count(&self) -> u32 {
        self.outer.weight() - self.inner.weight()
    }

    /// Iterates the boxes of the skew diagram as 1-indexed `(row, col)`.
    pub fn boxes(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.outer.parts.iter().enumerate().flat_map(move |(i, &row)| {
            (self.inner.part(i) + 1..=row).map(move |j| (i as u32 + 1, j))
        })
    }

    /// Skew content polynomial `(a|outer - inner)` at an integer.
    pub fn content_poly(&self, a: i64) -> BigInt {
        let mut prod = BigInt::one();
        for (i, j) in self.boxes() {
            prod *= BigInt::from(a + content(i, j));
        }
        prod
    }

    /// Skew content polynomial in a formal rank variable.
    pub fn content_poly_in(&self, var: Var) -> BivarPoly {
        let mut prod = BivarPoly::one();
        for (i, j) in self.boxes() {
            prod = &prod * &BivarPoly::var_plus(var, content(i, j));
        }
        prod
    }
}

/// Content of the box `(i, j)`: column minus row.
pub fn content(i: u32, j: u32) -> i64 {
    j as i64 - i as i64
}

/// Falling factorial `(a|k) = a (a-1) ... (a-k+1)`; `(a|0) = 1`.
///
/// Equals the content polynomial of the single column `(1^k)` at `a`.
pub fn falling_factorial(a: i64, k: u32) -> BigInt {
    let mut prod = BigInt::one();
    for t in 0..k as i64 {
        prod *= BigInt::from(a - t);
    }
    prod
}

/// Binomial coefficient `C(n, k)` for any integer `n`, computed as
/// `(n|k) / k!` (exact).
pub fn binomial(n: i64, k: u32) -> BigInt {
    let mut num = falling_factorial(n, k);
    for t in 2..=k as i64 {
        num /= BigInt::from(t);
    }
    num
}

/// Factorial as a big integer.
pub fn factorial(n: u32) -> BigInt {
    let mut prod = BigInt::one();
    for t in 2..=n {
        prod *= BigInt::from(t);
    }
    prod
}

/// All partitions of weight exactly `n`, lexicographically descending.
pub fn partitions_of_weight(n: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(remaining: u32, max_part: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition { parts: current.clone() });
            return;
        }
        for part in (1..=remaining.min(max_part)).rev() {
            current.push(part);
            rec(remaining - part, part, current, out);
            current.pop();
        }
    }
    rec(n, n, &mut current, &mut out);
    out
}

/// All partitions of weight at most `n`: graded by weight, then
/// lexicographically descending within a weight class.
pub fn partitions_up_to_weight(n: u32) -> Vec<Partition> {
    (0..=n).flat_map(partitions_of_weight).collect()
}

/// All partitions fitting in `rows` rows and `cols` columns (including
/// the empty one), in canonical order.
pub fn partitions_in_rectangle(rows: u32, cols: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current: Vec<u32> = Vec::new();
    fn rec(rows_left: u32, max_part: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
        out.push(Partition { parts: current.clone() });
        if rows_left == 0 {
            return;
        }
        for part in 1..=max_part {
            current.push(part);
            rec(rows_left - 1, part, current, out);
            current.pop();
        }
    }
    rec(rows, cols, &mut current, &mut out);
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn construction_normalizes_zeros() {
        assert_eq!(Partition::new(vec![3, 1, 0, 0]).unwrap(), p(&[3, 1]));
        assert_eq!(Partition::new(vec![0]).unwrap(), Partition::empty());
        assert!(Partition::new(vec![1, 2]).is_err());
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
        assert_eq!(p(&[2, 1]).conjugate(), p(&[2, 1]));
    }

    #[test]
    fn hook_length_examples() {
        assert_eq!(p(&[1]).hook_length(1, 1).unwrap(), 1);
        assert_eq!(p(&[2, 1]).hook_length(1, 1).unwrap(), 3);
        assert_eq!(p(&[2, 2]).hook_length(1, 2).unwrap(), 2);
        assert!(p(&[2, 1]).hook_length(2, 2).is_err());
        assert!(p(&[2, 1]).hook_length(0, 1).is_err());
    }

    #[test]
    fn hook_product_examples() {
        assert_eq!(Partition::empty().hook_product(), BigInt::from(1));
        assert_eq!(p(&[2, 1]).hook_product(), BigInt::from(3));
        assert_eq!(p(&[2, 2]).hook_product(), BigInt::from(12));
    }

    #[test]
    fn hook_product_matches_per_box_hooks() {
        // (3,1): hooks 4,2,1,1
        assert_eq!(p(&[3, 1]).hook_product(), BigInt::from(8));
        let lam = p(&[3, 1]);
        let mut prod = BigInt::from(1);
        for (i, j) in lam.boxes() {
            prod *= BigInt::from(lam.hook_length(i, j).unwrap());
        }
        assert_eq!(prod, lam.hook_product());
    }

    #[test]
    fn content_examples() {
        assert_eq!(content(1, 1), 0);
        assert_eq!(content(1, 3), 2);
        assert_eq!(content(3, 1), -2);
    }

    #[test]
    fn content_poly_examples() {
        assert_eq!(Partition::empty().content_poly(7), BigInt::from(1));
        assert_eq!(p(&[2]).content_poly(2), BigInt::from(6));
        // (e|(2,1)) = e(e+1)(e-1)
        let poly = p(&[2, 1]).content_poly_in(Var::E);
        let e = BivarPoly::var(Var::E);
        let expected = &(&e * &BivarPoly::var_plus(Var::E, 1)) * &BivarPoly::var_plus(Var::E, -1);
        assert_eq!(poly, expected);
    }

    #[test]
    fn falling_factorial_examples() {
        assert_eq!(falling_factorial(7, 0), BigInt::from(1));
        assert_eq!(falling_factorial(5, 3), BigInt::from(60));
        // (f|2) = f(f-1) as the content polynomial of a column
        for a in -6..=6 {
            assert_eq!(falling_factorial(a, 2), p(&[1, 1]).content_poly(a));
        }
    }

    #[test]
    fn falling_factorial_is_column_content_poly() {
        for k in 0..=10u32 {
            let column = Partition::new(vec![1; k as usize]).unwrap();
            for a in -5..=5 {
                assert_eq!(falling_factorial(a, k), column.content_poly(a));
            }
        }
    }

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(4, 2), BigInt::from(6));
        assert_eq!(binomial(3, 5), BigInt::from(0));
        assert_eq!(binomial(0, 0), BigInt::from(1));
        assert_eq!(binomial(-2, 2), BigInt::from(3));
    }

    #[test]
    fn skew_content_poly_examples() {
        let lam = p(&[3, 1]);
        let trivial = SkewShape::new(lam.clone(), lam).unwrap();
        assert_eq!(trivial.content_poly(11), BigInt::from(1));

        let shape = SkewShape::new(p(&[2]), p(&[1])).unwrap();
        assert_eq!(shape.content_poly_in(Var::E), BivarPoly::var_plus(Var::E, 1));

        let shape = SkewShape::new(p(&[1, 1]), p(&[1])).unwrap();
        assert_eq!(shape.content_poly_in(Var::E), BivarPoly::var_plus(Var::E, -1));

        assert!(SkewShape::new(p(&[1]), p(&[2])).is_err());
    }

    #[test]
    fn skew_content_poly_is_quotient() {
        let outer = p(&[4, 3, 1]);
        for inner in outer.subpartitions() {
            let shape = SkewShape::new(outer.clone(), inner.clone()).unwrap();
            for a in -5..=5i64 {
                let denom = inner.content_poly(a);
                if denom != BigInt::from(0) {
                    assert_eq!(&shape.content_poly(a) * denom, outer.content_poly(a));
                }
            }
        }
    }

    #[test]
    fn rectangle_complement_examples() {
        assert_eq!(Partition::empty().rectangle_complement(2, 3).unwrap(), p(&[2, 2, 2]));
        assert_eq!(p(&[1]).rectangle_complement(1, 1).unwrap(), Partition::empty());
        assert_eq!(p(&[2, 1]).rectangle_complement(2, 2).unwrap(), p(&[1]));
        assert!(p(&[3]).rectangle_complement(2, 2).is_err());
        assert!(p(&[1, 1, 1]).rectangle_complement(2, 3).is_err());
    }

    #[test]
    fn rectangle_complement_weight() {
        for e in 1..=4u32 {
            for f in 1..=4u32 {
                for lam in partitions_in_rectangle(e, f) {
                    let comp = lam.rectangle_complement(e, f).unwrap();
                    assert_eq!(comp.weight() + lam.weight(), e * f);
                    assert!(comp.fits_in(f, e));
                    // complementing twice returns to the start
                    assert_eq!(comp.rectangle_complement(f, e).unwrap(), lam);
                }
            }
        }
    }

    #[test]
    fn inner_rectangle_complement_examples() {
        assert_eq!(p(&[2, 2]).inner_rectangle_complement(), Partition::empty());
        assert_eq!(p(&[2, 1]).inner_rectangle_complement(), p(&[1]));
        assert_eq!(p(&[3, 1]).inner_rectangle_complement(), p(&[2]));
        assert_eq!(Partition::empty().inner_rectangle_complement(), Partition::empty());
        let nu = p(&[4, 2, 1]);
        let bar = nu.inner_rectangle_complement();
        assert_eq!(bar.weight(), 4 * 3 - nu.weight());
    }

    #[test]
    fn vertical_strip_removal() {
        assert_eq!(Partition::empty().remove_vertical_strips(), vec![Partition::empty()]);
        assert_eq!(p(&[1]).remove_vertical_strips(), vec![Partition::empty(), p(&[1])]);
        let got = p(&[2, 1]).remove_vertical_strips();
        assert_eq!(got, vec![p(&[1]), p(&[2]), p(&[1, 1]), p(&[2, 1])]);
    }

    #[test]
    fn enumeration_order_and_counts() {
        assert_eq!(partitions_up_to_weight(0), vec![Partition::empty()]);
        assert_eq!(
            partitions_up_to_weight(2),
            vec![Partition::empty(), p(&[1]), p(&[2]), p(&[1, 1])]
        );
        assert_eq!(partitions_of_weight(5).len(), 7);
        // the enumeration order is the sort order
        let mut sorted = partitions_up_to_weight(6);
        sorted.sort();
        assert_eq!(sorted, partitions_up_to_weight(6));
    }

    #[test]
    fn partitions_in_rectangle_counts() {
        // number of partitions inside a 2x2 box is C(4,2) = 6
        assert_eq!(partitions_in_rectangle(2, 2).len(), 6);
        assert_eq!(partitions_in_rectangle(3, 2).len(), 10);
        for lam in partitions_in_rectangle(3, 2) {
            assert!(lam.fits_in(3, 2));
        }
    }

    #[test]
    fn parse_and_display() {
        assert_eq!("3,1".parse::<Partition>().unwrap(), p(&[3, 1]));
        assert_eq!("".parse::<Partition>().unwrap(), Partition::empty());
        assert_eq!("0".parse::<Partition>().unwrap(), Partition::empty());
        assert!("1,2".parse::<Partition>().is_err());
        assert!("a".parse::<Partition>().is_err());
        assert!("1,0".parse::<Partition>().is_err());
        assert_eq!(alloc::format!("{}", p(&[3, 1])), "(3,1)");
        assert_eq!(alloc::format!("{}", Partition::empty()), "()");
    }

    #[test]
    fn order_is_graded() {
        assert!(Partition::empty() < p(&[1]));
        assert!(p(&[2]) < p(&[1, 1]));
        assert!(p(&[3]) < p(&[2, 1]));
        assert!(p(&[2, 1]) < p(&[1, 1, 1]));
        assert!(p(&[1, 1]) < p(&[3]));
    }
}
