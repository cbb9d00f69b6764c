//! Brute-force ground truth in Chern roots.
//!
//! Works with truncated multivariate polynomials over the integers in two
//! sets of formal roots `x_1..x_e`, `y_1..y_f`.  The total Chern class of
//! the tensor product is the literal product `prod (1 + x_i + y_j)`, the
//! Segre series the truncated product of geometric series in `x_i + y_j`.
//! Schur polynomials are built by the dual Jacobi-Trudi determinant
//! `s_lambda = det(e_{lambda*_i - i + j})`, and expansions in the basis
//! `s_lambda(x) s_mu(y)` are recovered by degree-graded greedy
//! elimination on dominance-leading monomials.  Everything here is kept
//! deliberately naive: its only job is to be trustworthy at small size.

use core::fmt;

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::lr::{dim_gl, shifted_schur_eval, skew_schur_expansion};
use crate::partition::{partitions_in_rectangle, Partition, SkewShape};
use crate::report::CheckReport;

/// Exponent vector; the monomial order is graded, then lexicographic
/// with earlier variables weighing more.
#[derive(Clone, PartialEq, Eq, Debug)]
struct Mono(Vec<u8>);

impl Mono {
    fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }
}

impl Ord for Mono {
    fn cmp(&self, other: &Self) -> core::cmp::Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, other: &Self) -> Option<core::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse multivariate polynomial with integer coefficients, truncated
/// by total degree: monomials beyond `trunc` are discarded by every
/// operation.
#[derive(Clone, PartialEq, Eq)]
pub struct MultiPoly {
    nvars: usize,
    trunc: u32,
    terms: BTreeMap<Mono, BigInt>,
}

impl MultiPoly {
    pub fn zero(nvars: usize, trunc: u32) -> Self {
        MultiPoly { nvars, trunc, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, trunc: u32, c: i64) -> Self {
        let mut out = MultiPoly::zero(nvars, trunc);
        out.add_term(&vec![0; nvars], BigInt::from(c));
        out
    }

    pub fn one(nvars: usize, trunc: u32) -> Self {
        MultiPoly::constant(nvars, trunc, 1)
    }

    pub fn var(nvars: usize, trunc: u32, idx: usize) -> Self {
        let mut exps = vec![0u8; nvars];
        exps[idx] = 1;
        let mut out = MultiPoly::zero(nvars, trunc);
        out.add_term(&exps, BigInt::one());
        out
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn truncation(&self) -> u32 {
        self.trunc
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, exps: &[u8]) -> BigInt {
        self.terms.get(&Mono(exps.to_vec())).cloned().unwrap_or_else(BigInt::zero)
    }

    fn add_term(&mut self, exps: &[u8], c: BigInt) {
        debug_assert_eq!(exps.len(), self.nvars);
        let mono = Mono(exps.to_vec());
        if c.is_zero() || mono.degree() > self.trunc {
            return;
        }
        use alloc::collections::btree_map::Entry;
        match self.terms.entry(mono) {
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

    fn compatible(&self, other: &Self) {
        assert_eq!(self.nvars, other.nvars, "mismatched variable count");
        assert_eq!(self.trunc, other.trunc, "mismatched truncation degree");
    }

    pub fn add(&self, other: &Self) -> Self {
        self.compatible(other);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(&m.0, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.compatible(other);
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(&m.0, -c.clone());
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.compatible(other);
        let mut out = MultiPoly::zero(self.nvars, self.trunc);
        let mut exps = vec![0u8; self.nvars];
        for (m1, c1) in &self.terms {
            let d1 = m1.degree();
            for (m2, c2) in &other.terms {
                if d1 + m2.degree() > self.trunc {
                    continue;
                }
                for (k, e) in exps.iter_mut().enumerate() {
                    *e = m1.0[k] + m2.0[k];
                }
                out.add_term(&exps, c1 * c2);
            }
        }
        out
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return MultiPoly::zero(self.nvars, self.trunc);
        }
        MultiPoly {
            nvars: self.nvars,
            trunc: self.trunc,
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    /// Substitutes `v -> -v` for every variable.
    pub fn negate_vars(&self) -> Self {
        MultiPoly {
            nvars: self.nvars,
            trunc: self.trunc,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let c = if m.degree() % 2 == 1 { -c.clone() } else { c.clone() };
                    (m.clone(), c)
                })
                .collect(),
        }
    }

    /// Exchanges two variables.
    pub fn swap_vars(&self, a: usize, b: usize) -> Self {
        MultiPoly {
            nvars: self.nvars,
            trunc: self.trunc,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let mut exps = m.0.clone();
                    exps.swap(a, b);
                    (Mono(exps), c.clone())
                })
                .collect(),
        }
    }

    /// Substitutes `v -> 1 + v` for the listed variables, by exact
    /// binomial expansion.
    pub fn shift_vars_up_one(&self, vars: &[usize]) -> Self {
        let mut out = self.clone();
        for &v in vars {
            let mut next = MultiPoly::zero(self.nvars, self.trunc);
            for (m, c) in &out.terms {
                let power = m.0[v];
                let mut exps = m.0.clone();
                for k in 0..=power {
                    exps[v] = k;
                    let scalar = crate::partition::binomial(power as i64, k as u32);
                    next.add_term(&exps, c * scalar);
                }
            }
            out = next;
        }
        out
    }

    /// Exact evaluation at a rational point.
    pub fn evaluate(&self, point: &[BigRational]) -> BigRational {
        assert_eq!(point.len(), self.nvars);
        let mut sum = BigRational::zero();
        for (m, c) in &self.terms {
            let mut term = BigRational::from_integer(c.clone());
            for (v, &e) in m.0.iter().enumerate() {
                for _ in 0..e {
                    term *= &point[v];
                }
            }
            sum += term;
        }
        sum
    }

    fn leading(&self) -> Option<(&Mono, &BigInt)> {
        self.terms.iter().next_back()
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{c}")?;
            for (v, &e) in m.0.iter().enumerate() {
                match e {
                    0 => {}
                    1 => write!(f, "*v{v}")?,
                    _ => write!(f, "*v{v}^{e}")?,
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Elementary symmetric polynomial `e_k` in the chosen variables.
pub fn elementary_symmetric(nvars: usize, trunc: u32, k: u32, vars: &[usize]) -> MultiPoly {
    let mut out = MultiPoly::zero(nvars, trunc);
    if k > vars.len() as u32 {
        return out;
    }
    let mut exps = vec![0u8; nvars];
    fn rec(
        vars: &[usize],
        from: usize,
        left: u32,
        exps: &mut Vec<u8>,
        out: &mut MultiPoly,
    ) {
        if left == 0 {
            out.add_term(exps, BigInt::one());
            return;
        }
        if vars.len() - from < left as usize {
            return;
        }
        for pick in from..vars.len() {
            exps[vars[pick]] = 1;
            rec(vars, pick + 1, left - 1, exps, out);
            exps[vars[pick]] = 0;
        }
    }
    rec(vars, 0, k, &mut exps, &mut out);
    out
}

/// Complete homogeneous symmetric polynomial `h_k` in the chosen
/// variables.
pub fn complete_symmetric(nvars: usize, trunc: u32, k: u32, vars: &[usize]) -> MultiPoly {
    let mut out = MultiPoly::zero(nvars, trunc);
    if vars.is_empty() {
        if k == 0 {
            return MultiPoly::one(nvars, trunc);
        }
        return out;
    }
    let mut exps = vec![0u8; nvars];
    fn rec(vars: &[usize], from: usize, left: u32, exps: &mut Vec<u8>, out: &mut MultiPoly) {
        if from == vars.len() - 1 {
            exps[vars[from]] = left as u8;
            out.add_term(exps, BigInt::one());
            exps[vars[from]] = 0;
            return;
        }
        for take in 0..=left {
            exps[vars[from]] = take as u8;
            rec(vars, from + 1, left - take, exps, out);
            exps[vars[from]] = 0;
        }
    }
    rec(vars, 0, k, &mut exps, &mut out);
    out
}

/// Schur polynomial in the chosen variables, by the dual Jacobi-Trudi
/// (Giambelli) determinant `det(e_{lambda*_i - i + j})` of size
/// `lambda_1`.  Identically zero when `lambda` has more rows than there
/// are variables.
pub fn schur_poly(lambda: &Partition, nvars: usize, trunc: u32, vars: &[usize]) -> MultiPoly {
    let size = lambda.first() as usize;
    if size == 0 {
        return MultiPoly::one(nvars, trunc);
    }
    let conj = lambda.conjugate();
    let matrix: Vec<Vec<MultiPoly>> = (0..size)
        .map(|i| {
            (0..size)
                .map(|j| {
                    let index = conj.part(i) as i64 - i as i64 + j as i64;
                    if index < 0 {
                        MultiPoly::zero(nvars, trunc)
                    } else {
                        elementary_symmetric(nvars, trunc, index as u32, vars)
                    }
                })
                .collect()
        })
        .collect();
    det_multipoly(&matrix)
}

/// Determinant by expansion along rows, memoized on column subsets.
fn det_multipoly(matrix: &[Vec<MultiPoly>]) -> MultiPoly {
    let n = matrix.len();
    let space = (matrix[0][0].nvars, matrix[0][0].trunc);
    let mut memo: BTreeMap<u32, MultiPoly> = BTreeMap::new();
    fn rec(
        matrix: &[Vec<MultiPoly>],
        row: usize,
        cols: u32,
        space: (usize, u32),
        memo: &mut BTreeMap<u32, MultiPoly>,
    ) -> MultiPoly {
        let n = matrix.len();
        if row == n {
            return MultiPoly::one(space.0, space.1);
        }
        if let Some(hit) = memo.get(&cols) {
            return hit.clone();
        }
        let mut det = MultiPoly::zero(space.0, space.1);
        let mut sign = false;
        for j in 0..n {
            if cols & (1 << j) == 0 {
                continue;
            }
            let minor = rec(matrix, row + 1, cols & !(1 << j), space, memo);
            let contribution = matrix[row][j].mul(&minor);
            det = if sign { det.sub(&contribution) } else { det.add(&contribution) };
            sign = !sign;
        }
        memo.insert(cols, det.clone());
        det
    }
    rec(matrix, 0, (1 << n) - 1, space, &mut memo)
}

/// Expands the total Chern class of the tensor product,
/// `prod_{i,j} (1 + x_i + y_j)`, truncated at total degree `d`.
///
/// Fails if the intermediate term count ever exceeds `max_terms`.
pub fn expand_tensor_chern(e: u32, f: u32, d: u32, max_terms: usize) -> Result<MultiPoly> {
    let nvars = (e + f) as usize;
    let mut out = MultiPoly::one(nvars, d);
    for i in 0..e as usize {
        for j in 0..f as usize {
            let factor = MultiPoly::one(nvars, d)
                .add(&MultiPoly::var(nvars, d, i))
                .add(&MultiPoly::var(nvars, d, e as usize + j));
            out = out.mul(&factor);
            check_terms(&out, max_terms)?;
        }
    }
    Ok(out)
}

/// Expands the total Segre class of the tensor product,
/// `prod_{i,j} sum_{k <= d} (x_i + y_j)^k`, truncated at total degree
/// `d`.
pub fn expand_tensor_segre(e: u32, f: u32, d: u32, max_terms: usize) -> Result<MultiPoly> {
    let nvars = (e + f) as usize;
    let mut out = MultiPoly::one(nvars, d);
    for i in 0..e as usize {
        for j in 0..f as usize {
            let root = MultiPoly::var(nvars, d, i).add(&MultiPoly::var(nvars, d, e as usize + j));
            let mut geometric = MultiPoly::one(nvars, d);
            let mut power = MultiPoly::one(nvars, d);
            for _ in 1..=d {
                power = power.mul(&root);
                geometric = geometric.add(&power);
            }
            out = out.mul(&geometric);
            check_terms(&out, max_terms)?;
        }
    }
    Ok(out)
}

fn check_terms(p: &MultiPoly, max_terms: usize) -> Result<()> {
    if p.term_count() > max_terms {
        return Err(Error::TermLimitExceeded { terms: p.term_count(), limit: max_terms });
    }
    Ok(())
}

/// Decomposes a polynomial that is symmetric in `x_1..x_e` and in
/// `y_1..y_f` separately into the basis `s_lambda(x) s_mu(y)`.
///
/// Degree-graded greedy elimination: the leading monomial of
/// `s_lambda(x) s_mu(y)` under the graded lexicographic order is
/// `x^lambda y^mu` with coefficient one, so subtracting the leading term
/// repeatedly terminates with zero residue on symmetric input.
pub fn schur_pair_decompose(
    p: &MultiPoly,
    e: u32,
    f: u32,
) -> Result<BTreeMap<(Partition, Partition), BigInt>> {
    assert_eq!(p.nvars, (e + f) as usize, "variable split does not match");
    for i in 0..e.saturating_sub(1) as usize {
        if p.swap_vars(i, i + 1) != *p {
            return Err(Error::NotSymmetric("x"));
        }
    }
    for j in 0..f.saturating_sub(1) as usize {
        let at = (e as usize) + j;
        if p.swap_vars(at, at + 1) != *p {
            return Err(Error::NotSymmetric("y"));
        }
    }
    let mut residue = p.clone();
    let mut out = BTreeMap::new();
    let mut basis_cache: BTreeMap<(Partition, bool), MultiPoly> = BTreeMap::new();
    let x_vars: Vec<usize> = (0..e as usize).collect();
    let y_vars: Vec<usize> = (e as usize..(e + f) as usize).collect();
    while let Some((mono, coeff)) = residue.leading() {
        let coeff = coeff.clone();
        let rendered = mono
            .0
            .iter()
            .map(|e| e.to_string())
            .collect::<Vec<_>>()
            .join(",");
        let lambda = exponents_to_partition(&mono.0[..e as usize])
            .ok_or_else(|| Error::NonzeroResidue(rendered.clone()))?;
        let mu = exponents_to_partition(&mono.0[e as usize..])
            .ok_or_else(|| Error::NonzeroResidue(rendered))?;
        let sx = basis_cache
            .entry((lambda.clone(), false))
            .or_insert_with(|| schur_poly(&lambda, p.nvars, p.trunc, &x_vars))
            .clone();
        let sy = basis_cache
            .entry((mu.clone(), true))
            .or_insert_with(|| schur_poly(&mu, p.nvars, p.trunc, &y_vars))
            .clone();
        residue = residue.sub(&sx.mul(&sy).scale(&coeff));
        out.insert((lambda, mu), coeff);
    }
    Ok(out)
}

fn exponents_to_partition(exps: &[u8]) -> Option<Partition> {
    if !exps.windows(2).all(|w| w[0] >= w[1]) {
        return None;
    }
    Partition::new(exps.iter().map(|&e| e as u32).collect::<Vec<u32>>()).ok()
}

/// Checks the Cauchy identity
/// `prod (1 + x_i y_j) = sum_{lambda in exf} s_lambda(x) s_{lambda*}(y)`
/// exactly (both sides have bounded degree).
pub fn cauchy_check(e: u32, f: u32) -> CheckReport {
    let nvars = (e + f) as usize;
    let trunc = 2 * e * f;
    let mut lhs = MultiPoly::one(nvars, trunc);
    for i in 0..e as usize {
        for j in 0..f as usize {
            let xy = MultiPoly::var(nvars, trunc, i).mul(&MultiPoly::var(nvars, trunc, e as usize + j));
            lhs = lhs.mul(&MultiPoly::one(nvars, trunc).add(&xy));
        }
    }
    let x_vars: Vec<usize> = (0..e as usize).collect();
    let y_vars: Vec<usize> = (e as usize..nvars).collect();
    let mut rhs = MultiPoly::zero(nvars, trunc);
    for lambda in partitions_in_rectangle(e, f) {
        let sx = schur_poly(&lambda, nvars, trunc, &x_vars);
        let sy = schur_poly(&lambda.conjugate(), nvars, trunc, &y_vars);
        rhs = rhs.add(&sx.mul(&sy));
    }
    let mut report = CheckReport::new();
    report.record_eq(format!("Cauchy identity at ranks ({e},{f})"), &lhs, &rhs);
    report
}

/// Checks the dual Cauchy identity
/// `prod (x_i + y_j) = sum_{lambda in exf} s_lambda(x)
///  s_{complement}(y)` with the rectangle complement of `lambda`.
pub fn dual_cauchy_check(e: u32, f: u32) -> CheckReport {
    let nvars = (e + f) as usize;
    let trunc = e * f;
    let mut lhs = MultiPoly::one(nvars, trunc);
    for i in 0..e as usize {
        for j in 0..f as usize {
            let sum = MultiPoly::var(nvars, trunc, i).add(&MultiPoly::var(nvars, trunc, e as usize + j));
            lhs = lhs.mul(&sum);
        }
    }
    let x_vars: Vec<usize> = (0..e as usize).collect();
    let y_vars: Vec<usize> = (e as usize..nvars).collect();
    let mut rhs = MultiPoly::zero(nvars, trunc);
    for lambda in partitions_in_rectangle(e, f) {
        let comp = lambda.rectangle_complement(e, f).expect("enumerated inside the rectangle");
        let sx = schur_poly(&lambda, nvars, trunc, &x_vars);
        let sy = schur_poly(&comp, nvars, trunc, &y_vars);
        rhs = rhs.add(&sx.mul(&sy));
    }
    let mut report = CheckReport::new();
    report.record_eq(format!("dual Cauchy identity at ranks ({e},{f})"), &lhs, &rhs);
    report
}

/// Checks the binomial-theorem expansion of a Schur polynomial at
/// shifted arguments: with `rho` the rectangle complement of `lambda`,
///
/// ```text
/// s_rho(1+y_1, ..., 1+y_f)
///   = dim_GL(f)(rho) sum_mu (s*_mu(rho) / (f|mu)) s_mu(y).
/// ```
pub fn binomial_theorem_check(lambda: &Partition, e: u32, f: u32) -> Result<CheckReport> {
    let rho = lambda.rectangle_complement(e, f)?;
    let nvars = f as usize;
    let trunc = rho.weight();
    let vars: Vec<usize> = (0..nvars).collect();
    let lhs = schur_poly(&rho, nvars, trunc, &vars).shift_vars_up_one(&vars);
    let dim = dim_gl(&rho, f as i64);
    let mut rhs = MultiPoly::zero(nvars, trunc);
    for mu in rho.subpartitions() {
        let scalar = BigRational::from_integer(&dim * shifted_schur_eval(&mu, &rho).numer())
            / BigRational::from_integer(
                shifted_schur_eval(&mu, &rho).denom() * mu.content_poly(f as i64),
            );
        assert!(
            scalar.is_integer(),
            "internal defect: non-integer coefficient {scalar} in the shifted expansion"
        );
        rhs = rhs.add(&schur_poly(&mu, nvars, trunc, &vars).scale(&scalar.to_integer()));
    }
    let mut report = CheckReport::new();
    report.record_eq(
        format!("shifted binomial expansion of lambda={lambda} in ({e},{f})"),
        &lhs,
        &rhs,
    );
    Ok(report)
}

/// Checks that Littlewood-Richardson coefficients govern Schur
/// polynomials of split variable sets:
/// `s_mu(z_1..z_{g+h}) = sum c_{phi,psi}^mu s_phi(z_1..z_g)
///  s_psi(z_{g+1}..z_{g+h})`.
pub fn direct_sum_schur_check(mu: &Partition, g: u32, h: u32) -> CheckReport {
    let nvars = (g + h) as usize;
    let trunc = mu.weight();
    let all: Vec<usize> = (0..nvars).collect();
    let left: Vec<usize> = (0..g as usize).collect();
    let right: Vec<usize> = (g as usize..nvars).collect();
    let lhs = schur_poly(mu, nvars, trunc, &all);
    let mut rhs = MultiPoly::zero(nvars, trunc);
    for phi in mu.subpartitions() {
        let shape = SkewShape::new(mu.clone(), phi.clone()).expect("subpartition");
        for (psi, c) in skew_schur_expansion(&shape).iter() {
            let term = schur_poly(&phi, nvars, trunc, &left)
                .mul(&schur_poly(psi, nvars, trunc, &right));
            rhs = rhs.add(&term.scale(c));
        }
    }
    let mut report = CheckReport::new();
    report.record_eq(format!("direct-sum Schur split of {mu} into ({g},{h})"), &lhs, &rhs);
    report
}
