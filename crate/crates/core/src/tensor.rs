//! Universal coefficients of Chern and Segre classes of tensor products.
//!
//! The central objects are the polynomials `P_{lambda,mu}(e, f)` with
//!
//! ```text
//! c(E (x) F) = sum P_{lambda,mu}(e,f) s_lambda(E) s_mu(F),
//! P_{lambda,mu}(e,f) = sum_nu c_{lambda*,mu}^{nu*} (e|nu-lambda) (f|nu*-mu) / h(nu),
//! ```
//!
//! and their Segre counterparts
//! `Q_{lambda,mu}(e,f) = sum_nu c_{lambda,mu}^nu (e|nu-lambda) (f|nu-mu) / h(nu)`.
//!
//! Besides the defining sum, three independent evaluation routes are
//! implemented for `P` at concrete ranks: a determinant of binomial
//! coefficients, a hook-quotient sum over partitions inside the `e x f`
//! rectangle, and a shifted-Schur-function formula.  The remaining
//! operations verify the identities these polynomials satisfy: symmetry,
//! vanishing windows, rank-step recursion, the direct-sum addition rule,
//! a rank-reduction formula, the leading term, and hook-product region
//! quotients.

use core::cell::RefCell;

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::rc::Rc;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::lr::{
    dim_gl, generalized_kostka, schur_product, shifted_schur_eval, skew_schur_expansion,
    SchurExpansion,
};
use crate::partition::{factorial, falling_factorial, partitions_of_weight, Partition, SkewShape};
use crate::poly::{BivarPoly, Var};
use crate::report::CheckReport;

/// A truncated expansion `sum coeff(lambda, mu) s_lambda(E) s_mu(F)`.
///
/// Every stored pair satisfies `|lambda| + |mu| <= max_degree`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SchurPairExpansion {
    max_degree: u32,
    terms: BTreeMap<(Partition, Partition), BigRational>,
}

impl SchurPairExpansion {
    pub fn new(max_degree: u32) -> Self {
        SchurPairExpansion { max_degree, terms: BTreeMap::new() }
    }

    pub fn max_degree(&self) -> u32 {
        self.max_degree
    }

    pub fn insert(&mut self, lambda: Partition, mu: Partition, coeff: BigRational) {
        debug_assert!(lambda.weight() + mu.weight() <= self.max_degree);
        self.terms.insert((lambda, mu), coeff);
    }

    /// Stored coefficient, zero if the pair is absent.
    pub fn coefficient(&self, lambda: &Partition, mu: &Partition) -> BigRational {
        self.terms
            .get(&(lambda.clone(), mu.clone()))
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(Partition, Partition), &BigRational)> {
        self.terms.iter()
    }

    /// Terms sorted by `(|lambda| + |mu|, lambda, mu)`.
    pub fn sorted_terms(&self) -> Vec<(&Partition, &Partition, &BigRational)> {
        let mut v: Vec<_> = self.terms.iter().map(|((l, m), c)| (l, m, c)).collect();
        v.sort_by(|a, b| {
            (a.0.weight() + a.1.weight(), a.0, a.1).cmp(&(b.0.weight() + b.1.weight(), b.0, b.1))
        });
        v
    }
}

/// Computes the universal coefficients and verifies their identities.
///
/// Holds memo tables for Schur products and for the `P` and `Q`
/// polynomials, so repeated queries are cheap.  The caches use interior
/// mutability and are confined to one execution context (the type is not
/// `Sync`); concurrent callers should each use their own instance, and
/// observe results identical to a cache-free run.
#[derive(Default)]
pub struct Calculator {
    products: RefCell<BTreeMap<(Partition, Partition), Rc<SchurExpansion>>>,
    p_polys: RefCell<BTreeMap<(Partition, Partition), Rc<BivarPoly>>>,
    q_polys: RefCell<BTreeMap<(Partition, Partition), Rc<BivarPoly>>>,
}

impl Calculator {
    pub fn new() -> Self {
        Calculator::default()
    }

    /// Memoized Schur product, keyed by the sorted pair.
    pub fn schur_product(&self, a: &Partition, b: &Partition) -> Rc<SchurExpansion> {
        let key = if a <= b { (a.clone(), b.clone()) } else { (b.clone(), a.clone()) };
        if let Some(hit) = self.products.borrow().get(&key) {
            return Rc::clone(hit);
        }
        let value = Rc::new(schur_product(a, b));
        self.products.borrow_mut().insert(key, Rc::clone(&value));
        value
    }

    /// The Chern-side universal coefficient `P_{lambda,mu}` as a
    /// polynomial in the two formal ranks.
    ///
    /// The sum over `nu` runs over the conjugated support of
    /// `s_{lambda*} s_mu`, which is exactly where the Littlewood-
    /// Richardson coefficient is nonzero.
    pub fn p(&self, lambda: &Partition, mu: &Partition) -> Rc<BivarPoly> {
        let key = (lambda.clone(), mu.clone());
        if let Some(hit) = self.p_polys.borrow().get(&key) {
            return Rc::clone(hit);
        }
        let product = self.schur_product(&lambda.conjugate(), mu);
        let mut sum = BivarPoly::zero();
        for (kappa, c) in product.iter() {
            let nu = kappa.conjugate();
            let along_e = SkewShape::new(nu.clone(), lambda.clone())
                .expect("support of the product contains lambda")
                .content_poly_in(Var::E);
            let along_f = SkewShape::new(kappa.clone(), mu.clone())
                .expect("support of the product contains mu")
                .content_poly_in(Var::F);
            let weight = BigRational::new(c.clone(), nu.hook_product());
            sum = &sum + &(&along_e * &along_f).scale(&weight);
        }
        let value = Rc::new(sum);
        self.p_polys.borrow_mut().insert(key, Rc::clone(&value));
        value
    }

    /// `P_{lambda,mu}` evaluated exactly at integer ranks (negative
    /// formal ranks allowed).
    ///
    /// Panics if the value is not an integer: that would contradict the
    /// integrality of the expansion and indicates an internal defect, so
    /// it is never silently returned.
    pub fn p_at(&self, lambda: &Partition, mu: &Partition, e: i64, f: i64) -> BigRational {
        let value = self.p(lambda, mu).evaluate(e, f);
        assert!(
            value.is_integer(),
            "internal defect: P{lambda}{mu}({e},{f}) = {value} is not an integer"
        );
        value
    }

    /// The Segre-side universal coefficient `Q_{lambda,mu}`, from its
    /// defining sum over the support of `s_lambda s_mu`.
    pub fn q(&self, lambda: &Partition, mu: &Partition) -> Rc<BivarPoly> {
        let key = (lambda.clone(), mu.clone());
        if let Some(hit) = self.q_polys.borrow().get(&key) {
            return Rc::clone(hit);
        }
        let product = self.schur_product(lambda, mu);
        let mut sum = BivarPoly::zero();
        for (nu, c) in product.iter() {
            let along_e = SkewShape::new(nu.clone(), lambda.clone())
                .expect("support of the product contains lambda")
                .content_poly_in(Var::E);
            let along_f = SkewShape::new(nu.clone(), mu.clone())
                .expect("support of the product contains mu")
                .content_poly_in(Var::F);
            let weight = BigRational::new(c.clone(), nu.hook_product());
            sum = &sum + &(&along_e * &along_f).scale(&weight);
        }
        let value = Rc::new(sum);
        self.q_polys.borrow_mut().insert(key, Rc::clone(&value));
        value
    }

    /// `Q_{lambda,mu}` evaluated exactly at integer ranks.
    pub fn q_at(&self, lambda: &Partition, mu: &Partition, e: i64, f: i64) -> BigRational {
        let value = self.q(lambda, mu).evaluate(e, f);
        assert!(
            value.is_integer(),
            "internal defect: Q{lambda}{mu}({e},{f}) = {value} is not an integer"
        );
        value
    }

    /// `Q` computed the other way, as the sign-twisted substitution
    /// `(-1)^{|lambda|} P_{lambda,mu*}(e, -f)`.
    pub fn q_via_sign_twist(&self, lambda: &Partition, mu: &Partition) -> BivarPoly {
        let twisted = self.p(lambda, &mu.conjugate()).negate_var(Var::F);
        if lambda.weight() % 2 == 1 {
            -&twisted
        } else {
            twisted
        }
    }

    /// Determinant route: the `e x e` determinant of binomial
    /// coefficients `C(f - mu*_{e+1-i} + e - i, lambda_j + e - j)`.
    ///
    /// Guarded domain: both Schur classes nonzero at the given ranks,
    /// i.e. `lambda_1 <= f`, `len(lambda) <= e`, `len(mu) <= f`,
    /// `mu_1 <= e`.
    pub fn p_lascoux(&self, lambda: &Partition, mu: &Partition, e: u32, f: u32) -> Result<BigRational> {
        if lambda.first() > f || lambda.len() as u32 > e {
            return Err(Error::RouteDomain("lambda must fit in e rows and f columns"));
        }
        if mu.first() > e || mu.len() as u32 > f {
            return Err(Error::RouteDomain("mu must fit in f rows and e columns"));
        }
        let n = e as usize;
        let mu_conj = mu.conjugate();
        let mut matrix = vec![vec![BigInt::zero(); n]; n];
        for (i, matrix_row) in matrix.iter_mut().enumerate() {
            // row index i is 0-based; mu*_{e+1-(i+1)} = mu*_{e-i}
            let upper = f as i64 - mu_conj.part(n - 1 - i) as i64 + (e as i64 - 1 - i as i64);
            for (j, entry) in matrix_row.iter_mut().enumerate() {
                let lower = lambda.part(j) + e - 1 - j as u32;
                *entry = crate::partition::binomial(upper, lower);
            }
        }
        Ok(BigRational::from_integer(det_bigint(matrix)))
    }

    /// Rectangle route:
    /// `(f | exf - complement(lambda)) / (f|mu) * sum_{nu in exf}
    ///  c_{lambda*,mu}^{nu*} / h(exf - complement(nu))`.
    ///
    /// Guarded domain: `lambda` fits in `e` rows and `f` columns and
    /// `len(mu) <= f` (so the division is by a nonzero value).
    pub fn p_rectangle(&self, lambda: &Partition, mu: &Partition, e: u32, f: u32) -> Result<BigRational> {
        if !lambda.fits_in(e, f) {
            return Err(Error::RouteDomain("lambda must fit in e rows and f columns"));
        }
        if mu.len() as u32 > f {
            return Err(Error::RouteDomain("mu must have at most f rows"));
        }
        let lambda_comp = lambda.rectangle_complement(e, f)?;
        let product = self.schur_product(&lambda.conjugate(), mu);
        let mut sum = BigRational::zero();
        for (kappa, c) in product.iter() {
            let nu = kappa.conjugate();
            if !nu.fits_in(e, f) {
                continue;
            }
            let nu_comp = nu.rectangle_complement(e, f)?;
            sum += BigRational::new(c.clone(), nu_comp.hook_product());
        }
        let front = BigRational::new(lambda_comp.content_poly(f as i64), mu.content_poly(f as i64));
        Ok(front * sum)
    }

    /// Shifted-Schur route:
    /// `dim_GL(f)(exf - complement(lambda)) * s*_mu(exf - complement(lambda)) / (f|mu)`.
    ///
    /// Guarded domain as for the rectangle route.
    pub fn p_shifted(&self, lambda: &Partition, mu: &Partition, e: u32, f: u32) -> Result<BigRational> {
        if !lambda.fits_in(e, f) {
            return Err(Error::RouteDomain("lambda must fit in e rows and f columns"));
        }
        if mu.len() as u32 > f {
            return Err(Error::RouteDomain("mu must have at most f rows"));
        }
        let comp = lambda.rectangle_complement(e, f)?;
        let dim = BigRational::from_integer(dim_gl(&comp, f as i64));
        let shifted = shifted_schur_eval(mu, &comp);
        let denom = BigRational::from_integer(mu.content_poly(f as i64));
        Ok(dim * shifted / denom)
    }

    /// Rank-reduction route: expresses `P_{lambda,mu}(e,f)` through the
    /// base coefficients `P_{alpha,beta}(m,p)` and generalized Kostka
    /// coefficients,
    ///
    /// ```text
    /// sum_{alpha,beta} P_{alpha,beta}(m,p) sum_{sigma,tau}
    ///   d^lambda_{alpha,sigma} d^mu_{beta,tau}
    ///   (e-m | |tau|)/prod tau_k! * (f-p | |sigma|)/prod sigma_k!
    /// ```
    ///
    /// with `sigma` of length `m` and `tau` of length `p`.  Guarded
    /// domain: `m <= e`, `p <= f`, `len(lambda) <= m`, `len(mu) <= p`.
    pub fn p_reduction(
        &self,
        lambda: &Partition,
        mu: &Partition,
        e: i64,
        f: i64,
        m: u32,
        p: u32,
    ) -> Result<BigRational> {
        if (m as i64) > e || (p as i64) > f {
            return Err(Error::RouteDomain("base ranks must not exceed the target ranks"));
        }
        if lambda.len() as u32 > m || mu.len() as u32 > p {
            return Err(Error::RouteDomain(
                "lambda and mu must fit in the base ranks' row counts",
            ));
        }
        let mut total = BigRational::zero();
        for alpha in lambda.subpartitions() {
            for sigma in weighted_compositions(m as usize, lambda.weight() - alpha.weight()) {
                let d_lambda = generalized_kostka(lambda, &alpha, &sigma);
                if d_lambda.is_zero() {
                    continue;
                }
                let sigma_weight: u32 = sigma.iter().sum();
                let sigma_factor = BigRational::new(
                    falling_factorial(f - p as i64, sigma_weight),
                    sigma.iter().map(|&s| factorial(s)).product(),
                );
                for beta in mu.subpartitions() {
                    for tau in weighted_compositions(p as usize, mu.weight() - beta.weight()) {
                        let d_mu = generalized_kostka(mu, &beta, &tau);
                        if d_mu.is_zero() {
                            continue;
                        }
                        let tau_weight: u32 = tau.iter().sum();
                        let tau_factor = BigRational::new(
                            falling_factorial(e - m as i64, tau_weight),
                            tau.iter().map(|&t| factorial(t)).product(),
                        );
                        let base = self.p_at(&alpha, &beta, m as i64, p as i64);
                        total += base
                            * BigRational::from_integer(&d_lambda * &d_mu)
                            * &sigma_factor
                            * &tau_factor;
                    }
                }
            }
        }
        Ok(total)
    }

    /// Full Chern expansion at concrete ranks, truncated by total degree.
    ///
    /// Pairs whose Schur class vanishes identically at these ranks
    /// (`len(lambda) > e` or `len(mu) > f`) contribute nothing and are
    /// omitted, as are pairs with coefficient zero; `include_vanishing`
    /// restores both for study.
    pub fn chern_expansion(
        &self,
        e: u32,
        f: u32,
        max_degree: u32,
        include_vanishing: bool,
    ) -> SchurPairExpansion {
        self.expansion(e, f, max_degree, include_vanishing, |lam, mu| {
            self.p_at(lam, mu, e as i64, f as i64)
        })
    }

    /// Full Segre expansion at concrete ranks, truncated by total degree.
    pub fn segre_expansion(
        &self,
        e: u32,
        f: u32,
        max_degree: u32,
        include_vanishing: bool,
    ) -> SchurPairExpansion {
        self.expansion(e, f, max_degree, include_vanishing, |lam, mu| {
            self.q_at(lam, mu, e as i64, f as i64)
        })
    }

    fn expansion(
        &self,
        e: u32,
        f: u32,
        max_degree: u32,
        include_vanishing: bool,
        coeff: impl Fn(&Partition, &Partition) -> BigRational,
    ) -> SchurPairExpansion {
        let mut out = SchurPairExpansion::new(max_degree);
        for degree in 0..=max_degree {
            for lw in 0..=degree {
                for lambda in partitions_of_weight(lw) {
                    if !include_vanishing && lambda.len() as u32 > e {
                        continue;
                    }
                    for mu in partitions_of_weight(degree - lw) {
                        if !include_vanishing && mu.len() as u32 > f {
                            continue;
                        }
                        let value = coeff(&lambda, &mu);
                        if include_vanishing || !value.is_zero() {
                            out.insert(lambda.clone(), mu, value);
                        }
                    }
                }
            }
        }
        out
    }

    /// Checks the degree bounds and both symmetries of `P_{lambda,mu}`
    /// as exact polynomial identities:
    /// `P_{lambda,mu}(e,f) = P_{mu,lambda}(f,e)` and
    /// `P_{lambda,mu}(e,f) = (-1)^{|lambda|+|mu|} P_{lambda*,mu*}(-e,-f)`,
    /// plus the symmetry `Q_{lambda,mu}(e,f) = Q_{mu,lambda}(f,e)`.
    pub fn verify_symmetries(&self, lambda: &Partition, mu: &Partition) -> CheckReport {
        let mut report = CheckReport::new();
        let p = self.p(lambda, mu);
        report.record_cond(
            format!("deg P{lambda}{mu} = (|mu|, |lambda|)"),
            p.deg_e() == Some(mu.weight()) && p.deg_f() == Some(lambda.weight()),
            &*p,
        );
        let swapped = self.p(mu, lambda).swap_vars();
        report.record_eq(format!("P{lambda}{mu} swap symmetry"), &*p, &swapped);
        let mut twisted = self
            .p(&lambda.conjugate(), &mu.conjugate())
            .negate_var(Var::E)
            .negate_var(Var::F);
        if (lambda.weight() + mu.weight()) % 2 == 1 {
            twisted = -&twisted;
        }
        report.record_eq(format!("P{lambda}{mu} conjugate sign symmetry"), &*p, &twisted);
        let q = self.q(lambda, mu);
        let q_swapped = self.q(mu, lambda).swap_vars();
        report.record_eq(format!("Q{lambda}{mu} swap symmetry"), &*q, &q_swapped);
        report
    }

    /// Checks the vanishing windows: `P_{lambda,mu}(e, .) == 0` for every
    /// integer `e` with `lambda*_1 <= e < mu_1`, and dually in `f` for
    /// `mu*_1 <= f < lambda_1`.
    pub fn verify_vanishing(&self, lambda: &Partition, mu: &Partition) -> CheckReport {
        let mut report = CheckReport::new();
        let p = self.p(lambda, mu);
        let zero = BivarPoly::zero();
        for e in lambda.len() as i64..mu.first() as i64 {
            report.record_eq(format!("P{lambda}{mu}({e}, f) = 0"), &p.eval_e(e), &zero);
        }
        for f in mu.len() as i64..lambda.first() as i64 {
            report.record_eq(format!("P{lambda}{mu}(e, {f}) = 0"), &p.eval_f(f), &zero);
        }
        report
    }

    /// Checks the rank-step recursion as a polynomial identity:
    /// `P_{lambda,mu}(e+1, f) - P_{lambda,mu}(e, f)
    ///  = sum_theta P_{lambda,theta}(e, f)` over the proper vertical-strip
    /// removals `theta` of `mu`.
    pub fn verify_recursion(&self, lambda: &Partition, mu: &Partition) -> CheckReport {
        let mut report = CheckReport::new();
        let p = self.p(lambda, mu);
        let lhs = &p.shift_var(Var::E, 1) - &p;
        let mut rhs = BivarPoly::zero();
        for theta in mu.remove_vertical_strips() {
            if &theta == mu {
                continue;
            }
            rhs = &rhs + &self.p(lambda, &theta);
        }
        report.record_eq(format!("rank-step recursion at P{lambda}{mu}"), &lhs, &rhs);
        report
    }

    /// Checks the direct-sum addition rule at integer arguments
    /// (`g`, `h` may be negative):
    /// `sum_mu c_{phi,psi}^mu P_{lambda,mu}(e, g+h) =
    ///  sum_{alpha,beta} c_{alpha,beta}^lambda P_{alpha,phi}(e,g) P_{beta,psi}(e,h)`.
    pub fn verify_addition(
        &self,
        lambda: &Partition,
        phi: &Partition,
        psi: &Partition,
        e: i64,
        g: i64,
        h: i64,
    ) -> CheckReport {
        let mut report = CheckReport::new();
        let mut lhs = BigRational::zero();
        for (mu, c) in self.schur_product(phi, psi).iter() {
            lhs += self.p_at(lambda, mu, e, g + h) * BigRational::from_integer(c.clone());
        }
        let mut rhs = BigRational::zero();
        for alpha in lambda.subpartitions() {
            let shape = SkewShape::new(lambda.clone(), alpha.clone()).expect("subpartition");
            for (beta, c) in skew_schur_expansion(&shape).iter() {
                rhs += self.p_at(&alpha, phi, e, g)
                    * self.p_at(&beta, psi, e, h)
                    * BigRational::from_integer(c.clone());
            }
        }
        report.record_eq(
            format!("addition rule lambda={lambda} phi={phi} psi={psi} (e,g,h)=({e},{g},{h})"),
            &lhs,
            &rhs,
        );
        report
    }

    /// Checks that the leading term of `P_{lambda,mu}` is
    /// `e^{|mu|} f^{|lambda|} / (h(lambda) h(mu))` and that no higher
    /// power of either variable occurs.
    pub fn leading_term_check(&self, lambda: &Partition, mu: &Partition) -> CheckReport {
        let mut report = CheckReport::new();
        let p = self.p(lambda, mu);
        let lead = p.coefficient(mu.weight(), lambda.weight());
        let expected = BigRational::new(BigInt::one(), lambda.hook_product() * mu.hook_product());
        report.record_eq(format!("leading coefficient of P{lambda}{mu}"), &lead, &expected);
        report.record_cond(
            format!("degree bound of P{lambda}{mu}"),
            p.deg_e() == Some(mu.weight()) && p.deg_f() == Some(lambda.weight()),
            &*p,
        );
        report
    }

    /// The hook-quotient sum `sum_nu (h(lambda) h(mu) / h(nu))
    /// c_{lambda,mu}^nu`, which always equals one.
    pub fn corollary_sum(&self, lambda: &Partition, mu: &Partition) -> BigRational {
        let front = lambda.hook_product() * mu.hook_product();
        let mut sum = BigRational::zero();
        for (nu, c) in self.schur_product(lambda, mu).iter() {
            sum += BigRational::new(&front * c, nu.hook_product());
        }
        sum
    }
}

/// All `sigma` in `Z_{>=0}^parts` with `sum_k k * sigma_k = total`.
fn weighted_compositions(parts: usize, total: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut current = vec![0u32; parts];
    fn rec(k: usize, remaining: u32, current: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if k == current.len() {
            if remaining == 0 {
                out.push(current.clone());
            }
            return;
        }
        let weight = k as u32 + 1;
        for count in 0..=remaining / weight {
            current[k] = count;
            rec(k + 1, remaining - weight * count, current, out);
            current[k] = 0;
        }
    }
    rec(0, total, &mut current, &mut out);
    out
}

/// Fraction-free (Bareiss) determinant of an integer matrix.
fn det_bigint(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    negate = !negate;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

/// The four hook-product region quotients of a partition inside a
/// rectangle, together with their predicted closed forms.
///
/// The rectangle with `f` rows of length `e` is cut by the thresholds
/// `row <= f - nu_1` (north) and `col <= e - nu*_1` (west) into regions
/// NO, NE, SO, SE; for each region the quotient compares the hooks of
/// the full rectangle with the hooks of the complement of `nu`.
///
/// In the complement, northern rows are full and western columns have
/// full height, so NO hooks are untouched; NE hooks change only in the
/// leg, SO hooks only in the arm, and the closed forms pair up
/// accordingly: legs with `(f | nu*)`, arms with `(e | nu)`.
#[derive(Clone, Debug)]
pub struct RegionQuotients {
    /// Quotients `h_R(rect) / h_R(complement)` for NO, NE, SO, SE.
    pub computed: [BigRational; 4],
    /// Closed forms: `1`, `(f|nu*)/(nu_1|nu*)`, `(e|nu)/(nu*_1|nu)`,
    /// `h(nu_1 x nu*_1) / h(inner complement of nu)`.
    pub predicted: [BigRational; 4],
    /// The global quotient `h(rect) / h(complement)`.
    pub global: BigRational,
}

impl RegionQuotients {
    /// One check per region plus the product-equals-global check.
    pub fn report(&self, label: &str) -> CheckReport {
        let mut report = CheckReport::new();
        for (idx, name) in ["NO", "NE", "SO", "SE"].iter().enumerate() {
            report.record_eq(
                format!("{label}: {name} region quotient"),
                &self.computed[idx],
                &self.predicted[idx],
            );
        }
        let product: BigRational = self.computed.iter().product();
        report.record_eq(format!("{label}: product of region quotients"), &product, &self.global);
        report
    }
}

/// Computes the region hook quotients of `nu` inside the rectangle with
/// `e` rows and `f` columns (in the fit sense used everywhere:
/// `nu_1 <= f`, `len(nu) <= e`).
pub fn region_hook_quotients(nu: &Partition, e: u32, f: u32) -> Result<RegionQuotients> {
    let comp = nu.rectangle_complement(e, f)?;
    let comp_conj = comp.conjugate();
    let north_rows = f - nu.first();
    let west_cols = e - nu.len() as u32;
    let region_of = |i: u32, j: u32| -> usize {
        match (i <= north_rows, j <= west_cols) {
            (true, true) => 0,
            (true, false) => 1,
            (false, true) => 2,
            (false, false) => 3,
        }
    };
    let mut rect_hooks = [BigInt::one(), BigInt::one(), BigInt::one(), BigInt::one()];
    for i in 1..=f {
        for j in 1..=e {
            rect_hooks[region_of(i, j)] *= BigInt::from((e - j) + (f - i) + 1);
        }
    }
    let mut comp_hooks = [BigInt::one(), BigInt::one(), BigInt::one(), BigInt::one()];
    for (i, j) in comp.boxes() {
        let hook = comp.part(i as usize - 1) + comp_conj.part(j as usize - 1) + 1 - i - j;
        comp_hooks[region_of(i, j)] *= BigInt::from(hook);
    }
    let computed = [
        BigRational::new(rect_hooks[0].clone(), comp_hooks[0].clone()),
        BigRational::new(rect_hooks[1].clone(), comp_hooks[1].clone()),
        BigRational::new(rect_hooks[2].clone(), comp_hooks[2].clone()),
        BigRational::new(rect_hooks[3].clone(), comp_hooks[3].clone()),
    ];
    let nu_conj = nu.conjugate();
    let rows = nu.len() as i64;
    let cols = nu.first() as i64;
    let inner_rect = Partition::rectangle(nu.first(), nu.len() as u32);
    let predicted = [
        BigRational::one(),
        BigRational::new(nu_conj.content_poly(f as i64), nu_conj.content_poly(cols)),
        BigRational::new(nu.content_poly(e as i64), nu.content_poly(rows)),
        BigRational::new(
            inner_rect.hook_product(),
            nu.inner_rectangle_complement().hook_product(),
        ),
    ];
    let global = BigRational::new(
        Partition::rectangle(e, f).hook_product(),
        comp.hook_product(),
    );
    Ok(RegionQuotients { computed, predicted, global })
}

/// Renders a rational that is known to be an integer, without any
/// denominator.
pub fn integer_string(value: &BigRational) -> String {
    debug_assert!(value.is_integer());
    format!("{}", value.to_integer())
}
