//! Exact bivariate polynomials in the two formal rank variables `e`, `f`.
//!
//! Coefficients are arbitrary-precision rationals: the defining sum for
//! the universal coefficients divides by hook products, so individual
//! monomial coefficients need not be integers even though the values at
//! integer arguments always are.  The representation is a sparse map from
//! exponent pairs to nonzero coefficients, kept canonical at all times.

use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::partition::{binomial, factorial};

/// One of the two formal rank variables.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Var {
    E,
    F,
}

/// A polynomial in `e` and `f` with exact rational coefficients.
///
/// Stored coefficients are always nonzero, so equality is structural.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct BivarPoly {
    terms: BTreeMap<(u32, u32), BigRational>,
}

impl BivarPoly {
    pub fn zero() -> Self {
        BivarPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        BivarPoly::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((0, 0), c);
        }
        BivarPoly { terms }
    }

    pub fn from_int(n: i64) -> Self {
        BivarPoly::constant(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn var(v: Var) -> Self {
        BivarPoly::var_plus(v, 0)
    }

    /// The linear polynomial `v + c`.
    pub fn var_plus(v: Var, c: i64) -> Self {
        let mut terms = BTreeMap::new();
        let key = match v {
            Var::E => (1, 0),
            Var::F => (0, 1),
        };
        terms.insert(key, BigRational::one());
        if c != 0 {
            terms.insert((0, 0), BigRational::from_integer(BigInt::from(c)));
        }
        BivarPoly { terms }
    }

    pub fn monomial(deg_e: u32, deg_f: u32, coeff: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert((deg_e, deg_f), coeff);
        }
        BivarPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Highest exponent of `e`, `None` for the zero polynomial.
    pub fn deg_e(&self) -> Option<u32> {
        self.terms.keys().map(|&(i, _)| i).max()
    }

    /// Highest exponent of `f`, `None` for the zero polynomial.
    pub fn deg_f(&self) -> Option<u32> {
        self.terms.keys().map(|&(_, j)| j).max()
    }

    /// Coefficient of `e^i f^j`, zero if absent.
    pub fn coefficient(&self, i: u32, j: u32) -> BigRational {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Iterates terms in ascending `(deg_e, deg_f)` order.
    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &BigRational)> {
        self.terms.iter()
    }

    fn insert_add(&mut self, key: (u32, u32), value: BigRational) {
        if value.is_zero() {
            return;
        }
        match self.terms.get_mut(&key) {
            Some(existing) => {
                *existing += value;
                if existing.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, value);
            }
        }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return BivarPoly::zero();
        }
        BivarPoly {
            terms: self.terms.iter().map(|(&k, v)| (k, v * c)).collect(),
        }
    }

    /// Exact evaluation at integer arguments.
    pub fn evaluate(&self, e: i64, f: i64) -> BigRational {
        let deg_e = self.deg_e().unwrap_or(0) as usize;
        let deg_f = self.deg_f().unwrap_or(0) as usize;
        let e_pows = int_powers(e, deg_e);
        let f_pows = int_powers(f, deg_f);
        let mut sum = BigRational::zero();
        for (&(i, j), c) in &self.terms {
            sum += c * BigRational::from_integer(&e_pows[i as usize] * &f_pows[j as usize]);
        }
        sum
    }

    /// Substitutes an integer for `e`, leaving a polynomial in `f`.
    pub fn eval_e(&self, e: i64) -> BivarPoly {
        let deg_e = self.deg_e().unwrap_or(0) as usize;
        let e_pows = int_powers(e, deg_e);
        let mut out = BivarPoly::zero();
        for (&(i, j), c) in &self.terms {
            out.insert_add((0, j), c * BigRational::from_integer(e_pows[i as usize].clone()));
        }
        out
    }

    /// Substitutes an integer for `f`, leaving a polynomial in `e`.
    pub fn eval_f(&self, f: i64) -> BivarPoly {
        let deg_f = self.deg_f().unwrap_or(0) as usize;
        let f_pows = int_powers(f, deg_f);
        let mut out = BivarPoly::zero();
        for (&(i, j), c) in &self.terms {
            out.insert_add((i, 0), c * BigRational::from_integer(f_pows[j as usize].clone()));
        }
        out
    }

    /// Exchanges the two variables.
    pub fn swap_vars(&self) -> BivarPoly {
        BivarPoly {
            terms: self.terms.iter().map(|(&(i, j), c)| ((j, i), c.clone())).collect(),
        }
    }

    /// Substitutes `v -> -v`.
    pub fn negate_var(&self, v: Var) -> BivarPoly {
        BivarPoly {
            terms: self
                .terms
                .iter()
                .map(|(&(i, j), c)| {
                    let exp = match v {
                        Var::E => i,
                        Var::F => j,
                    };
                    let coeff = if exp % 2 == 1 { -c.clone() } else { c.clone() };
                    ((i, j), coeff)
                })
                .collect(),
        }
    }

    /// Substitutes `v -> v + c` by binomial expansion.
    pub fn shift_var(&self, v: Var, c: i64) -> BivarPoly {
        if c == 0 {
            return self.clone();
        }
        let mut out = BivarPoly::zero();
        for (&(i, j), coeff) in &self.terms {
            let exp = match v {
                Var::E => i,
                Var::F => j,
            };
            let mut shift_pow = BigInt::one();
            // (v + c)^exp = sum_k C(exp, k) c^(exp-k) v^k, descending k
            for k in (0..=exp).rev() {
                let scalar = binomial(exp as i64, k) * &shift_pow;
                let key = match v {
                    Var::E => (k, j),
                    Var::F => (i, k),
                };
                out.insert_add(key, coeff * BigRational::from_integer(scalar));
                shift_pow *= BigInt::from(c);
            }
        }
        out
    }

    /// Falling factorial `p (p-1) ... (p-k+1)` of a polynomial argument.
    pub fn falling_factorial(base: &BivarPoly, k: u32) -> BivarPoly {
        let mut prod = BivarPoly::one();
        for t in 0..k as i64 {
            prod = &prod * &(base - &BivarPoly::from_int(t));
        }
        prod
    }

    /// Binomial coefficient `C(p, k)` of a polynomial argument:
    /// the falling factorial divided by `k!`.
    pub fn binomial(base: &BivarPoly, k: u32) -> BivarPoly {
        let k_factorial = BigRational::from_integer(factorial(k));
        BivarPoly::falling_factorial(base, k).scale(&k_factorial.recip())
    }

    /// Whether the polynomial takes integer values at every integer point
    /// of `[lo, hi] x [lo, hi]`.
    ///
    /// Clears denominators once and tests divisibility in integer
    /// arithmetic.
    pub fn integer_valued_on_grid(&self, lo: i64, hi: i64) -> bool {
        let mut denom_lcm = BigInt::one();
        for c in self.terms.values() {
            denom_lcm = num_integer::lcm(denom_lcm, c.denom().clone());
        }
        if denom_lcm.is_one() {
            return true;
        }
        let scaled: Vec<((u32, u32), BigInt)> = self
            .terms
            .iter()
            .map(|(&k, c)| (k, c.numer() * (&denom_lcm / c.denom())))
            .collect();
        let deg_e = self.deg_e().unwrap_or(0) as usize;
        let deg_f = self.deg_f().unwrap_or(0) as usize;
        for a in lo..=hi {
            let a_pows = int_powers(a, deg_e);
            for b in lo..=hi {
                let b_pows = int_powers(b, deg_f);
                let mut sum = BigInt::zero();
                for ((i, j), c) in &scaled {
                    sum += c * &a_pows[*i as usize] * &b_pows[*j as usize];
                }
                if !(sum % &denom_lcm).is_zero() {
                    return false;
                }
            }
        }
        true
    }
}

fn int_powers(base: i64, max: usize) -> Vec<BigInt> {
    let mut pows = Vec::with_capacity(max + 1);
    pows.push(BigInt::one());
    for _ in 0..max {
        pows.push(pows.last().unwrap() * BigInt::from(base));
    }
    pows
}

impl Add for &BivarPoly {
    type Output = BivarPoly;

    fn add(self, rhs: &BivarPoly) -> BivarPoly {
        let mut out = self.clone();
        for (&k, v) in &rhs.terms {
            out.insert_add(k, v.clone());
        }
        out
    }
}

impl Sub for &BivarPoly {
    type Output = BivarPoly;

    fn sub(self, rhs: &BivarPoly) -> BivarPoly {
        let mut out = self.clone();
        for (&k, v) in &rhs.terms {
            out.insert_add(k, -v.clone());
        }
        out
    }
}

impl Mul for &BivarPoly {
    type Output = BivarPoly;

    fn mul(self, rhs: &BivarPoly) -> BivarPoly {
        let mut out = BivarPoly::zero();
        for (&(i1, j1), c1) in &self.terms {
            for (&(i2, j2), c2) in &rhs.terms {
                out.insert_add((i1 + i2, j1 + j2), c1 * c2);
            }
        }
        out
    }
}

impl Neg for &BivarPoly {
    type Output = BivarPoly;

    fn neg(self) -> BivarPoly {
        BivarPoly {
            terms: self.terms.iter().map(|(&k, v)| (k, -v.clone())).collect(),
        }
    }
}

fn write_monomial(out: &mut String, i: u32, j: u32) {
    use core::fmt::Write;
    if i == 1 {
        out.push('e');
    } else if i > 1 {
        let _ = write!(out, "e^{i}");
    }
    if j >= 1 && i >= 1 {
        out.push('*');
    }
    if j == 1 {
        out.push('f');
    } else if j > 1 {
        let _ = write!(out, "f^{j}");
    }
}

impl fmt::Display for BivarPoly {
    /// Canonical rendering: terms by `(deg_e, deg_f)` descending,
    /// rationals as `num/den` or `num`, e.g. `e*f - 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut out = String::new();
        for (idx, (&(i, j), c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            let abs = c.abs();
            if idx == 0 {
                if negative {
                    out.push('-');
                }
            } else if negative {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            if i == 0 && j == 0 {
                use core::fmt::Write;
                let _ = write!(out, "{abs}");
            } else {
                if !abs.is_one() {
                    use core::fmt::Write;
                    let _ = write!(out, "{abs}*");
                }
                write_monomial(&mut out, i, j);
            }
        }
        write!(f, "{out}")
    }
}

impl fmt::Debug for BivarPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    fn ef_minus_one() -> BivarPoly {
        &(&BivarPoly::var(Var::E) * &BivarPoly::var(Var::F)) - &BivarPoly::one()
    }

    #[test]
    fn ring_identities() {
        let p = ef_minus_one();
        assert_eq!(&p + &BivarPoly::zero(), p);
        let prod = &BivarPoly::var_plus(Var::E, -1) * &BivarPoly::var_plus(Var::E, 1);
        let expected = &BivarPoly::monomial(2, 0, rat(1)) - &BivarPoly::one();
        assert_eq!(prod, expected);
        assert_eq!(&p * &BivarPoly::one(), p);
    }

    #[test]
    fn evaluation() {
        let p = ef_minus_one();
        assert_eq!(p.evaluate(2, 3), rat(5));
        assert_eq!(p.evaluate(1, 1), rat(0));
        assert_eq!(p.evaluate(2, -3), rat(-7));
    }

    #[test]
    fn coefficient_access() {
        let p = ef_minus_one();
        assert_eq!(p.coefficient(1, 1), rat(1));
        assert_eq!(p.coefficient(0, 0), rat(-1));
        assert_eq!(BivarPoly::zero().coefficient(2, 2), rat(0));
        assert_eq!(p.deg_e(), Some(1));
        assert_eq!(BivarPoly::zero().deg_e(), None);
    }

    #[test]
    fn integer_valued_grid() {
        assert!(ef_minus_one().integer_valued_on_grid(-5, 5));
        let half_e = BivarPoly::var(Var::E).scale(&BigRational::new(BigInt::from(1), BigInt::from(2)));
        assert!(!half_e.integer_valued_on_grid(-5, 5));
        // e(e-1)/2 is a binomial coefficient, integer valued
        let choose2 = BivarPoly::binomial(&BivarPoly::var(Var::E), 2);
        assert!(choose2.integer_valued_on_grid(-10, 10));
    }

    #[test]
    fn substitutions() {
        let p = ef_minus_one();
        assert_eq!(p.swap_vars(), p);
        // p(e, -f) = -ef - 1
        let neg = p.negate_var(Var::F);
        assert_eq!(neg.coefficient(1, 1), rat(-1));
        assert_eq!(neg.coefficient(0, 0), rat(-1));
        // (e+1)f - 1 - (ef - 1) = f
        let shifted = p.shift_var(Var::E, 1);
        assert_eq!(&shifted - &p, BivarPoly::var(Var::F));
        // partial evaluation
        assert_eq!(p.eval_e(3), &BivarPoly::monomial(0, 1, rat(3)) - &BivarPoly::one());
        assert_eq!(p.eval_f(0), BivarPoly::from_int(-1));
    }

    #[test]
    fn shift_then_unshift_roundtrip() {
        let p = &BivarPoly::falling_factorial(&BivarPoly::var(Var::E), 3)
            * &BivarPoly::var_plus(Var::F, 2);
        assert_eq!(p.shift_var(Var::E, 5).shift_var(Var::E, -5), p);
        assert_eq!(p.shift_var(Var::F, -3).shift_var(Var::F, 3), p);
    }

    #[test]
    fn falling_factorial_and_binomial() {
        let e = BivarPoly::var(Var::E);
        let ff = BivarPoly::falling_factorial(&e, 3);
        assert_eq!(ff.evaluate(5, 0), rat(60));
        let choose = BivarPoly::binomial(&e, 3);
        assert_eq!(choose.evaluate(5, 0), rat(10));
        assert_eq!(BivarPoly::falling_factorial(&e, 0), BivarPoly::one());
    }

    #[test]
    fn rendering() {
        assert_eq!(alloc::format!("{}", ef_minus_one()), "e*f - 1");
        assert_eq!(alloc::format!("{}", BivarPoly::zero()), "0");
        assert_eq!(alloc::format!("{}", BivarPoly::var(Var::F)), "f");
        let p = &BivarPoly::monomial(2, 1, rat(-3)) + &BivarPoly::monomial(0, 1, BigRational::new(BigInt::from(1), BigInt::from(9)));
        assert_eq!(alloc::format!("{p}"), "-3*e^2*f + 1/9*f");
    }
}
