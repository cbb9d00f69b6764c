//! The verification suites: every identity the library implements, run
//! at configurable scale with structured reports.
//!
//! Each suite enumerates its instances deterministically, runs them
//! (optionally in parallel across instances), and merges the outcomes in
//! enumeration order, so identical invocations produce identical
//! reports regardless of the job count.

use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use ctp_core::lr::lr_coefficient;
use ctp_core::oracle::{
    binomial_theorem_check, cauchy_check, direct_sum_schur_check, dual_cauchy_check,
    expand_tensor_chern, expand_tensor_segre, schur_pair_decompose,
};
use ctp_core::partition::{partitions_in_rectangle, partitions_up_to_weight, Partition};
use ctp_core::poly::{BivarPoly, Var};
use ctp_core::report::CheckReport;
use ctp_core::tensor::{region_hook_quotients, Calculator};
use ctp_core::{Error, Result};

use crate::report::RunReport;

/// Default safety cap on oracle term counts (override with the
/// `CTP_MAX_TERMS` environment variable).
pub const DEFAULT_MAX_TERMS: usize = 5_000_000;

/// Scale knobs shared by the suites.
#[derive(Clone, Debug)]
pub struct Scale {
    pub max_weight: Option<u32>,
    pub rank_range: Option<(u32, u32)>,
    pub jobs: usize,
    pub max_terms: usize,
}

impl Default for Scale {
    fn default() -> Self {
        Scale { max_weight: None, rank_range: None, jobs: 1, max_terms: DEFAULT_MAX_TERMS }
    }
}

/// Runs a batch of instances, each producing a `CheckReport`, and merges
/// the outcomes in enumeration order.
fn run_checks<I: Send + Sync>(
    suite: &str,
    instances: Vec<I>,
    jobs: usize,
    check: impl Fn(&Calculator, &I) -> CheckReport + Sync,
) -> RunReport {
    let start = Instant::now();
    let reports: Vec<CheckReport> = if jobs <= 1 {
        let calc = Calculator::new();
        instances.iter().map(|i| check(&calc, i)).collect()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .expect("building the worker pool");
        pool.install(|| {
            instances
                .par_iter()
                .map_init(Calculator::new, |calc, i| check(calc, i))
                .collect()
        })
    };
    let mut report = RunReport::new(suite);
    for checks in &reports {
        report.absorb(checks);
    }
    report.wall = start.elapsed();
    report
}

/// As `run_checks`, but instances may fail outright (oracle term caps).
fn run_fallible_checks<I: Send + Sync>(
    suite: &str,
    instances: Vec<I>,
    jobs: usize,
    check: impl Fn(&Calculator, &I) -> Result<CheckReport> + Sync,
) -> Result<RunReport> {
    let start = Instant::now();
    let reports: Vec<CheckReport> = if jobs <= 1 {
        let calc = Calculator::new();
        instances
            .iter()
            .map(|i| check(&calc, i))
            .collect::<Result<Vec<_>>>()?
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .expect("building the worker pool");
        pool.install(|| {
            instances
                .par_iter()
                .map_init(Calculator::new, |calc, i| check(calc, i))
                .collect::<Result<Vec<_>>>()
        })?
    };
    let mut report = RunReport::new(suite);
    for checks in &reports {
        report.absorb(checks);
    }
    report.wall = start.elapsed();
    Ok(report)
}

/// All pairs of partitions with total weight at most `total`.
fn partition_pairs(total: u32) -> Vec<(Partition, Partition)> {
    let mut out = Vec::new();
    for degree in 0..=total {
        for lw in 0..=degree {
            for lambda in partitions_up_to_weight(lw) {
                if lambda.weight() != lw {
                    continue;
                }
                for mu in partitions_up_to_weight(degree - lw) {
                    if mu.weight() == degree - lw {
                        out.push((lambda.clone(), mu));
                    }
                }
            }
        }
    }
    out
}

/// Degree bounds and both symmetries, as symbolic identities.
pub fn symmetry_suite(max_pair_weight: u32, jobs: usize) -> RunReport {
    run_checks("symmetry", partition_pairs(max_pair_weight), jobs, |calc, (lambda, mu)| {
        calc.verify_symmetries(lambda, mu)
    })
}

/// Vanishing windows of the coefficients, all applicable integer gaps.
pub fn vanishing_suite(max_pair_weight: u32, jobs: usize) -> RunReport {
    run_checks("vanishing", partition_pairs(max_pair_weight), jobs, |calc, (lambda, mu)| {
        calc.verify_vanishing(lambda, mu)
    })
}

/// Rank-step recursion, as a symbolic identity per pair.
pub fn recursion_suite(max_pair_weight: u32, jobs: usize) -> RunReport {
    run_checks("recursion", partition_pairs(max_pair_weight), jobs, |calc, (lambda, mu)| {
        calc.verify_recursion(lambda, mu)
    })
}

/// Rank-reduction formula against direct evaluation, on a deterministic
/// grid of base and target ranks.
pub fn reduction_suite(jobs: usize) -> RunReport {
    let mut instances = Vec::new();
    for (lambda, mu) in partition_pairs(6) {
        if lambda.weight() > 3 || mu.weight() > 3 {
            continue;
        }
        let m0 = (lambda.len() as u32).max(1);
        let p0 = (mu.len() as u32).max(1);
        for m in [m0, m0 + 1] {
            for p in [p0, p0 + 1] {
                for (e, f) in [(m, p), (m + 2, p + 1), (m + 1, p + 2), (m + 3, p + 3)] {
                    instances.push((lambda.clone(), mu.clone(), e, f, m, p));
                }
            }
        }
    }
    run_checks("reduction", instances, jobs, |calc, (lambda, mu, e, f, m, p)| {
        let mut report = CheckReport::new();
        let reduced = calc
            .p_reduction(lambda, mu, *e as i64, *f as i64, *m, *p)
            .expect("instances are generated inside the guarded domain");
        let direct = calc.p_at(lambda, mu, *e as i64, *f as i64);
        report.record_eq(
            format!("reduction P{lambda}{mu}({e},{f}) via base ranks ({m},{p})"),
            &reduced,
            &direct,
        );
        report
    })
}

/// Direct-sum addition rule on seeded random instances.
pub fn addition_suite(samples: usize, seed: u64, jobs: usize) -> RunReport {
    let pool = partitions_up_to_weight(4);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut instances = Vec::with_capacity(samples);
    for _ in 0..samples {
        let lambda = pool[rng.random_range(0..pool.len())].clone();
        let phi = pool[rng.random_range(0..pool.len())].clone();
        let psi = pool[rng.random_range(0..pool.len())].clone();
        let e = rng.random_range(1..=4i64);
        let g = rng.random_range(-3..=3i64);
        let h = rng.random_range(-3..=3i64);
        instances.push((lambda, phi, psi, e, g, h));
    }
    run_checks("addition", instances, jobs, |calc, (lambda, phi, psi, e, g, h)| {
        calc.verify_addition(lambda, phi, psi, *e, *g, *h)
    })
}

/// Leading coefficients and degree bounds.
pub fn leading_term_suite(max_pair_weight: u32, jobs: usize) -> RunReport {
    run_checks("leading-term", partition_pairs(max_pair_weight), jobs, |calc, (lambda, mu)| {
        calc.leading_term_check(lambda, mu)
    })
}

/// The hook-quotient sum over Littlewood-Richardson supports equals one.
pub fn corollary_suite(max_pair_weight: u32, jobs: usize) -> RunReport {
    run_checks("corollary", partition_pairs(max_pair_weight), jobs, |calc, (lambda, mu)| {
        let mut report = CheckReport::new();
        report.record_eq(
            format!("hook-quotient sum over s_{lambda} s_{mu}"),
            &calc.corollary_sum(lambda, mu),
            &BigRational::one(),
        );
        report
    })
}

/// Rectangle content-product identity, the bounding-rectangle hook
/// identity, its per-partition weight form, and the four-region hook
/// quotients.
pub fn lemmas_suite(max_rect: u32, max_nu_weight: u32, region_rect: u32, jobs: usize) -> RunReport {
    let start = Instant::now();

    let mut rect_instances = Vec::new();
    for e in 1..=max_rect {
        for f in 1..=max_rect {
            for lambda in partitions_in_rectangle(e, f) {
                rect_instances.push((e, f, lambda));
            }
        }
    }
    let rect = run_checks("lemmas", rect_instances, jobs, |_, (e, f, lambda)| {
        let mut report = CheckReport::new();
        let comp = lambda.rectangle_complement(*e, *f).expect("enumerated inside");
        let rect = Partition::rectangle(*e, *f);
        let lhs = comp.content_poly(*f as i64) * lambda.content_poly(*e as i64);
        let rhs = rect.content_poly(*f as i64);
        report.record_eq(
            format!("rectangle content split of {lambda} in ({e},{f})"),
            &lhs,
            &rhs,
        );
        report.record_eq(
            format!("rectangle content equals hooks in ({e},{f})"),
            &rhs,
            &rect.hook_product(),
        );
        report
    });

    let nu_instances: Vec<Partition> = partitions_up_to_weight(max_nu_weight);
    let hooks = run_checks("lemmas", nu_instances, jobs, |_, nu| {
        let mut report = CheckReport::new();
        let rows = nu.len() as i64;
        let cols = nu.first() as i64;
        let bar = nu.inner_rectangle_complement();
        let rect = Partition::rectangle(nu.first(), nu.len() as u32);
        let lhs = nu.content_poly(rows) * nu.conjugate().content_poly(cols) * bar.hook_product();
        let rhs = rect.hook_product() * nu.hook_product();
        report.record_eq(format!("bounding-rectangle hook identity at {nu}"), &lhs, &rhs);
        // the same identity as a per-partition weight:
        // h(rect) / ((rows|nu)(cols|nu*) h(bar)) = 1 / h(nu)
        let weight = BigRational::new(
            rect.hook_product(),
            nu.content_poly(rows) * nu.conjugate().content_poly(cols) * bar.hook_product(),
        );
        let expected = BigRational::new(BigInt::one(), nu.hook_product());
        report.record_eq(format!("hook weight form at {nu}"), &weight, &expected);
        report
    });

    let mut region_instances = Vec::new();
    for e in 1..=region_rect {
        for f in 1..=region_rect {
            for nu in partitions_in_rectangle(e, f) {
                region_instances.push((e, f, nu));
            }
        }
    }
    let regions = run_checks("lemmas", region_instances, jobs, |_, (e, f, nu)| {
        region_hook_quotients(nu, *e, *f)
            .expect("enumerated inside the rectangle")
            .report(&format!("nu={nu} in ({e},{f})"))
    });

    let mut report = RunReport::new("lemmas");
    for part in [rect, hooks, regions] {
        report.instances += part.instances;
        report.failures.extend(part.failures);
    }
    report.wall = start.elapsed();
    report
}

fn binom_shift(var: Var, offset: i64, k: u32) -> BivarPoly {
    BivarPoly::binomial(&BivarPoly::var_plus(var, offset), k)
}

fn ef_minus(c: i64) -> BivarPoly {
    &(&BivarPoly::var(Var::E) * &BivarPoly::var(Var::F)) - &BivarPoly::from_int(c)
}

/// `C(e-1, m-1) C(f-1, l-1) (ef - lm) / (lm)`.
fn row_row_fixture(l: u32, m: u32) -> BivarPoly {
    let scale = BigRational::new(BigInt::one(), BigInt::from(l * m));
    (&(&binom_shift(Var::E, -1, m - 1) * &binom_shift(Var::F, -1, l - 1))
        * &ef_minus((l * m) as i64))
        .scale(&scale)
}

/// `C(e+m-1, m-1) C(f+l-1, l-1) (ef - lm) / (lm)`.
fn column_column_fixture(l: u32, m: u32) -> BivarPoly {
    let scale = BigRational::new(BigInt::one(), BigInt::from(l * m));
    (&(&binom_shift(Var::E, m as i64 - 1, m - 1) * &binom_shift(Var::F, l as i64 - 1, l - 1))
        * &ef_minus((l * m) as i64))
        .scale(&scale)
}

/// The printed polynomial for the hook pair `(2,1), (2,1)`:
/// `e(e^2-1) f(f^2-1) / 9 - e^2 f^2 + e^2 + 2ef + f^2 - 4`.
pub fn hook_pair_fixture() -> BivarPoly {
    let e = BivarPoly::var(Var::E);
    let f = BivarPoly::var(Var::F);
    let e2 = &e * &e;
    let f2 = &f * &f;
    let lead = &(&e * &(&e2 - &BivarPoly::one())) * &(&f * &(&f2 - &BivarPoly::one()));
    let mut out = lead.scale(&BigRational::new(BigInt::one(), BigInt::from(9)));
    out = &out - &(&e2 * &f2);
    out = &out + &e2;
    out = &out + &(&e * &f).scale(&BigRational::from_integer(BigInt::from(2)));
    out = &out + &f2;
    &out - &BivarPoly::from_int(4)
}

/// The printed single-row / single-column mixed-case sum, valid for
/// `l >= m`.
pub fn mixed_fixture(l: u32, m: u32) -> BivarPoly {
    let mut out = BivarPoly::zero();
    for n in 0..=m {
        let numer = &(&binom_shift(Var::E, n as i64 - 2, n)
            * &binom_shift(Var::E, (l + m - n) as i64 - 1, m - n))
            * &(&binom_shift(Var::F, 1, n) * &binom_shift(Var::F, -(m as i64), l - n));
        let d1 = ctp_core::partition::binomial((l + m - n + 1) as i64, n);
        let d2 = ctp_core::partition::binomial((l + m - 2 * n) as i64, m - n);
        let denom = BigRational::from_integer(d1 * d2);
        out = &out + &numer.scale(&denom.recip());
    }
    out
}

/// The printed closed forms: single-row pairs and single-column pairs
/// are asserted; the mixed-case sum is validated as a fixture and the
/// outcome reported, since the defining sum is the authority.
pub fn closed_forms_suite(max_lm: u32) -> RunReport {
    let start = Instant::now();
    let calc = Calculator::new();
    let mut checks = CheckReport::new();
    for l in 1..=max_lm {
        for m in 1..=max_lm {
            let row_pair = calc.p(
                &Partition::new(vec![l]).unwrap(),
                &Partition::new(vec![m]).unwrap(),
            );
            checks.record_eq(
                format!("single-row closed form at l={l}, m={m}"),
                &*row_pair,
                &row_row_fixture(l, m),
            );
            let column_pair = calc.p(
                &Partition::new(vec![1; l as usize]).unwrap(),
                &Partition::new(vec![1; m as usize]).unwrap(),
            );
            checks.record_eq(
                format!("single-column closed form at l={l}, m={m}"),
                &*column_pair,
                &column_column_fixture(l, m),
            );
        }
    }
    let hook = Partition::new(vec![2, 1]).unwrap();
    checks.record_eq("printed hook-pair polynomial", &*calc.p(&hook, &hook), &hook_pair_fixture());

    let mut report = RunReport::new("closed-forms");
    report.absorb(&checks);
    for l in 1..=4u32 {
        for m in 1..=l {
            let lambda = Partition::new(vec![l]).unwrap();
            let mu = Partition::new(vec![1; m as usize]).unwrap();
            let direct = calc.p(&lambda, &mu);
            let fixture = mixed_fixture(l, m);
            report.instances += 1;
            if *direct == fixture {
                report.notes.push(format!("mixed printed form at l={l}, m={m}: agrees"));
            } else {
                report.notes.push(format!(
                    "mixed printed form at l={l}, m={m}: MISMATCH printed [{fixture}] vs defining sum [{direct}]"
                ));
            }
        }
    }
    report.wall = start.elapsed();
    report
}

/// Agreement of the four evaluation routes on their guarded domains.
pub fn routes_suite(max_each_weight: u32, rank_hi: u32, jobs: usize) -> RunReport {
    let mut instances = Vec::new();
    for lambda in partitions_up_to_weight(max_each_weight) {
        for mu in partitions_up_to_weight(max_each_weight) {
            for e in 1..=rank_hi {
                for f in 1..=rank_hi {
                    instances.push((lambda.clone(), mu.clone(), e, f));
                }
            }
        }
    }
    run_checks("routes", instances, jobs, |calc, (lambda, mu, e, f)| {
        let mut report = CheckReport::new();
        let reference = calc.p_at(lambda, mu, *e as i64, *f as i64);
        if let Ok(value) = calc.p_lascoux(lambda, mu, *e, *f) {
            report.record_eq(
                format!("determinant route at P{lambda}{mu}({e},{f})"),
                &value,
                &reference,
            );
        }
        if let Ok(value) = calc.p_rectangle(lambda, mu, *e, *f) {
            report.record_eq(
                format!("rectangle route at P{lambda}{mu}({e},{f})"),
                &value,
                &reference,
            );
        }
        if let Ok(value) = calc.p_shifted(lambda, mu, *e, *f) {
            report.record_eq(
                format!("shifted route at P{lambda}{mu}({e},{f})"),
                &value,
                &reference,
            );
        }
        let m = (lambda.len() as u32).max(1);
        let p = (mu.len() as u32).max(1);
        if let Ok(value) = calc.p_reduction(lambda, mu, *e as i64, *f as i64, m, p) {
            report.record_eq(
                format!("reduction route at P{lambda}{mu}({e},{f}) base ({m},{p})"),
                &value,
                &reference,
            );
        }
        report
    })
}

/// Integer-valuedness of every coefficient polynomial on a symmetric
/// integer grid.
pub fn integrality_suite(max_pair_weight: u32, grid: i64, jobs: usize) -> RunReport {
    run_checks("integrality", partition_pairs(max_pair_weight), jobs, |calc, (lambda, mu)| {
        let mut report = CheckReport::new();
        let poly = calc.p(lambda, mu);
        report.record_cond(
            format!("P{lambda}{mu} integer-valued on [{}, {grid}]^2", -grid),
            poly.integer_valued_on_grid(-grid, grid),
            &*poly,
        );
        report
    })
}

/// Compares an expansion table against the oracle decomposition
/// coefficient by coefficient.
fn master_instance(
    calc: &Calculator,
    kind: &str,
    e: u32,
    f: u32,
    degree: u32,
    max_terms: usize,
) -> Result<CheckReport> {
    let (oracle_poly, table) = match kind {
        "chern" => (
            expand_tensor_chern(e, f, degree, max_terms)?,
            calc.chern_expansion(e, f, degree, false),
        ),
        _ => (
            expand_tensor_segre(e, f, degree, max_terms)?,
            calc.segre_expansion(e, f, degree, false),
        ),
    };
    let decomposed = schur_pair_decompose(&oracle_poly, e, f)?;
    let mut keys: std::collections::BTreeSet<(Partition, Partition)> = decomposed
        .iter()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, _)| k.clone())
        .collect();
    keys.extend(table.iter().map(|(k, _)| k.clone()));
    let mut report = CheckReport::new();
    for (lambda, mu) in keys {
        let from_oracle = decomposed
            .get(&(lambda.clone(), mu.clone()))
            .cloned()
            .map(BigRational::from_integer)
            .unwrap_or_else(BigRational::zero);
        let from_table = table.coefficient(&lambda, &mu);
        report.record_eq(
            format!("{kind} ({e},{f}) degree<={degree}: coefficient of ({lambda},{mu})"),
            &from_oracle,
            &from_table,
        );
    }
    Ok(report)
}

/// Chern master check: oracle decomposition equals the expansion.
pub fn master_chern_suite(
    ranks: &[(u32, u32)],
    degree: u32,
    max_terms: usize,
    jobs: usize,
) -> Result<RunReport> {
    run_fallible_checks("oracle-chern", ranks.to_vec(), jobs, |calc, (e, f)| {
        master_instance(calc, "chern", *e, *f, degree, max_terms)
    })
}

/// Segre master check: oracle decomposition equals the expansion.
pub fn master_segre_suite(
    ranks: &[(u32, u32)],
    degree: u32,
    max_terms: usize,
    jobs: usize,
) -> Result<RunReport> {
    run_fallible_checks("oracle-segre", ranks.to_vec(), jobs, |calc, (e, f)| {
        master_instance(calc, "segre", *e, *f, degree, max_terms)
    })
}

/// The symmetric-function identities used along the way: Cauchy, dual
/// Cauchy, the shifted binomial expansion, and direct-sum splitting.
pub fn proof_chain_suite(
    cauchy_hi: u32,
    binom_rect: (u32, u32),
    direct_sum_weight: u32,
    split_hi: u32,
    jobs: usize,
) -> RunReport {
    enum Instance {
        Cauchy(u32, u32),
        DualCauchy(u32, u32),
        Binomial(Partition, u32, u32),
        DirectSum(Partition, u32, u32),
    }
    let mut instances = Vec::new();
    for e in 1..=cauchy_hi {
        for f in 1..=cauchy_hi {
            instances.push(Instance::Cauchy(e, f));
            instances.push(Instance::DualCauchy(e, f));
        }
    }
    for e in 1..=binom_rect.0 {
        for f in 1..=binom_rect.1 {
            for lambda in partitions_in_rectangle(e, f) {
                instances.push(Instance::Binomial(lambda, e, f));
            }
        }
    }
    for mu in partitions_up_to_weight(direct_sum_weight) {
        for g in 1..split_hi {
            for h in 1..=(split_hi - g) {
                instances.push(Instance::DirectSum(mu.clone(), g, h));
            }
        }
    }
    run_checks("proof-chain", instances, jobs, |_, instance| match instance {
        Instance::Cauchy(e, f) => cauchy_check(*e, *f),
        Instance::DualCauchy(e, f) => dual_cauchy_check(*e, *f),
        Instance::Binomial(lambda, e, f) => {
            binomial_theorem_check(lambda, *e, *f).expect("enumerated inside the rectangle")
        }
        Instance::DirectSum(mu, g, h) => direct_sum_schur_check(mu, *g, *h),
    })
}

/// Littlewood-Richardson sanity sweep used by the oracle suite: the
/// generated product coefficients match direct tableau counting.
pub fn lr_consistency_suite(max_each_weight: u32, jobs: usize) -> RunReport {
    let mut instances = Vec::new();
    for alpha in partitions_up_to_weight(max_each_weight) {
        for beta in partitions_up_to_weight(max_each_weight) {
            instances.push((alpha.clone(), beta.clone()));
        }
    }
    run_checks("lr-consistency", instances, jobs, |calc, (alpha, beta)| {
        let mut report = CheckReport::new();
        for (nu, c) in calc.schur_product(alpha, beta).iter() {
            report.record_eq(
                format!("product coefficient c[{alpha},{beta} -> {nu}]"),
                &lr_coefficient(alpha, beta, nu),
                c,
            );
        }
        report
    })
}

/// The rank pairs of the default Segre master check.
pub fn default_segre_ranks() -> Vec<(u32, u32)> {
    vec![(1, 1), (1, 2), (2, 1), (2, 2), (2, 3), (3, 2)]
}

fn square_ranks(lo: u32, hi: u32) -> Vec<(u32, u32)> {
    let mut out = Vec::new();
    for e in lo..=hi {
        for f in lo..=hi {
            out.push((e, f));
        }
    }
    out
}

/// Runs the suite named on the command line at the given scale.
///
/// Unknown names are reported as `Err(None)`; oracle resource failures
/// as `Err(Some(error))`.
pub fn run_suite(name: &str, scale: &Scale) -> std::result::Result<Vec<RunReport>, Option<Error>> {
    let jobs = scale.jobs;
    let reports = match name {
        "symmetry" => vec![symmetry_suite(scale.max_weight.unwrap_or(8), jobs)],
        "vanishing" => vec![vanishing_suite(scale.max_weight.unwrap_or(8), jobs)],
        "recursion" => vec![
            recursion_suite(scale.max_weight.unwrap_or(7), jobs),
            reduction_suite(jobs),
        ],
        "addition" => vec![addition_suite(200, 0x5eed, jobs)],
        "leading-term" => vec![leading_term_suite(scale.max_weight.unwrap_or(8), jobs)],
        "corollary" => vec![corollary_suite(scale.max_weight.unwrap_or(10), jobs)],
        "lemmas" => {
            let rect = scale.rank_range.map(|(_, hi)| hi).unwrap_or(6);
            vec![lemmas_suite(rect, scale.max_weight.unwrap_or(12), rect.min(5), jobs)]
        }
        "closed-forms" => vec![closed_forms_suite(5)],
        "routes" => vec![routes_suite(
            scale.max_weight.unwrap_or(4),
            scale.rank_range.map(|(_, hi)| hi).unwrap_or(5),
            jobs,
        )],
        "integrality" => vec![integrality_suite(scale.max_weight.unwrap_or(8), 8, jobs)],
        "oracle" => {
            let (lo, hi) = scale.rank_range.unwrap_or((1, 3));
            let chern_degree = scale.max_weight.unwrap_or(6);
            let chern_ranks = square_ranks(lo, hi);
            let segre_degree = chern_degree.min(5);
            let segre_ranks = if scale.rank_range.is_some() {
                square_ranks(lo, hi)
            } else {
                default_segre_ranks()
            };
            let chern = master_chern_suite(&chern_ranks, chern_degree, scale.max_terms, jobs)
                .map_err(Some)?;
            let segre = master_segre_suite(&segre_ranks, segre_degree, scale.max_terms, jobs)
                .map_err(Some)?;
            let cauchy_hi = hi.min(3);
            vec![
                chern,
                segre,
                proof_chain_suite(cauchy_hi, (2, 3), 5, 5, jobs),
                lr_consistency_suite(4, jobs),
            ]
        }
        "all" => {
            let mut all = Vec::new();
            for sub in [
                "closed-forms",
                "symmetry",
                "vanishing",
                "recursion",
                "addition",
                "leading-term",
                "corollary",
                "lemmas",
                "routes",
                "integrality",
                "oracle",
            ] {
                all.extend(run_suite(sub, scale)?);
            }
            all
        }
        _ => return Err(None),
    };
    Ok(reports)
}
