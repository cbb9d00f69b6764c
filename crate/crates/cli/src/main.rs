//! `ctp`: exact Chern/Segre classes of tensor products in the
//! Schur-class basis, plus the identity verification suites.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use ctp_cli::json::ExpansionTable;
use ctp_cli::parse::{parse_partition, parse_rank_range};
use ctp_cli::suites::{run_suite, Scale, DEFAULT_MAX_TERMS};
use ctp_core::lr::lr_coefficient;
use ctp_core::tensor::{integer_string, Calculator};

#[derive(Parser)]
#[command(
    name = "ctp",
    version,
    about = "Chern and Segre classes of tensor products of vector bundles, \
             expanded exactly in the Schur-class basis"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    /// The defining sum over Littlewood-Richardson coefficients.
    Def,
    /// Determinant of binomial coefficients (needs concrete ranks).
    Lascoux,
    /// Hook-quotient sum over the rank rectangle (needs concrete ranks).
    Rectangle,
    /// Shifted Schur function formula (needs concrete ranks).
    Shifted,
    /// Reduction to smaller base ranks (needs concrete ranks).
    Reduction,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Print one universal coefficient, symbolically or at given ranks.
    Coeff {
        /// First partition, e.g. "2,1"; "" or "0" or "[]" for empty.
        #[arg(long)]
        lambda: String,
        /// Second partition.
        #[arg(long)]
        mu: String,
        /// Print the Segre-side coefficient instead of the Chern-side one.
        #[arg(long)]
        segre: bool,
        /// Rank of the first bundle (may be negative with the default method).
        #[arg(long, allow_negative_numbers = true)]
        e: Option<i64>,
        /// Rank of the second bundle.
        #[arg(long, allow_negative_numbers = true)]
        f: Option<i64>,
        #[arg(long, value_enum, default_value = "def")]
        method: Method,
        /// Base rank for the reduction method (default: rows of lambda).
        #[arg(long)]
        m: Option<u32>,
        /// Base rank for the reduction method (default: rows of mu).
        #[arg(long)]
        p: Option<u32>,
    },
    /// Tabulate the total Chern class expansion at concrete ranks.
    Chern {
        #[arg(long)]
        e: u32,
        #[arg(long)]
        f: u32,
        #[arg(long)]
        max_degree: u32,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Also list pairs whose Schur class vanishes at these ranks and
        /// zero coefficients.
        #[arg(long)]
        include_vanishing: bool,
    },
    /// Tabulate the total Segre class expansion at concrete ranks.
    Segre {
        #[arg(long)]
        e: u32,
        #[arg(long)]
        f: u32,
        #[arg(long)]
        max_degree: u32,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long)]
        include_vanishing: bool,
    },
    /// Print one Littlewood-Richardson coefficient.
    Lr {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        mu: String,
        #[arg(long)]
        nu: String,
    },
    /// Run identity verification suites.
    Verify {
        /// One of: all, oracle, symmetry, vanishing, recursion, addition,
        /// leading-term, corollary, lemmas, closed-forms, routes,
        /// integrality.
        #[arg(long, default_value = "all")]
        suite: String,
        /// Scale knob; each suite interprets it as its natural weight cap.
        #[arg(long)]
        max_weight: Option<u32>,
        /// Inclusive rank range "A..B" for rank-indexed suites.
        #[arg(long)]
        rank_range: Option<String>,
        /// Parallelism across independent instances.
        #[arg(long, default_value = "1")]
        jobs: usize,
    },
}

fn usage_error(message: &str) -> ExitCode {
    eprintln!("error: {message}");
    ExitCode::from(2)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Coeff { lambda, mu, segre, e, f, method, m, p } => {
            let lambda = match parse_partition(&lambda) {
                Ok(p) => p,
                Err(e) => return usage_error(&e),
            };
            let mu = match parse_partition(&mu) {
                Ok(p) => p,
                Err(e) => return usage_error(&e),
            };
            let calc = Calculator::new();
            if method != Method::Def {
                if segre {
                    return usage_error("--segre supports only the default method");
                }
                let (Some(e), Some(f)) = (e, f) else {
                    return usage_error("this method needs both --e and --f");
                };
                if e < 1 || f < 1 {
                    return usage_error("this method needs positive ranks");
                }
                let value = match method {
                    Method::Lascoux => calc.p_lascoux(&lambda, &mu, e as u32, f as u32),
                    Method::Rectangle => calc.p_rectangle(&lambda, &mu, e as u32, f as u32),
                    Method::Shifted => calc.p_shifted(&lambda, &mu, e as u32, f as u32),
                    Method::Reduction => {
                        let m = m.unwrap_or_else(|| (lambda.len() as u32).max(1));
                        let p = p.unwrap_or_else(|| (mu.len() as u32).max(1));
                        calc.p_reduction(&lambda, &mu, e, f, m, p)
                    }
                    Method::Def => unreachable!(),
                };
                return match value {
                    Ok(value) => {
                        println!("{}", integer_string(&value));
                        ExitCode::SUCCESS
                    }
                    Err(err) => usage_error(&err.to_string()),
                };
            }
            match (e, f) {
                (Some(e), Some(f)) => {
                    let value = if segre {
                        calc.q_at(&lambda, &mu, e, f)
                    } else {
                        calc.p_at(&lambda, &mu, e, f)
                    };
                    println!("{}", integer_string(&value));
                }
                (None, None) => {
                    let poly = if segre { calc.q(&lambda, &mu) } else { calc.p(&lambda, &mu) };
                    println!("{poly}");
                }
                _ => return usage_error("give both --e and --f, or neither"),
            }
            ExitCode::SUCCESS
        }
        Command::Chern { e, f, max_degree, format, include_vanishing } => {
            expansion_command("chern", e, f, max_degree, format, include_vanishing)
        }
        Command::Segre { e, f, max_degree, format, include_vanishing } => {
            expansion_command("segre", e, f, max_degree, format, include_vanishing)
        }
        Command::Lr { lambda, mu, nu } => {
            let parsed: Result<Vec<_>, String> =
                [&lambda, &mu, &nu].iter().map(|s| parse_partition(s)).collect();
            match parsed {
                Ok(parts) => {
                    println!("{}", lr_coefficient(&parts[0], &parts[1], &parts[2]));
                    ExitCode::SUCCESS
                }
                Err(e) => usage_error(&e),
            }
        }
        Command::Verify { suite, max_weight, rank_range, jobs } => {
            let rank_range = match rank_range.as_deref().map(parse_rank_range).transpose() {
                Ok(r) => r,
                Err(e) => return usage_error(&e),
            };
            let max_terms = match std::env::var("CTP_MAX_TERMS") {
                Ok(raw) => match raw.parse::<usize>() {
                    Ok(v) if v > 0 => v,
                    _ => return usage_error(&format!("invalid CTP_MAX_TERMS value {raw:?}")),
                },
                Err(std::env::VarError::NotPresent) => DEFAULT_MAX_TERMS,
                Err(e) => return usage_error(&format!("cannot read CTP_MAX_TERMS: {e}")),
            };
            let scale = Scale { max_weight, rank_range, jobs: jobs.max(1), max_terms };
            match run_suite(&suite, &scale) {
                Err(None) => usage_error(&format!("unknown suite {suite:?}")),
                Err(Some(err)) => usage_error(&err.to_string()),
                Ok(reports) => {
                    let mut failed = false;
                    for report in &reports {
                        print!("{}", report.render());
                        failed |= !report.passed();
                    }
                    if failed {
                        ExitCode::from(1)
                    } else {
                        ExitCode::SUCCESS
                    }
                }
            }
        }
    }
}

fn expansion_command(
    kind: &str,
    e: u32,
    f: u32,
    max_degree: u32,
    format: Format,
    include_vanishing: bool,
) -> ExitCode {
    if e < 1 || f < 1 {
        return usage_error("ranks must be positive");
    }
    let calc = Calculator::new();
    let expansion = if kind == "segre" {
        calc.segre_expansion(e, f, max_degree, include_vanishing)
    } else {
        calc.chern_expansion(e, f, max_degree, include_vanishing)
    };
    let table = ExpansionTable::from_expansion(kind, e, f, &expansion);
    match format {
        Format::Text => print!("{}", table.to_text()),
        Format::Json => print!("{}", table.to_json()),
    }
    ExitCode::SUCCESS
}
