//! Structured pass/fail reports for identity verification.
//!
//! Every verification operation records one entry per identity instance,
//! with both computed values rendered exactly, so a failure is directly
//! diagnosable rather than a bare boolean.

use core::fmt::Display;

use alloc::string::{String, ToString};
use alloc::vec::Vec;

/// One verified identity instance.
#[derive(Clone, Debug)]
pub struct Check {
    /// What was checked, with the inputs inlined.
    pub label: String,
    /// Left-hand side, rendered exactly.
    pub lhs: String,
    /// Right-hand side, rendered exactly.
    pub rhs: String,
    pub ok: bool,
}

/// A batch of checks from one verification operation.
#[derive(Clone, Debug, Default)]
pub struct CheckReport {
    pub checks: Vec<Check>,
}

impl CheckReport {
    pub fn new() -> Self {
        CheckReport { checks: Vec::new() }
    }

    /// Records an equality check between two exactly comparable values.
    pub fn record_eq<T: PartialEq + Display>(&mut self, label: impl Into<String>, lhs: &T, rhs: &T) {
        self.checks.push(Check {
            label: label.into(),
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
            ok: lhs == rhs,
        });
    }

    /// Records a boolean condition together with a rendered witness.
    pub fn record_cond(&mut self, label: impl Into<String>, ok: bool, witness: impl Display) {
        self.checks.push(Check {
            label: label.into(),
            lhs: witness.to_string(),
            rhs: String::new(),
            ok,
        });
    }

    pub fn merge(&mut self, other: CheckReport) {
        self.checks.extend(other.checks);
    }

    pub fn len(&self) -> usize {
        self.checks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.checks.is_empty()
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.ok)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.ok)
    }
}
