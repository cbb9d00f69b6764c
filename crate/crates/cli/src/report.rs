//! Aggregated run reports for the verification suites.

use std::time::Duration;

use ctp_core::report::CheckReport;

/// One failed identity instance, with both computed values rendered
/// exactly.
#[derive(Clone, Debug)]
pub struct Failure {
    pub label: String,
    pub lhs: String,
    pub rhs: String,
}

/// Outcome of one verification suite.
#[derive(Clone, Debug)]
pub struct RunReport {
    pub suite: String,
    pub instances: usize,
    pub failures: Vec<Failure>,
    /// Informational lines (fixture comparisons and similar), not
    /// counted as failures.
    pub notes: Vec<String>,
    pub wall: Duration,
}

impl RunReport {
    pub fn new(suite: impl Into<String>) -> Self {
        RunReport {
            suite: suite.into(),
            instances: 0,
            failures: Vec::new(),
            notes: Vec::new(),
            wall: Duration::ZERO,
        }
    }

    pub fn absorb(&mut self, checks: &CheckReport) {
        self.instances += checks.len();
        for check in checks.failures() {
            self.failures.push(Failure {
                label: check.label.clone(),
                lhs: check.lhs.clone(),
                rhs: check.rhs.clone(),
            });
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// Renders the report; the wall time goes on its own line so output
    /// comparisons can ignore it.
    pub fn render(&self) -> String {
        let mut out = format!(
            "suite {}: {} instances, {} failures\n",
            self.suite,
            self.instances,
            self.failures.len()
        );
        for note in &self.notes {
            out.push_str(&format!("note: {note}\n"));
        }
        for failure in &self.failures {
            out.push_str(&format!(
                "FAIL {}\n  lhs = {}\n  rhs = {}\n",
                failure.label, failure.lhs, failure.rhs
            ));
        }
        out.push_str(&format!("time: {:.3}s\n", self.wall.as_secs_f64()));
        out
    }
}
