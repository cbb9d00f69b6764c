//! Command-line companion to `ctp-core`: argument parsing helpers, the
//! JSON table format, and the verification suites with their reports.

pub mod json;
pub mod parse;
pub mod report;
pub mod suites;

/// Renders a partition in the bracket form used by tables and JSON,
/// e.g. `[3,1]`; the empty partition is `[]`.
pub fn bracket(p: &ctp_core::Partition) -> String {
    let inner: Vec<String> = p.parts().iter().map(|v| v.to_string()).collect();
    format!("[{}]", inner.join(","))
}
