//! Error type shared by all modules of the crate.

use core::fmt;

use alloc::string::String;

/// Crate-wide result alias.
pub type Result<T> = core::result::Result<T, Error>;

/// Domain and internal errors.
///
/// Operations with restricted domains (a box outside a diagram, a shape
/// that does not fit a rectangle, a route applied outside its guarded
/// parameter range) report `Error` rather than panicking, so callers can
/// surface precise diagnostics.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Partition construction from a sequence that is not weakly decreasing.
    NotWeaklyDecreasing(String),
    /// Parse failure for the textual partition form.
    PartitionParse(String),
    /// A box coordinate outside the diagram it refers to.
    BoxOutsideShape { row: u32, col: u32 },
    /// Skew-shape construction where the inner partition is not contained
    /// in the outer one.
    NotContained { outer: String, inner: String },
    /// A partition does not fit inside the requested rectangle.
    DoesNotFit { rows: u32, cols: u32 },
    /// A coefficient route evaluated outside its guarded domain.
    RouteDomain(&'static str),
    /// Input to the Schur-pair decomposition is not symmetric in the
    /// stated variable block.
    NotSymmetric(&'static str),
    /// The greedy Schur-pair elimination left a residue it cannot clear.
    /// This indicates a bug: it cannot happen for symmetric input.
    NonzeroResidue(String),
    /// An oracle expansion exceeded the configured term-count cap.
    TermLimitExceeded { terms: usize, limit: usize },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotWeaklyDecreasing(parts) => {
                write!(f, "partition parts must be weakly decreasing: {parts}")
            }
            Error::PartitionParse(s) => write!(f, "cannot parse partition from {s:?}"),
            Error::BoxOutsideShape { row, col } => {
                write!(f, "box ({row},{col}) lies outside the diagram")
            }
            Error::NotContained { outer, inner } => {
                write!(f, "inner shape {inner} is not contained in outer shape {outer}")
            }
            Error::DoesNotFit { rows, cols } => {
                write!(f, "partition does not fit in a {rows} x {cols} rectangle")
            }
            Error::RouteDomain(what) => write!(f, "outside the guarded domain: {what}"),
            Error::NotSymmetric(block) => {
                write!(f, "polynomial is not symmetric in the {block} variables")
            }
            Error::NonzeroResidue(mono) => {
                write!(f, "Schur-pair elimination stuck on monomial {mono} (internal defect)")
            }
            Error::TermLimitExceeded { terms, limit } => {
                write!(f, "oracle term count {terms} exceeds the cap of {limit} terms")
            }
        }
    }
}
