//! Exact computation of Chern and Segre classes of tensor products of
//! vector bundles, expressed in the Schur-class basis.
//!
//! For bundles `E`, `F` of ranks `e`, `f` the total Chern class of the
//! tensor product expands as
//!
//! ```text
//! c(E (x) F) = sum_{lambda, mu} P_{lambda,mu}(e, f) s_lambda(E) s_mu(F)
//! ```
//!
//! where the coefficients `P_{lambda,mu}` are universal polynomials in the
//! two ranks, computable from Littlewood-Richardson coefficients, hook
//! lengths and content polynomials.  The Segre series has an analogous
//! expansion with coefficients `Q_{lambda,mu}`.  This crate computes both
//! families by several independent routes, together with the full
//! combinatorial substrate (partitions, hooks, the Littlewood-Richardson
//! rule, exact bivariate polynomials) and a brute-force symmetric-function
//! oracle in Chern roots that certifies every expansion.
//!
//! All arithmetic is exact; there is no floating point anywhere.
//!
//! The crate is `no_std` (it requires `alloc`).  IO, a command line
//! front end and file formats live in the companion crate `ctp-cli`.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod error;
pub mod lr;
pub mod oracle;
pub mod partition;
pub mod poly;
pub mod report;
pub mod tensor;

pub use error::{Error, Result};
pub use partition::{Partition, SkewShape};
pub use poly::{BivarPoly, Var};

pub use num_bigint::BigInt;
pub use num_rational::BigRational;
