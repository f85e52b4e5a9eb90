//! Hook-length statistics of odd and distinct partitions.
//!
//! This crate is `no_std` (it needs `alloc`) and contains every algorithm:
//!
//! - [`qseries`]: exact truncated power series in `q` over big integers or
//!   big rationals, with builders for q-Pochhammer products, geometric
//!   factors and Lambert sums.
//! - [`partitions`]: enumeration of restricted partition families and
//!   exact totals of hook, gap and part statistics. This is the brute-force
//!   oracle for everything else.
//! - [`genfun`]: closed-form generating functions for hook and gap counts,
//!   the bisection used for length-3 hooks, and the Nekrasov-Okounkov / Han
//!   identity verifiers.
//! - [`analytic`]: exact distinct-part counts, the modified Bessel function
//!   `I_1` with its elementary bounds, the Beckwith-Bessenrodt envelope for
//!   `q(n)`, Wright circle-method main terms and Laurent limits.
//! - [`certify`]: effective thresholds for linear inequalities in `q(n)` and
//!   `rho(n, m)`, the `(A, B, C)` search and the exhaustive finite check.
//! - [`scan`]: bias, congruence and identity scanners.
//!
//! IO, caching, parallel drivers and the command line live in the
//! companion `hookbias` crate.

#![no_std]
#![warn(missing_debug_implementations)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod analytic;
pub mod certify;
mod error;
pub mod genfun;
pub mod partitions;
pub mod qseries;
pub mod scan;

pub use error::{Error, Result};
