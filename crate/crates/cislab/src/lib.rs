//! Admissible shifts for complete interpolation in shift-invariant spaces.
//!
//! Samples on a shifted two-sided lattice (the nonnegative integers together
//! with a shifted copy of the negative ones) interpolate a shift-invariant
//! space exactly when an associated Toeplitz symbol stays away from zero and
//! has winding number zero. This crate computes that criterion two ways:
//!
//! * exactly, in rational arithmetic, for spaces generated by one-transversal
//!   sets ([`transversal`], [`curve`]), and
//! * through exponential-spline polynomials and unit-circle zero counts for
//!   B-spline spaces ([`spline`], [`operator`]),
//!
//! with numerical cross-checks throughout: independent winding oracles, Lerch
//! sums along three routes ([`lerch`]), and Toeplitz finite-section and
//! reconstruction experiments ([`operator`]).
//!
//! Start with the runnable programs under `examples/`; the `cislab` binary
//! exposes the same analyses as batch subcommands ([`jobs`]).

pub mod curve;
pub mod error;
pub mod interval;
pub mod jobs;
pub mod lerch;
pub mod operator;
pub mod poly;
pub mod rational;
pub mod special;
pub mod spline;
pub mod transversal;

pub use error::{Error, ErrorClass, Result};
pub use interval::IntervalQ;
pub use rational::Rat;
