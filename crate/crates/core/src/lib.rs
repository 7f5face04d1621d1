//! Exact computation and cross-verification of the connected noncrossing
//! graph numbers `N_n` and the related binomial sums `f1..f5`.
//!
//! Every value is computed in exact rational arithmetic, usually by several
//! independent routes (binomial sums, Lagrange inversion on truncated power
//! series, closed forms with half-integer binomials, residues mod 3), and
//! the routes are checked against each other and against brute-force
//! enumeration of noncrossing graphs.

pub mod arith;
pub mod cli;
pub mod congruence;
pub mod enumerate;
pub mod error;
pub mod lagrange;
pub mod report;
pub mod sequences;
pub mod series;

pub use arith::{Integer, Rational, Residue3};
pub use error::{Error, Result};
pub use report::{CheckReport, Status};
pub use sequences::{Method, SequenceId, SumParams};
pub use series::{Series, SeriesMod3};
