//! Exact counting of generalized Dyck paths.
//!
//! A generalized Dyck path to `(m, n)` is a monotone lattice path from the
//! origin that never rises above the line `y = (n/m)·x`. This crate computes
//! their number `C(m, n)` with several independent formulas, all in exact
//! big-integer/rational arithmetic, and ships brute-force oracles plus the
//! combinatorial identities that tie the formulas together.
//!
//! - [`arith`]: big naturals and rationals, binomials, `A(m, n)`
//! - [`partitions`]: multiplicity sequences and their statistics
//! - [`paths`]: path words, rotations, shapes and the DP oracles
//! - [`counting`]: the closed forms and recurrences
//! - [`verify`]: named identity suites shared by the CLI and the tests

pub mod arith;
pub mod counting;
pub mod error;
pub mod partitions;
pub mod paths;
pub mod verify;

pub use arith::{a_value, binomial, BigNat, BigRat};
pub use counting::{
    catalan_sequence, check_catalan_reduction, check_fuss_recurrence, count, count_coprime,
    count_duchon, count_fuss, count_main, count_recurrence, CountMethod, CountResult,
};
pub use error::{DyckError, Result};
pub use partitions::{
    below_set, check_coef_identity, check_hh_identity, sequences_with_norm, MultSeq,
};
pub use paths::{
    census, count_dp, enumerate_paths, primitive_counts, CensusRecord, EnumLimit, PathWord,
    Shape, Step,
};
