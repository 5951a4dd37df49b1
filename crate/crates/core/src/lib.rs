//! Exact computer algebra for partially commuting ("ε-mixed") quantum symmetries.
//!
//! An [`EpsilonMatrix`] is a symmetric 0/1 matrix with zero diagonal that
//! records which pairs of variables commute (entry 1) and which are free
//! (entry 0). Everything else in this crate is driven by it:
//!
//! * [`partitions`]: set partitions, the ε-noncrossing predicate and the sets
//!   `NC^ε[i]` that index the moment-cumulant formula.
//! * [`cumulants`]: moments of ε-independent variables from their free cumulants.
//! * [`tensor`]: exact sparse linear maps on tensor powers of `C^n`, the
//!   partition maps `T_π`, the ε-twisted maps `R` and the mixed `S` boxes.
//! * [`mpi`]: the Case-1/Case-2 reduction that composes `M_π` out of
//!   intertwiners, together with its oracle check.
//! * [`groups`]: the automorphism group `T_n^ε`, the right-angled Coxeter group
//!   `Z_2^ε` (representation and word problem) and a relation checker for
//!   concrete matrix representations.
//!
//! All arithmetic is exact ([`Rational`]); there is no floating point anywhere.

#![allow(clippy::needless_range_loop)]

pub mod cli;
pub mod cumulants;
pub mod eps;
pub mod error;
pub mod fixtures;
pub mod groups;
pub mod mpi;
pub mod partitions;
pub mod rational;
pub mod tensor;

pub use cumulants::CumulantSpec;
pub use eps::{EpsilonMatrix, MultiIndex, Permutation, Preset};
pub use error::{Error, Result};
pub use partitions::{Category, SetPartition, TwoRowPartition};
pub use rational::Rational;
pub use tensor::TensorMap;
