//! The automorphism group `T_n^ε`, the Coxeter group `ℤ₂^ε` (its
//! representation `σ_ε` and word problem), and relation checks for concrete
//! fundamental matrices.

mod coxeter;
mod matrix;
mod rep;
mod tneps;
mod word;

pub use coxeter::{
    check_coxeter_rep, coxeter_rep, mul2, BlockDiag, CoxeterRep, CoxeterReport, Mat2, A, B, ID2,
};
pub use matrix::Matrix;
pub use rep::{
    permutation_rep, rep_check, two_projection_rep, Relation, RelationResult, RepReport,
    Representation, Violation,
};
pub use tneps::{permutation_satisfies_r_eps, t_n_eps, t_n_eps_bounded, PermGroup, DEFAULT_BOUND};
pub use word::{normal_form, word_equal, word_reduce, Word};
