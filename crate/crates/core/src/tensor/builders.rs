use std::fmt;
use std::str::FromStr;

use num_traits::One;

use crate::eps::EpsilonMatrix;
use crate::error::{Error, Result};
use crate::partitions::TwoRowPartition;
use crate::rational::Rational;

use super::{basis, Key, SparseVec, TensorMap};

/// `T_π(e_i) = Σ_j δ_{π ≤ ker(i, j)} e_j` for `π ∈ P(k, l)`.
///
/// Blocks touching the upper row force their lower points to the common
/// upper value; blocks living only on the lower row range over all `n`
/// values.
pub fn t_pi(pi: &TwoRowPartition, n: usize) -> TensorMap {
    let (k, l) = (pi.upper(), pi.lower());
    let labels = pi.underlying().labels();
    let nb = pi.underlying().num_blocks();
    let lower_only: Vec<usize> = (0..nb).filter(|&b| !labels[..k].contains(&b)).collect();
    TensorMap::from_columns(n, k, l, |input| {
        let mut value = vec![usize::MAX; nb];
        for (p, &b) in labels[..k].iter().enumerate() {
            if value[b] == usize::MAX {
                value[b] = input[p];
            } else if value[b] != input[p] {
                return SparseVec::new();
            }
        }
        let mut col = SparseVec::new();
        for free in basis(n, lower_only.len()) {
            for (&b, &v) in lower_only.iter().zip(&free) {
                value[b] = v;
            }
            let out: Key = labels[k..].iter().map(|&b| value[b]).collect();
            col.insert(out, Rational::one());
        }
        col
    })
}

/// The four ε-dependent maps on `(ℂⁿ)^{⊗2}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RKind {
    /// `e_i⊗e_j ↦ δ_{ε_ij=1} e_j⊗e_i`
    Cross1,
    /// `e_i⊗e_j ↦ δ_{ε_ij=1} e_i⊗e_j`
    Idid1,
    /// `e_i⊗e_j ↦ δ_{ε_ij=0} e_i⊗e_j`
    Idid0,
    /// `e_i⊗e_j ↦ δ_ij Σ_k δ_{ε_ik=0} e_k⊗e_k`
    Paarbaar0,
}

/// Sums of two `R` maps.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SKind {
    /// `R¹_cross + R⁰_idid`
    CrossId,
    /// `R¹_cross + R⁰_paarbaar`
    CrossPaar,
    /// `R¹_idid + R⁰_paarbaar`
    IdPaar,
}

impl RKind {
    pub const ALL: [RKind; 4] = [RKind::Cross1, RKind::Idid1, RKind::Idid0, RKind::Paarbaar0];

    pub fn name(self) -> &'static str {
        match self {
            RKind::Cross1 => "cross1",
            RKind::Idid1 => "idid1",
            RKind::Idid0 => "idid0",
            RKind::Paarbaar0 => "paarbaar0",
        }
    }
}

impl SKind {
    pub const ALL: [SKind; 3] = [SKind::CrossId, SKind::CrossPaar, SKind::IdPaar];

    pub fn name(self) -> &'static str {
        match self {
            SKind::CrossId => "cross-id",
            SKind::CrossPaar => "cross-paar",
            SKind::IdPaar => "id-paar",
        }
    }
}

macro_rules! named_enum {
    ($t:ty) => {
        impl fmt::Display for $t {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(self.name())
            }
        }

        impl FromStr for $t {
            type Err = Error;

            fn from_str(s: &str) -> Result<Self> {
                <$t>::ALL
                    .into_iter()
                    .find(|k| k.name() == s.trim().to_ascii_lowercase())
                    .ok_or_else(|| Error::Parse {
                        line: 1,
                        column: 1,
                        message: format!("unknown map kind `{s}`"),
                    })
            }
        }
    };
}

named_enum!(RKind);
named_enum!(SKind);

pub fn r_map(kind: RKind, eps: &EpsilonMatrix) -> TensorMap {
    let n = eps.n();
    TensorMap::from_columns(n, 2, 2, |input| {
        let (i, j) = (input[0], input[1]);
        let e = eps.get0(i, j);
        let mut col = SparseVec::new();
        match kind {
            RKind::Cross1 if e => {
                col.insert(vec![j, i], Rational::one());
            }
            RKind::Idid1 if e => {
                col.insert(vec![i, j], Rational::one());
            }
            RKind::Idid0 if !e => {
                col.insert(vec![i, j], Rational::one());
            }
            RKind::Paarbaar0 if i == j => {
                for k in (0..n).filter(|&k| !eps.get0(i, k)) {
                    col.insert(vec![k, k], Rational::one());
                }
            }
            _ => {}
        }
        col
    })
}

pub fn s_box(kind: SKind, eps: &EpsilonMatrix) -> TensorMap {
    let (a, b) = match kind {
        SKind::CrossId => (RKind::Cross1, RKind::Idid0),
        SKind::CrossPaar => (RKind::Cross1, RKind::Paarbaar0),
        SKind::IdPaar => (RKind::Idid1, RKind::Paarbaar0),
    };
    r_map(a, eps).add(&r_map(b, eps)).expect("same shape")
}
