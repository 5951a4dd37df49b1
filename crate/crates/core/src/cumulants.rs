//! Free cumulants and the ε-independence moment-cumulant formula.
//!
//! For ε-independent variables `x_1..x_n` the mixed moment is
//! `φ(x_{i(1)}⋯x_{i(k)}) = Σ_{π ∈ NC^ε[i]} κ_π`, where `κ_π` multiplies one
//! free cumulant per block. Restricting the sum to a [`Category`] gives the
//! variants used for the hyperoctahedral and orthogonal cases.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::eps::{all_indices, EpsilonMatrix, MultiIndex, Permutation};
use crate::error::{Error, Result};
use crate::groups::t_n_eps;
use crate::partitions::{nc_eps_set, Category, SetPartition};
use crate::rational::{self, Rational};

/// Per-variable free cumulants `κ_1(v), κ_2(v), ...`; orders not listed are zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CumulantSpec {
    n: usize,
    kappas: Vec<Vec<Rational>>,
}

impl CumulantSpec {
    pub fn new(n: usize, kappas: Vec<Vec<Rational>>) -> Result<Self> {
        if n == 0 || kappas.len() != n {
            return Err(Error::Shape(format!(
                "expected {n} cumulant rows, got {}",
                kappas.len()
            )));
        }
        Ok(CumulantSpec { n, kappas })
    }

    /// Every variable gets the same cumulant row.
    pub fn identical(n: usize, row: Vec<Rational>) -> Self {
        CumulantSpec {
            n,
            kappas: vec![row; n],
        }
    }

    /// Centered semicircle of variance one: only `κ_2 = 1`.
    pub fn semicircle(n: usize) -> Self {
        Self::identical(n, vec![rational::zero(), rational::one()])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `κ_order(variable)`, 1-based; zero beyond the stored row.
    pub fn kappa(&self, variable: usize, order: usize) -> Rational {
        self.kappas[variable - 1]
            .get(order.wrapping_sub(1))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.kappas
    }

    /// All rows agree once trailing zeros are ignored.
    pub fn is_identically_distributed(&self) -> bool {
        let trim = |r: &Vec<Rational>| {
            let end = r.iter().rposition(|x| !x.is_zero()).map_or(0, |p| p + 1);
            r[..end].to_vec()
        };
        let first = trim(&self.kappas[0]);
        self.kappas.iter().all(|r| trim(r) == first)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&SpecJson::from(self)).expect("spec serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let raw: SpecJson = serde_json::from_str(text)?;
        raw.try_into()
    }
}

#[derive(Serialize, Deserialize)]
struct SpecJson {
    n: usize,
    kappas: Vec<Vec<String>>,
}

impl From<&CumulantSpec> for SpecJson {
    fn from(s: &CumulantSpec) -> Self {
        SpecJson {
            n: s.n,
            kappas: s
                .kappas
                .iter()
                .map(|r| r.iter().map(rational::format).collect())
                .collect(),
        }
    }
}

impl TryFrom<SpecJson> for CumulantSpec {
    type Error = Error;

    fn try_from(raw: SpecJson) -> Result<Self> {
        let rows = raw
            .kappas
            .iter()
            .map(|r| {
                r.iter()
                    .map(|s| rational::parse(s))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        CumulantSpec::new(raw.n, rows)
    }
}

/// `κ_π(x_{i(1)}, ..., x_{i(k)})`: product over blocks of `κ_{|V|}` of the
/// block's variable. Every block must carry a single index value.
pub fn kappa_pi(pi: &SetPartition, i: &MultiIndex, spec: &CumulantSpec) -> Result<Rational> {
    if pi.k() != i.len() {
        return Err(Error::DimensionMismatch(format!(
            "partition of {} points against an index of length {}",
            pi.k(),
            i.len()
        )));
    }
    if let Some(&v) = i.values().iter().find(|&&v| v > spec.n) {
        return Err(Error::IndexOutOfRange {
            value: v,
            n: spec.n,
        });
    }
    let mut acc = Rational::one();
    for block in pi.blocks() {
        let var = i.values()[block[0] - 1];
        if block.iter().any(|&p| i.values()[p - 1] != var) {
            let parts: Vec<String> = block.iter().map(usize::to_string).collect();
            return Err(Error::MixedBlock {
                block: format!("{{{}}}", parts.join(",")),
            });
        }
        acc *= spec.kappa(var, block.len());
        if acc.is_zero() {
            break;
        }
    }
    Ok(acc)
}

/// Mixed moment `φ(x_{i(1)}⋯x_{i(k)})` of ε-independent variables, summing
/// over `NC_C^ε[i]`. The empty word has moment 1.
pub fn moment(
    i: &MultiIndex,
    eps: &EpsilonMatrix,
    spec: &CumulantSpec,
    cat: Category,
) -> Result<Rational> {
    if spec.n != eps.n() {
        return Err(Error::DimensionMismatch(format!(
            "{} cumulant rows for a {}x{} epsilon matrix",
            spec.n,
            eps.n(),
            eps.n()
        )));
    }
    nc_eps_set(i, eps, cat)?
        .iter()
        .try_fold(Rational::zero(), |acc, pi| Ok(acc + kappa_pi(pi, i, spec)?))
}

/// A moment that changed under relabelling by an automorphism.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExchangeabilityCounterexample {
    pub index: MultiIndex,
    pub sigma: Permutation,
    pub moment: Rational,
    pub relabelled_moment: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExchangeabilityReport {
    pub group_order: usize,
    pub words_checked: usize,
    pub counterexample: Option<ExchangeabilityCounterexample>,
}

impl ExchangeabilityReport {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

/// Checks `φ(x_{j(1)}⋯x_{j(k)}) = φ(x_{σ(j(1))}⋯x_{σ(j(k))})` for every
/// `σ ∈ T_n^ε` and every word of length at most `max_k`.
pub fn check_eps_exchangeability(
    eps: &EpsilonMatrix,
    spec: &CumulantSpec,
    max_k: usize,
) -> Result<ExchangeabilityReport> {
    if !spec.is_identically_distributed() {
        return Err(Error::NotIdenticallyDistributed);
    }
    let group = t_n_eps(eps)?;
    let n = eps.n();
    let mut words_checked = 0;
    for k in 0..=max_k {
        // moments of all words of length k, indexed by lexicographic rank
        let table = all_indices(n, k)
            .map(|j| moment(&j, eps, spec, Category::All))
            .collect::<Result<Vec<_>>>()?;
        let rank = |j: &MultiIndex| j.values().iter().fold(0, |acc, &v| acc * n + v - 1);
        for (j, m) in all_indices(n, k).zip(&table) {
            words_checked += 1;
            for sigma in group.elements() {
                let relabelled = j.relabel(sigma)?;
                let m2 = &table[rank(&relabelled)];
                if m2 != m {
                    return Ok(ExchangeabilityReport {
                        group_order: group.order(),
                        words_checked,
                        counterexample: Some(ExchangeabilityCounterexample {
                            index: j,
                            sigma: sigma.clone(),
                            moment: m.clone(),
                            relabelled_moment: m2.clone(),
                        }),
                    });
                }
            }
        }
    }
    Ok(ExchangeabilityReport {
        group_order: group.order(),
        words_checked,
        counterexample: None,
    })
}
