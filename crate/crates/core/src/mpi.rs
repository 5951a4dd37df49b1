//! The reduction that writes the indicator map
//! `M_π : e_i ↦ δ_{π ∈ NC_C^ε[i]}` as a composition of partition maps `T_σ^*`
//! (for noncrossing subpartitions `σ`) and twisted crossings `R¹_cross`.
//!
//! Each step either removes a noncrossing subpartition (Case 1) or swaps two
//! adjacent legs of crossing blocks (Case 2). The result is checked against
//! the combinatorial indicator computed directly from the partition.

use num_traits::{One, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cumulants::CumulantSpec;
use crate::eps::{all_indices, EpsilonMatrix, MultiIndex};
use crate::error::{Error, Result};
use crate::partitions::{
    enumerate_partitions, find_case2_index, find_noncrossing_subpartition, nc_indicator, Category,
    SetPartition, TwoRowPartition,
};
use crate::rational::Rational;
use crate::tensor::{r_map, t_pi, RKind, SparseVec, TensorMap};

/// Largest `n^k` for which [`MpiOperator::materialize`] builds a full table.
pub const MATERIALIZE_LIMIT: usize = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "case")]
pub enum StepKind {
    /// `id^{p-1} ⊗ T_σ^* ⊗ id^{k-q}`: the noncrossing `sigma` on points
    /// `start..=end` is removed.
    Case1 {
        sigma: SetPartition,
        start: usize,
        end: usize,
    },
    /// `id^{l-1} ⊗ R¹_cross ⊗ id^{k-l-1}`: legs `l` and `l+1` are swapped.
    Case2 { l: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceStep {
    #[serde(flatten)]
    pub kind: StepKind,
    /// `π_{m+1}`.
    pub partition: SetPartition,
    /// `k_{m+1}`.
    pub points: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgorithmTrace {
    pub initial: SetPartition,
    pub eps: EpsilonMatrix,
    pub category: Category,
    pub n: usize,
    pub steps: Vec<TraceStep>,
}

impl AlgorithmTrace {
    /// `π_m` for `m = 0..=steps.len()`.
    pub fn partitions(&self) -> Vec<&SetPartition> {
        std::iter::once(&self.initial)
            .chain(self.steps.iter().map(|s| &s.partition))
            .collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("trace serializes")
    }
}

/// One factor `id^{⊗left} ⊗ map ⊗ id^{⊗right}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factor {
    pub left: usize,
    pub map: TensorMap,
    pub right: usize,
}

impl Factor {
    fn apply(&self, v: &SparseVec) -> SparseVec {
        let width = self.map.k_in();
        let mut out = SparseVec::new();
        for (key, c) in v {
            let mid = &key[self.left..self.left + width];
            let Some(col) = self.map.column(mid) else {
                continue;
            };
            for (o, d) in col {
                let new: Vec<usize> = key[..self.left]
                    .iter()
                    .chain(o)
                    .chain(&key[self.left + width..])
                    .copied()
                    .collect();
                let entry = out.entry(new).or_insert_with(Rational::zero);
                *entry += c * d;
            }
        }
        out.retain(|_, c| !c.is_zero());
        out
    }

    pub fn embedded(&self) -> TensorMap {
        self.map.embed(self.left, self.right)
    }
}

/// `M_π = M_t ∘ … ∘ M_0`, kept as its factor list and evaluated lazily.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MpiOperator {
    pub n: usize,
    pub k: usize,
    pub factors: Vec<Factor>,
}

impl MpiOperator {
    /// `M_π(e_i)` for a 0-based basis index.
    pub fn eval0(&self, i: &[usize]) -> Rational {
        let mut v = SparseVec::from([(i.to_vec(), Rational::one())]);
        for f in &self.factors {
            if v.is_empty() {
                break;
            }
            v = f.apply(&v);
        }
        v.remove(&Vec::new()).unwrap_or_else(Rational::zero)
    }

    /// `M_π(e_i)` for a 1-based multi-index.
    pub fn eval(&self, i: &MultiIndex) -> Rational {
        let idx: Vec<usize> = i.values().iter().map(|v| v - 1).collect();
        self.eval0(&idx)
    }

    /// The full map `(ℂⁿ)^{⊗k} → ℂ`, when `n^k` is at most
    /// [`MATERIALIZE_LIMIT`].
    pub fn materialize(&self) -> Option<TensorMap> {
        let size = self.n.checked_pow(self.k as u32)?;
        if size > MATERIALIZE_LIMIT {
            return None;
        }
        let entries = all_indices(self.n, self.k).filter_map(|i| {
            let c = self.eval(&i);
            (!c.is_zero()).then(|| (i.values().to_vec(), Vec::new(), c))
        });
        Some(TensorMap::from_entries(self.n, self.k, 0, entries).expect("indices in range"))
    }

    /// The same map obtained by composing the embedded factor maps as
    /// whole tensor maps.
    pub fn compose_factors(&self) -> Result<TensorMap> {
        self.factors
            .iter()
            .try_fold(TensorMap::identity(self.n, self.k), |acc, f| {
                f.embedded().compose(&acc)
            })
    }
}

fn check_n(eps: &EpsilonMatrix, n: usize) -> Result<EpsilonMatrix> {
    if n == 0 || n > eps.n() {
        return Err(Error::DimensionMismatch(format!(
            "base dimension {n} must lie in 1..={}",
            eps.n()
        )));
    }
    eps.restrict(n)
}

fn not_in(pi: &SetPartition, cat: Category) -> Error {
    Error::NotInCategory {
        partition: pi.to_string(),
        category: cat.to_string(),
    }
}

/// `k² · (crossing quadruples of π) + k`.
pub fn step_cap(pi: &SetPartition) -> usize {
    let k = pi.k();
    k * k * pi.crossing_count() + k
}

/// Runs the reduction on `pi`. The base dimension `n` may be smaller than
/// `eps.n()`, in which case the leading `n×n` block of `ε` is used.
pub fn run_algorithm(
    pi: &SetPartition,
    eps: &EpsilonMatrix,
    cat: Category,
    n: usize,
) -> Result<(AlgorithmTrace, MpiOperator)> {
    if !cat.contains(pi) {
        return Err(not_in(pi, cat));
    }
    let eps_n = check_n(eps, n)?;
    let cross1 = r_map(RKind::Cross1, &eps_n);
    let cap = step_cap(pi);
    let mut steps = Vec::new();
    let mut factors = Vec::new();
    let mut cur = pi.clone();
    while cur.k() > 0 {
        if steps.len() >= cap {
            return Err(Error::StepCapExceeded {
                cap,
                partition: pi.to_string(),
            });
        }
        let km = cur.k();
        let (kind, next, factor, last) = if let Some(sub) = find_noncrossing_subpartition(&cur) {
            let map = t_pi(&TwoRowPartition::lower_only(sub.sigma.clone()), n).adjoint();
            let factor = Factor {
                left: sub.start - 1,
                map,
                right: km - sub.end,
            };
            let next = cur.remove_interval(sub.start, sub.end);
            let last = sub.start == 1 && sub.end == km;
            (
                StepKind::Case1 {
                    sigma: sub.sigma,
                    start: sub.start,
                    end: sub.end,
                },
                next,
                factor,
                last,
            )
        } else if let Some(l) = find_case2_index(&cur) {
            let factor = Factor {
                left: l - 1,
                map: cross1.clone(),
                right: km - l - 1,
            };
            (StepKind::Case2 { l }, cur.swap_adjacent(l), factor, false)
        } else {
            return Err(Error::NoMove(cur.to_string()));
        };
        if !cat.contains(&next) {
            return Err(not_in(&next, cat));
        }
        steps.push(TraceStep {
            kind,
            points: next.k(),
            partition: next.clone(),
        });
        factors.push(factor);
        cur = next;
        if last {
            break;
        }
    }
    let trace = AlgorithmTrace {
        initial: pi.clone(),
        eps: eps.clone(),
        category: cat,
        n,
        steps,
    };
    Ok((
        trace,
        MpiOperator {
            n,
            k: pi.k(),
            factors,
        },
    ))
}

/// A basis vector on which `M_π` and the indicator disagree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleCounterexample {
    pub index: MultiIndex,
    pub value: Rational,
    pub indicator: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleReport {
    pub checked: usize,
    pub counterexample: Option<OracleCounterexample>,
}

impl OracleReport {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

fn compare_on(
    op: &MpiOperator,
    pi: &SetPartition,
    eps_n: &EpsilonMatrix,
    cat: Category,
    i: &[usize],
) -> Result<Option<OracleCounterexample>> {
    let index = MultiIndex::new(op.n, i.iter().map(|v| v + 1).collect())?;
    let value = op.eval0(i);
    let indicator = nc_indicator(pi, &index, eps_n, cat)?;
    let expected = if indicator {
        Rational::one()
    } else {
        Rational::zero()
    };
    Ok((value != expected).then_some(OracleCounterexample {
        index,
        value,
        indicator,
    }))
}

/// Compares `M_π(e_i)` with `δ_{π ∈ NC_C^ε[i]}` on every basis vector.
pub fn verify_oracle(
    pi: &SetPartition,
    eps: &EpsilonMatrix,
    cat: Category,
    n: usize,
) -> Result<OracleReport> {
    let (_, op) = run_algorithm(pi, eps, cat, n)?;
    let eps_n = check_n(eps, n)?;
    let total = n
        .checked_pow(pi.k() as u32)
        .ok_or_else(|| Error::DimensionMismatch("basis too large for exhaustive check".into()))?;
    let k = pi.k();
    let found = (0..total)
        .into_par_iter()
        .map(|mut x| {
            let mut key = vec![0; k];
            for slot in key.iter_mut().rev() {
                *slot = x % n;
                x /= n;
            }
            compare_on(&op, pi, &eps_n, cat, &key)
        })
        .find_first(|r| !matches!(r, Ok(None)));
    Ok(OracleReport {
        checked: total,
        counterexample: found.transpose()?.flatten(),
    })
}

/// Compares `M_π` with the indicator on the given 0-based basis indices.
pub fn verify_oracle_on(
    pi: &SetPartition,
    eps: &EpsilonMatrix,
    cat: Category,
    n: usize,
    indices: &[Vec<usize>],
) -> Result<OracleReport> {
    let (_, op) = run_algorithm(pi, eps, cat, n)?;
    let eps_n = check_n(eps, n)?;
    let found = indices
        .par_iter()
        .map(|i| compare_on(&op, pi, &eps_n, cat, i))
        .find_first(|r| !matches!(r, Ok(None)));
    Ok(OracleReport {
        checked: indices.len(),
        counterexample: found.transpose()?.flatten(),
    })
}

/// `count` pseudo-random 0-based basis indices for `pi`: even draws are
/// uniform, odd draws are constant on each block (so that `π ≤ ker i`).
pub fn sample_indices(pi: &SetPartition, n: usize, count: usize, seed: u64) -> Vec<Vec<usize>> {
    let mut rng = StdRng::seed_from_u64(seed);
    (0..count)
        .map(|s| {
            if s % 2 == 0 {
                (0..pi.k()).map(|_| rng.gen_range(0..n)).collect()
            } else {
                let values: Vec<usize> =
                    (0..pi.num_blocks()).map(|_| rng.gen_range(0..n)).collect();
                pi.labels().iter().map(|&b| values[b]).collect()
            }
        })
        .collect()
}

/// A step `m` and basis vector at which
/// `π_m ∈ NC_C^ε[i] ⇔ (M_m e_i ≠ 0 and π_{m+1} ∈ NC_C^ε[j])` fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StepCounterexample {
    pub step: usize,
    pub index: MultiIndex,
}

/// Checks the per-step equivalence along the trace, following each start
/// vector through the factors for as long as its image is nonzero.
pub fn check_steps(
    trace: &AlgorithmTrace,
    op: &MpiOperator,
    starts: &[Vec<usize>],
) -> Result<Option<StepCounterexample>> {
    let eps_n = check_n(&trace.eps, trace.n)?;
    let parts = trace.partitions();
    for start in starts {
        let mut cur = start.clone();
        for (m, factor) in op.factors.iter().enumerate() {
            let index = MultiIndex::new(op.n, cur.iter().map(|v| v + 1).collect())?;
            let before = nc_indicator(parts[m], &index, &eps_n, trace.category)?;
            let image = factor.apply(&SparseVec::from([(cur.clone(), Rational::one())]));
            let after = match image.keys().next() {
                Some(j) => {
                    let j1 = MultiIndex::new(op.n, j.iter().map(|v| v + 1).collect())?;
                    nc_indicator(parts[m + 1], &j1, &eps_n, trace.category)?
                }
                None => false,
            };
            if before != after || image.len() > 1 {
                return Ok(Some(StepCounterexample { step: m, index }));
            }
            match image.into_keys().next() {
                Some(j) => cur = j,
                None => break,
            }
        }
    }
    Ok(None)
}

/// A word on which the cumulant rewrite and the moment formula disagree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DefinettiCounterexample {
    pub index: MultiIndex,
    pub rewritten: Rational,
    pub moment: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DefinettiReport {
    pub words_checked: usize,
    pub counterexample: Option<DefinettiCounterexample>,
}

impl DefinettiReport {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }
}

/// For every word `j` of length at most `max_k`, checks
/// `Σ_{π ∈ C(k)} κ_π · M_π(e_j) = φ(x_{j(1)} ⋯ x_{j(k)})`, where the right
/// side is the category-restricted moment formula and `M_π` is evaluated
/// through the reduction.
pub fn definetti_identity_report(
    eps: &EpsilonMatrix,
    cat: Category,
    spec: &CumulantSpec,
    max_k: usize,
) -> Result<DefinettiReport> {
    if !spec.is_identically_distributed() {
        return Err(Error::NotIdenticallyDistributed);
    }
    let n = eps.n();
    let mut words_checked = 0;
    for k in 0..=max_k {
        let ops = enumerate_partitions(k, cat, false)
            .into_iter()
            .map(|pi| {
                let kappa = pi
                    .blocks()
                    .iter()
                    .fold(Rational::one(), |acc, b| acc * spec.kappa(1, b.len()));
                let (_, op) = run_algorithm(&pi, eps, cat, n)?;
                Ok((kappa, op))
            })
            .collect::<Result<Vec<_>>>()?;
        for j in all_indices(n, k) {
            words_checked += 1;
            let rewritten = ops
                .iter()
                .filter(|(kappa, _)| !kappa.is_zero())
                .fold(Rational::zero(), |acc, (kappa, op)| {
                    acc + kappa * op.eval(&j)
                });
            let moment = crate::cumulants::moment(&j, eps, spec, cat)?;
            if rewritten != moment {
                return Ok(DefinettiReport {
                    words_checked,
                    counterexample: Some(DefinettiCounterexample {
                        index: j,
                        rewritten,
                        moment,
                    }),
                });
            }
        }
    }
    Ok(DefinettiReport {
        words_checked,
        counterexample: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::eps::Preset;
    use crate::partitions::named;
    use crate::rational::int;

    fn p(s: &str) -> SetPartition {
        s.parse().unwrap()
    }

    fn sixteen_points() -> SetPartition {
        p("{1,7,15}{2,5}{3,4}{6,10,16}{8,9}{11,13}{12,14}")
    }

    #[test]
    fn single_pair() {
        let eps = Preset::Comm(3).build().unwrap();
        let (trace, op) = run_algorithm(&p("{1,2}"), &eps, Category::Pair, 3).unwrap();
        assert_eq!(trace.steps.len(), 1);
        assert!(matches!(
            trace.steps[0].kind,
            StepKind::Case1 {
                start: 1,
                end: 2,
                ..
            }
        ));
        assert_eq!(op.materialize().unwrap(), t_pi(&named::paar(), 3).adjoint());
    }

    #[test]
    fn crossing_pairs() {
        let eps = EpsilonMatrix::new(2, &[vec![0, 1], vec![1, 0]]).unwrap();
        let (trace, op) = run_algorithm(&p("{1,3}{2,4}"), &eps, Category::Pair, 2).unwrap();
        assert_eq!(trace.steps[0].kind, StepKind::Case2 { l: 2 });
        assert_eq!(trace.steps[0].partition, p("{1,2}{3,4}"));
        for a in 1..=2 {
            for b in 1..=2 {
                let i = MultiIndex::new(2, vec![a, b, a, b]).unwrap();
                let expect = if a != b { int(1) } else { int(0) };
                assert_eq!(op.eval(&i), expect, "{i}");
            }
        }
        let free = Preset::Free(2).build().unwrap();
        let (_, op) = run_algorithm(&p("{1,3}{2,4}"), &free, Category::Pair, 2).unwrap();
        assert!(op.materialize().unwrap().is_zero());
        assert!(verify_oracle(&p("{1,3}{2,4}"), &free, Category::Pair, 2)
            .unwrap()
            .passed());
    }

    #[test]
    fn lazy_and_composed_agree() {
        let eps = Preset::Cycle5.build().unwrap();
        for pi in enumerate_partitions(5, Category::All, false) {
            let (_, op) = run_algorithm(&pi, &eps, Category::All, 3).unwrap();
            assert_eq!(
                op.materialize().unwrap(),
                op.compose_factors().unwrap(),
                "{pi}"
            );
        }
    }

    #[test]
    fn empty_partition_is_the_scalar_one() {
        let eps = Preset::Free(2).build().unwrap();
        let (trace, op) = run_algorithm(&SetPartition::empty(), &eps, Category::Pair, 2).unwrap();
        assert!(trace.steps.is_empty());
        assert_eq!(op.eval(&MultiIndex::new(2, vec![]).unwrap()), int(1));
    }

    #[test]
    fn category_is_checked() {
        let eps = Preset::Free(2).build().unwrap();
        assert!(matches!(
            run_algorithm(&p("{1,2,3}"), &eps, Category::Pair, 2),
            Err(Error::NotInCategory { .. })
        ));
        assert!(run_algorithm(&p("{1,2}"), &eps, Category::Pair, 3).is_err());
    }

    #[test]
    fn sixteen_point_trace() {
        let eps = Preset::Comm(16).build().unwrap();
        let pi = sixteen_points();
        let (trace, op) = run_algorithm(&pi, &eps, Category::All, 2).unwrap();
        assert!(trace.steps.len() <= step_cap(&pi));
        match &trace.steps[0].kind {
            StepKind::Case1 { sigma, start, end } => {
                assert_eq!((*start, *end), (2, 5));
                assert_eq!(*sigma, p("{1,4}{2,3}"));
            }
            other => panic!("{other:?}"),
        }
        assert!(trace
            .steps
            .iter()
            .any(|s| matches!(s.kind, StepKind::Case2 { .. })));
        assert_eq!(trace.steps.last().unwrap().points, 0);
        let pts: Vec<usize> = trace.steps.iter().map(|s| s.points).collect();
        assert!(pts.windows(2).all(|w| w[0] >= w[1]));
        let samples = sample_indices(&pi, 2, 200, 7);
        let report = verify_oracle_on(&pi, &eps, Category::All, 2, &samples).unwrap();
        assert!(report.passed(), "{report:?}");
        assert_eq!(check_steps(&trace, &op, &samples).unwrap(), None);
    }

    #[test]
    fn spec_grids() {
        for preset in [Preset::Comm(3), Preset::Free(3), Preset::Cycle5] {
            let eps = preset.build().unwrap();
            for k in 0..=6 {
                for pi in enumerate_partitions(k, Category::Pair, false) {
                    let r = verify_oracle(&pi, &eps, Category::Pair, 3).unwrap();
                    assert!(r.passed(), "{preset} {pi}: {r:?}");
                }
            }
        }
        let exd = Preset::PairsIndep.build().unwrap();
        for k in 0..=5 {
            for pi in enumerate_partitions(k, Category::All, false) {
                let r = verify_oracle(&pi, &exd, Category::All, 4).unwrap();
                assert!(r.passed(), "{pi}: {r:?}");
            }
        }
    }

    #[test]
    fn steps_are_equivalences() {
        let eps = Preset::PairsFree.build().unwrap();
        for pi in enumerate_partitions(5, Category::All, false) {
            let (trace, op) = run_algorithm(&pi, &eps, Category::All, 4).unwrap();
            let starts: Vec<Vec<usize>> = all_indices(4, 5)
                .map(|i| i.values().iter().map(|v| v - 1).collect())
                .collect();
            assert_eq!(check_steps(&trace, &op, &starts).unwrap(), None, "{pi}");
        }
    }

    #[test]
    fn definetti_examples() {
        let exd = Preset::PairsIndep.build().unwrap();
        let r = definetti_identity_report(&exd, Category::Pair, &CumulantSpec::semicircle(4), 4)
            .unwrap();
        assert!(r.passed(), "{r:?}");
        let free = Preset::Free(2).build().unwrap();
        let spec = CumulantSpec::identical(2, vec![int(1), int(1)]);
        assert!(definetti_identity_report(&free, Category::All, &spec, 4)
            .unwrap()
            .passed());
        let comm = Preset::Comm(3).build().unwrap();
        let even = CumulantSpec::identical(3, vec![int(0), int(1), int(0), int(2)]);
        assert!(definetti_identity_report(&comm, Category::Even, &even, 4)
            .unwrap()
            .passed());
    }

    #[test]
    fn trace_json() {
        let eps = EpsilonMatrix::new(2, &[vec![0, 1], vec![1, 0]]).unwrap();
        let (trace, _) = run_algorithm(&p("{1,3}{2,4}"), &eps, Category::Pair, 2).unwrap();
        let v: serde_json::Value = serde_json::from_str(&trace.to_json()).unwrap();
        assert_eq!(v["steps"][0]["case"], "Case2");
        assert_eq!(v["steps"][0]["l"], 2);
        assert_eq!(
            v["steps"][0]["partition"],
            serde_json::json!([[1, 2], [3, 4]])
        );
        assert_eq!(v["category"], "pair");
        let back: AlgorithmTrace = serde_json::from_str(&trace.to_json()).unwrap();
        assert_eq!(back, trace);
    }
}
