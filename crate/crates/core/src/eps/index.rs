use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partitions::SetPartition;

use super::Permutation;

/// A word `(i(1), ..., i(k))` over the alphabet `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MultiIndex {
    n: usize,
    values: Vec<usize>,
}

impl MultiIndex {
    pub fn new(n: usize, values: Vec<usize>) -> Result<Self> {
        if n == 0 {
            return Err(Error::Shape("alphabet size must be positive".into()));
        }
        if let Some(&v) = values.iter().find(|&&v| v == 0 || v > n) {
            return Err(Error::IndexOutOfRange { value: v, n });
        }
        Ok(MultiIndex { n, values })
    }

    /// From 0-based letters; the caller guarantees they are below `n`.
    pub(crate) fn from_zero_based(n: usize, letters: &[usize]) -> Self {
        debug_assert!(letters.iter().all(|&v| v < n));
        MultiIndex {
            n,
            values: letters.iter().map(|v| v + 1).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    pub(crate) fn zero_based(&self) -> Vec<usize> {
        self.values.iter().map(|v| v - 1).collect()
    }

    /// Kernel: positions `p`, `q` share a block iff `i(p) = i(q)`.
    pub fn ker(&self) -> SetPartition {
        SetPartition::from_labels(&self.values)
    }

    /// `σ ∘ i`, entrywise.
    pub fn relabel(&self, sigma: &Permutation) -> Result<Self> {
        if sigma.n() != self.n {
            return Err(Error::DimensionMismatch(format!(
                "permutation on {} letters applied to an index over {}",
                sigma.n(),
                self.n
            )));
        }
        Ok(MultiIndex {
            n: self.n,
            values: self.values.iter().map(|&v| sigma.apply(v)).collect(),
        })
    }

    /// Parses `"1,2,1,2"`; the empty string is the empty word.
    pub fn parse_csv(n: usize, s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Self::new(n, Vec::new());
        }
        let values = s
            .split(',')
            .enumerate()
            .map(|(pos, t)| {
                t.trim().parse::<usize>().map_err(|_| Error::Parse {
                    line: 1,
                    column: pos + 1,
                    message: format!("expected a positive integer, found `{}`", t.trim()),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(n, values)
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.values.iter().map(usize::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Every multi-index of length `k` over `1..=n`, in lexicographic order.
pub fn all_indices(n: usize, k: usize) -> impl Iterator<Item = MultiIndex> {
    let total = (n as u128)
        .checked_pow(k as u32)
        .expect("index space overflows");
    let mut cur = vec![0usize; k];
    let mut emitted: u128 = 0;
    std::iter::from_fn(move || {
        if emitted == total {
            return None;
        }
        let out = MultiIndex::from_zero_based(n, &cur);
        emitted += 1;
        for slot in cur.iter_mut().rev() {
            *slot += 1;
            if *slot < n {
                break;
            }
            *slot = 0;
        }
        Some(out)
    })
}
