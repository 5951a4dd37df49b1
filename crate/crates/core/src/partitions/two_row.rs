use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

use super::SetPartition;

/// A partition of `k` upper and `l` lower points. Points `1..=k` are the
/// upper row left to right, `k+1..=k+l` the lower row left to right.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TwoRowPartition {
    upper: usize,
    lower: usize,
    underlying: SetPartition,
}

impl TwoRowPartition {
    pub fn new(upper: usize, lower: usize, underlying: SetPartition) -> Result<Self> {
        if underlying.k() != upper + lower {
            return Err(Error::DimensionMismatch(format!(
                "{upper}+{lower} points declared, partition has {}",
                underlying.k()
            )));
        }
        Ok(TwoRowPartition {
            upper,
            lower,
            underlying,
        })
    }

    pub fn from_blocks(upper: usize, lower: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        Self::new(upper, lower, SetPartition::new(upper + lower, blocks)?)
    }

    /// A one-row partition read as `P(0, l)`.
    pub fn lower_only(pi: SetPartition) -> Self {
        TwoRowPartition {
            upper: 0,
            lower: pi.k(),
            underlying: pi,
        }
    }

    pub fn upper(&self) -> usize {
        self.upper
    }

    pub fn lower(&self) -> usize {
        self.lower
    }

    pub fn underlying(&self) -> &SetPartition {
        &self.underlying
    }

    /// Upside-down reflection: the rows trade places.
    pub fn reflect(&self) -> TwoRowPartition {
        let (k, l) = (self.upper, self.lower);
        let labels = self.underlying.labels();
        // new upper row = old lower row, new lower row = old upper row
        let relabelled: Vec<usize> = labels[k..].iter().chain(&labels[..k]).copied().collect();
        TwoRowPartition {
            upper: l,
            lower: k,
            underlying: SetPartition::from_labels(&relabelled),
        }
    }
}

impl fmt::Display for TwoRowPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|{}:{}", self.upper, self.lower, self.underlying)
    }
}

/// The small partitions used throughout the intertwiner calculus.
pub mod named {
    use super::TwoRowPartition;

    fn build(upper: usize, lower: usize, blocks: &[&[usize]]) -> TwoRowPartition {
        let blocks = blocks.iter().map(|b| b.to_vec()).collect();
        TwoRowPartition::from_blocks(upper, lower, blocks).expect("named partition is well formed")
    }

    /// One upper point joined to one lower point.
    pub fn id() -> TwoRowPartition {
        build(1, 1, &[&[1, 2]])
    }

    /// No upper points, one lower pair.
    pub fn paar() -> TwoRowPartition {
        build(0, 2, &[&[1, 2]])
    }

    /// One upper pair, no lower points.
    pub fn baar() -> TwoRowPartition {
        build(2, 0, &[&[1, 2]])
    }

    /// Two vertical strings.
    pub fn idid() -> TwoRowPartition {
        build(2, 2, &[&[1, 3], &[2, 4]])
    }

    /// Two crossing strings.
    pub fn cross() -> TwoRowPartition {
        build(2, 2, &[&[1, 4], &[2, 3]])
    }

    /// An upper pair over a lower pair.
    pub fn paarbaar() -> TwoRowPartition {
        build(2, 2, &[&[1, 2], &[3, 4]])
    }

    /// All four points in one block.
    pub fn vierpartrot() -> TwoRowPartition {
        build(2, 2, &[&[1, 2, 3, 4]])
    }

    /// Two upper points and one lower point in one block.
    pub fn dreipartrot() -> TwoRowPartition {
        build(2, 1, &[&[1, 2, 3]])
    }
}
