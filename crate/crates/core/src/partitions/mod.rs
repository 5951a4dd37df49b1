//! Set partitions and the combinatorics built on them.
//!
//! A [`SetPartition`] of `{1..k}` is kept in canonical form: blocks ordered
//! by their minimum, elements inside a block ascending. Internally it also
//! stores the restricted growth string, which is what ordering and hashing
//! use.

mod enumerate;
mod noncrossing;
mod subpartition;
mod two_row;

use std::collections::HashMap;
use std::fmt;
use std::hash::Hash;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use enumerate::{enumerate_partitions, set_partitions};
pub use noncrossing::{is_eps_noncrossing, nc_eps_set, nc_indicator};
pub use subpartition::{
    blocks_cross, find_case2_index, find_noncrossing_subpartition, is_subpartition_interval,
    Subpartition,
};
pub use two_row::{named, TwoRowPartition};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<usize>>", into = "Vec<Vec<usize>>")]
pub struct SetPartition {
    // restricted growth string: labels[p] is the 0-based block of point p+1
    labels: Vec<usize>,
    blocks: Vec<Vec<usize>>,
}

impl SetPartition {
    /// Validates a block list over `{1..k}` and brings it to canonical form.
    pub fn new(k: usize, blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut owner = vec![usize::MAX; k];
        for (b, block) in blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(Error::InvalidPartition("empty block".into()));
            }
            for &p in block {
                if p == 0 || p > k {
                    return Err(Error::InvalidPartition(format!(
                        "point {p} outside 1..={k}"
                    )));
                }
                if owner[p - 1] != usize::MAX {
                    return Err(Error::InvalidPartition(format!("point {p} appears twice")));
                }
                owner[p - 1] = b;
            }
        }
        if let Some(p) = owner.iter().position(|&o| o == usize::MAX) {
            return Err(Error::InvalidPartition(format!(
                "point {} is not covered",
                p + 1
            )));
        }
        Ok(Self::from_labels(&owner))
    }

    /// Points `p`, `q` share a block iff `labels[p] == labels[q]`.
    pub fn from_labels<T: Eq + Hash>(labels: &[T]) -> Self {
        let mut seen: HashMap<&T, usize> = HashMap::new();
        let rgs: Vec<usize> = labels
            .iter()
            .map(|l| {
                let next = seen.len();
                *seen.entry(l).or_insert(next)
            })
            .collect();
        Self::from_rgs(rgs)
    }

    fn from_rgs(labels: Vec<usize>) -> Self {
        let count = labels.iter().max().map_or(0, |m| m + 1);
        let mut blocks = vec![Vec::new(); count];
        for (p, &b) in labels.iter().enumerate() {
            blocks[b].push(p + 1);
        }
        SetPartition { labels, blocks }
    }

    pub fn empty() -> Self {
        SetPartition {
            labels: Vec::new(),
            blocks: Vec::new(),
        }
    }

    /// The single-block partition `{1..k}`.
    pub fn one_block(k: usize) -> Self {
        Self::from_rgs(vec![0; k])
    }

    pub fn k(&self) -> usize {
        self.labels.len()
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    /// Restricted growth string (0-based block number of each point).
    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    /// 0-based number of the block containing the 1-based `point`.
    pub fn block_of(&self, point: usize) -> usize {
        self.labels[point - 1]
    }

    pub fn same_block(&self, p: usize, q: usize) -> bool {
        self.labels[p - 1] == self.labels[q - 1]
    }

    /// Number of crossing quadruples `p1 < q1 < p2 < q2` with `p1, p2` in one
    /// block and `q1, q2` in a different one.
    pub fn crossing_count(&self) -> usize {
        let l = &self.labels;
        let k = l.len();
        let mut count = 0;
        for a in 0..k {
            for b in a + 1..k {
                if l[b] == l[a] {
                    continue;
                }
                for c in b + 1..k {
                    if l[c] != l[a] {
                        continue;
                    }
                    count += (c + 1..k).filter(|&d| l[d] == l[b]).count();
                }
            }
        }
        count
    }

    pub fn is_noncrossing(&self) -> bool {
        let b = &self.blocks;
        (0..b.len()).all(|x| (x + 1..b.len()).all(|y| !blocks_cross(&b[x], &b[y])))
    }

    /// `self ≤ other`: every block of `self` lies inside a block of `other`.
    pub fn is_refinement_of(&self, other: &SetPartition) -> Result<bool> {
        is_refinement(self, other)
    }

    /// The restriction to points `start..=end`, renumbered from 1.
    pub fn restrict(&self, start: usize, end: usize) -> SetPartition {
        Self::from_labels(&self.labels[start - 1..end])
    }

    /// Deletes points `start..=end` and renumbers the rest.
    pub fn remove_interval(&self, start: usize, end: usize) -> SetPartition {
        let rest: Vec<usize> = self.labels[..start - 1]
            .iter()
            .chain(&self.labels[end..])
            .copied()
            .collect();
        Self::from_labels(&rest)
    }

    /// Exchanges the legs sitting on points `l` and `l + 1`.
    pub fn swap_adjacent(&self, l: usize) -> SetPartition {
        let mut labels = self.labels.clone();
        labels.swap(l - 1, l);
        Self::from_labels(&labels)
    }

    /// Parses the text form `{1,3}{2,4}`. `{}` and the empty string denote
    /// the partition of zero points.
    pub fn parse_text(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "{}" {
            return Ok(Self::empty());
        }
        let perr = |column: usize, message: String| Error::Parse {
            line: 1,
            column,
            message,
        };
        let mut blocks = Vec::new();
        let mut chars = s.char_indices().peekable();
        while let Some((pos, ch)) = chars.next() {
            match ch {
                c if c.is_whitespace() => continue,
                '{' => {}
                other => return Err(perr(pos + 1, format!("expected `{{`, found `{other}`"))),
            }
            let close = s[pos..]
                .find('}')
                .map(|c| c + pos)
                .ok_or_else(|| perr(pos + 1, "unclosed block".into()))?;
            let body = &s[pos + 1..close];
            let block = body
                .split(',')
                .map(|t| {
                    t.trim()
                        .parse::<usize>()
                        .map_err(|_| perr(pos + 2, format!("bad point `{}`", t.trim())))
                })
                .collect::<Result<Vec<_>>>()?;
            blocks.push(block);
            while chars.peek().is_some_and(|&(p, _)| p <= close) {
                chars.next();
            }
        }
        let k = blocks.iter().flatten().copied().max().unwrap_or(0);
        Self::new(k, blocks)
    }
}

/// `pi ≤ sigma` in the refinement order.
pub fn is_refinement(pi: &SetPartition, sigma: &SetPartition) -> Result<bool> {
    if pi.k() != sigma.k() {
        return Err(Error::DimensionMismatch(format!(
            "refinement between partitions of {} and {} points",
            pi.k(),
            sigma.k()
        )));
    }
    Ok(pi
        .blocks
        .iter()
        .all(|b| b.iter().all(|&p| sigma.same_block(p, b[0]))))
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.blocks.is_empty() {
            return f.write_str("{}");
        }
        for b in &self.blocks {
            let parts: Vec<String> = b.iter().map(usize::to_string).collect();
            write!(f, "{{{}}}", parts.join(","))?;
        }
        Ok(())
    }
}

impl fmt::Debug for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SetPartition({self})")
    }
}

impl FromStr for SetPartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse_text(s)
    }
}

impl TryFrom<Vec<Vec<usize>>> for SetPartition {
    type Error = Error;

    fn try_from(blocks: Vec<Vec<usize>>) -> Result<Self> {
        let k = blocks.iter().flatten().copied().max().unwrap_or(0);
        Self::new(k, blocks)
    }
}

impl From<SetPartition> for Vec<Vec<usize>> {
    fn from(p: SetPartition) -> Self {
        p.blocks
    }
}

/// The four block-size categories.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Category {
    /// All partitions.
    All,
    /// Every block has exactly two points.
    Pair,
    /// Blocks of one or two points.
    OneTwo,
    /// Blocks of even size.
    Even,
}

impl Category {
    pub const ALL: [Category; 4] = [
        Category::All,
        Category::Pair,
        Category::OneTwo,
        Category::Even,
    ];

    pub fn contains(self, p: &SetPartition) -> bool {
        let sizes = p.blocks().iter().map(Vec::len);
        match self {
            Category::All => true,
            Category::Pair => sizes.into_iter().all(|s| s == 2),
            Category::OneTwo => sizes.into_iter().all(|s| s == 1 || s == 2),
            Category::Even => sizes.into_iter().all(|s| s % 2 == 0),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Category::All => "all",
            Category::Pair => "pair",
            Category::OneTwo => "onetwo",
            Category::Even => "even",
        }
    }
}

impl fmt::Display for Category {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.name())
    }
}

impl FromStr for Category {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "all" | "p" => Ok(Category::All),
            "pair" | "p2" => Ok(Category::Pair),
            "onetwo" | "p12" => Ok(Category::OneTwo),
            "even" | "peven" => Ok(Category::Even),
            other => Err(Error::Parse {
                line: 1,
                column: 1,
                message: format!("unknown category `{other}`"),
            }),
        }
    }
}
