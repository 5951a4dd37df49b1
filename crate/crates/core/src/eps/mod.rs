//! Commutation patterns, multi-indices and permutations.
//!
//! Indices are 1-based on every public surface: `eps.get(1, 2)` is the entry
//! in the first row and second column, a [`MultiIndex`] holds values in
//! `1..=n`, a [`Permutation`] maps `1..=n` to itself.

mod index;
mod perm;
mod preset;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use index::{all_indices, MultiIndex};
pub use perm::Permutation;
pub use preset::Preset;

/// A validated commutation pattern: symmetric, 0/1, zero diagonal.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Vec<u8>>", into = "Vec<Vec<u8>>")]
pub struct EpsilonMatrix {
    n: usize,
    bits: Vec<u8>,
}

impl EpsilonMatrix {
    /// Validates an `n × n` array. Shape, bit range, diagonal and symmetry
    /// are checked in that order, each with its own error.
    pub fn new(n: usize, entries: &[Vec<u8>]) -> Result<Self> {
        if n == 0 {
            return Err(Error::Shape("matrix size must be positive".into()));
        }
        if entries.len() != n {
            return Err(Error::Shape(format!(
                "expected {n} rows, got {}",
                entries.len()
            )));
        }
        for (r, row) in entries.iter().enumerate() {
            if row.len() != n {
                return Err(Error::Shape(format!(
                    "row {} has {} entries, expected {n}",
                    r + 1,
                    row.len()
                )));
            }
        }
        for (r, row) in entries.iter().enumerate() {
            for (c, &v) in row.iter().enumerate() {
                if v > 1 {
                    return Err(Error::NotBit {
                        row: r + 1,
                        col: c + 1,
                        value: v as i64,
                    });
                }
            }
        }
        for (r, row) in entries.iter().enumerate() {
            if row[r] != 0 {
                return Err(Error::NonzeroDiagonal { index: r + 1 });
            }
        }
        for r in 0..n {
            for c in r + 1..n {
                if entries[r][c] != entries[c][r] {
                    return Err(Error::NotSymmetric {
                        row: r + 1,
                        col: c + 1,
                    });
                }
            }
        }
        Ok(EpsilonMatrix {
            n,
            bits: entries.iter().flatten().copied().collect(),
        })
    }

    /// Builds from any predicate on 1-based index pairs; the predicate is
    /// only consulted for `i < j` and mirrored.
    pub fn from_fn(n: usize, f: impl Fn(usize, usize) -> bool) -> Result<Self> {
        let mut rows = vec![vec![0u8; n]; n];
        for i in 1..=n {
            for j in i + 1..=n {
                let v = f(i, j) as u8;
                rows[i - 1][j - 1] = v;
                rows[j - 1][i - 1] = v;
            }
        }
        Self::new(n, &rows)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Entry `ε_ij` for 1-based `i`, `j`.
    pub fn get(&self, i: usize, j: usize) -> bool {
        assert!(
            (1..=self.n).contains(&i) && (1..=self.n).contains(&j),
            "epsilon index ({i},{j}) outside 1..={}",
            self.n
        );
        self.bits[(i - 1) * self.n + (j - 1)] == 1
    }

    /// Entry for 0-based indices; used in hot loops.
    #[inline]
    pub(crate) fn get0(&self, i: usize, j: usize) -> bool {
        self.bits[i * self.n + j] == 1
    }

    pub fn rows(&self) -> Vec<Vec<u8>> {
        self.bits.chunks(self.n).map(<[u8]>::to_vec).collect()
    }

    pub fn degree(&self, i: usize) -> usize {
        (1..=self.n).filter(|&j| self.get(i, j)).count()
    }

    /// All off-diagonal entries equal to 1.
    pub fn is_comm(&self) -> bool {
        (1..=self.n).all(|i| (1..=self.n).all(|j| i == j || self.get(i, j)))
    }

    /// All entries zero.
    pub fn is_free(&self) -> bool {
        self.bits.iter().all(|&b| b == 0)
    }

    /// Leading principal `m × m` submatrix, i.e. the pattern of the first `m`
    /// variables.
    pub fn restrict(&self, m: usize) -> Result<Self> {
        if m == 0 || m > self.n {
            return Err(Error::DimensionMismatch(format!(
                "cannot restrict a {0}x{0} matrix to size {m}",
                self.n
            )));
        }
        Self::from_fn(m, |i, j| self.get(i, j))
    }

    /// Parses the text format: a first line holding `n`, then `n` lines of
    /// `n` whitespace-separated `0`/`1` tokens. Errors carry 1-based line and
    /// column positions.
    pub fn parse_text(text: &str) -> Result<Self> {
        let perr = |line: usize, column: usize, message: String| Error::Parse {
            line,
            column,
            message,
        };
        let mut lines = text
            .lines()
            .enumerate()
            .filter(|(_, l)| !l.trim().is_empty());
        let (hline, header) = lines
            .next()
            .ok_or_else(|| perr(1, 1, "missing size line".into()))?;
        let hcol = header.len() - header.trim_start().len() + 1;
        let n: usize = header.trim().parse().map_err(|_| {
            perr(
                hline + 1,
                hcol,
                format!("expected a size, found `{}`", header.trim()),
            )
        })?;
        if n == 0 {
            return Err(perr(hline + 1, hcol, "size must be positive".into()));
        }
        let mut rows = Vec::with_capacity(n);
        for r in 0..n {
            let (lno, line) = lines
                .next()
                .ok_or_else(|| perr(hline + 2 + r, 1, format!("expected {n} rows, found {r}")))?;
            let mut row = Vec::with_capacity(n);
            for (col, tok) in tokens(line) {
                let v = match tok {
                    "0" => 0,
                    "1" => 1,
                    _ => {
                        return Err(perr(
                            lno + 1,
                            col,
                            format!("expected 0 or 1, found `{tok}`"),
                        ))
                    }
                };
                if row.len() == n {
                    return Err(perr(lno + 1, col, format!("more than {n} entries in row")));
                }
                row.push(v);
            }
            if row.len() < n {
                return Err(perr(
                    lno + 1,
                    line.len() + 1,
                    format!("row has {} entries, expected {n}", row.len()),
                ));
            }
            rows.push(row);
        }
        if let Some((lno, _)) = lines.next() {
            return Err(perr(lno + 1, 1, "trailing content after matrix".into()));
        }
        Self::new(n, &rows)
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("{}\n", self.n);
        for row in self.rows() {
            let cells: Vec<String> = row.iter().map(u8::to_string).collect();
            s.push_str(&cells.join(" "));
            s.push('\n');
        }
        s
    }
}

fn tokens(line: &str) -> impl Iterator<Item = (usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (pos, ch) in line.char_indices() {
        match (ch.is_whitespace(), start) {
            (false, None) => start = Some(pos),
            (true, Some(s)) => {
                out.push((s + 1, &line[s..pos]));
                start = None;
            }
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((s + 1, &line[s..]));
    }
    out.into_iter()
}

impl fmt::Debug for EpsilonMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "EpsilonMatrix{:?}", self.rows())
    }
}

impl fmt::Display for EpsilonMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl FromStr for EpsilonMatrix {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse_text(s)
    }
}

impl TryFrom<Vec<Vec<u8>>> for EpsilonMatrix {
    type Error = Error;

    fn try_from(rows: Vec<Vec<u8>>) -> Result<Self> {
        Self::new(rows.len(), &rows)
    }
}

impl From<EpsilonMatrix> for Vec<Vec<u8>> {
    fn from(e: EpsilonMatrix) -> Self {
        e.rows()
    }
}
