//! Exact sparse linear maps `(ℂⁿ)^{⊗k} → (ℂⁿ)^{⊗l}` with rational
//! coefficients, the partition maps `T_π`, the ε-dependent maps `R` and `S`,
//! and suites of identities between them.

mod builders;
mod suites;

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{self, Rational};

pub use builders::{r_map, s_box, t_pi, RKind, SKind};
pub use suites::{lemma93_suite, loop_count, section94_suite, IdentityCheck, SuiteReport};

/// Basis multi-index, 0-based internally.
pub(crate) type Key = Vec<usize>;

/// A sparse vector in `(ℂⁿ)^{⊗k}`: basis multi-index (0-based) to coefficient.
pub type SparseVec = BTreeMap<Vec<usize>, Rational>;

/// A linear map stored column by column; no zero coefficient and no empty
/// column is ever kept, so structural equality is map equality.
#[derive(Clone, PartialEq, Eq)]
pub struct TensorMap {
    n: usize,
    k_in: usize,
    k_out: usize,
    cols: BTreeMap<Key, SparseVec>,
}

/// First coefficient at which two maps disagree, 1-based indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Difference {
    pub input: Vec<usize>,
    pub output: Vec<usize>,
    pub left: Rational,
    pub right: Rational,
}

impl fmt::Display for Difference {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "in {:?} out {:?}: {} vs {}",
            self.input,
            self.output,
            rational::format(&self.left),
            rational::format(&self.right)
        )
    }
}

fn add_into(v: &mut SparseVec, key: Key, c: Rational) {
    if c.is_zero() {
        return;
    }
    match v.entry(key) {
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut e) => {
            *e.get_mut() += c;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

fn one_based(key: &[usize]) -> Vec<usize> {
    key.iter().map(|&x| x + 1).collect()
}

/// All 0-based multi-indices of length `k` over `n` letters, lexicographic.
pub(crate) fn basis(n: usize, k: usize) -> impl Iterator<Item = Key> {
    let total = n.checked_pow(k as u32).expect("basis size overflows");
    (0..total).map(move |mut x| {
        let mut key = vec![0; k];
        for slot in key.iter_mut().rev() {
            *slot = x % n;
            x /= n;
        }
        key
    })
}

impl TensorMap {
    pub fn zero(n: usize, k_in: usize, k_out: usize) -> Self {
        TensorMap {
            n,
            k_in,
            k_out,
            cols: BTreeMap::new(),
        }
    }

    /// Identity on `(ℂⁿ)^{⊗k}`.
    pub fn identity(n: usize, k: usize) -> Self {
        let cols = basis(n, k)
            .map(|key| (key.clone(), SparseVec::from([(key, Rational::one())])))
            .collect();
        TensorMap {
            n,
            k_in: k,
            k_out: k,
            cols,
        }
    }

    /// Builds a map from `(input, output, coefficient)` triples with 1-based
    /// indices; repeated pairs are summed.
    pub fn from_entries(
        n: usize,
        k_in: usize,
        k_out: usize,
        entries: impl IntoIterator<Item = (Vec<usize>, Vec<usize>, Rational)>,
    ) -> Result<Self> {
        let mut m = TensorMap::zero(n, k_in, k_out);
        for (input, output, c) in entries {
            let check = |v: &[usize], k: usize| {
                if v.len() != k {
                    return Err(Error::DimensionMismatch(format!(
                        "basis index {v:?} should have length {k}"
                    )));
                }
                match v.iter().find(|&&x| x == 0 || x > n) {
                    Some(&x) => Err(Error::IndexOutOfRange { value: x, n }),
                    None => Ok(()),
                }
            };
            check(&input, k_in)?;
            check(&output, k_out)?;
            let input = input.iter().map(|x| x - 1).collect();
            let output = output.iter().map(|x| x - 1).collect();
            m.add_entry(input, output, c);
        }
        Ok(m)
    }

    /// Builds a map column by column from a function of the 0-based input.
    pub(crate) fn from_columns(
        n: usize,
        k_in: usize,
        k_out: usize,
        f: impl Fn(&[usize]) -> SparseVec,
    ) -> Self {
        let cols = basis(n, k_in)
            .filter_map(|key| {
                let col = f(&key);
                (!col.is_empty()).then_some((key, col))
            })
            .collect();
        TensorMap {
            n,
            k_in,
            k_out,
            cols,
        }
    }

    pub(crate) fn add_entry(&mut self, input: Key, output: Key, c: Rational) {
        let col = self.cols.entry(input.clone()).or_default();
        add_into(col, output, c);
        if col.is_empty() {
            self.cols.remove(&input);
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k_in(&self) -> usize {
        self.k_in
    }

    pub fn k_out(&self) -> usize {
        self.k_out
    }

    /// Number of stored (nonzero) coefficients.
    pub fn nnz(&self) -> usize {
        self.cols.values().map(BTreeMap::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.cols.is_empty()
    }

    /// Coefficient of `e_output` in the image of `e_input` (1-based).
    pub fn get(&self, input: &[usize], output: &[usize]) -> Rational {
        let i: Key = input.iter().map(|x| x - 1).collect();
        let o: Key = output.iter().map(|x| x - 1).collect();
        self.cols
            .get(&i)
            .and_then(|c| c.get(&o))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// Image of a basis vector as `(output, coefficient)` pairs, 1-based.
    pub fn apply_basis(&self, input: &[usize]) -> Vec<(Vec<usize>, Rational)> {
        let i: Key = input.iter().map(|x| x - 1).collect();
        self.cols
            .get(&i)
            .map(|c| c.iter().map(|(k, v)| (one_based(k), v.clone())).collect())
            .unwrap_or_default()
    }

    pub(crate) fn column(&self, input: &[usize]) -> Option<&SparseVec> {
        self.cols.get(input)
    }

    /// Image of a sparse vector (0-based keys).
    pub fn apply(&self, v: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (key, c) in v {
            if let Some(col) = self.cols.get(key) {
                for (o, d) in col {
                    add_into(&mut out, o.clone(), c * d);
                }
            }
        }
        out
    }

    /// All stored coefficients as 1-based `(input, output, c)`, sorted by
    /// `(output, input)`.
    pub fn entries(&self) -> Vec<(Vec<usize>, Vec<usize>, Rational)> {
        let mut v: Vec<_> = self
            .cols
            .iter()
            .flat_map(|(i, col)| {
                col.iter()
                    .map(move |(o, c)| (one_based(i), one_based(o), c.clone()))
            })
            .collect();
        v.sort_by(|a, b| (&a.1, &a.0).cmp(&(&b.1, &b.0)));
        v
    }

    fn same_shape(&self, other: &TensorMap, what: &str) -> Result<()> {
        if self.n != other.n || self.k_in != other.k_in || self.k_out != other.k_out {
            return Err(Error::DimensionMismatch(format!(
                "{what}: maps of shape (n={}, {}->{}) and (n={}, {}->{})",
                self.n, self.k_in, self.k_out, other.n, other.k_in, other.k_out
            )));
        }
        Ok(())
    }

    /// `self ∘ g`.
    pub fn compose(&self, g: &TensorMap) -> Result<TensorMap> {
        if self.n != g.n || g.k_out != self.k_in {
            return Err(Error::DimensionMismatch(format!(
                "compose: (n={}, {}->{}) after (n={}, {}->{})",
                self.n, self.k_in, self.k_out, g.n, g.k_in, g.k_out
            )));
        }
        let cols = g
            .cols
            .iter()
            .filter_map(|(i, col)| {
                let image = self.apply(col);
                (!image.is_empty()).then(|| (i.clone(), image))
            })
            .collect();
        Ok(TensorMap {
            n: self.n,
            k_in: g.k_in,
            k_out: self.k_out,
            cols,
        })
    }

    /// `self ⊗ g`: the legs of `self` come first.
    pub fn tensor(&self, g: &TensorMap) -> Result<TensorMap> {
        if self.n != g.n {
            return Err(Error::DimensionMismatch(format!(
                "tensor: base dimensions {} and {}",
                self.n, g.n
            )));
        }
        let mut cols = BTreeMap::new();
        for (i1, c1) in &self.cols {
            for (i2, c2) in &g.cols {
                let mut col = SparseVec::new();
                for (o1, a) in c1 {
                    for (o2, b) in c2 {
                        let key: Key = o1.iter().chain(o2).copied().collect();
                        col.insert(key, a * b);
                    }
                }
                let key: Key = i1.iter().chain(i2).copied().collect();
                cols.insert(key, col);
            }
        }
        Ok(TensorMap {
            n: self.n,
            k_in: self.k_in + g.k_in,
            k_out: self.k_out + g.k_out,
            cols,
        })
    }

    /// `id^{⊗left} ⊗ self ⊗ id^{⊗right}`.
    pub fn embed(&self, left: usize, right: usize) -> TensorMap {
        let l = TensorMap::identity(self.n, left);
        let r = TensorMap::identity(self.n, right);
        l.tensor(self)
            .and_then(|m| m.tensor(&r))
            .expect("same base dimension")
    }

    /// Transpose of the coefficient table (all coefficients are real).
    pub fn adjoint(&self) -> TensorMap {
        let mut out = TensorMap::zero(self.n, self.k_out, self.k_in);
        for (i, col) in &self.cols {
            for (o, c) in col {
                out.cols
                    .entry(o.clone())
                    .or_default()
                    .insert(i.clone(), c.clone());
            }
        }
        out
    }

    pub fn add(&self, g: &TensorMap) -> Result<TensorMap> {
        self.same_shape(g, "add")?;
        let mut out = self.clone();
        for (i, col) in &g.cols {
            for (o, c) in col {
                out.add_entry(i.clone(), o.clone(), c.clone());
            }
        }
        Ok(out)
    }

    pub fn sub(&self, g: &TensorMap) -> Result<TensorMap> {
        self.add(&g.scale(&-Rational::one()))
    }

    pub fn scale(&self, c: &Rational) -> TensorMap {
        if c.is_zero() {
            return TensorMap::zero(self.n, self.k_in, self.k_out);
        }
        let mut out = self.clone();
        for col in out.cols.values_mut() {
            for v in col.values_mut() {
                *v *= c;
            }
        }
        out
    }

    /// The first coefficient, in `(input, output)` order, where the maps
    /// differ; `None` when equal.
    pub fn first_difference(&self, other: &TensorMap) -> Result<Option<Difference>> {
        self.same_shape(other, "compare")?;
        let diff = self.sub(other)?;
        Ok(diff.cols.iter().next().map(|(i, col)| {
            let (o, _) = col.iter().next().expect("columns are nonempty");
            let at = |m: &TensorMap| {
                m.cols
                    .get(i)
                    .and_then(|c| c.get(o))
                    .cloned()
                    .unwrap_or_else(Rational::zero)
            };
            Difference {
                input: one_based(i),
                output: one_based(o),
                left: at(self),
                right: at(other),
            }
        }))
    }

    pub fn to_json(&self) -> String {
        let raw = MapJson {
            n: self.n,
            k_in: self.k_in,
            k_out: self.k_out,
            entries: self
                .entries()
                .into_iter()
                .map(|(input, output, c)| EntryJson {
                    input,
                    output,
                    c: rational::format(&c),
                })
                .collect(),
        };
        serde_json::to_string(&raw).expect("map serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let raw: MapJson = serde_json::from_str(text)?;
        let entries = raw
            .entries
            .into_iter()
            .map(|e| Ok((e.input, e.output, rational::parse(&e.c)?)))
            .collect::<Result<Vec<_>>>()?;
        TensorMap::from_entries(raw.n, raw.k_in, raw.k_out, entries)
    }
}

impl fmt::Debug for TensorMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "TensorMap(n={}, {} -> {})",
            self.n, self.k_in, self.k_out
        )?;
        for (i, o, c) in self.entries() {
            writeln!(f, "  {i:?} -> {o:?}: {}", rational::format(&c))?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct MapJson {
    n: usize,
    k_in: usize,
    k_out: usize,
    entries: Vec<EntryJson>,
}

#[derive(Serialize, Deserialize)]
struct EntryJson {
    #[serde(rename = "in")]
    input: Vec<usize>,
    #[serde(rename = "out")]
    output: Vec<usize>,
    c: String,
}
