use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::eps::{EpsilonMatrix, Permutation};
use crate::error::{Error, Result};
use crate::rational::{self, Rational};

use super::matrix::Matrix;

/// A concrete candidate for the fundamental matrix: an `n×n` array of
/// `d×d` rational matrices `u_ij`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    n: usize,
    d: usize,
    blocks: Vec<Matrix>,
}

impl Representation {
    pub fn new(n: usize, blocks: Vec<Vec<Matrix>>) -> Result<Self> {
        if n == 0 || blocks.len() != n || blocks.iter().any(|r| r.len() != n) {
            return Err(Error::Shape(format!("expected an {n}x{n} array of blocks")));
        }
        let d = blocks[0][0].dim();
        if blocks.iter().flatten().any(|m| m.dim() != d) {
            return Err(Error::Shape("all blocks must share one dimension".into()));
        }
        Ok(Representation {
            n,
            d,
            blocks: blocks.into_iter().flatten().collect(),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn d(&self) -> usize {
        self.d
    }

    /// `u_ij`, 1-based.
    pub fn u(&self, i: usize, j: usize) -> &Matrix {
        &self.blocks[(i - 1) * self.n + (j - 1)]
    }

    pub fn to_json(&self) -> String {
        let raw = RepJson {
            n: self.n,
            d: self.d,
            blocks: (1..=self.n)
                .map(|i| (1..=self.n).map(|j| self.u(i, j).to_strings()).collect())
                .collect(),
        };
        serde_json::to_string(&raw).expect("representation serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let raw: RepJson = serde_json::from_str(text)?;
        let blocks = raw
            .blocks
            .iter()
            .map(|row| {
                row.iter()
                    .map(|m| {
                        let rows = m
                            .iter()
                            .map(|r| r.iter().map(|s| rational::parse(s)).collect())
                            .collect::<Result<Vec<Vec<Rational>>>>()?;
                        Matrix::from_rows(rows)
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let rep = Representation::new(raw.n, blocks)?;
        if rep.d != raw.d {
            return Err(Error::Shape(format!(
                "declared d={}, blocks are {}x{}",
                raw.d, rep.d, rep.d
            )));
        }
        Ok(rep)
    }
}

#[derive(Serialize, Deserialize)]
struct RepJson {
    n: usize,
    d: usize,
    blocks: Vec<Vec<Vec<Vec<String>>>>,
}

/// The permutation matrix `a^σ` with entries `u_ij = δ_{i,σ(j)}`, as 1×1 blocks.
pub fn permutation_rep(sigma: &Permutation) -> Representation {
    let n = sigma.n();
    let blocks = (1..=n)
        .map(|i| {
            (1..=n)
                .map(|j| {
                    let v = if sigma.apply(j) == i {
                        Rational::one()
                    } else {
                        Rational::zero()
                    };
                    Matrix::from_rows(vec![vec![v]]).expect("1x1")
                })
                .collect()
        })
        .collect();
    Representation::new(n, blocks).expect("square array")
}

/// The 4×4 matrix over `M_2(ℚ)` built from the projections
/// `p = (1+a)/2 = diag(0,1)` and `q = (1+b)/2`:
///
/// ```text
/// p    1-p  0    0
/// 1-p  p    0    0
/// 0    0    q    1-q
/// 0    0    1-q  q
/// ```
pub fn two_projection_rep() -> Representation {
    let r = rational::ratio;
    let p = Matrix::from_rows(vec![vec![r(0, 1), r(0, 1)], vec![r(0, 1), r(1, 1)]]).expect("2x2");
    let q = Matrix::from_rows(vec![vec![r(1, 2), r(1, 2)], vec![r(1, 2), r(1, 2)]]).expect("2x2");
    let one = Matrix::identity(2);
    let z = Matrix::zero(2);
    let (pc, qc) = (&one - &p, &one - &q);
    let blocks = vec![
        vec![p.clone(), pc.clone(), z.clone(), z.clone()],
        vec![pc, p, z.clone(), z.clone()],
        vec![z.clone(), z.clone(), q.clone(), qc.clone()],
        vec![z.clone(), z, qc, q],
    ];
    Representation::new(4, blocks).expect("4x4 array")
}

/// A relation family checkable on a [`Representation`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Relation {
    Orthogonal,
    Magic,
    SelfadjointProjections,
    REps,
    RringEps,
    RprimeEps,
    RAut,
    /// The vanishing products and subsums implied by `R'^ε`.
    Refined,
}

impl Relation {
    pub const ALL: [Relation; 8] = [
        Relation::Orthogonal,
        Relation::Magic,
        Relation::SelfadjointProjections,
        Relation::REps,
        Relation::RringEps,
        Relation::RprimeEps,
        Relation::RAut,
        Relation::Refined,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Relation::Orthogonal => "orthogonal",
            Relation::Magic => "magic",
            Relation::SelfadjointProjections => "selfadjoint-projections",
            Relation::REps => "R_eps",
            Relation::RringEps => "Rring_eps",
            Relation::RprimeEps => "Rprime_eps",
            Relation::RAut => "R_aut",
            Relation::Refined => "refined",
        }
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Relation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let wanted = s.trim().to_ascii_lowercase().replace('_', "-");
        Relation::ALL
            .into_iter()
            .find(|r| r.tag().to_ascii_lowercase().replace('_', "-") == wanted)
            .ok_or_else(|| Error::Parse {
                line: 1,
                column: 1,
                message: format!("unknown relation family `{s}`"),
            })
    }
}

/// First violated instance of a relation: the indices involved and a short
/// description of the failing identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub indices: Vec<usize>,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationResult {
    pub relation: Relation,
    pub violation: Option<Violation>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepReport {
    pub results: Vec<RelationResult>,
}

impl RepReport {
    pub fn passed(&self) -> bool {
        self.results.iter().all(|r| r.violation.is_none())
    }

    pub fn get(&self, relation: Relation) -> Option<&RelationResult> {
        self.results.iter().find(|r| r.relation == relation)
    }
}

struct Ctx<'a> {
    u: &'a Representation,
    eps: &'a EpsilonMatrix,
    n: usize,
    zero: Matrix,
    one: Matrix,
}

type Check = std::result::Result<(), Violation>;

fn fail(indices: &[usize], detail: impl Into<String>) -> Check {
    Err(Violation {
        indices: indices.to_vec(),
        detail: detail.into(),
    })
}

impl Ctx<'_> {
    fn u(&self, i: usize, j: usize) -> &Matrix {
        self.u.u(i, j)
    }

    fn uu(&self, i: usize, k: usize, j: usize, l: usize) -> Matrix {
        self.u(i, k) * self.u(j, l)
    }

    fn e(&self, i: usize, j: usize) -> bool {
        self.eps.get(i, j)
    }

    fn range(&self) -> std::ops::RangeInclusive<usize> {
        1..=self.n
    }

    fn quads(&self) -> impl Iterator<Item = [usize; 4]> + '_ {
        let n = self.n;
        (0..n.pow(4)).map(move |x| {
            [
                x / n.pow(3) + 1,
                x / n.pow(2) % n + 1,
                x / n % n + 1,
                x % n + 1,
            ]
        })
    }

    fn selfadjoint(&self) -> Check {
        for i in self.range() {
            for j in self.range() {
                if self.u(i, j).transpose() != *self.u(i, j) {
                    return fail(&[i, j], format!("u{i}{j} is not self-adjoint"));
                }
            }
        }
        Ok(())
    }

    fn projections(&self) -> Check {
        self.selfadjoint()?;
        for i in self.range() {
            for j in self.range() {
                if &(self.u(i, j) * self.u(i, j)) != self.u(i, j) {
                    return fail(&[i, j], format!("u{i}{j}^2 != u{i}{j}"));
                }
            }
        }
        Ok(())
    }

    fn magic(&self) -> Check {
        self.projections()?;
        for i in self.range() {
            let row = self
                .range()
                .fold(self.zero.clone(), |acc, k| &acc + self.u(i, k));
            if row != self.one {
                return fail(&[i], format!("row {i} does not sum to 1"));
            }
            let col = self
                .range()
                .fold(self.zero.clone(), |acc, k| &acc + self.u(k, i));
            if col != self.one {
                return fail(&[i], format!("column {i} does not sum to 1"));
            }
        }
        Ok(())
    }

    fn orthogonal(&self) -> Check {
        self.selfadjoint()?;
        for i in self.range() {
            for j in self.range() {
                let want = if i == j { &self.one } else { &self.zero };
                let rows = self
                    .range()
                    .fold(self.zero.clone(), |acc, k| &acc + &self.uu(i, k, j, k));
                if &rows != want {
                    return fail(&[i, j], format!("sum_k u{i}k u{j}k != delta"));
                }
                let cols = self
                    .range()
                    .fold(self.zero.clone(), |acc, k| &acc + &self.uu(k, i, k, j));
                if &cols != want {
                    return fail(&[i, j], format!("sum_k uk{i} uk{j} != delta"));
                }
            }
        }
        Ok(())
    }

    // (R^ε1): u_ik u_jl = u_jl u_ik when ε_ij = ε_kl = 1
    fn r1(&self) -> Check {
        for [i, j, k, l] in self.quads() {
            if self.e(i, j) && self.e(k, l) && self.uu(i, k, j, l) != self.uu(j, l, i, k) {
                return fail(&[i, j, k, l], format!("u{i}{k} u{j}{l} != u{j}{l} u{i}{k}"));
            }
        }
        Ok(())
    }

    fn r_eps(&self) -> Check {
        self.r1()?;
        for [i, j, k, l] in self.quads() {
            let lhs = self.uu(i, k, j, l);
            match (self.e(i, j), self.e(k, l)) {
                (true, false) if lhs != self.uu(j, k, i, l) => {
                    return fail(&[i, j, k, l], format!("u{i}{k} u{j}{l} != u{j}{k} u{i}{l}"));
                }
                (false, true) if lhs != self.uu(i, l, j, k) => {
                    return fail(&[i, j, k, l], format!("u{i}{k} u{j}{l} != u{i}{l} u{j}{k}"));
                }
                _ => {}
            }
        }
        Ok(())
    }

    fn rring_eps(&self) -> Check {
        self.r1()?;
        for [i, j, k, l] in self.quads() {
            if self.e(i, j) != self.e(k, l) && !self.uu(i, k, j, l).is_zero() {
                return fail(&[i, j, k, l], format!("u{i}{k} u{j}{l} != 0"));
            }
        }
        Ok(())
    }

    fn rprime_eps(&self) -> Check {
        self.r1()?;
        for [i, j, k, l] in self.quads() {
            let rhs = match (self.e(i, j), self.e(k, l)) {
                (true, false) if k == l => self
                    .range()
                    .filter(|&m| !self.e(k, m))
                    .fold(self.zero.clone(), |acc, m| &acc + &self.uu(j, m, i, m)),
                (false, true) if i == j => self
                    .range()
                    .filter(|&m| !self.e(i, m))
                    .fold(self.zero.clone(), |acc, m| &acc + &self.uu(m, l, m, k)),
                (true, false) | (false, true) => self.zero.clone(),
                _ => continue,
            };
            if self.uu(i, k, j, l) != rhs {
                return fail(&[i, j, k, l], format!("R'2 fails for u{i}{k} u{j}{l}"));
            }
        }
        Ok(())
    }

    fn r_aut(&self) -> Check {
        for i in self.range() {
            for l in self.range() {
                let lhs = self
                    .range()
                    .filter(|&k| self.e(k, l))
                    .fold(self.zero.clone(), |acc, k| &acc + self.u(i, k));
                let rhs = self
                    .range()
                    .filter(|&j| self.e(i, j))
                    .fold(self.zero.clone(), |acc, j| &acc + self.u(j, l));
                if lhs != rhs {
                    return fail(&[i, l], format!("(u eps)_{i}{l} != (eps u)_{i}{l}"));
                }
            }
        }
        Ok(())
    }

    fn refined(&self) -> Check {
        for [i, j, k, l] in self.quads() {
            if self.e(i, j) && !self.e(k, l) && k != l {
                if !self.uu(i, k, j, l).is_zero() {
                    return fail(&[i, j, k, l], format!("u{i}{k} u{j}{l} != 0"));
                }
                if !self.uu(k, i, l, j).is_zero() {
                    return fail(&[i, j, k, l], format!("u{k}{i} u{l}{j} != 0"));
                }
            }
        }
        for i in self.range() {
            for j in self.range() {
                if !self.e(i, j) {
                    continue;
                }
                for k in self.range() {
                    let far = |m: usize| m != k && !self.e(k, m);
                    let sums = [
                        (true, true, "sum_{m != k, eps_km = 0} u_im u_jm"),
                        (true, false, "sum_{m = k or eps_km = 1} u_im u_jm"),
                        (false, true, "sum_{m != k, eps_km = 0} u_mi u_mj"),
                        (false, false, "sum_{m = k or eps_km = 1} u_mi u_mj"),
                    ];
                    for (rows, is_far, label) in sums {
                        let total = self.range().filter(|&m| far(m) == is_far).fold(
                            self.zero.clone(),
                            |acc, m| {
                                let p = if rows {
                                    self.uu(i, m, j, m)
                                } else {
                                    self.uu(m, i, m, j)
                                };
                                &acc + &p
                            },
                        );
                        if !total.is_zero() {
                            return fail(&[i, j, k], format!("{label} != 0"));
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

/// Evaluates each requested relation family on `u` and reports the first
/// violated instance of each.
pub fn rep_check(
    u: &Representation,
    eps: &EpsilonMatrix,
    relations: &[Relation],
) -> Result<RepReport> {
    if u.n() != eps.n() {
        return Err(Error::DimensionMismatch(format!(
            "{}x{} representation against a {}x{} epsilon matrix",
            u.n(),
            u.n(),
            eps.n(),
            eps.n()
        )));
    }
    let ctx = Ctx {
        u,
        eps,
        n: u.n(),
        zero: Matrix::zero(u.d()),
        one: Matrix::identity(u.d()),
    };
    let results = relations
        .iter()
        .map(|&relation| {
            let outcome = match relation {
                Relation::Orthogonal => ctx.orthogonal(),
                Relation::Magic => ctx.magic(),
                Relation::SelfadjointProjections => ctx.projections(),
                Relation::REps => ctx.r_eps(),
                Relation::RringEps => ctx.rring_eps(),
                Relation::RprimeEps => ctx.rprime_eps(),
                Relation::RAut => ctx.r_aut(),
                Relation::Refined => ctx.refined(),
            };
            RelationResult {
                relation,
                violation: outcome.err(),
            }
        })
        .collect();
    Ok(RepReport { results })
}
