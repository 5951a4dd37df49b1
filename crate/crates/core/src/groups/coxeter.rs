use crate::eps::EpsilonMatrix;

use super::word::Word;

/// An integer 2×2 matrix.
pub type Mat2 = [[i64; 2]; 2];

pub const ID2: Mat2 = [[1, 0], [0, 1]];
/// `a = diag(-1, 1)`.
pub const A: Mat2 = [[-1, 0], [0, 1]];
/// `b`, the flip.
pub const B: Mat2 = [[0, 1], [1, 0]];

pub fn mul2(x: &Mat2, y: &Mat2) -> Mat2 {
    let mut z = [[0; 2]; 2];
    for (r, row) in z.iter_mut().enumerate() {
        for (c, entry) in row.iter_mut().enumerate() {
            *entry = x[r][0] * y[0][c] + x[r][1] * y[1][c];
        }
    }
    z
}

/// A block-diagonal operator on `⊕_{i<j} H_ij`, one 2×2 block per summand
/// (summands in lexicographic order of `(i, j)`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockDiag(pub Vec<Mat2>);

impl BlockDiag {
    pub fn identity(summands: usize) -> Self {
        BlockDiag(vec![ID2; summands])
    }

    pub fn mul(&self, other: &BlockDiag) -> BlockDiag {
        BlockDiag(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(x, y)| mul2(x, y))
                .collect(),
        )
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().all(|m| *m == ID2)
    }
}

/// The representation `σ_ε` of the right-angled Coxeter group: one operator
/// per generator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoxeterRep {
    pub n: usize,
    /// The pairs `(i, j)`, `i < j`, labelling the summands.
    pub summands: Vec<(usize, usize)>,
    pub generators: Vec<BlockDiag>,
}

impl CoxeterRep {
    /// `σ_ε(a_w(1) ⋯ a_w(m))`; the empty word maps to the identity.
    pub fn eval(&self, w: &Word) -> BlockDiag {
        w.letters()
            .iter()
            .fold(BlockDiag::identity(self.summands.len()), |acc, &g| {
                acc.mul(&self.generators[g - 1])
            })
    }
}

/// `z_k` acts on `H_ij` as `a` when `k = i`, as `b` when `k = j` (both only
/// if `ε_ij = 0`), and trivially otherwise.
pub fn coxeter_rep(eps: &EpsilonMatrix) -> CoxeterRep {
    let n = eps.n();
    let summands: Vec<(usize, usize)> = (1..=n)
        .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
        .collect();
    let generators = (1..=n)
        .map(|k| {
            BlockDiag(
                summands
                    .iter()
                    .map(|&(i, j)| match () {
                        _ if eps.get(i, j) => ID2,
                        _ if k == i => A,
                        _ if k == j => B,
                        _ => ID2,
                    })
                    .collect(),
            )
        })
        .collect();
    CoxeterRep {
        n,
        summands,
        generators,
    }
}

/// Result of [`check_coxeter_rep`]; the vectors list offending generators.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CoxeterReport {
    pub n: usize,
    pub not_involutions: Vec<usize>,
    /// Pairs `(i, j)` whose commutation disagrees with `ε_ij`.
    pub pattern_mismatches: Vec<(usize, usize)>,
    pub commuting_pairs: Vec<(usize, usize)>,
}

impl CoxeterReport {
    pub fn passed(&self) -> bool {
        self.not_involutions.is_empty() && self.pattern_mismatches.is_empty()
    }
}

/// Checks `σ_ε(z_k)² = 1` and that `σ_ε(z_i)`, `σ_ε(z_j)` commute exactly
/// when `ε_ij = 1`.
pub fn check_coxeter_rep(eps: &EpsilonMatrix) -> CoxeterReport {
    let rep = coxeter_rep(eps);
    let g = &rep.generators;
    let mut report = CoxeterReport {
        n: rep.n,
        ..Default::default()
    };
    for k in 0..rep.n {
        if !g[k].mul(&g[k]).is_identity() {
            report.not_involutions.push(k + 1);
        }
    }
    for i in 0..rep.n {
        for j in i + 1..rep.n {
            let commute = g[i].mul(&g[j]) == g[j].mul(&g[i]);
            if commute {
                report.commuting_pairs.push((i + 1, j + 1));
            }
            if commute != eps.get(i + 1, j + 1) {
                report.pattern_mismatches.push((i + 1, j + 1));
            }
        }
    }
    report
}
