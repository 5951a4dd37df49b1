use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::eps::{EpsilonMatrix, Permutation};
use crate::error::{Error, Result};

/// Largest `n` searched by [`t_n_eps`].
pub const DEFAULT_BOUND: usize = 9;

/// A finite permutation group stored as its full element list, sorted
/// lexicographically by image sequence.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermGroup {
    n: usize,
    elements: Vec<Permutation>,
}

impl PermGroup {
    /// Wraps an element list after checking identity, inverses and closure.
    pub fn from_elements(n: usize, mut elements: Vec<Permutation>) -> Result<Self> {
        elements.sort_by(|a, b| a.images().cmp(b.images()));
        elements.dedup();
        let g = PermGroup { n, elements };
        if !g.is_group() {
            return Err(Error::InvalidPermutation(
                "element list is not closed under composition and inverse".into(),
            ));
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn contains(&self, sigma: &Permutation) -> bool {
        self.elements
            .binary_search_by(|e| e.images().cmp(sigma.images()))
            .is_ok()
    }

    /// Identity, inverse and product membership, checked by iteration.
    pub fn is_group(&self) -> bool {
        self.elements.iter().all(|e| e.n() == self.n)
            && self.contains(&Permutation::identity(self.n))
            && self.elements.iter().all(|a| {
                self.contains(&a.inverse())
                    && self.elements.iter().all(|b| self.contains(&a.compose(b)))
            })
    }

    /// A generating set picked greedily: walk the elements in order and keep
    /// each one not yet generated by the earlier picks.
    pub fn generators(&self) -> Vec<Permutation> {
        let mut gens: Vec<Permutation> = Vec::new();
        let mut span: BTreeSet<Vec<usize>> = BTreeSet::new();
        span.insert(Permutation::identity(self.n).images().to_vec());
        for e in &self.elements {
            if span.contains(e.images()) {
                continue;
            }
            gens.push(e.clone());
            span = closure(self.n, &gens);
            if span.len() == self.order() {
                break;
            }
        }
        gens
    }

    pub fn to_json(&self) -> serde_json::Value {
        let images = |v: &[Permutation]| v.iter().map(|p| p.images().to_vec()).collect();
        serde_json::to_value(GroupJson {
            n: self.n,
            order: self.order(),
            elements: images(&self.elements),
            generators: images(&self.generators()),
        })
        .expect("group serializes")
    }
}

#[derive(Serialize, Deserialize)]
struct GroupJson {
    n: usize,
    order: usize,
    elements: Vec<Vec<usize>>,
    generators: Vec<Vec<usize>>,
}

fn closure(n: usize, gens: &[Permutation]) -> BTreeSet<Vec<usize>> {
    let id = Permutation::identity(n);
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::from([id.images().to_vec()]);
    let mut frontier = vec![id];
    while let Some(p) = frontier.pop() {
        for g in gens {
            let q = g.compose(&p);
            if seen.insert(q.images().to_vec()) {
                frontier.push(q);
            }
        }
    }
    seen
}

/// `T_n^ε = { σ ∈ S_n : ε_{σ(k)σ(l)} = ε_{kl} }`, the automorphism group of
/// the graph with adjacency matrix `ε`.
pub fn t_n_eps(eps: &EpsilonMatrix) -> Result<PermGroup> {
    t_n_eps_bounded(eps, DEFAULT_BOUND)
}

/// [`t_n_eps`] with an explicit size bound.
pub fn t_n_eps_bounded(eps: &EpsilonMatrix, bound: usize) -> Result<PermGroup> {
    let n = eps.n();
    if n > bound {
        return Err(Error::BoundExceeded { n, bound });
    }
    let degree: Vec<usize> = (1..=n).map(|i| eps.degree(i)).collect();
    let mut elements = Vec::new();
    let mut image = Vec::with_capacity(n);
    let mut used = vec![false; n];
    search(eps, &degree, &mut image, &mut used, &mut elements);
    Ok(PermGroup { n, elements })
}

// Extends the partial image `σ(1..=image.len())` in increasing order, so the
// output comes out sorted.
fn search(
    eps: &EpsilonMatrix,
    degree: &[usize],
    image: &mut Vec<usize>,
    used: &mut [bool],
    out: &mut Vec<Permutation>,
) {
    let k = image.len();
    let n = degree.len();
    if k == n {
        let images = image.iter().map(|&x| x + 1).collect();
        out.push(Permutation::new(images).expect("search builds bijections"));
        return;
    }
    for t in 0..n {
        if used[t] || degree[t] != degree[k] {
            continue;
        }
        if (0..k).any(|l| eps.get0(t, image[l]) != eps.get0(k, l)) {
            continue;
        }
        used[t] = true;
        image.push(t);
        search(eps, degree, image, used, out);
        image.pop();
        used[t] = false;
    }
}

/// Evaluates the relations `R^ε` on the permutation matrix
/// `a^σ = (δ_{i,σ(j)})`, whose entries commute.
pub fn permutation_satisfies_r_eps(sigma: &Permutation, eps: &EpsilonMatrix) -> bool {
    let n = eps.n();
    if sigma.n() != n {
        return false;
    }
    let u = |i: usize, j: usize| sigma.apply(j) == i;
    let range = || 1..=n;
    for i in range() {
        for j in range() {
            for k in range() {
                for l in range() {
                    let (e_ij, e_kl) = (eps.get(i, j), eps.get(k, l));
                    let lhs = u(i, k) && u(j, l);
                    let ok = match (e_ij, e_kl) {
                        (true, false) => lhs == (u(j, k) && u(i, l)),
                        (false, true) => lhs == (u(i, l) && u(j, k)),
                        _ => true,
                    };
                    if !ok {
                        return false;
                    }
                }
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::eps::Preset;

    fn perm(v: &[usize]) -> Permutation {
        Permutation::new(v.to_vec()).unwrap()
    }

    #[test]
    fn known_orders() {
        for p in [Preset::PairsIndep, Preset::PairsFree] {
            let g = t_n_eps(&p.build().unwrap()).unwrap();
            assert_eq!(g.order(), 8, "{p}");
            assert!(g.is_group());
        }
        let g = t_n_eps(&Preset::Trivial6.build().unwrap()).unwrap();
        assert_eq!(g.order(), 1);
        for n in 1..=4 {
            assert_eq!(
                t_n_eps(&Preset::Comm(n).build().unwrap()).unwrap().order(),
                [1, 2, 6, 24][n - 1]
            );
            assert_eq!(
                t_n_eps(&Preset::Free(n).build().unwrap()).unwrap().order(),
                [1, 2, 6, 24][n - 1]
            );
        }
    }

    #[test]
    fn ex_d_contains_the_transpositions() {
        let g = t_n_eps(&Preset::PairsIndep.build().unwrap()).unwrap();
        assert!(g.contains(&perm(&[2, 1, 3, 4])));
        assert!(g.contains(&perm(&[1, 2, 4, 3])));
        assert!(g.contains(&perm(&[3, 4, 1, 2])));
        assert!(!g.contains(&perm(&[1, 3, 2, 4])));
        assert!(!g.contains(&perm(&[2, 3, 4, 1])));
        let gens = g.generators();
        assert_eq!(closure(4, &gens).len(), 8);
    }

    #[test]
    fn bound_is_enforced() {
        let eps = Preset::Free(10).build().unwrap();
        assert_eq!(
            t_n_eps(&eps).unwrap_err(),
            Error::BoundExceeded { n: 10, bound: 9 }
        );
    }

    #[test]
    fn r_eps_examples() {
        let exd = Preset::PairsIndep.build().unwrap();
        assert!(permutation_satisfies_r_eps(&Permutation::identity(4), &exd));
        assert!(permutation_satisfies_r_eps(&perm(&[2, 1, 3, 4]), &exd));
        // sends the edge {1,2} to the non-edge {1,3}
        assert!(!permutation_satisfies_r_eps(&perm(&[1, 3, 2, 4]), &exd));
    }

    #[test]
    fn json_lists_elements() {
        let g = t_n_eps(&Preset::Comm(2).build().unwrap()).unwrap();
        let v = g.to_json();
        assert_eq!(v["order"], 2);
        assert_eq!(v["elements"], serde_json::json!([[1, 2], [2, 1]]));
        assert_eq!(v["generators"], serde_json::json!([[2, 1]]));
    }
}
