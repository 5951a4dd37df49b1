//! Reference implementations written directly from the definitions, kept
//! apart from the library code they check.

#![allow(dead_code)]

use epsilon_qg::rational::{int, one, zero};
use epsilon_qg::{Category, EpsilonMatrix, Rational, SetPartition};

/// `δ_{π ∈ NC_C^ε[i]}` straight from the definition; `i` is 1-based.
pub fn nc_indicator(pi: &SetPartition, i: &[usize], eps: &EpsilonMatrix, cat: Category) -> bool {
    let blocks = pi.blocks();
    let in_cat = blocks.iter().all(|b| match cat {
        Category::All => true,
        Category::Pair => b.len() == 2,
        Category::OneTwo => b.len() <= 2,
        Category::Even => b.len() % 2 == 0,
    });
    let below_ker = blocks
        .iter()
        .all(|b| b.iter().all(|&p| i[p - 1] == i[b[0] - 1]));
    if !in_cat || !below_ker {
        return false;
    }
    let k = i.len();
    let label = |p: usize| pi.block_of(p);
    for p1 in 1..=k {
        for q1 in p1 + 1..=k {
            for p2 in q1 + 1..=k {
                for q2 in p2 + 1..=k {
                    let crossing =
                        label(p1) == label(p2) && label(q1) == label(q2) && label(p1) != label(q1);
                    if crossing && !eps.get(i[p1 - 1], i[q1 - 1]) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Free moment `φ(x_{w(1)} ⋯ x_{w(k)})` of freely independent variables,
/// expanding over the block that contains the first position.
pub fn free_moment(word: &[usize], kappa: &dyn Fn(usize, usize) -> Rational) -> Rational {
    let Some(&a) = word.first() else {
        return one();
    };
    let mut total = zero();
    let mut chosen = vec![0];
    expand_first_block(word, a, 1, &mut chosen, kappa, &mut total);
    total
}

fn expand_first_block(
    word: &[usize],
    a: usize,
    from: usize,
    chosen: &mut Vec<usize>,
    kappa: &dyn Fn(usize, usize) -> Rational,
    total: &mut Rational,
) {
    let c = kappa(a, chosen.len());
    if c != zero() {
        let mut term = c;
        for w in chosen.windows(2) {
            term *= free_moment(&word[w[0] + 1..w[1]], kappa);
        }
        term *= free_moment(&word[chosen[chosen.len() - 1] + 1..], kappa);
        *total += term;
    }
    for next in from..word.len() {
        if word[next] == a {
            chosen.push(next);
            expand_first_block(word, a, next + 1, chosen, kappa, total);
            chosen.pop();
        }
    }
}

/// Moments `m_0..=m_max` of one variable from its free cumulants via
/// `m_j = Σ_s κ_s Σ_{j_1+⋯+j_s = j-s} m_{j_1} ⋯ m_{j_s}`.
pub fn single_moments(kappa: &dyn Fn(usize) -> Rational, max: usize) -> Vec<Rational> {
    let mut m = vec![one()];
    for j in 1..=max {
        let mut total = zero();
        for s in 1..=j {
            total += kappa(s) * compositions_sum(&m, s, j - s);
        }
        m.push(total);
    }
    m
}

// Σ over (j_1..j_parts) with sum `rest` of Π m_{j_t}.
fn compositions_sum(m: &[Rational], parts: usize, rest: usize) -> Rational {
    if parts == 0 {
        return if rest == 0 { one() } else { zero() };
    }
    (0..=rest)
        .map(|first| m[first].clone() * compositions_sum(m, parts - 1, rest - first))
        .fold(zero(), |a, b| a + b)
}

/// Moment of commuting, classically independent variables: the product of
/// the single-variable moments of each letter's multiplicity.
pub fn classical_moment(word: &[usize], kappa: &dyn Fn(usize, usize) -> Rational) -> Rational {
    let mut letters: Vec<usize> = word.to_vec();
    letters.sort_unstable();
    letters.dedup();
    letters
        .into_iter()
        .map(|v| {
            let count = word.iter().filter(|&&x| x == v).count();
            single_moments(&|s| kappa(v, s), count)[count].clone()
        })
        .fold(one(), |a, b| a * b)
}

pub fn catalan(j: u64) -> Rational {
    let mut c: u64 = 1;
    for t in 0..j {
        c = c * 2 * (2 * t + 1) / (t + 2);
    }
    int(c as i64)
}

/// All permutations of `1..=n` as image sequences.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n);
            out.push(q);
        }
    }
    out.sort();
    out
}

/// `ε_{σ(k)σ(l)} = ε_{kl}` for all `k, l`.
pub fn preserves_eps(sigma: &[usize], eps: &EpsilonMatrix) -> bool {
    let n = eps.n();
    (1..=n).all(|k| (1..=n).all(|l| eps.get(sigma[k - 1], sigma[l - 1]) == eps.get(k, l)))
}

/// All words of length `k` over `1..=n`, lexicographic.
pub fn words(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..k {
        out = out
            .into_iter()
            .flat_map(|w| {
                (1..=n).map(move |v| {
                    let mut w = w.clone();
                    w.push(v);
                    w
                })
            })
            .collect();
    }
    out
}

pub type M2 = [[i64; 2]; 2];

pub fn m2_mul(x: &M2, y: &M2) -> M2 {
    let mut z = [[0; 2]; 2];
    for r in 0..2 {
        for c in 0..2 {
            z[r][c] = x[r][0] * y[0][c] + x[r][1] * y[1][c];
        }
    }
    z
}
