use serde::{Deserialize, Serialize};

use super::SetPartition;

/// Two blocks cross if their points alternate somewhere: `a < b < c < d`
/// with `a, c` in one block and `b, d` in the other.
pub fn blocks_cross(v: &[usize], w: &[usize]) -> bool {
    let mut merged: Vec<(usize, bool)> = v
        .iter()
        .map(|&x| (x, false))
        .chain(w.iter().map(|&x| (x, true)))
        .collect();
    merged.sort_unstable();
    // alternation of length 4 in the side sequence
    let mut changes = 0;
    for pair in merged.windows(2) {
        if pair[0].1 != pair[1].1 {
            changes += 1;
        }
    }
    changes >= 3
}

/// True when points `start..=end` form a subpartition: no block leaves the
/// interval.
pub fn is_subpartition_interval(pi: &SetPartition, start: usize, end: usize) -> bool {
    (start..=end).all(|p| {
        pi.blocks()[pi.block_of(p)]
            .iter()
            .all(|&x| (start..=end).contains(&x))
    })
}

/// A noncrossing subpartition `sigma` found on points `start..=end`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Subpartition {
    pub sigma: SetPartition,
    pub start: usize,
    pub end: usize,
}

/// Finds a noncrossing subpartition of `pi`.
///
/// Proper intervals are searched first, leftmost start then shortest length;
/// the whole partition is returned only when it is noncrossing and has no
/// proper noncrossing subpartition.
pub fn find_noncrossing_subpartition(pi: &SetPartition) -> Option<Subpartition> {
    let k = pi.k();
    for start in 1..=k {
        for end in start..=k {
            if start == 1 && end == k {
                continue;
            }
            if !is_subpartition_interval(pi, start, end) {
                continue;
            }
            let sigma = pi.restrict(start, end);
            if sigma.is_noncrossing() {
                return Some(Subpartition { sigma, start, end });
            }
        }
    }
    (k > 0 && pi.is_noncrossing()).then(|| Subpartition {
        sigma: pi.clone(),
        start: 1,
        end: k,
    })
}

/// Smallest `l` such that the blocks `V ∋ l` and `V' ∋ l+1` are distinct,
/// cross, and `min V' < min V`.
pub fn find_case2_index(pi: &SetPartition) -> Option<usize> {
    let blocks = pi.blocks();
    (1..pi.k()).find(|&l| {
        let v = pi.block_of(l);
        let w = pi.block_of(l + 1);
        // canonical order: block numbers increase with block minima
        v != w && w < v && blocks_cross(&blocks[v], &blocks[w])
    })
}
