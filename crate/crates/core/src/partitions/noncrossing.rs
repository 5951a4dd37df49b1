use crate::eps::{EpsilonMatrix, MultiIndex};
use crate::error::{Error, Result};

use super::{set_partitions, Category, SetPartition};

fn check_dims(pi: &SetPartition, i: &MultiIndex, eps: &EpsilonMatrix) -> Result<()> {
    if pi.k() != i.len() {
        return Err(Error::DimensionMismatch(format!(
            "partition of {} points against an index of length {}",
            pi.k(),
            i.len()
        )));
    }
    check_alphabet(i, eps)
}

fn check_alphabet(i: &MultiIndex, eps: &EpsilonMatrix) -> Result<()> {
    match i.values().iter().find(|&&v| v > eps.n()) {
        Some(&v) => Err(Error::IndexOutOfRange {
            value: v,
            n: eps.n(),
        }),
        None => Ok(()),
    }
}

/// `(ε, i)`-noncrossing: every crossing `p1 < q1 < p2 < q2` between two
/// distinct blocks must have `ε_{i(p1) i(q1)} = 1`.
///
/// The condition is evaluated on every quadruple as written, also when `pi`
/// is not a refinement of `ker i`.
pub fn is_eps_noncrossing(pi: &SetPartition, i: &MultiIndex, eps: &EpsilonMatrix) -> Result<bool> {
    check_dims(pi, i, eps)?;
    Ok(eps_noncrossing0(pi.labels(), &i.zero_based(), eps))
}

pub(crate) fn eps_noncrossing0(labels: &[usize], idx: &[usize], eps: &EpsilonMatrix) -> bool {
    let k = labels.len();
    for p1 in 0..k {
        for q1 in p1 + 1..k {
            if labels[q1] == labels[p1] || eps.get0(idx[p1], idx[q1]) {
                continue;
            }
            // a forbidden crossing needs p2 in p1's block and a later q2 in q1's
            for p2 in q1 + 1..k {
                if labels[p2] == labels[p1] && labels[p2 + 1..].contains(&labels[q1]) {
                    return false;
                }
            }
        }
    }
    true
}

pub(crate) fn refines_kernel0(labels: &[usize], idx: &[usize]) -> bool {
    let mut value = vec![usize::MAX; labels.len()];
    labels.iter().zip(idx).all(|(&b, &v)| {
        if value[b] == usize::MAX {
            value[b] = v;
        }
        value[b] == v
    })
}

/// `δ_{π ∈ NC_C^ε[i]}`: `pi` lies in `cat`, refines `ker i` and is
/// `(ε, i)`-noncrossing.
pub fn nc_indicator(
    pi: &SetPartition,
    i: &MultiIndex,
    eps: &EpsilonMatrix,
    cat: Category,
) -> Result<bool> {
    check_dims(pi, i, eps)?;
    let idx = i.zero_based();
    Ok(cat.contains(pi)
        && refines_kernel0(pi.labels(), &idx)
        && eps_noncrossing0(pi.labels(), &idx, eps))
}

/// `NC_C^ε[i]` in canonical order.
///
/// Candidates are generated as products of set partitions of the blocks of
/// `ker i`, so only refinements of the kernel are ever visited.
pub fn nc_eps_set(i: &MultiIndex, eps: &EpsilonMatrix, cat: Category) -> Result<Vec<SetPartition>> {
    check_alphabet(i, eps)?;
    let idx = i.zero_based();
    let kernel = i.ker();
    let per_block: Vec<Vec<SetPartition>> = kernel
        .blocks()
        .iter()
        .map(|b| {
            set_partitions(b.len())
                .filter(|p| cat.contains(p))
                .collect()
        })
        .collect();

    let mut out = Vec::new();
    let mut choice = vec![0usize; per_block.len()];
    if per_block.iter().any(Vec::is_empty) {
        return Ok(out);
    }
    let mut labels = vec![(0usize, 0usize); i.len()];
    loop {
        for (b, block) in kernel.blocks().iter().enumerate() {
            let sub = &per_block[b][choice[b]];
            for (pos, &point) in block.iter().enumerate() {
                labels[point - 1] = (b, sub.labels()[pos]);
            }
        }
        let pi = SetPartition::from_labels(&labels);
        if eps_noncrossing0(pi.labels(), &idx, eps) {
            out.push(pi);
        }
        // odometer over the per-block choices
        let mut b = per_block.len();
        loop {
            if b == 0 {
                out.sort();
                return Ok(out);
            }
            b -= 1;
            choice[b] += 1;
            if choice[b] < per_block[b].len() {
                break;
            }
            choice[b] = 0;
        }
    }
}
