use super::{Category, SetPartition};

/// All partitions of `{1..k}` in restricted-growth-string lexicographic order.
///
/// The successor step increments the rightmost position that may still grow
/// (its value does not exceed the maximum of its prefix) and resets
/// everything after it to zero. `k = 0` yields the single empty partition.
pub fn set_partitions(k: usize) -> impl Iterator<Item = SetPartition> {
    let mut rgs: Option<Vec<usize>> = Some(vec![0; k]);
    std::iter::from_fn(move || {
        let cur = rgs.take()?;
        let out = SetPartition::from_rgs(cur.clone());
        rgs = successor(cur);
        Some(out)
    })
}

fn successor(mut rgs: Vec<usize>) -> Option<Vec<usize>> {
    let k = rgs.len();
    // prefix_max[p] = max(rgs[0..p])
    let mut prefix_max = vec![0; k];
    for p in 1..k {
        prefix_max[p] = prefix_max[p - 1].max(rgs[p - 1]);
    }
    let pos = (1..k).rev().find(|&p| rgs[p] <= prefix_max[p])?;
    rgs[pos] += 1;
    for x in &mut rgs[pos + 1..] {
        *x = 0;
    }
    Some(rgs)
}

/// Partitions of `{1..k}` in `cat`, optionally restricted to noncrossing
/// ones, in canonical order.
pub fn enumerate_partitions(k: usize, cat: Category, noncrossing_only: bool) -> Vec<SetPartition> {
    set_partitions(k)
        .filter(|p| cat.contains(p))
        .filter(|p| !noncrossing_only || p.is_noncrossing())
        .collect()
}
