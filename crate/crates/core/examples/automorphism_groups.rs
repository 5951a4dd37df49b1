//! The permutation groups T_n^eps and their relation to the permutation
//! matrices satisfying R^eps.

use epsilon_qg::groups::{permutation_satisfies_r_eps, t_n_eps};
use epsilon_qg::{Permutation, Preset};

fn main() -> epsilon_qg::Result<()> {
    for preset in [
        Preset::PairsIndep,
        Preset::PairsFree,
        Preset::Cycle5,
        Preset::Trivial6,
        Preset::Comm(4),
    ] {
        let eps = preset.build()?;
        let g = t_n_eps(&eps)?;
        let gens: Vec<String> = g.generators().iter().map(Permutation::cycles).collect();
        println!(
            "{preset:>9}: order {:>3}, generated by {}",
            g.order(),
            gens.join(" ")
        );
    }

    let exd = Preset::PairsIndep.build()?;
    for images in [vec![3, 4, 1, 2], vec![2, 3, 4, 1]] {
        let s = Permutation::new(images)?;
        println!(
            "ex-d, {}: in T_4 = {}, R^eps holds = {}",
            s.cycles(),
            t_n_eps(&exd)?.contains(&s),
            permutation_satisfies_r_eps(&s, &exd)
        );
    }
    println!("{}", t_n_eps(&exd)?.to_json());
    Ok(())
}
