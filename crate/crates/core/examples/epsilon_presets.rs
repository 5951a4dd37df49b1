//! Builds the named commutation patterns, parses one from text and looks at
//! the graph it describes.

use epsilon_qg::{EpsilonMatrix, Preset};

fn main() -> epsilon_qg::Result<()> {
    for preset in [
        Preset::Comm(3),
        Preset::Free(3),
        Preset::Block(2, 2),
        Preset::PairsIndep,
        Preset::PairsFree,
        Preset::Cycle5,
        Preset::Trivial6,
    ] {
        let eps = preset.build()?;
        let degrees: Vec<usize> = (1..=eps.n()).map(|i| eps.degree(i)).collect();
        println!("{preset}  degrees {degrees:?}");
        print!("{eps}");
    }

    let eps: EpsilonMatrix = "3\n0 1 0\n1 0 0\n0 0 0\n".parse()?;
    println!(
        "parsed: x1,x2 commute = {}, x1,x3 commute = {}",
        eps.get(1, 2),
        eps.get(1, 3)
    );
    println!(
        "leading 2x2 block is comm(2): {}",
        eps.restrict(2)?.is_comm()
    );

    match "2\n0 1\n0 0\n".parse::<EpsilonMatrix>() {
        Ok(_) => unreachable!(),
        Err(e) => println!("rejected: {e}"),
    }
    Ok(())
}
