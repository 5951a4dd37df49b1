//! Set partitions, kernels of multi-indices and the epsilon-noncrossing
//! summation sets.

use epsilon_qg::eps::MultiIndex;
use epsilon_qg::partitions::{enumerate_partitions, nc_eps_set};
use epsilon_qg::{Category, Preset, SetPartition};

fn main() -> epsilon_qg::Result<()> {
    for cat in Category::ALL {
        let all = enumerate_partitions(4, cat, false).len();
        let nc = enumerate_partitions(4, cat, true).len();
        println!("{cat:>6}: {all} partitions of 4 points, {nc} noncrossing");
    }

    let pi: SetPartition = "{1,3}{2,4}".parse()?;
    println!("{pi} crosses {} time(s)", pi.crossing_count());

    let i = MultiIndex::parse_csv(2, "1,2,1,2")?;
    println!("ker {i} = {}", i.ker());
    for preset in [Preset::Comm(2), Preset::Free(2)] {
        let eps = preset.build()?;
        let set = nc_eps_set(&i, &eps, Category::All)?;
        let shown: Vec<String> = set.iter().map(ToString::to_string).collect();
        println!("NC^eps[{i}] for {preset}: {}", shown.join(" "));
    }

    let i = MultiIndex::parse_csv(5, "1,3,1,3")?;
    let f = Preset::Cycle5.build()?;
    println!(
        "NC_pair^eps[{i}] for ex-f: {:?}",
        nc_eps_set(&i, &f, Category::Pair)?
    );
    Ok(())
}
