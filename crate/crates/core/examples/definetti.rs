//! Invariance of epsilon-independent, identically distributed families under
//! T_n^eps, and the cumulant rewrite of their moments through M_pi.

use epsilon_qg::cumulants::{check_eps_exchangeability, CumulantSpec};
use epsilon_qg::mpi::definetti_identity_report;
use epsilon_qg::rational::int;
use epsilon_qg::{Category, Preset};

fn main() -> epsilon_qg::Result<()> {
    for preset in [Preset::PairsIndep, Preset::PairsFree, Preset::Cycle5] {
        let eps = preset.build()?;
        let n = eps.n();
        for (name, spec, cat) in [
            (
                "centred semicircle",
                CumulantSpec::semicircle(n),
                Category::Pair,
            ),
            (
                "shifted semicircle",
                CumulantSpec::identical(n, vec![int(1), int(1)]),
                Category::OneTwo,
            ),
            (
                "even",
                CumulantSpec::identical(n, vec![int(0), int(1), int(0), int(3)]),
                Category::Even,
            ),
        ] {
            let ex = check_eps_exchangeability(&eps, &spec, 4)?;
            let df = definetti_identity_report(&eps, cat, &spec, 4)?;
            println!(
                "{preset:>6} {name:<19} |T| = {}, exchangeable: {}, rewrite over {cat}: {} ({} words)",
                ex.group_order,
                ex.passed(),
                df.passed(),
                df.words_checked
            );
        }
    }
    Ok(())
}
