//! Partition maps on tensor powers and the identities between the
//! epsilon-twisted crossings.

use epsilon_qg::partitions::named;
use epsilon_qg::rational::format;
use epsilon_qg::tensor::{lemma93_suite, r_map, s_box, section94_suite, t_pi, RKind, SKind};
use epsilon_qg::{Preset, Rational};

fn show(v: Vec<(Vec<usize>, Rational)>) -> String {
    let terms: Vec<String> = v
        .iter()
        .map(|(e, c)| format!("{} e{e:?}", format(c)))
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

fn main() -> epsilon_qg::Result<()> {
    let n = 3;
    let cup = t_pi(&named::paar(), n);
    let cap = t_pi(&named::baar(), n);
    println!("T_paar(1) = {}", show(cup.apply_basis(&[])));
    println!(
        "loop T_baar T_paar = {}",
        format(&cap.compose(&cup)?.get(&[], &[]))
    );

    let eps = Preset::Cycle5.build()?;
    let cross = r_map(RKind::Cross1, &eps);
    println!("R1_cross(e[1, 3]) = {}", show(cross.apply_basis(&[1, 3])));
    println!("R1_cross(e[1, 2]) = {}", show(cross.apply_basis(&[1, 2])));
    let s = s_box(SKind::CrossPaar, &eps);
    println!("S_cross-paar has {} nonzero entries", s.nnz());

    for report in [lemma93_suite(&eps)?, section94_suite(&eps)?] {
        println!("[{}]", report.suite);
        for c in &report.checks {
            let mark = if c.passed() { "ok" } else { "FAIL" };
            println!("  {mark:<4} {:<8} {}", c.name, c.statement);
        }
    }
    Ok(())
}
