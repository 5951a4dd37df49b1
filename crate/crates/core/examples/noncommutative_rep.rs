//! Checks relation families on concrete fundamental matrices: a 4x4 matrix
//! of 2x2 blocks built from two non-commuting projections, and permutation
//! matrices.

use epsilon_qg::groups::{permutation_rep, rep_check, two_projection_rep, Relation};
use epsilon_qg::{Permutation, Preset};

fn main() -> epsilon_qg::Result<()> {
    let exd = Preset::PairsIndep.build()?;
    let u = two_projection_rep();
    let report = rep_check(&u, &exd, &Relation::ALL)?;
    for r in &report.results {
        match &r.violation {
            None => println!("{:<24} holds", r.relation),
            Some(v) => println!("{:<24} fails: {}", r.relation, v.detail),
        }
    }
    let (a, b) = (u.u(1, 1), u.u(3, 3));
    println!("u11 u33 = u33 u11: {}", a * b == b * a);

    let sigma = Permutation::new(vec![1, 3, 2, 4])?;
    let report = rep_check(
        &permutation_rep(&sigma),
        &exd,
        &[Relation::REps, Relation::RAut],
    )?;
    println!(
        "permutation {} satisfies R_eps and R_aut: {}",
        sigma.cycles(),
        report.passed()
    );
    Ok(())
}
