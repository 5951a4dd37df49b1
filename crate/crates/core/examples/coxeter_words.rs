//! The right-angled Coxeter group of a commutation pattern: its 2x2-block
//! representation and the word problem.

use epsilon_qg::groups::{
    check_coxeter_rep, coxeter_rep, normal_form, word_equal, word_reduce, Word,
};
use epsilon_qg::Preset;

fn main() -> epsilon_qg::Result<()> {
    let eps = Preset::Cycle5.build()?;
    let report = check_coxeter_rep(&eps);
    println!(
        "ex-f: involutions and commutation pattern hold = {}",
        report.passed()
    );
    println!("commuting generator pairs: {:?}", report.commuting_pairs);

    let rep = coxeter_rep(&eps);
    let w = Word::parse_csv(5, "1,3,1,2,4,4,2,3")?;
    println!(
        "{w} reduces to {} (normal form {})",
        word_reduce(&w, &eps),
        normal_form(&w, &eps)
    );
    println!(
        "sigma_eps({w}) is the identity: {}",
        rep.eval(&w).is_identity()
    );

    let u = Word::parse_csv(5, "1,3,2")?;
    let v = Word::parse_csv(5, "3,1,2")?;
    let x = Word::parse_csv(5, "1,2,3")?;
    println!("{u} = {v}: {}", word_equal(&u, &v, &eps));
    println!("{u} = {x}: {}", word_equal(&u, &x, &eps));
    Ok(())
}
