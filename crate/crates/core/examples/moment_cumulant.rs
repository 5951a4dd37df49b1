//! Mixed moments of epsilon-independent variables from their free
//! cumulants.

use epsilon_qg::cumulants::{kappa_pi, moment, CumulantSpec};
use epsilon_qg::eps::MultiIndex;
use epsilon_qg::rational::{format, parse};
use epsilon_qg::{Category, Preset};

fn main() -> epsilon_qg::Result<()> {
    let semi = CumulantSpec::semicircle(1);
    let single = Preset::Free(1).build()?;
    let even: Vec<String> = (0..=10)
        .step_by(2)
        .map(|k| {
            moment(
                &MultiIndex::new(1, vec![1; k]).unwrap(),
                &single,
                &semi,
                Category::All,
            )
            .map(|m| format(&m))
        })
        .collect::<Result<_, _>>()?;
    println!("semicircle moments 0,2,..,10: {}", even.join(", "));

    let spec = CumulantSpec::semicircle(2);
    let xyxy = MultiIndex::parse_csv(2, "1,2,1,2")?;
    for preset in [Preset::Comm(2), Preset::Free(2)] {
        let eps = preset.build()?;
        println!(
            "phi(x1 x2 x1 x2) under {preset}: {}",
            format(&moment(&xyxy, &eps, &spec, Category::All)?)
        );
    }

    let spec = CumulantSpec::new(
        2,
        vec![
            vec![parse("1/2")?, parse("1")?],
            vec![parse("0")?, parse("2")?, parse("-1/3")?],
        ],
    )?;
    let i = MultiIndex::parse_csv(2, "1,1,2,2,2")?;
    let pi = i.ker();
    println!(
        "kappa_ker(i) for i = {i}: {}",
        format(&kappa_pi(&pi, &i, &spec)?)
    );
    for preset in [Preset::Comm(2), Preset::Free(2)] {
        let eps = preset.build()?;
        println!(
            "phi(x1 x1 x2 x2 x2) under {preset}: {}",
            format(&moment(&i, &eps, &spec, Category::All)?)
        );
    }
    println!("cumulant file format: {}", spec.to_json());
    Ok(())
}
