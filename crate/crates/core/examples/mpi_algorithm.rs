//! Runs the Case-1/Case-2 reduction on a 16-point partition and checks the
//! resulting map against the noncrossing indicator.

use epsilon_qg::eps::MultiIndex;
use epsilon_qg::mpi::{
    check_steps, run_algorithm, sample_indices, verify_oracle, verify_oracle_on, StepKind,
};
use epsilon_qg::partitions::enumerate_partitions;
use epsilon_qg::rational::format;
use epsilon_qg::{Category, Preset, SetPartition};

fn main() -> epsilon_qg::Result<()> {
    let pi: SetPartition = "{1,7,15}{2,5}{3,4}{6,10,16}{8,9}{11,13}{12,14}".parse()?;
    let eps = Preset::Comm(16).build()?;
    let (trace, op) = run_algorithm(&pi, &eps, Category::All, 2)?;
    println!("pi_0 = {pi}");
    for (m, step) in trace.steps.iter().enumerate() {
        let what = match &step.kind {
            StepKind::Case1 { sigma, start, end } => format!("remove {sigma} on {start}..{end}"),
            StepKind::Case2 { l } => format!("swap legs {l} and {}", l + 1),
        };
        println!("step {:>2}: {what:<28} pi = {}", m + 1, step.partition);
    }

    let i = MultiIndex::parse_csv(2, "1,2,2,2,2,1,1,1,1,1,2,1,2,1,1,1")?;
    println!("M_pi(e_i) = {} for i = {i}", format(&op.eval(&i)));

    let samples = sample_indices(&pi, 2, 500, 1);
    let report = verify_oracle_on(&pi, &eps, Category::All, 2, &samples)?;
    println!(
        "{} sampled vectors agree with the indicator: {}",
        report.checked,
        report.passed()
    );
    println!(
        "step equivalences hold: {}",
        check_steps(&trace, &op, &samples)?.is_none()
    );

    let f = Preset::Cycle5.build()?;
    let mut checked = 0;
    for k in 0..=6 {
        for pi in enumerate_partitions(k, Category::Pair, false) {
            let r = verify_oracle(&pi, &f, Category::Pair, 3)?;
            assert!(r.passed(), "{pi}: {r:?}");
            checked += r.checked;
        }
    }
    println!("ex-f, pair partitions up to 6 points, n = 3: {checked} basis vectors agree");
    Ok(())
}
