//! The acceptance criteria, one PASS/FAIL line each.

#![allow(clippy::needless_range_loop)]

mod common;

use std::panic::{self, AssertUnwindSafe};
use std::time::Instant;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use epsilon_qg::cumulants::{check_eps_exchangeability, moment, CumulantSpec};
use epsilon_qg::eps::MultiIndex;
use epsilon_qg::groups::{
    check_coxeter_rep, coxeter_rep, normal_form, permutation_satisfies_r_eps, rep_check, t_n_eps,
    two_projection_rep, word_equal, Matrix, Relation, Word,
};
use epsilon_qg::mpi::{definetti_identity_report, run_algorithm, sample_indices, step_cap};
use epsilon_qg::partitions::enumerate_partitions;
use epsilon_qg::rational::{int, ratio, zero};
use epsilon_qg::tensor::{lemma93_suite, loop_count, section94_suite};
use epsilon_qg::{Category, EpsilonMatrix, Permutation, Preset, Rational, SetPartition};

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)*) => {
        if !$cond {
            return Err(format!($($msg)*));
        }
    };
}

fn build(p: Preset) -> EpsilonMatrix {
    p.build().expect("preset builds")
}

fn sixteen_points() -> SetPartition {
    "{1,7,15}{2,5}{3,4}{6,10,16}{8,9}{11,13}{12,14}"
        .parse()
        .unwrap()
}

fn oracle_equivalence() -> Check {
    let presets = [
        Preset::Comm(3),
        Preset::Free(3),
        Preset::PairsIndep,
        Preset::PairsFree,
        Preset::Cycle5,
    ];
    let n = 3;
    let mut maps = 0;
    let mut vectors = 0;
    for preset in presets {
        let eps = build(preset);
        for cat in Category::ALL {
            for k in 0..=6 {
                let basis = common::words(n, k);
                for pi in enumerate_partitions(k, cat, false) {
                    let (_, op) = run_algorithm(&pi, &eps, cat, n)
                        .map_err(|e| format!("{preset} {pi}: {e}"))?;
                    let m = op.compose_factors().map_err(|e| e.to_string())?;
                    ensure!(
                        m.k_in() == k && m.k_out() == 0,
                        "{preset} {pi}: M_pi has the wrong degree"
                    );
                    for i in &basis {
                        let want = if common::nc_indicator(&pi, i, &eps, cat) {
                            int(1)
                        } else {
                            zero()
                        };
                        let got = m.get(i, &[]);
                        ensure!(
                            got == want,
                            "{preset} {cat} {pi} at {i:?}: M_pi = {got}, indicator {want}"
                        );
                    }
                    maps += 1;
                    vectors += basis.len();
                }
            }
        }
    }
    Ok(format!("{maps} maps, {vectors} basis vectors"))
}

fn sixteen_point_partition() -> Check {
    let pi = sixteen_points();
    let mut summary = Vec::new();
    for preset in [Preset::Comm(16), Preset::Free(16)] {
        let eps = build(preset);
        let (trace, op) = run_algorithm(&pi, &eps, Category::All, 2).map_err(|e| e.to_string())?;
        ensure!(
            trace.steps.len() <= step_cap(&pi),
            "{preset}: step cap exceeded"
        );
        let last = trace.partitions().last().copied().cloned().unwrap();
        ensure!(
            last.is_noncrossing(),
            "{preset}: final partition {last} crosses"
        );
        let samples = sample_indices(&pi, 2, 1000, 2024);
        let mut hits = 0;
        for s in &samples {
            let i: Vec<usize> = s.iter().map(|v| v + 1).collect();
            let want = common::nc_indicator(&pi, &i, &eps, Category::All);
            let got = op.eval0(s);
            ensure!(
                got == if want { int(1) } else { zero() },
                "{preset} at {i:?}: {got} vs {want}"
            );
            hits += usize::from(want);
        }
        if matches!(preset, Preset::Comm(_)) {
            ensure!(hits > 0, "{preset}: no sample lies in NC^eps[i]");
        }
        summary.push(format!(
            "{preset}: {} steps, {hits}/1000 nonzero",
            trace.steps.len()
        ));
    }
    Ok(summary.join("; "))
}

fn group_orders() -> Check {
    let exd = t_n_eps(&build(Preset::PairsIndep)).map_err(|e| e.to_string())?;
    let exe = t_n_eps(&build(Preset::PairsFree)).map_err(|e| e.to_string())?;
    ensure!(exd.order() == 8, "|T_4| for ex-d is {}", exd.order());
    ensure!(exe.order() == 8, "|T_4| for ex-e is {}", exe.order());
    for images in [[2, 1, 3, 4], [1, 2, 4, 3], [3, 4, 1, 2]] {
        let s = Permutation::new(images.to_vec()).unwrap();
        ensure!(exd.contains(&s), "ex-d group misses {}", s.cycles());
    }
    let t6 = t_n_eps(&build(Preset::Trivial6)).map_err(|e| e.to_string())?;
    ensure!(t6.order() == 1, "trivial6 group has order {}", t6.order());
    for n in 1..=5 {
        let fact: usize = (1..=n).product();
        for p in [Preset::Comm(n), Preset::Free(n)] {
            let g = t_n_eps(&build(p)).map_err(|e| e.to_string())?;
            ensure!(
                g.order() == fact,
                "{p}: order {} instead of {fact}",
                g.order()
            );
        }
    }
    Ok("8, 8, 1 and n! for n <= 5".into())
}

fn intertwiner_suites() -> Check {
    let presets = Preset::catalogue(5);
    let mut checks = 0;
    for p in &presets {
        let eps = build(*p);
        for report in [lemma93_suite(&eps), section94_suite(&eps)] {
            let report = report.map_err(|e| format!("{p}: {e}"))?;
            for c in &report.checks {
                ensure!(
                    c.passed(),
                    "{p} {} {}: {}",
                    report.suite,
                    c.name,
                    c.difference.as_ref().unwrap()
                );
            }
            checks += report.checks.len();
        }
    }
    let f = build(Preset::Cycle5);
    for i in 1..=5 {
        for k in 1..=5 {
            let lhs = (1..=5).filter(|&l| !f.get(i, l) && !f.get(l, k)).count();
            let rhs = usize::from(!f.get(i, k)) + usize::from(i == k) + 1;
            ensure!(
                lhs == rhs,
                "loop identity fails at ({i},{k}): {lhs} vs {rhs}"
            );
            ensure!(loop_count(&f, i, k) == lhs, "loop_count({i},{k}) disagrees");
        }
    }
    let loop_checked = section94_suite(&f)
        .unwrap()
        .checks
        .iter()
        .any(|c| c.name == "loop" && c.passed());
    ensure!(loop_checked, "ex-f suite lacks the loop identity");
    Ok(format!("{} presets, {checks} identities", presets.len()))
}

fn coxeter_representation() -> Check {
    let presets = Preset::catalogue(6);
    for p in &presets {
        let eps = build(*p);
        let report = check_coxeter_rep(&eps);
        ensure!(report.passed(), "{p}: {report:?}");
        let rep = coxeter_rep(&eps);
        let n = eps.n();
        let blocks = |k: usize| rep.generators[k - 1].0.clone();
        for k in 1..=n {
            let sq: Vec<_> = blocks(k).iter().map(|b| common::m2_mul(b, b)).collect();
            ensure!(
                sq.iter().all(|b| *b == [[1, 0], [0, 1]]),
                "{p}: z_{k}^2 is not 1"
            );
        }
        for i in 1..=n {
            for j in i + 1..=n {
                let commute = blocks(i)
                    .iter()
                    .zip(blocks(j).iter())
                    .all(|(x, y)| common::m2_mul(x, y) == common::m2_mul(y, x));
                ensure!(
                    commute == eps.get(i, j),
                    "{p}: z_{i}, z_{j} commute = {commute}"
                );
            }
        }
    }
    Ok(format!("{} presets", presets.len()))
}

fn two_projection_representation() -> Check {
    let u = two_projection_rep();
    let exd = build(Preset::PairsIndep);
    let report =
        rep_check(&u, &exd, &[Relation::Magic, Relation::RringEps]).map_err(|e| e.to_string())?;
    ensure!(report.passed(), "{report:?}");
    let one = Matrix::identity(2);
    for i in 1..=4 {
        let row = (1..=4).fold(Matrix::zero(2), |acc, j| &acc + u.u(i, j));
        let col = (1..=4).fold(Matrix::zero(2), |acc, j| &acc + u.u(j, i));
        ensure!(
            row == one && col == one,
            "row or column {i} does not sum to 1"
        );
        for j in 1..=4 {
            let x = u.u(i, j);
            ensure!(
                &(x * x) == x && &x.transpose() == x,
                "u_{i}{j} is not a projection"
            );
        }
    }
    let (u11, u33) = (u.u(1, 1), u.u(3, 3));
    ensure!(u11 * u33 != u33 * u11, "u11 and u33 commute");
    Ok("magic and Rring_eps hold; u11 u33 != u33 u11".into())
}

fn kappa_table(v: usize, s: usize) -> Rational {
    ratio((v as i64 + 1) * (s as i64) - 2, (s as i64) + 1)
}

fn moment_formula() -> Check {
    let mut words_checked = 0;
    for n in 1..=3 {
        let rows: Vec<Vec<Rational>> = (1..=n)
            .map(|v| (1..=6).map(|s| kappa_table(v, s)).collect())
            .collect();
        let spec = CumulantSpec::new(n, rows).map_err(|e| e.to_string())?;
        let comm = build(Preset::Comm(n));
        let free = build(Preset::Free(n));
        for k in 0..=6 {
            for w in common::words(n, k) {
                let i = MultiIndex::new(n, w.clone()).unwrap();
                if k <= 5 {
                    let got = moment(&i, &comm, &spec, Category::All).map_err(|e| e.to_string())?;
                    let want = common::classical_moment(&w, &kappa_table);
                    ensure!(got == want, "comm({n}) {w:?}: {got} vs {want}");
                }
                let got = moment(&i, &free, &spec, Category::All).map_err(|e| e.to_string())?;
                let want = common::free_moment(&w, &kappa_table);
                ensure!(got == want, "free({n}) {w:?}: {got} vs {want}");
                words_checked += 1;
            }
        }
    }
    for p in Preset::catalogue(6) {
        let eps = build(p);
        let n = eps.n();
        let rows: Vec<Vec<Rational>> = (1..=n)
            .map(|v| (1..=6).map(|s| kappa_table(v, s)).collect())
            .collect();
        let spec = CumulantSpec::new(n, rows).unwrap();
        for v in 1..=n {
            let m = common::single_moments(&|s| kappa_table(v, s), 6);
            for k in 0..=6 {
                let i = MultiIndex::new(n, vec![v; k]).unwrap();
                let got = moment(&i, &eps, &spec, Category::All).map_err(|e| e.to_string())?;
                ensure!(
                    got == m[k],
                    "{p}: single-variable moment x_{v}^{k} is {got}, expected {}",
                    m[k]
                );
            }
        }
    }
    let semi = CumulantSpec::semicircle(1);
    let one = build(Preset::Free(1));
    for k in 0..=8 {
        let got = moment(
            &MultiIndex::new(1, vec![1; k]).unwrap(),
            &one,
            &semi,
            Category::All,
        )
        .unwrap();
        let want = if k % 2 == 0 {
            common::catalan(k as u64 / 2)
        } else {
            zero()
        };
        ensure!(
            got == want,
            "semicircle moment {k} is {got}, expected {want}"
        );
    }
    Ok(format!("{words_checked} mixed words against the oracles"))
}

fn exchangeability_and_definetti() -> Check {
    let specs = |n: usize| {
        [
            ("semicircle", CumulantSpec::semicircle(n), Category::Pair),
            (
                "shifted",
                CumulantSpec::identical(n, vec![int(1), int(1)]),
                Category::OneTwo,
            ),
            (
                "even",
                CumulantSpec::identical(n, vec![int(0), int(1), int(0), int(2)]),
                Category::Even,
            ),
        ]
    };
    let presets = Preset::catalogue(6);
    let mut runs = 0;
    for p in &presets {
        let eps = build(*p);
        let n = eps.n();
        let max_k = if n <= 3 { 5 } else { 4 };
        for (name, spec, cat) in specs(n) {
            let ex = check_eps_exchangeability(&eps, &spec, max_k).map_err(|e| e.to_string())?;
            ensure!(ex.passed(), "{p} {name}: {:?}", ex.counterexample);
            for c in [cat, Category::All] {
                let r =
                    definetti_identity_report(&eps, c, &spec, max_k).map_err(|e| e.to_string())?;
                ensure!(r.passed(), "{p} {name} {c}: {:?}", r.counterexample);
                runs += 1;
            }
            for w in common::words(n, max_k.min(4)) {
                let i = MultiIndex::new(n, w).unwrap();
                let restricted = moment(&i, &eps, &spec, cat).unwrap();
                let full = moment(&i, &eps, &spec, Category::All).unwrap();
                ensure!(
                    restricted == full,
                    "{p} {name}: category {cat} changes the moment of {i}"
                );
            }
        }
    }
    Ok(format!(
        "{} presets, {runs} identity reports",
        presets.len()
    ))
}

fn permutation_matrix_equivalence() -> Check {
    let presets = Preset::catalogue(6);
    let mut perms = 0;
    for p in &presets {
        let eps = build(*p);
        let g = t_n_eps(&eps).map_err(|e| e.to_string())?;
        for images in common::permutations(eps.n()) {
            let s = Permutation::new(images.clone()).unwrap();
            let member = g.contains(&s);
            let r_eps = permutation_satisfies_r_eps(&s, &eps);
            let auto = common::preserves_eps(&images, &eps);
            ensure!(
                member == r_eps && member == auto,
                "{p} {}: member {member}, R_eps {r_eps}, automorphism {auto}",
                s.cycles()
            );
            perms += 1;
        }
    }
    Ok(format!(
        "{perms} permutations over {} presets",
        presets.len()
    ))
}

fn random_word(rng: &mut StdRng, n: usize) -> Vec<usize> {
    let len = rng.gen_range(0..=12);
    (0..len).map(|_| rng.gen_range(1..=n)).collect()
}

// One defining move: insert or delete `aa`, or swap adjacent commuting letters.
fn elementary_move(rng: &mut StdRng, w: &[usize], eps: &EpsilonMatrix) -> Vec<usize> {
    let mut v = w.to_vec();
    match rng.gen_range(0..3) {
        0 => {
            let a = rng.gen_range(1..=eps.n());
            let pos = rng.gen_range(0..=v.len());
            v.splice(pos..pos, [a, a]);
        }
        1 => {
            if let Some(pos) = (0..v.len().saturating_sub(1)).find(|&p| v[p] == v[p + 1]) {
                v.drain(pos..pos + 2);
            }
        }
        _ => {
            let swaps: Vec<usize> = (0..v.len().saturating_sub(1))
                .filter(|&p| eps.get(v[p], v[p + 1]))
                .collect();
            if !swaps.is_empty() {
                let p = swaps[rng.gen_range(0..swaps.len())];
                v.swap(p, p + 1);
            }
        }
    }
    v
}

fn word_problem() -> Check {
    let presets = Preset::catalogue(5);
    let mut rng = StdRng::seed_from_u64(10_000);
    let mut equal_pairs = 0;
    for t in 0..10_000 {
        let p = presets[t % presets.len()];
        let eps = build(p);
        let n = eps.n();
        let rep = coxeter_rep(&eps);
        let word = |v: Vec<usize>| Word::new(n, v).unwrap();
        let raw = random_word(&mut rng, n);
        let w = word(raw.clone());
        let nf = normal_form(&w, &eps);
        ensure!(
            normal_form(&nf, &eps) == nf,
            "{p}: normal form of {w} is not stable"
        );
        ensure!(
            nf.len() <= w.len() && (w.len() - nf.len()).is_multiple_of(2),
            "{p}: {w} -> {nf} changes parity"
        );
        ensure!(
            rep.eval(&w) == rep.eval(&nf),
            "{p}: {w} and its normal form {nf} differ under sigma_eps"
        );
        let mut moved = raw.clone();
        for _ in 0..rng.gen_range(1..=4) {
            moved = elementary_move(&mut rng, &moved, &eps);
        }
        let m = word(moved);
        ensure!(
            normal_form(&m, &eps) == nf,
            "{p}: {w} and {m} are congruent but have different normal forms"
        );
        ensure!(word_equal(&w, &m, &eps), "{p}: word_equal misses {w} = {m}");
        let suffix = random_word(&mut rng, n);
        let joined = word([raw.clone(), suffix.clone()].concat());
        let joined_nf = word([nf.letters().to_vec(), suffix].concat());
        ensure!(
            normal_form(&joined, &eps) == normal_form(&joined_nf, &eps),
            "{p}: normal form is not a congruence on {joined}"
        );
        let other = word(random_word(&mut rng, n));
        if word_equal(&w, &other, &eps) {
            equal_pairs += 1;
            ensure!(
                rep.eval(&w) == rep.eval(&other),
                "{p}: {w} = {other} but sigma_eps separates them"
            );
        }
    }
    Ok(format!(
        "10000 words over {} presets, {equal_pairs} random equal pairs",
        presets.len()
    ))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("M_pi oracle equivalence", oracle_equivalence),
        (
            "sixteen-point partition end to end",
            sixteen_point_partition,
        ),
        ("automorphism group orders", group_orders),
        ("intertwiner identity suites", intertwiner_suites),
        ("Coxeter representation", coxeter_representation),
        (
            "two-projection representation",
            two_projection_representation,
        ),
        ("moment formula cross-checks", moment_formula),
        (
            "epsilon-exchangeability and de Finetti identity",
            exchangeability_and_definetti,
        ),
        (
            "T_n^eps versus permutation-matrix R_eps",
            permutation_matrix_equivalence,
        ),
        ("word problem consistency", word_problem),
    ];
    let mut failures = 0;
    for (number, (name, check)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome = panic::catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {:>2}. {name} ({detail}; {secs:.1}s)", number + 1),
            Err(why) => {
                failures += 1;
                println!("FAIL {:>2}. {name}: {why} ({secs:.1}s)", number + 1);
            }
        }
    }
    if failures > 0 {
        std::process::exit(1);
    }
}
