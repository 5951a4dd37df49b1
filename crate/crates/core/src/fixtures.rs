//! A battery of small worked examples with known answers, used by the
//! `paper-examples` command and the integration tests.

use crate::cumulants::{check_eps_exchangeability, moment, CumulantSpec};
use crate::eps::{EpsilonMatrix, MultiIndex, Permutation, Preset};
use crate::error::Result;
use crate::groups::{
    check_coxeter_rep, mul2, permutation_satisfies_r_eps, rep_check, t_n_eps, two_projection_rep,
    word_reduce, Relation, Word, A, B,
};
use crate::mpi::{run_algorithm, verify_oracle, StepKind};
use crate::partitions::{
    enumerate_partitions, find_case2_index, find_noncrossing_subpartition, named, nc_eps_set,
    Category, SetPartition,
};
use crate::rational::{self, Rational};
use crate::tensor::{lemma93_suite, loop_count, section94_suite, t_pi};

/// Outcome of one example: `None` when it holds, otherwise what went wrong.
pub type Outcome = Result<Option<String>>;

pub struct Fixture {
    pub name: &'static str,
    pub run: fn() -> Outcome,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixtureResult {
    pub name: &'static str,
    pub failure: Option<String>,
}

impl FixtureResult {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

fn expect<T: PartialEq + std::fmt::Debug>(got: T, want: T) -> Option<String> {
    (got != want).then(|| format!("got {got:?}, expected {want:?}"))
}

fn all(checks: impl IntoIterator<Item = Option<String>>) -> Option<String> {
    checks.into_iter().flatten().next()
}

fn p(s: &str) -> Result<SetPartition> {
    s.parse()
}

fn idx(n: usize, v: &[usize]) -> Result<MultiIndex> {
    MultiIndex::new(n, v.to_vec())
}

fn sixteen_points() -> Result<SetPartition> {
    p("{1,7,15}{2,5}{3,4}{6,10,16}{8,9}{11,13}{12,14}")
}

fn presets() -> Outcome {
    let f = Preset::Cycle5.build()?;
    let t = Preset::Trivial6.build()?;
    let rejected = EpsilonMatrix::new(2, &[vec![0, 1], vec![0, 0]]).is_err();
    Ok(all([
        expect(
            f.rows(),
            vec![
                vec![0, 0, 1, 1, 0],
                vec![0, 0, 0, 1, 1],
                vec![1, 0, 0, 0, 1],
                vec![1, 1, 0, 0, 0],
                vec![0, 1, 1, 0, 0],
            ],
        ),
        expect(t.rows()[0].clone(), vec![0, 0, 1, 0, 0, 0]),
        expect(Preset::Free(3).build()?.rows(), vec![vec![0; 3]; 3]),
        expect(rejected, true),
    ]))
}

fn kernels() -> Outcome {
    Ok(all([
        expect(idx(3, &[3, 1, 3])?.ker(), p("{1,3}{2}")?),
        expect(idx(1, &[1, 1, 1, 1])?.ker(), p("{1,2,3,4}")?),
        expect(idx(2, &[1, 2, 1, 2])?.ker(), p("{1,3}{2,4}")?),
    ]))
}

fn enumeration() -> Outcome {
    Ok(all([
        expect(enumerate_partitions(4, Category::All, false).len(), 15),
        expect(enumerate_partitions(4, Category::All, true).len(), 14),
        expect(
            enumerate_partitions(4, Category::Pair, true),
            vec![p("{1,2}{3,4}")?, p("{1,4}{2,3}")?],
        ),
    ]))
}

fn nc_sets() -> Outcome {
    let comm2 = Preset::Comm(2).build()?;
    let mut checks = vec![expect(
        nc_eps_set(&idx(2, &[1, 2, 1, 2])?, &comm2, Category::Pair)?,
        vec![p("{1,3}{2,4}")?],
    )];
    for preset in [Preset::Comm(2), Preset::Free(2), Preset::Cycle5] {
        let eps = preset.build()?;
        let n = eps.n();
        checks.push(expect(
            nc_eps_set(&idx(n, &[1, 1, 1, 1])?, &eps, Category::All)?.len(),
            14,
        ));
    }
    Ok(all(checks))
}

fn moments() -> Outcome {
    let semi = CumulantSpec::semicircle(2);
    let comm = Preset::Comm(2).build()?;
    let free = Preset::Free(2).build()?;
    let xyxy = idx(2, &[1, 2, 1, 2])?;
    Ok(all([
        expect(
            moment(&xyxy, &comm, &semi, Category::All)?,
            rational::int(1),
        ),
        expect(
            moment(&xyxy, &free, &semi, Category::All)?,
            rational::int(0),
        ),
        expect(
            moment(&idx(2, &[1, 1, 1, 1])?, &free, &semi, Category::All)?,
            rational::int(2),
        ),
    ]))
}

fn exchangeability() -> Outcome {
    let r = check_eps_exchangeability(
        &Preset::PairsIndep.build()?,
        &CumulantSpec::semicircle(4),
        4,
    )?;
    Ok(all([
        expect(r.group_order, 8),
        r.counterexample
            .map(|c| format!("moment changed on {}", c.index)),
    ]))
}

fn automorphism_groups() -> Outcome {
    let mut checks = vec![
        expect(t_n_eps(&Preset::PairsIndep.build()?)?.order(), 8),
        expect(t_n_eps(&Preset::PairsFree.build()?)?.order(), 8),
        expect(t_n_eps(&Preset::Trivial6.build()?)?.order(), 1),
    ];
    for n in 1..=5 {
        let factorial: usize = (1..=n).product();
        checks.push(expect(
            t_n_eps(&Preset::Comm(n).build()?)?.order(),
            factorial,
        ));
        checks.push(expect(
            t_n_eps(&Preset::Free(n).build()?)?.order(),
            factorial,
        ));
    }
    Ok(all(checks))
}

fn permutation_relations() -> Outcome {
    let exd = Preset::PairsIndep.build()?;
    Ok(all([
        expect(
            permutation_satisfies_r_eps(&Permutation::identity(4), &exd),
            true,
        ),
        expect(
            permutation_satisfies_r_eps(&Permutation::new(vec![2, 1, 3, 4])?, &exd),
            true,
        ),
        expect(
            permutation_satisfies_r_eps(&Permutation::new(vec![1, 3, 2, 4])?, &exd),
            false,
        ),
    ]))
}

fn coxeter() -> Outcome {
    let mut checks = vec![
        expect(mul2(&A, &B), [[0, -1], [1, 0]]),
        expect(mul2(&A, &B) == mul2(&B, &A), false),
    ];
    for preset in Preset::catalogue(6) {
        let r = check_coxeter_rep(&preset.build()?);
        checks.push((!r.passed()).then(|| format!("{preset}: {r:?}")));
    }
    Ok(all(checks))
}

fn words() -> Outcome {
    let comm = Preset::Comm(2).build()?;
    let free = Preset::Free(2).build()?;
    let w = |v: &[usize]| Word::new(2, v.to_vec());
    Ok(all([
        expect(word_reduce(&w(&[1, 1])?, &free), w(&[])?),
        expect(word_reduce(&w(&[1, 2, 1])?, &comm), w(&[2])?),
        expect(word_reduce(&w(&[1, 2, 1])?, &free), w(&[1, 2, 1])?),
    ]))
}

fn two_projections() -> Outcome {
    let u = two_projection_rep();
    let r = rep_check(
        &u,
        &Preset::PairsIndep.build()?,
        &[Relation::Magic, Relation::RringEps],
    )?;
    Ok(all([
        (!r.passed()).then(|| format!("{r:?}")),
        expect(u.u(1, 1) * u.u(3, 3) == u.u(3, 3) * u.u(1, 1), false),
    ]))
}

fn partition_maps() -> Outcome {
    let paar = t_pi(&named::paar(), 2);
    let loop3 = t_pi(&named::baar(), 3).compose(&t_pi(&named::paar(), 3))?;
    Ok(all([
        expect(
            paar.apply_basis(&[]),
            vec![(vec![1, 1], rational::one()), (vec![2, 2], rational::one())],
        ),
        expect(loop3.get(&[], &[]), rational::int(3)),
        expect(paar.adjoint(), t_pi(&named::baar(), 2)),
    ]))
}

fn identity_suites() -> Outcome {
    let mut checks = Vec::new();
    for preset in [Preset::Free(3), Preset::Comm(4), Preset::Cycle5] {
        let eps = preset.build()?;
        for report in [lemma93_suite(&eps)?, section94_suite(&eps)?] {
            checks.push((!report.passed()).then(|| format!("{preset}: {report:?}")));
        }
    }
    let f = Preset::Cycle5.build()?;
    checks.push(expect(
        [
            loop_count(&f, 1, 1),
            loop_count(&f, 1, 2),
            loop_count(&f, 1, 3),
        ],
        [3, 2, 1],
    ));
    Ok(all(checks))
}

fn subpartitions() -> Outcome {
    let sub = |s: &str| -> Result<Option<(SetPartition, usize, usize)>> {
        Ok(find_noncrossing_subpartition(&p(s)?).map(|x| (x.sigma, x.start, x.end)))
    };
    let big = sixteen_points()?;
    Ok(all([
        expect(sub("{1,3}{2,4}")?, None),
        expect(sub("{1,4}{2,3}")?, Some((p("{1,2}")?, 2, 3))),
        expect(
            find_noncrossing_subpartition(&big).map(|x| (x.sigma, x.start, x.end)),
            Some((p("{1,4}{2,3}")?, 2, 5)),
        ),
        expect(find_case2_index(&p("{1,3}{2,4}")?), Some(2)),
        expect(find_case2_index(&p("{1,2}")?), None),
    ]))
}

fn reduction() -> Outcome {
    let eps = EpsilonMatrix::new(2, &[vec![0, 1], vec![1, 0]])?;
    let (trace, op) = run_algorithm(&p("{1,3}{2,4}")?, &eps, Category::Pair, 2)?;
    let mut checks = vec![expect(
        trace.steps[0].kind.clone(),
        StepKind::Case2 { l: 2 },
    )];
    for a in 1..=2 {
        for b in 1..=2 {
            let want = if a != b {
                rational::one()
            } else {
                Rational::from_integer(0.into())
            };
            checks.push(expect(op.eval(&idx(2, &[a, b, a, b])?), want));
        }
    }
    let (trace, _) = run_algorithm(
        &sixteen_points()?,
        &Preset::Free(16).build()?,
        Category::All,
        2,
    )?;
    checks.push(expect(trace.steps.last().map(|s| s.points), Some(0)));
    let r = verify_oracle(
        &p("{1,3}{2,4}")?,
        &Preset::Free(2).build()?,
        Category::Pair,
        2,
    )?;
    checks.push((!r.passed()).then(|| format!("{r:?}")));
    Ok(all(checks))
}

pub fn fixtures() -> Vec<Fixture> {
    vec![
        Fixture {
            name: "epsilon presets",
            run: presets,
        },
        Fixture {
            name: "kernels of multi-indices",
            run: kernels,
        },
        Fixture {
            name: "partition counts",
            run: enumeration,
        },
        Fixture {
            name: "epsilon-noncrossing sets",
            run: nc_sets,
        },
        Fixture {
            name: "semicircle moments",
            run: moments,
        },
        Fixture {
            name: "exchangeability on ex-d",
            run: exchangeability,
        },
        Fixture {
            name: "automorphism group orders",
            run: automorphism_groups,
        },
        Fixture {
            name: "permutation matrices and R_eps",
            run: permutation_relations,
        },
        Fixture {
            name: "Coxeter representation",
            run: coxeter,
        },
        Fixture {
            name: "word reduction",
            run: words,
        },
        Fixture {
            name: "two-projection representation",
            run: two_projections,
        },
        Fixture {
            name: "partition maps",
            run: partition_maps,
        },
        Fixture {
            name: "intertwiner identities",
            run: identity_suites,
        },
        Fixture {
            name: "subpartitions and Case-2 index",
            run: subpartitions,
        },
        Fixture {
            name: "M_pi reduction",
            run: reduction,
        },
    ]
}

/// Runs every fixture; errors count as failures.
pub fn run_all() -> Vec<FixtureResult> {
    fixtures()
        .into_iter()
        .map(|f| FixtureResult {
            name: f.name,
            failure: match (f.run)() {
                Ok(outcome) => outcome,
                Err(e) => Some(format!("error: {e}")),
            },
        })
        .collect()
}
