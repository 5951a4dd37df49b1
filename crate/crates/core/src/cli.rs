//! The `eps` command line.
//!
//! Exit status: 0 on success, 1 when a verification fails (a counterexample is
//! printed), 2 on usage, parse or parameter errors.

use std::fmt::Display;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::cumulants::{check_eps_exchangeability, moment, CumulantSpec};
use crate::eps::{EpsilonMatrix, MultiIndex, Permutation, Preset};
use crate::error::Error;
use crate::fixtures;
use crate::groups::{
    check_coxeter_rep, normal_form, permutation_rep, rep_check, t_n_eps_bounded,
    two_projection_rep, word_equal, word_reduce, Relation, Representation, Word, DEFAULT_BOUND,
};
use crate::mpi::{
    check_steps, definetti_identity_report, run_algorithm, sample_indices, verify_oracle,
    verify_oracle_on, AlgorithmTrace, StepKind,
};
use crate::partitions::{enumerate_partitions, nc_eps_set, Category, SetPartition};
use crate::rational::{self, Rational};
use crate::tensor::{lemma93_suite, section94_suite, Difference, SuiteReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "eps",
    version,
    about = "Epsilon-mixed quantum symmetry toolkit"
)]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Args, Debug, Clone)]
struct EpsArgs {
    /// comm, free, block, ex-d, ex-e, ex-f, trivial6 (sizes via --n/--m or `comm:3`).
    #[arg(
        long,
        required_unless_present = "eps_file",
        conflicts_with = "eps_file"
    )]
    preset: Option<String>,
    /// An epsilon matrix in the text format.
    #[arg(long)]
    eps_file: Option<PathBuf>,
    /// Preset size; for `mpi` also the base dimension.
    #[arg(long)]
    n: Option<usize>,
    /// Second size parameter of `block`.
    #[arg(long)]
    m: Option<usize>,
}

#[derive(Args, Debug, Clone)]
struct KappaArg {
    /// semicircle | file:PATH | row:k1,k2,...
    #[arg(long, default_value = "semicircle")]
    kappa: String,
}

#[derive(Subcommand, Debug)]
enum Verb {
    /// Print an epsilon matrix.
    ShowEps {
        #[command(flatten)]
        eps: EpsArgs,
    },
    /// List the partitions of k points in a category.
    Partitions {
        #[arg(long)]
        k: usize,
        #[arg(long, default_value = "all")]
        cat: Category,
        /// Keep only noncrossing partitions.
        #[arg(long)]
        noncrossing: bool,
    },
    /// List NC_C^eps[i].
    Ncset {
        #[command(flatten)]
        eps: EpsArgs,
        #[arg(long)]
        index: String,
        #[arg(long, default_value = "all")]
        cat: Category,
    },
    /// The mixed moment of x_{i(1)}...x_{i(k)}.
    Moment {
        #[command(flatten)]
        eps: EpsArgs,
        #[arg(long)]
        index: String,
        #[arg(long, default_value = "all")]
        cat: Category,
        #[command(flatten)]
        kappa: KappaArg,
    },
    /// Check invariance of all moments under T_n^eps.
    Exchangeability {
        #[command(flatten)]
        eps: EpsArgs,
        #[command(flatten)]
        kappa: KappaArg,
        #[arg(long, default_value_t = 4)]
        max_k: usize,
    },
    /// The automorphism group T_n^eps.
    Tneps {
        #[command(flatten)]
        eps: EpsArgs,
        #[arg(long, default_value_t = DEFAULT_BOUND)]
        bound: usize,
    },
    /// Check the 2x2-block representation of the Coxeter group.
    CoxeterCheck {
        #[command(flatten)]
        eps: EpsArgs,
    },
    /// Reduce a word in the generators z_1..z_n, or compare two words.
    Word {
        #[command(flatten)]
        eps: EpsArgs,
        /// Comma-separated generator numbers; empty for the identity.
        #[arg(long, allow_hyphen_values = true)]
        word: String,
        #[arg(long)]
        other: Option<String>,
    },
    /// Check relation families on a concrete fundamental matrix.
    RepCheck {
        #[command(flatten)]
        eps: EpsArgs,
        /// two-projections | permutation:s1,...,sn | file:PATH
        #[arg(long)]
        rep: String,
        /// Comma-separated relation tags; all when omitted.
        #[arg(long)]
        relations: Option<String>,
    },
    /// Run the intertwiner identity suites.
    IntertwinerSuite {
        #[command(flatten)]
        eps: EpsArgs,
    },
    /// The M_pi reduction.
    Mpi {
        #[command(subcommand)]
        action: MpiAction,
    },
    /// Check the cumulant rewrite of moments through M_pi.
    Definetti {
        #[command(flatten)]
        eps: EpsArgs,
        #[arg(long, default_value = "all")]
        cat: Category,
        #[command(flatten)]
        kappa: KappaArg,
        #[arg(long, default_value_t = 4)]
        max_k: usize,
    },
    /// Run the battery of worked examples.
    PaperExamples,
}

#[derive(Subcommand, Debug)]
enum MpiAction {
    /// Print the reduction steps for one partition.
    Run {
        #[command(flatten)]
        eps: EpsArgs,
        #[arg(long)]
        partition: String,
        #[arg(long, default_value = "all")]
        cat: Category,
        /// Also evaluate M_pi(e_i).
        #[arg(long)]
        index: Option<String>,
    },
    /// Compare M_pi with the noncrossing indicator.
    Verify {
        #[command(flatten)]
        eps: EpsArgs,
        /// A single partition; otherwise every partition in the category with
        /// at most --k points.
        #[arg(long)]
        partition: Option<String>,
        #[arg(long, default_value = "all")]
        cat: Category,
        #[arg(long, default_value_t = 4)]
        k: usize,
        /// Check this many sampled basis vectors instead of all of them.
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Debug)]
enum CliError {
    Lib(Error),
    Usage(String),
    Io(io::Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Lib(e)
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

impl Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Lib(e) => write!(f, "{e}"),
            CliError::Usage(s) => f.write_str(s),
            CliError::Io(e) => write!(f, "{e}"),
        }
    }
}

type CliResult = Result<i32, CliError>;

/// Parses `args` (including the program name) and runs the command, writing
/// results to `out` and diagnostics to `err`. Returns the exit status.
pub fn run<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match dispatch(&cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

pub fn main() -> ExitCode {
    let stdout = io::stdout();
    let stderr = io::stderr();
    let code = run(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock());
    ExitCode::from(code as u8)
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> CliResult {
    let json = cli.json;
    match &cli.verb {
        Verb::ShowEps { eps } => show_eps(&load_eps(eps)?, json, out),
        Verb::Partitions {
            k,
            cat,
            noncrossing,
        } => partitions(*k, *cat, *noncrossing, json, out),
        Verb::Ncset { eps, index, cat } => ncset(&load_eps(eps)?, index, *cat, json, out),
        Verb::Moment {
            eps,
            index,
            cat,
            kappa,
        } => {
            let e = load_eps(eps)?;
            let spec = load_kappa(&kappa.kappa, e.n())?;
            moment_cmd(&e, index, *cat, &spec, json, out)
        }
        Verb::Exchangeability { eps, kappa, max_k } => {
            let e = load_eps(eps)?;
            let spec = load_kappa(&kappa.kappa, e.n())?;
            exchangeability(&e, &spec, *max_k, json, out)
        }
        Verb::Tneps { eps, bound } => tneps(&load_eps(eps)?, *bound, json, out),
        Verb::CoxeterCheck { eps } => coxeter(&load_eps(eps)?, json, out),
        Verb::Word { eps, word, other } => {
            word_cmd(&load_eps(eps)?, word, other.as_deref(), json, out)
        }
        Verb::RepCheck {
            eps,
            rep,
            relations,
        } => rep_cmd(&load_eps(eps)?, rep, relations.as_deref(), json, out),
        Verb::IntertwinerSuite { eps } => suites(&load_eps(eps)?, json, out),
        Verb::Mpi { action } => match action {
            MpiAction::Run {
                eps,
                partition,
                cat,
                index,
            } => {
                let e = load_eps(eps)?;
                mpi_run(
                    &e,
                    eps.n.unwrap_or(e.n()),
                    partition,
                    *cat,
                    index.as_deref(),
                    json,
                    out,
                )
            }
            MpiAction::Verify {
                eps,
                partition,
                cat,
                k,
                samples,
                seed,
            } => {
                let e = load_eps(eps)?;
                let opts = VerifyOpts {
                    n: eps.n.unwrap_or(e.n()),
                    cat: *cat,
                    k: *k,
                    samples: *samples,
                    seed: *seed,
                };
                mpi_verify(&e, partition.as_deref(), &opts, json, out)
            }
        },
        Verb::Definetti {
            eps,
            cat,
            kappa,
            max_k,
        } => {
            let e = load_eps(eps)?;
            let spec = load_kappa(&kappa.kappa, e.n())?;
            definetti(&e, *cat, &spec, *max_k, json, out)
        }
        Verb::PaperExamples => paper_examples(json, out),
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))
}

fn load_eps(args: &EpsArgs) -> Result<EpsilonMatrix, CliError> {
    match (&args.preset, &args.eps_file) {
        (Some(name), _) => Ok(Preset::parse(name, args.n, args.m)?.build()?),
        (None, Some(path)) => Ok(EpsilonMatrix::parse_text(&read(path)?)?),
        (None, None) => Err(CliError::Usage(
            "one of --preset or --eps-file is required".into(),
        )),
    }
}

fn load_kappa(arg: &str, n: usize) -> Result<CumulantSpec, CliError> {
    let spec = if arg == "semicircle" {
        CumulantSpec::semicircle(n)
    } else if let Some(path) = arg.strip_prefix("file:") {
        CumulantSpec::from_json(&read(Path::new(path))?)?
    } else if let Some(row) = arg.strip_prefix("row:") {
        let row = row
            .split(',')
            .map(|t| rational::parse(t.trim()))
            .collect::<Result<Vec<_>, _>>()?;
        CumulantSpec::identical(n, row)
    } else {
        return Err(CliError::Usage(format!(
            "--kappa must be semicircle, file:PATH or row:k1,k2,..., got `{arg}`"
        )));
    };
    if spec.n() != n {
        return Err(Error::DimensionMismatch(format!(
            "cumulants are given for {} variables, epsilon has {n}",
            spec.n()
        ))
        .into());
    }
    Ok(spec)
}

fn load_rep(arg: &str) -> Result<Representation, CliError> {
    if arg == "two-projections" {
        Ok(two_projection_rep())
    } else if let Some(images) = arg.strip_prefix("permutation:") {
        let images = images
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| CliError::Usage(format!("bad permutation entry `{t}`")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(permutation_rep(&Permutation::new(images)?))
    } else if let Some(path) = arg.strip_prefix("file:") {
        Ok(Representation::from_json(&read(Path::new(path))?)?)
    } else {
        Err(CliError::Usage(format!(
            "--rep must be two-projections, permutation:..., or file:PATH, got `{arg}`"
        )))
    }
}

fn status(passed: bool) -> i32 {
    if passed {
        EXIT_OK
    } else {
        EXIT_FAIL
    }
}

fn verdict(passed: bool) -> &'static str {
    if passed {
        "PASS"
    } else {
        "FAIL"
    }
}

fn emit_json(out: &mut dyn Write, v: &Value) -> io::Result<()> {
    writeln!(
        out,
        "{}",
        serde_json::to_string_pretty(v).expect("json values serialize")
    )
}

fn q(r: &Rational) -> String {
    rational::format(r)
}

fn strings<T: Display>(items: &[T]) -> Vec<String> {
    items.iter().map(ToString::to_string).collect()
}

fn show_eps(eps: &EpsilonMatrix, json: bool, out: &mut dyn Write) -> CliResult {
    if json {
        emit_json(out, &json!({ "n": eps.n(), "rows": eps.rows() }))?;
    } else {
        write!(out, "{}", eps.to_text())?;
    }
    Ok(EXIT_OK)
}

fn partitions(k: usize, cat: Category, nc: bool, json: bool, out: &mut dyn Write) -> CliResult {
    let list = enumerate_partitions(k, cat, nc);
    if json {
        emit_json(
            out,
            &json!({
                "k": k,
                "category": cat.name(),
                "noncrossing_only": nc,
                "count": list.len(),
                "partitions": strings(&list),
            }),
        )?;
    } else {
        for p in &list {
            writeln!(out, "{p}")?;
        }
        writeln!(out, "count {}", list.len())?;
    }
    Ok(EXIT_OK)
}

fn ncset(
    eps: &EpsilonMatrix,
    index: &str,
    cat: Category,
    json: bool,
    out: &mut dyn Write,
) -> CliResult {
    let i = MultiIndex::parse_csv(eps.n(), index)?;
    let set = nc_eps_set(&i, eps, cat)?;
    if json {
        emit_json(
            out,
            &json!({
                "index": i.values(),
                "category": cat.name(),
                "count": set.len(),
                "partitions": strings(&set),
            }),
        )?;
    } else {
        for p in &set {
            writeln!(out, "{p}")?;
        }
        writeln!(out, "count {}", set.len())?;
    }
    Ok(EXIT_OK)
}

fn moment_cmd(
    eps: &EpsilonMatrix,
    index: &str,
    cat: Category,
    spec: &CumulantSpec,
    json: bool,
    out: &mut dyn Write,
) -> CliResult {
    let i = MultiIndex::parse_csv(eps.n(), index)?;
    let m = moment(&i, eps, spec, cat)?;
    if json {
        emit_json(
            out,
            &json!({ "index": i.values(), "category": cat.name(), "moment": q(&m) }),
        )?;
    } else {
        writeln!(out, "{}", q(&m))?;
    }
    Ok(EXIT_OK)
}

fn exchangeability(
    eps: &EpsilonMatrix,
    spec: &CumulantSpec,
    max_k: usize,
    json: bool,
    out: &mut dyn Write,
) -> CliResult {
    let r = check_eps_exchangeability(eps, spec, max_k)?;
    if json {
        let ce = r.counterexample.as_ref().map(|c| {
            json!({
                "index": c.index.values(),
                "sigma": c.sigma.images(),
                "moment": q(&c.moment),
                "relabelled_moment": q(&c.relabelled_moment),
            })
        });
        emit_json(
            out,
            &json!({
                "passed": r.passed(),
                "group_order": r.group_order,
                "words_checked": r.words_checked,
                "counterexample": ce,
            }),
        )?;
    } else {
        writeln!(
            out,
            "group order {}, {} words checked",
            r.group_order, r.words_checked
        )?;
        if let Some(c) = &r.counterexample {
            writeln!(
                out,
                "counterexample: sigma {} on {}: {} vs {}",
                c.sigma.cycles(),
                c.index,
                q(&c.moment),
                q(&c.relabelled_moment)
            )?;
        }
        writeln!(out, "{}", verdict(r.passed()))?;
    }
    Ok(status(r.passed()))
}

fn perm_line(p: &Permutation) -> String {
    let images: Vec<String> = strings(p.images());
    format!("{}  {}", images.join(" "), p.cycles())
}

fn tneps(eps: &EpsilonMatrix, bound: usize, json: bool, out: &mut dyn Write) -> CliResult {
    let g = t_n_eps_bounded(eps, bound)?;
    if json {
        emit_json(out, &g.to_json())?;
    } else {
        writeln!(out, "order {}", g.order())?;
        let gens: Vec<String> = g.generators().iter().map(Permutation::cycles).collect();
        writeln!(out, "generators {}", gens.join(" "))?;
        for p in g.elements() {
            writeln!(out, "{}", perm_line(p))?;
        }
    }
    Ok(EXIT_OK)
}

fn coxeter(eps: &EpsilonMatrix, json: bool, out: &mut dyn Write) -> CliResult {
    let r = check_coxeter_rep(eps);
    if json {
        emit_json(
            out,
            &json!({
                "n": r.n,
                "passed": r.passed(),
                "not_involutions": r.not_involutions,
                "pattern_mismatches": r.pattern_mismatches,
                "commuting_pairs": r.commuting_pairs,
            }),
        )?;
    } else {
        writeln!(out, "generators {}, all 2x2 blocks", r.n)?;
        let pairs: Vec<String> = r
            .commuting_pairs
            .iter()
            .map(|(i, j)| format!("({i},{j})"))
            .collect();
        writeln!(out, "commuting pairs {}", pairs.join(" "))?;
        if !r.not_involutions.is_empty() {
            writeln!(out, "not involutions {:?}", r.not_involutions)?;
        }
        if !r.pattern_mismatches.is_empty() {
            writeln!(out, "pattern mismatches {:?}", r.pattern_mismatches)?;
        }
        writeln!(out, "{}", verdict(r.passed()))?;
    }
    Ok(status(r.passed()))
}

fn word_cmd(
    eps: &EpsilonMatrix,
    word: &str,
    other: Option<&str>,
    json: bool,
    out: &mut dyn Write,
) -> CliResult {
    let w = Word::parse_csv(eps.n(), word)?;
    let reduced = word_reduce(&w, eps);
    let normal = normal_form(&w, eps);
    let other = other.map(|o| Word::parse_csv(eps.n(), o)).transpose()?;
    let equal = other.as_ref().map(|o| word_equal(&w, o, eps));
    if json {
        emit_json(
            out,
            &json!({
                "word": w.letters(),
                "reduced": reduced.letters(),
                "normal_form": normal.letters(),
                "is_identity": normal.is_empty(),
                "other": other.as_ref().map(|o| o.letters().to_vec()),
                "equal": equal,
            }),
        )?;
    } else {
        writeln!(out, "reduced {reduced}")?;
        writeln!(out, "normal form {normal}")?;
        if let (Some(o), Some(eq)) = (&other, equal) {
            writeln!(out, "{w} {} {o}", if eq { "=" } else { "!=" })?;
        }
    }
    Ok(EXIT_OK)
}

fn rep_cmd(
    eps: &EpsilonMatrix,
    rep: &str,
    relations: Option<&str>,
    json: bool,
    out: &mut dyn Write,
) -> CliResult {
    let u = load_rep(rep)?;
    let rels = match relations {
        None => Relation::ALL.to_vec(),
        Some(csv) => csv
            .split(',')
            .map(str::parse)
            .collect::<Result<Vec<Relation>, _>>()?,
    };
    let r = rep_check(&u, eps, &rels)?;
    if json {
        let results: Vec<Value> = r
            .results
            .iter()
            .map(|res| {
                json!({
                    "relation": res.relation.tag(),
                    "passed": res.violation.is_none(),
                    "violation": res.violation.as_ref().map(|v| json!({
                        "indices": v.indices,
                        "detail": v.detail,
                    })),
                })
            })
            .collect();
        emit_json(
            out,
            &json!({ "n": u.n(), "d": u.d(), "passed": r.passed(), "results": results }),
        )?;
    } else {
        for res in &r.results {
            match &res.violation {
                None => writeln!(out, "{:<24} holds", res.relation.tag())?,
                Some(v) => writeln!(
                    out,
                    "{:<24} fails at {:?}: {}",
                    res.relation.tag(),
                    v.indices,
                    v.detail
                )?,
            }
        }
        writeln!(out, "{}", verdict(r.passed()))?;
    }
    Ok(status(r.passed()))
}

fn difference_json(d: &Difference) -> Value {
    json!({ "input": d.input, "output": d.output, "left": q(&d.left), "right": q(&d.right) })
}

fn suite_json(s: &SuiteReport) -> Value {
    let checks: Vec<Value> = s
        .checks
        .iter()
        .map(|c| {
            json!({
                "name": c.name,
                "statement": c.statement,
                "passed": c.passed(),
                "difference": c.difference.as_ref().map(difference_json),
            })
        })
        .collect();
    json!({ "suite": s.suite, "passed": s.passed(), "checks": checks })
}

fn suites(eps: &EpsilonMatrix, json: bool, out: &mut dyn Write) -> CliResult {
    let reports = [lemma93_suite(eps)?, section94_suite(eps)?];
    let passed = reports.iter().all(SuiteReport::passed);
    if json {
        let v: Vec<Value> = reports.iter().map(suite_json).collect();
        emit_json(out, &json!({ "passed": passed, "suites": v }))?;
    } else {
        for s in &reports {
            writeln!(out, "[{}]", s.suite)?;
            for c in &s.checks {
                match &c.difference {
                    None => writeln!(out, "  {:<8} ok    {}", c.name, c.statement)?,
                    Some(d) => writeln!(out, "  {:<8} FAIL  {}  ({d})", c.name, c.statement)?,
                }
            }
        }
        writeln!(out, "{}", verdict(passed))?;
    }
    Ok(status(passed))
}

fn step_line(kind: &StepKind) -> String {
    match kind {
        StepKind::Case1 { sigma, start, end } => {
            format!("case 1: remove {sigma} on {start}..{end}")
        }
        StepKind::Case2 { l } => format!("case 2: swap legs {l},{}", l + 1),
    }
}

fn print_trace(trace: &AlgorithmTrace, out: &mut dyn Write) -> io::Result<()> {
    writeln!(
        out,
        "pi_0 = {} ({} points)",
        trace.initial,
        trace.initial.k()
    )?;
    for (m, s) in trace.steps.iter().enumerate() {
        writeln!(
            out,
            "step {}: {}  ->  {} ({} points)",
            m + 1,
            step_line(&s.kind),
            s.partition,
            s.points
        )?;
    }
    Ok(())
}

fn mpi_run(
    eps: &EpsilonMatrix,
    n: usize,
    partition: &str,
    cat: Category,
    index: Option<&str>,
    json: bool,
    out: &mut dyn Write,
) -> CliResult {
    let pi: SetPartition = partition.parse()?;
    let (trace, op) = run_algorithm(&pi, eps, cat, n)?;
    let value = index
        .map(|s| MultiIndex::parse_csv(n, s).map(|i| (op.eval(&i), i)))
        .transpose()?;
    if json {
        let trace_v: Value = serde_json::from_str(&trace.to_json()).map_err(Error::from)?;
        match &value {
            None => emit_json(out, &trace_v)?,
            Some((v, i)) => emit_json(
                out,
                &json!({ "trace": trace_v, "index": i.values(), "value": q(v) }),
            )?,
        }
    } else {
        print_trace(&trace, out)?;
        if let Some((v, i)) = &value {
            writeln!(out, "M_pi(e_{i}) = {}", q(v))?;
        }
    }
    Ok(EXIT_OK)
}

struct VerifyOpts {
    n: usize,
    cat: Category,
    k: usize,
    samples: Option<usize>,
    seed: u64,
}

struct Failure {
    partition: SetPartition,
    detail: Value,
    text: String,
}

fn verify_one(
    pi: &SetPartition,
    eps: &EpsilonMatrix,
    o: &VerifyOpts,
) -> Result<(usize, Option<Failure>), CliError> {
    let report = match o.samples {
        Some(count) => {
            verify_oracle_on(pi, eps, o.cat, o.n, &sample_indices(pi, o.n, count, o.seed))?
        }
        None => verify_oracle(pi, eps, o.cat, o.n)?,
    };
    if let Some(c) = report.counterexample {
        return Ok((
            report.checked,
            Some(Failure {
                partition: pi.clone(),
                detail: json!({
                    "kind": "oracle",
                    "index": c.index.values(),
                    "value": q(&c.value),
                    "indicator": c.indicator,
                }),
                text: format!(
                    "M_pi(e_{}) = {} but the indicator is {}",
                    c.index,
                    q(&c.value),
                    u8::from(c.indicator)
                ),
            }),
        ));
    }
    if let Some(count) = o.samples {
        let (trace, op) = run_algorithm(pi, eps, o.cat, o.n)?;
        if let Some(s) = check_steps(&trace, &op, &sample_indices(pi, o.n, count, o.seed))? {
            return Ok((
                report.checked,
                Some(Failure {
                    partition: pi.clone(),
                    detail: json!({ "kind": "step", "step": s.step + 1, "index": s.index.values() }),
                    text: format!(
                        "step {} breaks the equivalence at e_{}",
                        s.step + 1,
                        s.index
                    ),
                }),
            ));
        }
    }
    Ok((report.checked, None))
}

fn mpi_verify(
    eps: &EpsilonMatrix,
    partition: Option<&str>,
    o: &VerifyOpts,
    json: bool,
    out: &mut dyn Write,
) -> CliResult {
    let pis: Vec<SetPartition> = match partition {
        Some(s) => vec![s.parse()?],
        None => (0..=o.k)
            .flat_map(|k| enumerate_partitions(k, o.cat, false))
            .collect(),
    };
    let mut vectors = 0;
    let mut failure = None;
    for pi in &pis {
        let (checked, f) = verify_one(pi, eps, o)?;
        vectors += checked;
        if f.is_some() {
            failure = f;
            break;
        }
    }
    let passed = failure.is_none();
    if json {
        let ce = failure.as_ref().map(|f| {
            let mut d = f.detail.clone();
            d["partition"] = json!(f.partition.to_string());
            d
        });
        emit_json(
            out,
            &json!({
                "passed": passed,
                "category": o.cat.name(),
                "n": o.n,
                "partitions_checked": pis.len(),
                "vectors_checked": vectors,
                "counterexample": ce,
            }),
        )?;
    } else {
        writeln!(
            out,
            "{} partitions, {} basis vectors checked",
            pis.len(),
            vectors
        )?;
        if let Some(f) = &failure {
            writeln!(out, "counterexample: {}: {}", f.partition, f.text)?;
        }
        writeln!(out, "{}", verdict(passed))?;
    }
    Ok(status(passed))
}

fn definetti(
    eps: &EpsilonMatrix,
    cat: Category,
    spec: &CumulantSpec,
    max_k: usize,
    json: bool,
    out: &mut dyn Write,
) -> CliResult {
    let r = definetti_identity_report(eps, cat, spec, max_k)?;
    if json {
        let ce = r.counterexample.as_ref().map(|c| {
            json!({ "index": c.index.values(), "rewritten": q(&c.rewritten), "moment": q(&c.moment) })
        });
        emit_json(
            out,
            &json!({
                "passed": r.passed(),
                "category": cat.name(),
                "words_checked": r.words_checked,
                "counterexample": ce,
            }),
        )?;
    } else {
        writeln!(out, "{} words checked", r.words_checked)?;
        if let Some(c) = &r.counterexample {
            writeln!(
                out,
                "counterexample: {}: {} vs {}",
                c.index,
                q(&c.rewritten),
                q(&c.moment)
            )?;
        }
        writeln!(out, "{}", verdict(r.passed()))?;
    }
    Ok(status(r.passed()))
}

fn paper_examples(json: bool, out: &mut dyn Write) -> CliResult {
    let results = fixtures::run_all();
    let passed = results.iter().all(|r| r.passed());
    if json {
        let v: Vec<Value> = results
            .iter()
            .map(|r| json!({ "name": r.name, "passed": r.passed(), "failure": r.failure }))
            .collect();
        emit_json(out, &json!({ "passed": passed, "fixtures": v }))?;
    } else {
        for r in &results {
            match &r.failure {
                None => writeln!(out, "PASS  {}", r.name)?,
                Some(f) => writeln!(out, "FAIL  {}: {f}", r.name)?,
            }
        }
        let ok = results.iter().filter(|r| r.passed()).count();
        writeln!(out, "{ok}/{} examples hold", results.len())?;
    }
    Ok(status(passed))
}
