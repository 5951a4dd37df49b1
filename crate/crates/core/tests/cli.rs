use std::process::Command;

use epsilon_qg::cli::run;
use serde_json::Value;

fn eps(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(
        std::iter::once("eps").chain(args.iter().copied()),
        &mut out,
        &mut err,
    );
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn eps_json(args: &[&str]) -> (i32, Value) {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let (code, out, err) = eps(&full);
    let v = serde_json::from_str(&out).unwrap_or_else(|e| panic!("{e}: {out}{err}"));
    (code, v)
}

fn temp_file(name: &str, contents: &str) -> std::path::PathBuf {
    let dir = std::env::temp_dir().join(format!("eps-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn tneps_lists_eight_elements() {
    let (code, out, _) = eps(&["tneps", "--preset", "ex-d"]);
    assert_eq!(code, 0);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("order 8"));
    assert!(lines.next().unwrap().starts_with("generators"));
    assert_eq!(lines.count(), 8);
    let (_, v) = eps_json(&["tneps", "--preset", "ex-d"]);
    assert_eq!(v["order"], 8);
    assert_eq!(v["elements"].as_array().unwrap().len(), 8);
}

#[test]
fn mpi_verify_passes_exhaustively() {
    let (code, out, _) = eps(&[
        "mpi", "verify", "--preset", "ex-f", "--cat", "pair", "--k", "6", "--n", "3",
    ]);
    assert_eq!(code, 0, "{out}");
    assert_eq!(out.lines().last(), Some("PASS"));
}

#[test]
fn moment_prints_a_rational() {
    let (code, out, _) = eps(&[
        "moment",
        "--preset",
        "free",
        "--n",
        "2",
        "--index",
        "1,2,1,2",
        "--kappa",
        "semicircle",
    ]);
    assert_eq!((code, out.as_str()), (0, "0\n"));
    let (_, out, _) = eps(&[
        "moment",
        "--preset",
        "comm",
        "--n",
        "2",
        "--index",
        "1,1,2",
        "--kappa",
        "row:1/2,1/3",
    ]);
    assert_eq!(out, "7/24\n");
}

#[test]
fn kappa_and_eps_files_are_read() {
    let k = temp_file("kappa.json", r#"{"n":2,"kappas":[["0","1"],["0","2"]]}"#);
    let e = temp_file("eps.txt", "2\n0 1\n1 0\n");
    let kappa = format!("file:{}", k.display());
    let (code, out, err) = eps(&[
        "moment",
        "--eps-file",
        e.to_str().unwrap(),
        "--index",
        "1,2,1,2",
        "--kappa",
        &kappa,
    ]);
    assert_eq!(code, 0, "{err}");
    assert_eq!(out, "2\n");
    let bad = temp_file("bad.txt", "2\n0 1\n0 0\n");
    let (code, _, err) = eps(&["show-eps", "--eps-file", bad.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(err.contains("symmetric"), "{err}");
}

#[test]
fn verification_verbs_pass_on_examples() {
    for args in [
        vec!["exchangeability", "--preset", "ex-d"],
        vec!["coxeter-check", "--preset", "ex-f"],
        vec![
            "rep-check",
            "--preset",
            "ex-d",
            "--rep",
            "two-projections",
            "--relations",
            "magic,Rring_eps",
        ],
        vec![
            "rep-check",
            "--preset",
            "ex-d",
            "--rep",
            "permutation:3,4,1,2",
        ],
        vec!["intertwiner-suite", "--preset", "comm", "--n", "3"],
        vec![
            "definetti",
            "--preset",
            "ex-e",
            "--cat",
            "pair",
            "--max-k",
            "4",
        ],
        vec![
            "mpi",
            "verify",
            "--preset",
            "comm",
            "--n",
            "2",
            "--partition",
            "{1,7,15}{2,5}{3,4}{6,10,16}{8,9}{11,13}{12,14}",
            "--samples",
            "300",
        ],
        vec!["paper-examples"],
    ] {
        let (code, out, err) = eps(&args);
        assert_eq!(code, 0, "{args:?}: {out}{err}");
    }
}

#[test]
fn failures_exit_one_with_a_counterexample() {
    let (code, out, _) = eps(&[
        "rep-check",
        "--preset",
        "ex-d",
        "--rep",
        "permutation:1,3,2,4",
    ]);
    assert_eq!(code, 1);
    assert!(out.contains("R_eps") && out.contains("fails"));
    let (code, v) = eps_json(&[
        "rep-check",
        "--preset",
        "ex-d",
        "--rep",
        "permutation:1,3,2,4",
        "--relations",
        "R_aut",
    ]);
    assert_eq!(code, 1);
    assert_eq!(v["passed"], false);
    assert!(v["results"][0]["violation"]["indices"].is_array());
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        vec!["no-such-verb"],
        vec!["moment", "--index", "1"],
        vec!["moment", "--preset", "free", "--n", "2", "--index", "1,5"],
        vec!["partitions", "--k", "3", "--cat", "odd"],
        vec!["word", "--preset", "free", "--n", "2", "--word", "1,x"],
        vec![
            "moment", "--preset", "free", "--n", "2", "--index", "1", "--kappa", "gauss",
        ],
    ] {
        assert_eq!(eps(&args).0, 2, "{args:?}");
    }
}

#[test]
fn json_outputs_parse_back() {
    let (_, v) = eps_json(&["show-eps", "--preset", "ex-f"]);
    let text = format!(
        "{}\n{}",
        v["n"],
        v["rows"]
            .as_array()
            .unwrap()
            .iter()
            .map(|r| r
                .as_array()
                .unwrap()
                .iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(" "))
            .collect::<Vec<_>>()
            .join("\n")
    );
    assert_eq!(
        epsilon_qg::EpsilonMatrix::parse_text(&text).unwrap(),
        epsilon_qg::Preset::Cycle5.build().unwrap()
    );

    let (_, v) = eps_json(&[
        "mpi",
        "run",
        "--preset",
        "free",
        "--n",
        "2",
        "--partition",
        "{1,3}{2,4}",
    ]);
    let trace: epsilon_qg::mpi::AlgorithmTrace = serde_json::from_value(v).unwrap();
    assert_eq!(trace.n, 2);

    let (_, v) = eps_json(&["partitions", "--k", "4", "--cat", "pair"]);
    assert_eq!(v["count"], 3);
    let (_, v) = eps_json(&[
        "ncset", "--preset", "comm", "--n", "2", "--index", "1,2,1,2", "--cat", "pair",
    ]);
    assert_eq!(v["partitions"], serde_json::json!(["{1,3}{2,4}"]));
    let (_, v) = eps_json(&[
        "word", "--preset", "comm", "--n", "3", "--word", "1,2,1,3", "--other", "3,2",
    ]);
    assert_eq!(v["equal"], true);
    let (_, v) = eps_json(&["paper-examples"]);
    assert_eq!(v["passed"], true);
}

#[test]
fn output_is_deterministic() {
    let args = [
        "mpi",
        "run",
        "--preset",
        "ex-f",
        "--n",
        "3",
        "--partition",
        "{1,4}{2,5}{3,6}",
    ];
    assert_eq!(eps(&args), eps(&args));
}

#[test]
fn binary_is_a_thin_wrapper() {
    let out = Command::new(env!("CARGO_BIN_EXE_eps"))
        .args(["tneps", "--preset", "ex-e", "--json"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["order"], 8);
    let bad = Command::new(env!("CARGO_BIN_EXE_eps"))
        .arg("tneps")
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
}
