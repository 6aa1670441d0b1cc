use std::io::Write;
use std::process::{Command, Stdio};

use serde_json::Value;
use trifree::cli::main_with;

fn run(args: &[&str]) -> (u8, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let mut argv = vec!["trifree", "--quiet"];
    argv.extend_from_slice(args);
    let code = main_with(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json(args: &[&str]) -> Value {
    let mut argv = vec!["--format", "json"];
    argv.extend_from_slice(args);
    let (code, out, err) = run(&argv);
    assert_eq!(code, 0, "{err}");
    serde_json::from_str(&out).unwrap()
}

#[test]
fn phi_examples() {
    let (code, out, _) = run(&["phi", "--graph", "g1"]);
    assert_eq!(code, 0);
    assert!(out.contains("Phi = 1 - 6*p^3 + 9*p^5 + 6*p^6 - 14*p^7 - 3*p^8 + 12*p^9 - 6*p^10 + p^11\n"));
    assert_eq!(json(&["phi", "--construct", "K:3,3", "--p", "1/2"])["value"], "1");
    let v = json(&["phi", "--construct", "mantel+1:6", "--p", "1/2"]);
    assert_eq!(v["value"], "91/128");
    assert_eq!(v["polynomial"]["coeffs"], serde_json::json!(["1", "0", "0", "-3", "0", "3", "0", "-1"]));
    assert!(v["checks"].as_array().unwrap().iter().all(|c| c["pass"] == true));
    let v = json(&["phi", "--graph", "C~", "--p", "0.5"]);
    assert_eq!(v["value"], "41/64");
    assert_eq!(v["p"]["from_decimal"], true);
    assert_eq!(json(&["phi", "--construct", "K:4", "--k", "4"])["polynomial_text"], "1 - p^6");
}

#[test]
fn phi_csv_and_graph_files() {
    let dir = tempfile::tempdir().unwrap();
    let edges = dir.path().join("k4.txt");
    std::fs::write(&edges, "# K4\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n").unwrap();
    let (code, out, _) = run(&["--format", "csv", "phi", "--graph", edges.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(out, "graph6,triangles,coeffs\nC~,4,1 0 0 -4 0 6 -3\n");
    let g6 = dir.path().join("k4.g6");
    std::fs::write(&g6, "C~\n").unwrap();
    assert_eq!(json(&["phi", "--graph", g6.to_str().unwrap()])["triangles"], 4);
}

#[test]
fn verify_examples() {
    let (code, out, _) = run(&["verify", "--t1", "--n", "6"]);
    assert_eq!(code, 0, "{out}");
    let v = json(&["verify", "--section4"]);
    assert_eq!(v["pass"], true);
    let width = v["claims"].as_array().unwrap().iter().find(|c| c["claim"] == "crossover enclosure width").unwrap();
    assert!(width["witness"].as_str().unwrap().starts_with("p0 in [0.554958"));
    let (code, _, _) = run(&["verify", "--ls", "--n", "5", "--i", "2"]);
    assert_eq!(code, 0);
    let (code, out, _) = run(&["verify", "--lemma"]);
    assert_eq!(code, 0, "{out}");
}

#[test]
fn failing_verification_exits_one() {
    let (code, out, _) = run(&["--format", "csv", "verify", "--ls", "--n", "6", "--i", "3"]);
    assert_eq!(code, 1);
    let mut rows = csv::Reader::from_reader(out.as_bytes());
    let row: Vec<String> = rows.records().next().unwrap().unwrap().iter().map(String::from).collect();
    assert_eq!(row[1], "8");
    assert_eq!(row[2], "9");
    assert_eq!(row[5], "false");
}

#[test]
fn search_and_envelope() {
    let v = json(&["search", "--n", "6", "--i", "1", "--p", "1/2"]);
    let want = trifree_core::graph6::write_graph6(
        &trifree_core::canon::canonical_graph(&trifree_core::graph::mantel_plus_one(6).unwrap()).unwrap(),
    );
    assert_eq!(v["maximizers"], serde_json::json!([want]));
    assert_eq!(v["max_value"], "91/128");
    assert_eq!(v["runtime_ms"], Value::Null);
    let unpruned = json(&["search", "--n", "6", "--i", "1", "--p", "1/2", "--no-prune"]);
    assert_eq!(unpruned["maximizers"], v["maximizers"]);
    assert_eq!(unpruned["pruned"], 0);
    let env = json(&["envelope", "--n", "6", "--i", "2"]);
    assert_eq!(env["segments"].as_array().unwrap().len(), 2);
    let x = env["crossovers"][0]["approx"].as_f64().unwrap();
    assert!((x - 0.55496).abs() < 1e-5);
}

#[test]
fn monte_carlo_example() {
    let v = json(&["mc", "--construct", "mantel+1:12", "--p", "0.3", "--samples", "1000000", "--seed", "1"]);
    let p = trifree_core::rational::ratio(3, 10);
    let exact = trifree_core::rational::to_f64(&trifree_core::bounds::t1_formula(12).unwrap().eval(&p));
    assert!(v["ci_low"].as_f64().unwrap() <= exact && exact <= v["ci_high"].as_f64().unwrap(), "{v}");
    assert_eq!(v["samples"], 1_000_000);
    assert_eq!(v["p"], "3/10");
}

#[test]
fn output_ignores_job_count() {
    let cases: [&[&str]; 3] = [
        &["mc", "--construct", "K:5", "--p", "1/3", "--samples", "70000", "--seed", "3"],
        &["envelope", "--n", "6", "--i", "2"],
        &["classes", "--n", "7", "--m", "13"],
    ];
    for args in cases {
        let outputs: Vec<String> = ["1", "2", "5"]
            .iter()
            .map(|j| {
                let mut argv = vec!["--format", "json", "--jobs", j];
                argv.extend_from_slice(args);
                run(&argv).1
            })
            .collect();
        assert!(outputs.windows(2).all(|w| w[0] == w[1]), "{args:?}");
    }
}

#[test]
fn classes_with_checkpoint() {
    let dir = tempfile::tempdir().unwrap();
    let cp = dir.path().join("c.ckpt");
    let args = ["--format", "csv", "classes", "--n", "6", "--m", "10", "--checkpoint", cp.to_str().unwrap()];
    let (code, first, _) = run(&args);
    assert_eq!(code, 0);
    assert_eq!(std::fs::read_to_string(&cp).unwrap(), "6 10 3003\n");
    let rows = trifree::formats::read_class_csv(&first).unwrap();
    assert_eq!(rows.len(), trifree_core::search::enumerate_graphs(6, 10).unwrap().len());
    // a finished checkpoint resumes to the same output without new work
    assert_eq!(run(&args).1, first);
}

#[test]
fn usage_and_limit_errors() {
    assert_eq!(run(&["phi", "--construct", "K:9"]).0, 3);
    assert_eq!(run(&["search", "--n", "9", "--i", "1", "--p", "1/2"]).0, 3);
    assert_eq!(run(&["phi", "--construct", "K:4", "--p", "3/2"]).0, 2);
    assert_eq!(run(&["phi", "--construct", "nope"]).0, 2);
    assert_eq!(run(&["phi"]).0, 2);
    assert_eq!(run(&["phi", "--graph", "C~", "--construct", "K:4"]).0, 2);
    assert_eq!(run(&["search", "--n", "6", "--i", "1", "--p", "1"]).0, 2);
    assert_eq!(run(&["mc", "--graph", "C~", "--p", "1/2", "--samples", "0"]).0, 2);
    assert_eq!(run(&["verify", "--t1", "--n", "8"]).0, 3);
    let (code, out, _) = run(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("envelope"));
}

#[test]
fn binary_reads_stdin_and_keeps_stdout_clean() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_trifree"))
        .args(["--format", "json", "phi", "--stdin", "--p", "1/2"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(b"C~\n").unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["value"], "41/64");

    let out = Command::new(env!("CARGO_BIN_EXE_trifree"))
        .args(["--format", "csv", "search", "--n", "5", "--i", "1", "--p", "1/3"])
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(String::from_utf8(out.stdout).unwrap().starts_with("graph6,value\n"));
    assert!(!out.stderr.is_empty());

    let out = Command::new(env!("CARGO_BIN_EXE_trifree")).args(["verify", "--ls", "--n", "6", "--i", "3"]).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn hypergraph_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("flower.txt");
    std::fs::write(&path, "5 2\n0 1 2\n0 3 4\n").unwrap();
    let v = json(&["hypergraph", "--file", path.to_str().unwrap(), "--p", "1/2"]);
    assert_eq!(v["linear"], true);
    assert_eq!(v["flower"], true);
    assert_eq!(v["probability"], v["bound"]);
    assert_eq!(v["bound"], "25/32");
    std::fs::write(&path, "3 2\n0 1 2\n").unwrap();
    assert_eq!(run(&["hypergraph", "--file", path.to_str().unwrap()]).0, 2);
}
