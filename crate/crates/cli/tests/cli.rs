use mstfort::rational::{format, int, parse};
use mstfort::{mst_weight, Perturbation};
use mstfort_cli::instance::parse_instance;
use serde_json::Value;
use std::io::Write;
use std::process::Command;
use tempfile::NamedTempFile;

const TRIANGLE: &str = "# unit triangle\n3\n0 1 0 1\n0 2 0 1\n1 2 0 1\n";
const WEIGHTED: &str = "4\n0 1 1 2\n1 2 2 1\n2 3 1 1\n3 0 3 3\n0 2 2 1 1\n";

fn file(text: &str) -> NamedTempFile {
    let mut f = NamedTempFile::new().unwrap();
    f.write_all(text.as_bytes()).unwrap();
    f
}

fn run(args: &[&str]) -> (i32, String, String) {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let argv = std::iter::once("mstfort").chain(args.iter().copied());
    let code = mstfort_cli::run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn record(args: &[&str]) -> Value {
    let (code, out, err) = run(args);
    assert_eq!(code, 0, "stderr: {err}");
    serde_json::from_str(&out).unwrap()
}

fn path(f: &NamedTempFile) -> &str {
    f.path().to_str().unwrap()
}

#[test]
fn triangle_targeted_costs_three() {
    let f = file(TRIANGLE);
    let r = record(&["targeted", "--input", path(&f), "--target", "2", "--check"]);
    assert_eq!(r["cost"], "3");
    assert_eq!(r["increase"], "2");
    assert_eq!(r["check"]["status"], "pass");
}

#[test]
fn triangle_curve_has_one_breakpoint() {
    let f = file(TRIANGLE);
    let (code, out, _) = run(&[
        "curve",
        "--input",
        path(&f),
        "--format",
        "csv-curve",
        "--check",
    ]);
    assert_eq!(code, 0);
    assert_eq!(out, "budget,mst_weight,slope\n0,0,2/3\n");
    let r = record(&["curve", "--input", path(&f)]);
    assert_eq!(r["curve"]["points"].as_array().unwrap().len(), 1);
    assert_eq!(r["curve"]["terminal"], "unbounded");
}

#[test]
fn zero_budget_changes_nothing() {
    let f = file(WEIGHTED);
    for cmd in ["budgeted", "heuristic-mincut", "oracle-budgeted"] {
        let (code, out, err) = run(&[cmd, "--input", path(&f), "--budget", "0"]);
        if cmd == "heuristic-mincut" {
            assert_eq!(code, 1, "non-uniform weights are rejected");
            assert!(err.contains("uniform"));
            continue;
        }
        let r: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(
            (code, &r["increase"], &r["cost"]),
            (0, &Value::from("0"), &Value::from("0")),
            "{cmd}"
        );
        assert!(r["perturbation"].as_array().unwrap().is_empty());
    }
}

/// Re-reads the instance written by the record's solver, applies the emitted
/// perturbation and recomputes the increase independently.
fn reingest(text: &str, r: &Value) -> (String, String) {
    let g = parse_instance(text).unwrap();
    let mut amounts = vec![int(0); g.edge_count()];
    for pair in r["perturbation"].as_array().unwrap() {
        let id = pair[0].as_u64().unwrap() as usize;
        amounts[id] = parse(pair[1].as_str().unwrap()).unwrap();
    }
    let x = Perturbation::new(&g, amounts).unwrap();
    let increase = mst_weight(&g, &x) - mst_weight(&g, &Perturbation::zero(&g));
    (format(&increase), format(&x.total_cost(&g)))
}

#[test]
fn json_records_reproduce_their_increase() {
    let f = file(WEIGHTED);
    let p = path(&f);
    let runs: Vec<Vec<&str>> = vec![
        vec!["raise", "--input", p, "--budget", "7/2", "--check"],
        vec!["budgeted", "--input", p, "--budget", "5", "--check"],
        vec!["targeted", "--input", p, "--target", "2", "--check"],
        vec!["oracle-budgeted", "--input", p, "--budget", "5", "--check"],
        vec!["oracle-targeted", "--input", p, "--target", "2", "--check"],
    ];
    for args in runs {
        let r = record(&args);
        assert_ne!(r["check"]["status"], "violated", "{args:?}");
        let (increase, cost) = reingest(WEIGHTED, &r);
        assert_eq!(increase, r["increase"].as_str().unwrap(), "{args:?}");
        assert_eq!(cost, r["cost"].as_str().unwrap(), "{args:?}");
    }
}

#[test]
fn uniform_solvers_agree_with_the_oracle() {
    let f = file("4\n0 1 1 1\n1 2 1 2\n2 3 1 1\n3 0 1 1\n0 2 1 3\n");
    let p = path(&f);
    let exact = record(&["uniform-exact", "--input", p, "--target", "2", "--check"]);
    assert_eq!(exact["check"]["status"], "pass");
    let oracle = record(&["oracle-targeted", "--input", p, "--target", "2"]);
    assert_eq!(exact["cost"], oracle["cost"]);
    for extra in [&[][..], &["--eps", "1/4"][..]] {
        let mut args = vec!["uniform-budgeted", "--input", p, "--budget", "4", "--check"];
        args.extend_from_slice(extra);
        assert_eq!(record(&args)["check"]["status"], "pass");
    }
    assert_eq!(
        record(&["heuristic-mincut", "--input", p, "--budget", "4", "--check"])["check"]["status"],
        "pass"
    );
}

#[test]
fn flow_commands_match_enumeration() {
    let f = file("4\n0 1 1 1\n0 2 2 2 1\n1 3 2 1\n2 3 1 1 inf\n1 2 1 3\n");
    let p = path(&f);
    let flow = record(&["flow-upgrade", "--input", p, "--budget", "3", "--check"]);
    assert_eq!(flow["check"]["status"], "pass");
    let sp = record(&[
        "path-upgrade",
        "--input",
        p,
        "--budget",
        "3",
        "--check",
        "--source",
        "0",
        "--sink",
        "3",
    ]);
    assert_eq!(sp["check"]["status"], "pass");
    let (code, _, err) = run(&[
        "path-upgrade",
        "--input",
        p,
        "--budget",
        "1",
        "--source",
        "3",
        "--sink",
        "0",
    ]);
    assert_eq!(code, 1);
    assert!(err.contains("unreachable"));
}

#[test]
fn decomposition_reports_optimality() {
    let f = file(TRIANGLE);
    let p = path(&f);
    let r = record(&[
        "verify-decomposition",
        "--input",
        p,
        "--final-weights",
        "1,1,1",
    ]);
    assert_eq!(r["final_weights_optimal"], true);
    let r = record(&[
        "verify-decomposition",
        "--input",
        p,
        "--final-weights",
        "2,2,0",
        "--lifts",
        "0+1:2",
    ]);
    assert_eq!(r["final_mst"], "2");
    let (code, _, err) = run(&[
        "verify-decomposition",
        "--input",
        p,
        "--final-weights",
        "1,1",
    ]);
    assert_eq!(code, 1);
    assert!(err.contains("3 edges"));
}

#[test]
fn generators_emit_readable_instances() {
    let base = file("3\n0 1\n1 2\n0 2\n");
    let (code, out, _) = run(&[
        "gen-kcut-gadget",
        "--input",
        path(&base),
        "--clique-size",
        "3",
    ]);
    assert_eq!(code, 0);
    let gadget = parse_instance(&out).unwrap();
    assert_eq!(gadget.vertex_count(), 3 + 3 * 3);
    let (code, out, _) = run(&["gen-mmstu", "--input", path(&base)]);
    assert_eq!(code, 0);
    let g = parse_instance(&out).unwrap();
    assert!(g
        .edges()
        .iter()
        .all(|e| e.weight == 0 && e.cost == 1 && e.cap == Some(1)));
}

#[test]
fn input_errors_exit_1() {
    let bad = file("3\n0 1 0 1\n0 7 0 1\n");
    let (code, _, err) = run(&["budgeted", "--input", path(&bad), "--budget", "1"]);
    assert_eq!(code, 1);
    assert!(err.contains("line 3"), "{err}");
    let tri = file(TRIANGLE);
    let (code, _, err) = run(&["raise", "--input", path(&tri), "--budget", "abc"]);
    assert_eq!(code, 1);
    assert!(err.contains("--budget"));
    assert_eq!(
        run(&["targeted", "--input", "/nonexistent/file", "--target", "1"]).0,
        1
    );
    assert_eq!(run(&["targeted", "--input", path(&tri)]).0, 1);
    let (code, _, err) = run(&[
        "raise",
        "--input",
        path(&tri),
        "--budget",
        "1",
        "--format",
        "csv-curve",
    ]);
    assert_eq!(code, 1);
    assert!(err.contains("curve"));
    let capped = file("3\n0 1 0 1 1\n0 2 0 1 1\n1 2 0 1 1\n");
    let (code, _, err) = run(&["targeted", "--input", path(&capped), "--target", "5"]);
    assert_eq!(code, 1);
    assert!(err.contains("unreachable"), "{err}");
}

#[test]
fn help_and_version_exit_0() {
    let (code, out, _) = run(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("curve"));
    assert_eq!(run(&["--version"]).0, 0);
}

#[test]
fn binary_reads_standard_input() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_mstfort"))
        .args(["targeted", "--input", "-", "--target", "2"])
        .stdin(std::process::Stdio::piped())
        .stdout(std::process::Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(TRIANGLE.as_bytes())
        .unwrap();
    let output = child.wait_with_output().unwrap();
    assert!(output.status.success());
    let r: Value = serde_json::from_slice(&output.stdout).unwrap();
    assert_eq!(r["cost"], "3");
}
