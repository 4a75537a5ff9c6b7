use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

const BIN: &str = env!("CARGO_BIN_EXE_pathramsey");

fn run(args: &[&str]) -> Output {
    Command::new(BIN)
        .args(args)
        .output()
        .expect("spawn pathramsey")
}

fn json_of(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

const SAMPLE: &str = r#"{
  "experiment": "components",
  "name": "dr3",
  "model": "gnp",
  "n": 400,
  "p": 0.03,
  "r": 3,
  "strategy": "greedy_balanced",
  "trials": 8,
  "seed": 2024
}
"#;

#[test]
fn constants_pass_and_tolerance_tightens() {
    let out = run(&["constants"]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stdout)
    );
    let out = run(&["constants", "--json"]);
    assert_eq!(json_of(&out)["all_pass"], Value::Bool(true));
    let out = run(&["constants", "--tolerance", "1e-12"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn arrow_on_small_graphs() {
    let dir = tempfile::tempdir().unwrap();
    let k3 = write(dir.path(), "k3.txt", "3 3\n0 1\n1 2\n0 2\n");
    let out = run(&[
        "arrow", "--graph", &k3, "--n", "3", "--r", "2", "--expect", "holds",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json_of(&out)["verdict"], "holds");

    let p3 = write(
        dir.path(),
        "p3.json",
        r#"{"n": 3, "edges": [[0, 1], [1, 2]]}"#,
    );
    let cert = dir.path().join("cert.json");
    let out = run(&[
        "arrow",
        "--graph",
        &p3,
        "--n",
        "3",
        "--out",
        cert.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_str(&fs::read_to_string(&cert).unwrap()).unwrap();
    assert_eq!(v["verdict"], "fails");
    let edges = v["witness"]["colouring"]["edges"].as_array().unwrap();
    assert_eq!(edges.len(), 2);
    assert_ne!(edges[0][2], edges[1][2]);

    let out = run(&["arrow", "--graph", &p3, "--n", "3", "--expect", "holds"]);
    assert_eq!(out.status.code(), Some(2));

    let k5 = write(
        dir.path(),
        "k5.txt",
        &pathramsey::io::graph_to_string(
            &pathramsey_core::Graph::complete(5),
            pathramsey::io::Format::EdgeList,
        ),
    );
    let out = run(&["arrow", "--graph", &k5, "--n", "4", "--expect", "holds"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn arrow_budget_and_parse_errors() {
    let dir = tempfile::tempdir().unwrap();
    let k5 = write(
        dir.path(),
        "k5.txt",
        &pathramsey::io::graph_to_string(
            &pathramsey_core::Graph::complete(5),
            pathramsey::io::Format::EdgeList,
        ),
    );
    let out = run(&["arrow", "--graph", &k5, "--n", "4", "--budget", "3"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("budget"));

    let bad = write(dir.path(), "bad.txt", "3 2\n0 1\n1 q\n");
    let out = run(&["arrow", "--graph", &bad, "--n", "3"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3"));
}

#[test]
fn experiment_is_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write(dir.path(), "dr3.json", SAMPLE);
    let a = dir.path().join("a");
    let b = dir.path().join("b");
    let out = run(&[
        "experiment",
        &cfg,
        "--out-dir",
        a.to_str().unwrap(),
        "--jobs",
        "1",
    ]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let out = run(&[
        "--jobs",
        "4",
        "experiment",
        &cfg,
        "--out-dir",
        b.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let csv_a = fs::read(a.join("dr3.csv")).unwrap();
    assert_eq!(csv_a, fs::read(b.join("dr3.csv")).unwrap());
    assert_eq!(
        fs::read(a.join("dr3.summary.json")).unwrap(),
        fs::read(b.join("dr3.summary.json")).unwrap()
    );
    assert_eq!(String::from_utf8(csv_a).unwrap().lines().count(), 1 + 8 * 3);
}

#[test]
fn output_directory_from_environment() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write(dir.path(), "dr3.json", SAMPLE);
    let target = dir.path().join("env-out");
    let out = Command::new(BIN)
        .args(["experiment", &cfg])
        .env("PATHRAMSEY_OUT", &target)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert!(target.join("dr3.csv").exists());
}

#[test]
fn experiment_config_errors() {
    let dir = tempfile::tempdir().unwrap();
    let no_seed = write(
        dir.path(),
        "noseed.json",
        &SAMPLE.replace(",\n  \"seed\": 2024", ""),
    );
    let out = run(&[
        "experiment",
        &no_seed,
        "--out-dir",
        dir.path().to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("seed"));

    let odd = write(
        dir.path(),
        "odd.json",
        "{\n  \"experiment\": \"simple_fraction\",\n  \"n\": 9,\n  \"d\": 3,\n  \"trials\": 5,\n  \"seed\": 1\n}\n",
    );
    let out = run(&["experiment", &odd]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("line 4") && err.contains("even"), "{err}");
}

#[test]
fn gen_is_deterministic() {
    let a = run(&[
        "gen", "--model", "pairing", "--n", "30", "--d", "3", "--seed", "5", "--simple",
    ]);
    let b = run(&[
        "gen", "--model", "pairing", "--n", "30", "--d", "3", "--seed", "5", "--simple",
    ]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let g = pathramsey::io::parse_graph(&String::from_utf8(a.stdout).unwrap()).unwrap();
    assert!(g.is_simple() && (0..30).all(|v| g.degree(v) == 3));

    let c = run(&[
        "gen", "--model", "gnnp", "--n", "10", "--p", "0.5", "--seed", "5", "--format", "json",
    ]);
    let b = pathramsey::io::parse_bipartite(&String::from_utf8(c.stdout).unwrap()).unwrap();
    assert_eq!(b.parts(), (10, 10));
    assert_eq!(
        run(&["gen", "--model", "gnp", "--n", "10", "--seed", "1"])
            .status
            .code(),
        Some(1)
    );
}

#[test]
fn certify_modes() {
    let dir = tempfile::tempdir().unwrap();
    let k10 = write(
        dir.path(),
        "k10.txt",
        &pathramsey::io::graph_to_string(
            &pathramsey_core::Graph::complete(10),
            pathramsey::io::Format::EdgeList,
        ),
    );
    let out = run(&[
        "certify", "--graph", &k10, "--kind", "letzter", "--n", "3", "--expect", "holds",
    ]);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let out = run(&[
        "certify",
        "--graph",
        &k10,
        "--kind",
        "letzter",
        "--n",
        "3",
        "--mode",
        "monte-carlo",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let out = run(&[
        "certify",
        "--graph",
        &k10,
        "--kind",
        "two-holes",
        "--n",
        "3",
        "--mode",
        "monte-carlo",
        "--seed",
        "4",
        "--budget",
        "200",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json_of(&out)["seed"], 4);
}

#[test]
fn tree_claim_and_colour_lower_bound() {
    let dir = tempfile::tempdir().unwrap();
    let path = write(dir.path(), "p7.txt", "7 6\n0 1\n1 2\n2 3\n3 4\n4 5\n5 6\n");
    let out = run(&["tree-claim", "--graph", &path, "--k", "2", "--n", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json_of(&out)["verified"], true);

    let out = run(&["colour-lower-bound", "--n", "6", "--r", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["lower_bound"]["value"], "15/2");
    assert_eq!(v["adversary"]["no_mono_path"], true);
    assert_eq!(v["adversary"]["exact"], true);
}
