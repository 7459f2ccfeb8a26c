use std::process::{Command, Output};

use serde_json::Value;

fn kahler(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kahler"))
        .args(args)
        .env_remove("TORUS_PRECISION_BITS")
        .env_remove("TORUS_PRIME_BUDGET")
        .output()
        .expect("binary runs")
}

fn json_of(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn snf_exit_zero() {
    let out = kahler(&["snf", "--matrix", "[[4,6],[2,2]]"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json_of(&out)["diag"], serde_json::json!(["2", "2"]));
}

#[test]
fn certify_exit_codes() {
    let ok = kahler(&["certify-torus", "--poly", "x^4+x+1"]);
    assert_eq!(ok.status.code(), Some(0));
    let v = json_of(&ok);
    assert_eq!(v["certificate"]["galois"]["kind"], "Sn");
    assert_eq!(v["certificate"]["galois"]["witnesses"][0]["parts"], serde_json::json!([4]));

    let inconclusive = kahler(&["certify-torus", "--poly", "x^4+1", "--prime-budget", "200"]);
    assert_eq!(inconclusive.status.code(), Some(2));
    assert_eq!(json_of(&inconclusive)["status"], "inconclusive");

    let fails = kahler(&["certify-torus", "--poly", "x^4-1"]);
    assert_eq!(fails.status.code(), Some(3));
    assert_eq!(json_of(&fails)["reason"], "real_roots");
}

#[test]
fn realize_hom_codes() {
    let odd = kahler(&["realize-hom", "--matrix", "[[1,0],[0,0]]"]);
    assert_eq!(odd.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&odd.stderr).contains("odd rank obstruction"));

    let odd_source = kahler(&["realize-hom", "--matrix", "[[1,0]]"]);
    assert_eq!(odd_source.status.code(), Some(3));

    let ok = kahler(&["realize-hom", "--matrix", "[[2,0],[0,6]]"]);
    assert_eq!(ok.status.code(), Some(0));
    let v = json_of(&ok);
    assert_eq!(v["plan"]["steps"][1], serde_json::json!({"type": "cover", "dimension": 1, "degree": "12"}));
    assert_eq!(v["plan"]["source_lattice"][1][0], serde_json::json!({"re": "0", "im": "6"}));
    assert_eq!(v["torsion"]["route"], "none");

    // Z^2 + Z/3 -> Z^2, torsion generator must map to zero
    let torsion = kahler(&["realize-hom", "--matrix", "[[1,0],[0,1],[0,0]]", "--source-torsion", "3"]);
    assert_eq!(torsion.status.code(), Some(0));
    assert_eq!(json_of(&torsion)["torsion"]["route"], "symbolic");

    let bad = kahler(&["realize-hom", "--matrix", "[[1,0],[0,1],[1,0]]", "--source-torsion", "3"]);
    assert_eq!(bad.status.code(), Some(1));
}

#[test]
fn usage_errors_exit_one() {
    assert_eq!(kahler(&["snf", "--matrix", "[[1,2],[3]]"]).status.code(), Some(1));
    assert_eq!(kahler(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(kahler(&["certify-torus", "--poly", "x^^2"]).status.code(), Some(1));
    assert_eq!(kahler(&["certify-torus", "--poly", "2x^4+1"]).status.code(), Some(1));
    assert_eq!(kahler(&["snf"]).status.code(), Some(1));
    assert_eq!(kahler(&["search-torus", "--n", "1"]).status.code(), Some(1));
    assert_eq!(kahler(&["search-torus", "--n", "2", "--jobs", "0"]).status.code(), Some(1));
    let out = kahler(&["snf", "--matrix", "[[1]]", "--out", "/nonexistent-dir/x.json"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(kahler(&["--help"]).status.code(), Some(0));
    assert_eq!(kahler(&["--version"]).status.code(), Some(0));
}

#[test]
fn counterexample_codes() {
    let fails = kahler(&["build-counterexample", "--poly", "x^4-1"]);
    assert_eq!(fails.status.code(), Some(3));
    assert_eq!(json_of(&fails)["stopped_at"], "voisin");
    let inc = kahler(&["build-counterexample", "--poly", "x^4+1", "--prime-budget", "100"]);
    assert_eq!(inc.status.code(), Some(2));
    assert_eq!(json_of(&inc)["verdict"], "inconclusive");
}

#[test]
fn search_inconclusive_when_nothing_found() {
    let out = kahler(&["search-torus", "--n", "2", "--bound", "0", "--max-tries", "3"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(json_of(&out)["certificates"], serde_json::json!([]));
}

#[test]
fn search_is_schedule_independent() {
    let args = ["search-torus", "--n", "2", "--bound", "2", "--max-tries", "300", "--seed", "7"];
    let one = kahler(&[&args[..], &["--jobs", "1"]].concat());
    let four = kahler(&[&args[..], &["--jobs", "4"]].concat());
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(one.stdout, four.stdout);
}

#[test]
fn graph_index_codes() {
    let ok = kahler(&["graph-index", "--free-rank", "2", "--group", "s3", "--images", "0,0"]);
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(json_of(&ok)["index"], 6);
    let z2 = kahler(&["graph-index", "--free-rank", "1", "--group", "cyclic:2", "--images", "1"]);
    assert_eq!(json_of(&z2)["index"], 2);
    let table = kahler(&["graph-index", "--free-rank", "1", "--group", "[[0,1],[1,0]]", "--images", "1"]);
    assert_eq!(json_of(&table)["index"], 2);
    let bad = kahler(&["graph-index", "--torsion", "3", "--group", "cyclic:2", "--images", "1"]);
    assert_eq!(bad.status.code(), Some(3));
    let bad_table = kahler(&["graph-index", "--free-rank", "1", "--group", "[[0,1],[0,1]]", "--images", "1"]);
    assert_eq!(bad_table.status.code(), Some(1));
}

#[test]
fn ns_search_controls() {
    let g = kahler(&["ns-search", "--gaussian-square", "--height", "1"]);
    assert_eq!(g.status.code(), Some(0));
    assert_eq!(json_of(&g)["independent_rank"], 4);
    let q = kahler(&["ns-search", "--poly", "x^4+x+1", "--height", "100", "--precision-bits", "128"]);
    assert_eq!(json_of(&q)["verdict"], "no_form_found");
    assert_eq!(kahler(&["ns-search"]).status.code(), Some(1));
}

#[test]
fn files_env_and_out() {
    let dir = tempfile::tempdir().unwrap();
    let poly = dir.path().join("p.json");
    std::fs::write(&poly, r#"{"coeffs":["1","1","0","0","1"]}"#).unwrap();
    let out_path = dir.path().join("cert.json");
    let out = kahler(&["certify-torus", "--poly", poly.to_str().unwrap(), "--out", out_path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let written: Value = serde_json::from_str(&std::fs::read_to_string(&out_path).unwrap()).unwrap();
    assert_eq!(written["torus"]["precision_bits"], 256);

    let env = Command::new(env!("CARGO_BIN_EXE_kahler"))
        .args(["certify-torus", "--poly", "x^4+x+1"])
        .env("TORUS_PRECISION_BITS", "128")
        .output()
        .unwrap();
    assert_eq!(json_of(&env)["torus"]["precision_bits"], 128);
    let flag = Command::new(env!("CARGO_BIN_EXE_kahler"))
        .args(["certify-torus", "--poly", "x^4+x+1", "--precision-bits", "192"])
        .env("TORUS_PRECISION_BITS", "128")
        .output()
        .unwrap();
    assert_eq!(json_of(&flag)["torus"]["precision_bits"], 192);

    let text = kahler(&["snf", "--matrix", "[[4,6],[2,2]]", "--format", "text"]);
    assert_eq!(String::from_utf8(text.stdout).unwrap(), "diag (2, 2)\nrank 2\n");
}

#[test]
fn run_in_process() {
    assert_eq!(kahler_cli::run(["kahler", "snf", "--matrix", "[[0]]", "--out", "/dev/null"]), 0);
    assert_eq!(kahler_cli::run(["kahler", "snf", "--matrix", "not json"]), 1);
}
