use std::path::PathBuf;
use std::process::{Command, Output};

fn biset(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_biset")).args(args).output().expect("run biset")
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("JSON on stdout")
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("biset-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn verify_biset_laws_passes_and_is_reproducible() {
    let a = biset(&["verify-biset-laws", "--seed", "3", "--count", "5", "--max-order", "8"]);
    assert_eq!(a.status.code(), Some(0));
    let b = biset(&["verify-biset-laws", "--seed", "3", "--count", "5", "--max-order", "8"]);
    assert_eq!(a.stdout, b.stdout);
    let v = json(&a);
    assert!(v["laws"].as_array().unwrap().iter().all(|l| l["passed"] == l["instances"]));
}

#[test]
fn empty_law_run_passes() {
    let out = biset(&["verify-biset-laws", "--count", "0"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(json(&out)["laws"].as_array().unwrap().iter().all(|l| l["instances"] == 0));
}

#[test]
fn mutation_surfaces_counterexamples() {
    let out = biset(&["verify-biset-laws", "--count", "3", "--mutate"]);
    assert_eq!(out.status.code(), Some(1));
    let v = json(&out);
    let mackey = &v["laws"][0];
    assert_eq!(mackey["passed"], 0);
    assert!(!mackey["counterexamples"].as_array().unwrap().is_empty());
    assert!(String::from_utf8_lossy(&out.stderr).contains("counterexample"));
}

#[test]
fn blocks_of_small_groups() {
    let s3_2 = json(&biset(&["blocks", "S3", "--prime", "2"]));
    assert_eq!(s3_2["blocks"].as_array().unwrap().len(), 2);
    assert_eq!(s3_2["blocks"][0]["characters"], serde_json::json!(["1", "sgn"]));
    let s3_3 = json(&biset(&["blocks", "S3", "--prime", "3"]));
    assert_eq!(s3_3["blocks"].as_array().unwrap().len(), 1);
    let c5 = json(&biset(&["blocks", "C5", "--prime", "5"]));
    assert_eq!(c5["blocks"].as_array().unwrap().len(), 1);
    assert!(c5["blocks"][0]["defect_group"].as_str().unwrap().contains("order 5"));
}

#[test]
fn blocks_from_a_group_spec_file() {
    let path = scratch("d8.json");
    std::fs::write(&path, r#"{"name": "D8", "generators": ["(1,2,3,4)", "(1,3)"]}"#).unwrap();
    let out = biset(&["blocks", path.to_str().unwrap(), "--prime", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["group"], "D8");
    assert_eq!(v["blocks"].as_array().unwrap().len(), 1);
}

#[test]
fn broue_scenarios() {
    let out = biset(&["broue", "c6_c3"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["verdict"]["beta_gamma"], 2);
    assert_eq!(v["verdict"]["local"]["value"], "2");
    assert_eq!(v["verdict"]["sign"]["epsilon"], 1);
    let id = json(&biset(&["broue", "identity_s3"]));
    assert_eq!(id["verdict"]["beta_gamma"], 1);
    let cor = json(&biset(&["broue", "brauer_corr_a4_c3", "--field-degree", "2"]));
    assert_eq!(cor["passed"], true);
    assert_eq!(cor["verdict"]["field_size"], 9);
}

#[test]
fn broue_reports_exclude_timing() {
    let a = biset(&["broue", "c6_c3"]);
    let b = biset(&["broue", "c6_c3"]);
    assert_eq!(a.stdout, b.stdout);
    assert!(String::from_utf8_lossy(&a.stderr).contains("elapsed"));
}

#[test]
fn invalid_field_degree_is_an_input_error() {
    let out = biset(&["broue", "c6_c3", "--field-degree", "0"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn input_errors_exit_with_2() {
    assert_eq!(biset(&["blocks", "NoSuchGroup", "--prime", "2"]).status.code(), Some(2));
    assert_eq!(biset(&["broue", "no_such_scenario"]).status.code(), Some(2));
    let bad = scratch("bad.json");
    std::fs::write(&bad, "{ not json").unwrap();
    assert_eq!(biset(&["ingest-table", bad.to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(biset(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn ingest_table_round_trips() {
    let src = scratch("s3.json");
    std::fs::write(&src, include_str!("../../core/data/tables/S3.json")).unwrap();
    let canon = scratch("s3_canon.json");
    let out = biset(&["ingest-table", src.to_str().unwrap(), "--out", canon.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let again = biset(&["ingest-table", canon.to_str().unwrap()]);
    assert_eq!(again.status.code(), Some(0));
    assert_eq!(std::fs::read(&canon).unwrap(), again.stdout);
}

#[test]
fn ingest_rejects_non_orthogonal_tables() {
    let mut doc: serde_json::Value = serde_json::from_str(include_str!("../../core/data/tables/S3.json")).unwrap();
    doc["characters"][1]["values"] = serde_json::json!([1, 1, 1]);
    let path = scratch("s3_bad.json");
    std::fs::write(&path, doc.to_string()).unwrap();
    let out = biset(&["ingest-table", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("character table rejected"));
}
