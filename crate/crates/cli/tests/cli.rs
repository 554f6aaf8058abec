use std::fs;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_terwilliger"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("valid JSON on stdout")
}

#[test]
fn scheme_three2_q8() {
    let out = run(&["scheme", r#"{"family":"three2_q8"}"#]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["almost_commutative"], true);
    assert_eq!(v["nonzero_triples"], 44);
    assert_eq!(v["class_sizes"], serde_json::json!([1, 8, 9, 18, 18, 18]));
}

#[test]
fn scheme_perm_subgroup_of_s4() {
    let out = run(&["scheme", r#"{"family":"perm","generators":[[1,2,0,3],[1,0,2,3]]}"#]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["order"], 6);
    assert_eq!(v["d"], 2);
}

#[test]
fn trivial_group() {
    let v = json(&run(&["scheme", r#"{"family":"cyclic","n":1}"#]));
    assert_eq!(v["d"], 0);
    assert_eq!(v["nonzero_triples"], 1);
}

#[test]
fn tensor_emission() {
    let v = json(&run(&["scheme", r#"{"family":"q8"}"#, "--emit", "tensor"]));
    let tensor = v["tensor"].as_array().unwrap();
    assert!(!tensor.is_empty());
    assert!(tensor.iter().all(|e| e.as_array().unwrap().len() == 4));
}

#[test]
fn twa_frobenius_four() {
    let out = run(&["twa", r#"{"family":"frobenius_field","p":2,"r":2}"#]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["dim_T"], 19);
    assert_eq!(v["dim_Z"], 4);
    assert_eq!(v["idempotents_verified"], true);
}

#[test]
fn twa_abelian_nine() {
    let v = json(&run(&["twa", r#"{"family":"abelian","orders":[3,3]}"#]));
    assert_eq!(v["dim_T"], 81);
    assert_eq!(v["dim_Z"], 1);
}

#[test]
fn twa_heisenberg_three_matches_triples() {
    let v = json(&run(&["twa", r#"{"family":"heisenberg","p":3}"#]));
    assert_eq!(v["almost_commutative"], true);
    assert_eq!(v["dim_T"], v["dim_T0"]);
    assert_eq!(v["dim_T"], 137);
}

#[test]
fn idempotents_as_fractions() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().to_str().unwrap();
    let out = run(&["twa", r#"{"family":"d8"}"#, "--emit", "idempotents", "--dump-dir", d]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let first = &v["idempotents"][0];
    assert_eq!(first.as_array().unwrap().len(), 8);
    assert!(first[0][0].as_str().unwrap().contains('/'));
    let csv = fs::read_to_string(dir.path().join("idempotent_0.csv")).unwrap();
    assert_eq!(csv.lines().count(), 8);
    assert!(!csv.contains('.'));
}

#[test]
fn classify_s4_negative() {
    let out = run(&["classify", r#"{"family":"symmetric","n":4}"#]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["verdict"]["predicted_ac"], false);
    assert_eq!(v["measured_ac"], false);
    assert_eq!(v["consistent"], true);
    assert!(v["ac_witness"].is_object());
}

#[test]
fn classify_d8_camina() {
    let v = json(&run(&["classify", r#"{"family":"d8"}"#, "--deep-verify"]));
    assert_eq!(v["verdict"]["is_camina_p_group"], true);
    assert_eq!(v["verdict"]["camina_class"], 2);
    assert_eq!(v["camina_pair"]["definition"], true);
}

#[test]
fn spec_from_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.json");
    fs::write(&path, r#"{"family":"dihedral","n":5}"#).unwrap();
    let out_path = dir.path().join("out.json");
    let out = run(&[
        "classify",
        path.to_str().unwrap(),
        "--out",
        out_path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&fs::read_to_string(out_path).unwrap()).unwrap();
    assert_eq!(v["measured_ac"], false);
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["scheme", r#"{"family":"nope"}"#]).status.code(), Some(2));
    assert_eq!(run(&["scheme", r#"{"family":"heisenberg","p":2}"#]).status.code(), Some(2));
    assert_eq!(run(&["scheme", "/no/such/file.json"]).status.code(), Some(2));
    assert_eq!(run(&["bogus"]).status.code(), Some(2));
    let big = run(&["scheme", r#"{"family":"cyclic","n":40}"#, "--max-order", "20"]);
    assert_eq!(big.status.code(), Some(3));
    assert!(!big.stderr.is_empty());
}

#[test]
fn deterministic_output() {
    let a = run(&["twa", r#"{"family":"q8"}"#, "--emit", "idempotents"]);
    let b = run(&["twa", r#"{"family":"q8"}"#, "--emit", "idempotents"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn batch_census_in_input_order() {
    let dir = tempfile::tempdir().unwrap();
    let specs = dir.path().join("specs.jsonl");
    fs::write(
        &specs,
        "# catalog sample\n\
         {\"family\":\"q8\"}\n\
         \n\
         {\"family\":\"symmetric\",\"n\":4}\n\
         {\"family\":\"frobenius_field\",\"p\":5,\"r\":1}\n\
         {\"family\":\"cyclic\",\"n\":600}\n\
         {\"family\":\"three2_q8\"}\n",
    )
    .unwrap();
    let out = run(&["batch", specs.to_str().unwrap(), "--jobs", "3"]);
    let mut reader = csv::Reader::from_reader(out.stdout.as_slice());
    let headers = reader.headers().unwrap().clone();
    let col = |name: &str| headers.iter().position(|h| h == name).unwrap();
    let rows: Vec<csv::StringRecord> = reader.records().map(Result::unwrap).collect();
    let lines: Vec<&str> = rows.iter().map(|r| &r[col("line")]).collect();
    assert_eq!(lines, ["2", "4", "5", "6", "7"]);
    let measured: Vec<&str> = rows.iter().map(|r| &r[col("measured_ac")]).collect();
    assert_eq!(measured, ["true", "false", "true", "", "true"]);
    assert!(rows[3][col("error")].contains("maximum"));
    // the oversized row is reported, not silently dropped
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn batch_malformed_line_aborts() {
    let dir = tempfile::tempdir().unwrap();
    let specs = dir.path().join("bad.jsonl");
    fs::write(&specs, "{\"family\":\"q8\"}\n{not json\n").unwrap();
    let out = run(&["batch", specs.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
}

#[test]
fn catalog_census_is_consistent() {
    let catalog = concat!(env!("CARGO_MANIFEST_DIR"), "/../../data/catalog.jsonl");
    let out = run(&["batch", catalog]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
    let mut reader = csv::Reader::from_reader(out.stdout.as_slice());
    let rows: Vec<csv::StringRecord> = reader.records().map(Result::unwrap).collect();
    assert_eq!(rows.len(), 20);
    let col = reader.headers().unwrap().iter().position(|h| h == "consistent").unwrap();
    assert!(rows.iter().all(|r| &r[col] == "true"));
}
