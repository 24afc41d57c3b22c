use std::process::{Command, Output};

fn hh(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hh")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn dual_numbers_cohomology() {
    let o = hh(&["cohomology", "--algebra", "dualnumbers", "--max-degree", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "2 1 1 1");
    let o = hh(&["cohomology", "--algebra", "dualnumbers", "--max-degree", "3", "--field", "Fp:2"]);
    assert_eq!(stdout(&o).trim(), "2 2 2 2");
}

#[test]
fn a2_with_file_path_and_dual_coefficients() {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/../core/corpus/a2.json");
    let o = hh(&["cohomology", "--algebra", path, "--max-degree", "3"]);
    assert_eq!(stdout(&o).trim(), "1 0 0 0");
    let o = hh(&["cohomology", "--algebra", "a2", "--coeff", "dual", "--max-degree", "3"]);
    assert_eq!(stdout(&o).trim(), "2 0 0 0");
    let o = hh(&["homology", "--algebra", "a2", "--max-degree", "3"]);
    assert_eq!(stdout(&o).trim(), "2 0 0 0");
}

#[test]
fn quiver_flag_and_coefficient_file() {
    let o = hh(&["cohomology", "--quiver", "kronecker", "--max-degree", "1"]);
    assert_eq!(stdout(&o).trim(), "1 3");
    // a file-given bimodule: the regular bimodule of k
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("k.json");
    std::fs::write(&f, r#"{"basis": ["v"], "left": [[[1]]], "right": [[[1]]]}"#).unwrap();
    let o = hh(&["cohomology", "--algebra", "k", "--coeff", f.to_str().unwrap(), "--max-degree", "2"]);
    assert_eq!(stdout(&o).trim(), "1 0 0");
    assert_eq!(hh(&["cohomology", "--quiver", "m2"]).status.code(), Some(2));
}

#[test]
fn json_report_records_seed_and_field() {
    let o = hh(&["cohomology", "--algebra", "k", "--max-degree", "2", "--format", "json", "--seed", "17"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["seed"], 17);
    assert_eq!(v["field"], "Q");
    assert_eq!(v["dims"], serde_json::json!([1, 0, 0]));
    let o = hh(&["cohomology", "--algebra", "k", "--max-degree", "1", "--format", "csv"]);
    assert_eq!(stdout(&o), "n,dim\n0,1\n1,0\n");
}

#[test]
fn double_complex_tables() {
    let o = hh(&["double-complex", "--split", "t-a2", "--max-degree", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("d_h = 0: pass"));
    let o = hh(&["double-complex", "--split", "x3-split", "--max-degree", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("not applicable (M^2 != 0)"));
    // T(k) with X = L/M: the p = 0 column is H*(k, k)
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("tk.json");
    std::fs::write(&f, r#"{"split": {"base": {"basis": ["1"], "unit": [1], "table": [[[1]]]}, "ideal": "dual"}}"#).unwrap();
    let o = hh(&["double-complex", "--split", f.to_str().unwrap(), "--max-degree", "3", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["columns"][0], serde_json::json!([1, 0, 0, 0]));
    assert_eq!(v["horizontal_zero"], true);
    assert_eq!(hh(&["double-complex", "--split", "a2"]).status.code(), Some(2));
}

#[test]
fn les_is_exact() {
    let o = hh(&["les", "--split", "kkk", "--max-degree", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).ends_with("exact: pass\n"));
}

#[test]
fn ext_of_dual() {
    let o = hh(&["ext", "--algebra", "a2", "--module", "self", "--coeff", "dual", "--max-degree", "2"]);
    assert_eq!(stdout(&o).trim(), "2 0 0");
}

#[test]
fn verify_exit_codes() {
    let o = hh(&["verify", "thm-5.3", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["theorem_id"], "thm-5.3");
    assert_eq!(v["overall"], true);
    let names: Vec<&str> = v["instances"].as_array().unwrap().iter().map(|i| i["name"].as_str().unwrap()).collect();
    assert!(names.contains(&"k") && names.contains(&"a2") && names.contains(&"dualnumbers"));
    assert_eq!(hh(&["verify", "bogus-id"]).status.code(), Some(2));
    assert_eq!(hh(&["cohomology", "--algebra", "missing-file.json"]).status.code(), Some(2));
}

#[test]
fn verify_all_writes_json() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("verdicts.json");
    let o = hh(&["verify", "all", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(v["verdicts"].as_array().unwrap().len(), 20);
    assert_eq!(v["overall"], true);
}

#[test]
fn malformed_input_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("bad.json");
    std::fs::write(&f, r#"{"basis": ["a","b"], "unit": [1, 0], "table": [[[1, 0]]]}"#).unwrap();
    assert_eq!(hh(&["cohomology", "--algebra", f.to_str().unwrap()]).status.code(), Some(2));
    std::fs::write(&f, "not json").unwrap();
    assert_eq!(hh(&["cohomology", "--algebra", f.to_str().unwrap()]).status.code(), Some(2));
}
