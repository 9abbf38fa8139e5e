//! End-to-end checks of the binary: outputs, exit codes, determinism.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_setfam"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn bound_prints_24() {
    let out = run(&["bound", "--n", "5", "--t", "1", "--matrix", "adjacency"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "24");
}

#[test]
fn search_reports_max_size_4() {
    let out = run(&["search", "--n", "4", "--t", "2"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["max_size"], 4);
}

#[test]
fn weights_below_regime_exits_3() {
    let out = run(&["weights", "--n", "3", "--t", "2"]);
    assert_eq!(out.status.code(), Some(3));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("construction regime not reached"), "{}", err);
}

#[test]
fn malformed_input_exits_2() {
    let out = run(&["witness", "--n", "6", "--t", "2", "--coset", "3,4"]);
    assert_eq!(out.status.code(), Some(2));
    let out = run(&["derange", "--n", "6", "--t", "2", "--parity", "sideways"]);
    assert_eq!(out.status.code(), Some(2));
    // compatible cosets are an input error
    let out = run(&["witness", "--n", "6", "--t", "2", "--coset", "1,2:2,1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn unknown_flag_exits_2() {
    let out = run(&["bound", "--n", "5", "--t", "1", "--sideways"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn ceiling_exits_3() {
    let out = run(&["search", "--n", "8", "--t", "2"]);
    assert_eq!(out.status.code(), Some(3));
    let out = run(&["chars", "--n", "12"]);
    assert_eq!(out.status.code(), Some(3));
    // n=7 search needs --extended
    let out = run(&["search", "--n", "7", "--t", "2"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn weights_json_is_byte_identical_across_runs() {
    let a = run(&["weights", "--n", "7", "--t", "2"]);
    let b = run(&["weights", "--n", "7", "--t", "2"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_str(&stdout(&a)).unwrap();
    assert_eq!(v["conditions"]["critical_eigenvalues_equal_nu"], true);
    assert_eq!(v["conditions"]["tall_eigenvalues_zero"], true);
    assert_eq!(v["conditions"]["nu_num"], -1);
    assert_eq!(v["conditions"]["nu_den"], 20);
    // rationals are integer pairs, never decimals
    for w in v["weights"].as_array().unwrap() {
        assert!(w["value_num"].is_number());
        assert!(w["value_den"].is_number());
    }
}

#[test]
fn spectrum_csv_has_exact_columns() {
    let out = run(&["spectrum", "--n", "5", "--t", "1", "--format", "csv"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "partition,dimension,eigenvalue_num,eigenvalue_den,multiplicity"
    );
    assert_eq!(lines.next().unwrap(), "\"5\",1,44,1,1");
    assert_eq!(lines.next().unwrap(), "\"4,1\",4,-11,1,16");
}

#[test]
fn verify_sharp_on_the_s5_set() {
    let dir = std::env::temp_dir().join("setfam_cli_test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("sharp.txt");
    let fam = setfam::family::s5_sharp_two_set_transitive();
    std::fs::write(&path, fam.to_text()).unwrap();
    let out = run(&["verify-sharp", "--t", "2", "--file", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("12"));
    // a non-sharp family exits 1
    let path2 = dir.join("notsharp.txt");
    std::fs::write(&path2, "1 2 3 4 5\n2 1 3 4 5\n").unwrap();
    let out = run(&["verify-sharp", "--t", "2", "--file", path2.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn chars_csv_quotes_labels() {
    let out = run(&["chars", "--n", "3", "--flavor", "irr", "--format", "csv"]);
    let text = stdout(&out);
    assert!(text.starts_with("\"\",\"3\",\"2,1\",\"1,1,1\"\n"));
    assert!(text.contains("\"2,1\",-1,0,2"));
}

#[test]
fn selfcheck_is_green() {
    let out = run(&["selfcheck"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.ends_with("selfcheck: OK\n"), "{}", text);
    assert!(!text.contains("FAIL"));
}

#[test]
fn output_flag_writes_file() {
    let dir = std::env::temp_dir().join("setfam_cli_test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("bound.txt");
    let out = run(&[
        "bound",
        "--n",
        "5",
        "--t",
        "1",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert_eq!(std::fs::read_to_string(&path).unwrap().trim(), "24");
}
