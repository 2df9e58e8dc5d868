use std::path::Path;
use std::process::{Command, Output};
use std::sync::Arc;

use serde_json::Value;
use symcodes_core::families::hamming_code;
use symcodes_core::{matfile, Field, LinearCode, Matrix};

fn symcodes(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_symcodes")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn read_json(path: &Path) -> Value {
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn construct_grm_plotkin_row() {
    let o = symcodes(&["construct", "grm-plotkin", "--q", "3", "--m", "2", "--r", "1", "--i", "1"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let s = stdout(&o);
    assert!(s.contains("predicted [18,6,6]_3"));
    assert!(s.contains("d_s = 6 (exhaustive"));
    assert!(s.contains("PASS  grm-plotkin q=3 m=2 r=1 i=1 SO: d_s = 6"));
    assert!(s.contains("PASS  grm-plotkin q=3 m=2 r=1 i=1 DC: d_s = 3"));
}

#[test]
fn construct_hyperoval_self_dual() {
    let dir = tempfile::tempdir().unwrap();
    let json = dir.path().join("r.json");
    let o = symcodes(&["construct", "hyperoval-self-dual", "--m", "2", "--json", path_str(&json)]);
    assert!(o.status.success());
    let v = read_json(&json);
    assert_eq!(v["schema"], 1);
    let so = &v["reports"][0];
    assert_eq!((so["n"].as_u64(), so["k"].as_u64()), (Some(12), Some(6)));
    assert_eq!(so["d_symplectic"]["value"], 4);
    assert_eq!(so["d_symplectic"]["provenance"]["method"], "exhaustive");
    assert_eq!(so["flags"]["self_dual"], true);
    assert_eq!(so["flags"]["symplectic_mds"], true);
    assert_eq!(so["singleton_defect_symplectic"], 0);
}

#[test]
fn construct_grm_code() {
    let o = symcodes(&["construct", "grm", "--q", "2", "--r", "1", "--m", "3"]);
    assert!(o.status.success());
    let s = stdout(&o);
    assert!(s.contains("predicted [8,4,4]_2 (Hamming)"));
    assert!(s.contains("d_H = 4"));
}

#[test]
fn large_grm_distance_uses_certificate() {
    let dir = tempfile::tempdir().unwrap();
    let json = dir.path().join("r.json");
    let o = symcodes(&[
        "construct",
        "grm",
        "--q",
        "3",
        "--r",
        "2",
        "--m",
        "4",
        "--budget",
        "1000",
        "--json",
        path_str(&json),
    ]);
    assert!(o.status.success(), "{}", stdout(&o));
    let v = read_json(&json);
    let d = &v["reports"][0]["d_hamming"];
    // [81,15,27]_3: over budget, and the witness is beyond w_max.
    assert_eq!(d["upper"], 27);
    assert_eq!(d["provenance"]["method"], "bounded");
    assert!(v["checks"].as_array().unwrap().iter().any(|c| c["status"] == "open"));
}

#[test]
fn missing_parameter_is_an_error() {
    let o = symcodes(&["construct", "grm-plotkin", "--q", "3", "--m", "2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("--r"));
}

#[test]
fn builder_errors_surface() {
    let o = symcodes(&["construct", "nested-mds", "--q", "5", "--n", "9", "--k1", "2", "--k2", "3"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("parameter out of range"));
}

#[test]
fn export_then_check_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("sd.txt");
    let o = symcodes(&["export", "hyperoval-self-dual", "--m", "2", "--out", path_str(&file)]);
    assert!(o.status.success());
    let o = symcodes(&["check", path_str(&file), "--so", "--dc", "--self-dual", "--distance", "4"]);
    assert!(o.status.success(), "{}", stdout(&o));
    assert_eq!(stdout(&o).matches("PASS").count(), 4);

    let built = symcodes_core::families::hyperoval_self_dual(2).unwrap().so;
    let back = LinearCode::from_generator(&matfile::parse(&std::fs::read_to_string(&file).unwrap()).unwrap());
    assert_eq!(back, built);
}

#[test]
fn export_sides_and_additive() {
    let dir = tempfile::tempdir().unwrap();
    let dc = dir.path().join("dc.txt");
    let add = dir.path().join("add.txt");
    let args = ["export", "grm-plotkin", "--q", "3", "--m", "2", "--r", "1", "--i", "1"];
    let o = symcodes(&[&args[..], &["--which", "dc", "--out", path_str(&dc)]].concat());
    assert!(o.status.success());
    let m = matfile::parse(&std::fs::read_to_string(&dc).unwrap()).unwrap();
    assert_eq!((m.rows(), m.cols()), (12, 18));

    let o = symcodes(&[&args[..], &["--additive", "--out", path_str(&add)]].concat());
    assert!(o.status.success());
    let m = matfile::parse(&std::fs::read_to_string(&add).unwrap()).unwrap();
    assert_eq!((m.rows(), m.cols(), m.field().order()), (6, 9, 9));

    let o = symcodes(&["export", "grm", "--q", "2", "--r", "1", "--m", "3", "--which", "so", "--out", path_str(&dc)]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn failed_check_sets_exit_code() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("sd.txt");
    symcodes(&["export", "hyperoval-self-dual", "--m", "2", "--out", path_str(&file)]);
    let o = symcodes(&["check", path_str(&file), "--lcd"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL  symplectic LCD"));
    let o = symcodes(&["check", path_str(&file), "--distance", "5"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn malformed_matrix_reports_line() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("bad.txt");
    std::fs::write(&file, "field p=2 m=1 modulus=1,1\nrows=1 cols=2\n1 2\n").unwrap();
    let o = symcodes(&["check", path_str(&file)]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 3"), "{}", stderr(&o));
}

#[test]
fn grm_table_all_rows_pass() {
    let dir = tempfile::tempdir().unwrap();
    let json = dir.path().join("t.json");
    let o = symcodes(&["grm-table", "--json", path_str(&json)]);
    assert!(o.status.success(), "{}", stdout(&o));
    let v = read_json(&json);
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 22);
    assert!(rows.iter().all(|r| r["pass"] == true));
    assert!(stdout(&o).contains("[250,242,3]_5"));
}

#[test]
fn lcd_search_hamming_is_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    let (a, b) = (dir.path().join("a.json"), dir.path().join("b.json"));
    let o = symcodes(&["lcd-search", "--family", "hamming", "--seed", "1", "--json", path_str(&a)]);
    assert!(o.status.success(), "{}", stdout(&o));
    let o2 = symcodes(&["lcd-search", "--family", "hamming", "--seed", "1", "--workers", "3", "--json", path_str(&b)]);
    assert!(o2.status.success());
    let (va, vb) = (read_json(&a), read_json(&b));
    assert_eq!(va["search"], vb["search"]);
    assert_eq!(va["search"]["found"], true);
    assert_eq!(va["search"]["permutation"].as_array().unwrap().len(), 7);
    let pp = &va["reports"][0];
    assert_eq!((pp["n"].as_u64(), pp["k"].as_u64()), (Some(14), Some(8)));
    assert_eq!(pp["d_symplectic"]["value"], 3);
    assert_eq!(pp["flags"]["lcd"], true);
}

#[test]
fn lcd_search_extended_hamming_not_found() {
    let o = symcodes(&["lcd-search", "--family", "extended-hamming", "--trials", "500"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("no LCD permutation in 500 trials"));
}

#[test]
fn zero_budgets_are_invalid() {
    let o = symcodes(&["lcd-search", "--family", "hamming", "--trials", "0"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("invalid configuration"));
    let o = symcodes(&["construct", "grm", "--q", "2", "--r", "1", "--m", "3", "--budget", "0"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("invalid configuration"));
}

/// A [63,56,4] binary stand-in: the even-weight subcode of the Hamming code.
fn stand_in_63() -> Matrix {
    let f = Arc::new(Field::of_order(2).unwrap());
    let h = hamming_code(&f, 6).unwrap().parity_check();
    let ones = Matrix::from_rows(&f, 63, &[vec![symcodes_core::Felt::ONE; 63]]).unwrap();
    LinearCode::from_parity_check(&h.vconcat(&ones).unwrap()).generator().clone()
}

#[test]
fn imported_code_with_reference_permutation() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("c63.txt");
    let json = dir.path().join("r.json");
    std::fs::write(&file, matfile::format(&stand_in_63())).unwrap();
    let o = symcodes(&[
        "check",
        path_str(&file),
        "--permutation",
        "P63",
        "--lcd-pair",
        "--lcd",
        "--distance",
        "4",
        "--json",
        path_str(&json),
    ]);
    let v = read_json(&json);
    let r = &v["reports"][0];
    assert_eq!((r["n"].as_u64(), r["k"].as_u64()), (Some(126), Some(112)));
    let lcd = r["flags"]["lcd"].as_bool().unwrap();
    let d = &r["d_symplectic"];
    assert_eq!(d["provenance"]["method"], "bounded");
    let pass = lcd && d["value"] == 4;
    assert_eq!(o.status.success(), pass, "{}", stdout(&o));
}

#[test]
fn explicit_permutation_of_wrong_size() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("sd.txt");
    symcodes(&["export", "hyperoval-self-dual", "--m", "2", "--out", path_str(&file)]);
    let o = symcodes(&["check", path_str(&file), "--permutation", "(2 1 3)"]);
    assert_eq!(o.status.code(), Some(2));
    let o = symcodes(&["check", path_str(&file), "--permutation", "(2 1 3 4 5 6 8 7 9 10 11 12)", "--so"]);
    assert!(o.status.success());
}

#[test]
fn plotkin_of_imported_constituents() {
    let dir = tempfile::tempdir().unwrap();
    let (c1, c2) = (dir.path().join("c1.txt"), dir.path().join("c2.txt"));
    let args = ["export", "grm-plotkin", "--q", "3", "--m", "2", "--r", "1", "--i", "1"];
    assert!(symcodes(&[&args[..], &["--which", "c1", "--out", path_str(&c1)]].concat()).status.success());
    assert!(symcodes(&[&args[..], &["--which", "c2", "--out", path_str(&c2)]].concat()).status.success());
    let o = symcodes(&["construct", "plotkin", "--c1", path_str(&c1), "--c2", path_str(&c2)]);
    assert!(o.status.success(), "{}", stdout(&o));
    let s = stdout(&o);
    assert!(s.contains("predicted [18,6,6]_3"));
    assert!(s.contains("PASS  plotkin [9] SO: symplectic SO"));
}
