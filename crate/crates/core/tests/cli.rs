//! End-to-end runs of the `trisys` binary on the bundled corpus.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn corpus(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("corpus").join(name).display().to_string()
}

fn trisys(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_trisys")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("trisys-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn check_passes_on_sl2() {
    let o = trisys(&["check", &corpus("sl2_lts.json")]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    for id in ["lts1", "lts2", "lts3"] {
        assert!(out.lines().any(|l| l.starts_with(id) && l.ends_with("ok")), "{out}");
    }
}

#[test]
fn check_reports_witness_labels() {
    let o = trisys(&["check", &corpus("broken_fundamental.json")]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    assert!(out.contains("lts3  FAILED"), "{out}");
    assert!(out.contains("at (e0, e1, e0, e1, e0)"), "{out}");
}

#[test]
fn missing_file_is_a_usage_error() {
    assert_eq!(trisys(&["check", "/nonexistent/file.json"]).status.code(), Some(2));
}

#[test]
fn check_kind_override() {
    // the skew bracket is Nambu but not an LTS
    assert_eq!(trisys(&["check", &corpus("skew_ternary3.json")]).status.code(), Some(0));
    assert_eq!(trisys(&["check", &corpus("skew_ternary3.json"), "--kind", "lts"]).status.code(), Some(1));
    assert_eq!(trisys(&["check", &corpus("sl2_lts.json"), "--kind", "two-term"]).status.code(), Some(2));
    assert_eq!(trisys(&["check", &corpus("sl2_identity_strict.json")]).status.code(), Some(0));
    assert_eq!(trisys(&["check", &corpus("sl2_identity_strict_crossed.json")]).status.code(), Some(0));
    assert_eq!(trisys(&["check", &corpus("sl2_transported_categorified.json")]).status.code(), Some(0));
    assert_eq!(trisys(&["check", &corpus("zero2_skeletal_quadruple.json")]).status.code(), Some(0));
    assert_eq!(trisys(&["check", &corpus("sl2_natural_rep.json")]).status.code(), Some(0));
}

#[test]
fn cohomology_tables() {
    let o = trisys(&["cohomology", &corpus("zero2.json"), "--rep", "trivial", "--max-degree", "2", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let h: Vec<u64> = v["degrees"].as_array().unwrap().iter().map(|d| d["cohomology"].as_u64().unwrap()).collect();
    assert_eq!(h, vec![2, 2]);

    let o = trisys(&["cohomology", &corpus("sl2_lts.json"), "--rep", "adjoint", "--max-degree", "2", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let rows: Vec<(u64, u64, u64)> = v["degrees"]
        .as_array()
        .unwrap()
        .iter()
        .map(|d| (d["cochains"].as_u64().unwrap(), d["rank"].as_u64().unwrap(), d["cohomology"].as_u64().unwrap()))
        .collect();
    assert_eq!(rows, vec![(9, 6, 3), (24, 18, 0)]);

    assert_eq!(trisys(&["cohomology", &corpus("sl2_lts.json"), "--max-degree", "0"]).status.code(), Some(2));
    assert_eq!(trisys(&["cohomology", &corpus("broken_fundamental.json"), "--max-degree", "1"]).status.code(), Some(1));
}

#[test]
fn cohomology_with_representation_file() {
    let o =
        trisys(&["cohomology", &corpus("sl2_lts.json"), "--rep", &corpus("sl2_natural_rep.json"), "--max-degree", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("dim H^n"));
}

#[test]
fn maurer_cartan() {
    let o = trisys(&["mc", &corpus("sl2_lts.json")]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("MC: yes; constraints: yes"));
    let o = trisys(&["mc", &corpus("unit_cube_nambu.json")]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).starts_with("MC: no (defect at (e⊗e, e⊗e, e))"), "{}", stdout(&o));
    assert_eq!(trisys(&["mc", &corpus("zero2.json")]).status.code(), Some(0));
    assert_eq!(trisys(&["mc", &corpus("sl2_lie.json")]).status.code(), Some(2));
}

#[test]
fn oracle() {
    assert_eq!(trisys(&["oracle", &corpus("sl2_lts.json"), "--degree", "1"]).status.code(), Some(0));
    assert_eq!(trisys(&["oracle", &corpus("sl2_lts.json"), "--degree", "2"]).status.code(), Some(0));
    assert_eq!(trisys(&["oracle", &corpus("skew_ternary3.json")]).status.code(), Some(2));
}

fn convert_round_trip(input: &str, there: &str, back: &str) {
    let mid = scratch(&format!("{there}-{input}"));
    let o = trisys(&["convert", &corpus(input), "--to", there, "--out", mid.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let o = trisys(&["convert", mid.to_str().unwrap(), "--to", back]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), std::fs::read_to_string(corpus(input)).unwrap());
}

#[test]
fn conversions_reproduce_input_bytes() {
    convert_round_trip("zero2_skeletal.json", "quadruple", "skeletal");
    convert_round_trip("sl2_adjoint_skeletal.json", "quadruple", "skeletal");
    convert_round_trip("sl2_identity_strict.json", "crossed", "strict");
    convert_round_trip("heisenberg_identity_strict.json", "crossed", "strict");
    convert_round_trip("sl2_transported.json", "categorified", "decategorified");
}

#[test]
fn conversion_preconditions() {
    assert_eq!(trisys(&["convert", &corpus("zero2_skeletal.json"), "--to", "crossed"]).status.code(), Some(1));
    assert_eq!(trisys(&["convert", &corpus("sl2_identity_strict.json"), "--to", "quadruple"]).status.code(), Some(1));
    assert_eq!(trisys(&["convert", &corpus("sl2_lts.json"), "--to", "crossed"]).status.code(), Some(2));
    // a skeletal system with J = 0 is also strict
    assert_eq!(trisys(&["convert", &corpus("sl2_adjoint_skeletal.json"), "--to", "crossed"]).status.code(), Some(0));
}

#[test]
fn json_output_is_deterministic() {
    for args in [
        vec!["check", "--json"],
        vec!["oracle", "--json", "--degree", "2"],
        vec!["cohomology", "--json", "--max-degree", "2"],
    ] {
        let mut full: Vec<String> = args.iter().map(|s| s.to_string()).collect();
        full.insert(1, corpus("sl2_lts.json"));
        let full: Vec<&str> = full.iter().map(String::as_str).collect();
        assert_eq!(trisys(&full).stdout, trisys(&full).stdout);
    }
}

#[test]
fn help_and_bad_flags() {
    assert_eq!(trisys(&["--help"]).status.code(), Some(0));
    assert_eq!(trisys(&[]).status.code(), Some(2));
    assert_eq!(trisys(&["check", &corpus("sl2_lts.json"), "--kind", "bogus"]).status.code(), Some(2));
}
