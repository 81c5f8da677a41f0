use std::process::{Command, Output};

use serde_json::Value;

fn samesize(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_samesize"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut all = vec!["--format", "json"];
    all.extend_from_slice(args);
    let o = samesize(&all);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
    serde_json::from_slice(&o.stdout).expect("valid json")
}

#[test]
fn uset_of_psl_2_11() {
    let o = samesize(&["group", "uset", "PSL(2,11)"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "{1,55,120,220,264}\n");
    // Both notations name the same group.
    assert_eq!(stdout(&samesize(&["group", "uset", "L2(11)"])), stdout(&o));
}

#[test]
fn solve_psl2() {
    let o = samesize(&["solve-psl2", "660"]);
    assert_eq!((o.status.code(), stdout(&o).as_str()), (Some(0), "11\n"));
    assert_eq!(samesize(&["solve-psl2", "661"]).status.code(), Some(1));
    assert_eq!(json(&["solve-psl2", "660"])["l"], 11);
}

#[test]
fn pattern_match_prints_the_assignment() {
    let o = samesize(&[
        "pattern",
        "match",
        "--pattern",
        "1,rq,8pq,4qr,8pr",
        "--target",
        "1,55,120,220,264",
        "--bound",
        "100",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert_eq!(out.lines().next(), Some("p=3 q=5 r=11"));
    assert!(out.contains("1 up to symmetries"), "{out}");
}

#[test]
fn pattern_instantiate() {
    let v = json(&[
        "pattern",
        "instantiate",
        "--pattern",
        "{1,r^2q,16q,2r^2q,16r^2}",
        "--assign",
        "r=3,q=5",
    ]);
    assert_eq!(v["values"], serde_json::json!([1, 45, 80, 90, 144]));
    assert_eq!(v["distinct"], true);
}

#[test]
fn group_info_json_round_trips() {
    let v = json(&["group", "info", "A5"]);
    assert_eq!(v["profile"]["order"], 60);
    assert_eq!(v["profile"]["U"], serde_json::json!([1, 15, 20, 24]));
    let profile: samesize::invariants::InvariantProfile =
        serde_json::from_value(v["profile"].clone()).unwrap();
    assert_eq!(profile.class_count, 5);
}

#[test]
fn classes_sum_to_the_order() {
    let v = json(&["group", "classes", "PSL(2,7)"]);
    let total: u64 = v["classes"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["size"].as_u64().unwrap())
        .sum();
    assert_eq!(total, 168);
}

#[test]
fn catalog_filters() {
    let v = json(&["catalog", "list", "--k", "3", "--max-order", "1000"]);
    let names: Vec<&str> = v
        .as_array()
        .unwrap()
        .iter()
        .map(|e| e["name"].as_str().unwrap())
        .collect();
    assert_eq!(
        names,
        ["A5", "A6", "PSL(2,4)", "PSL(2,5)", "PSL(2,7)", "PSL(2,8)", "PSL(2,9)"]
    );
}

#[test]
fn search_finds_isomorphic_groups() {
    let v = json(&["--cap", "100000", "search", "--uset", "1,45,80,90,144"]);
    assert_eq!(v["matches"], serde_json::json!(["A6", "PSL(2,9)"]));
    assert!(!v["skipped"].as_array().unwrap().is_empty());
}

#[test]
fn verify_selected_checks_writes_a_report() {
    let dir = std::env::temp_dir().join(format!("samesize-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.json");
    let o = samesize(&[
        "--threads",
        "1",
        "verify",
        "paper",
        "--only",
        "U(A5),lemma-2.3-collisions",
        "--report",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let report: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(report["summary"]["pass"], 2);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(samesize(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(
        samesize(&["--format", "yaml", "group", "uset", "A5"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        samesize(&["--cap", "0", "group", "uset", "A5"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(samesize(&["group", "uset", "J4"]).status.code(), Some(2));
    assert_eq!(
        samesize(&["--cap", "100", "group", "uset", "A6"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        samesize(&["verify", "paper", "--only", "no-such-check"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        samesize(&["--data", "/nonexistent", "catalog", "list"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(samesize(&["--help"]).status.code(), Some(0));
}

#[test]
fn data_directory_overrides_embedded_files() {
    let dir = std::env::temp_dir().join(format!("samesize-data-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    std::fs::write(
        dir.join("s4.gens"),
        "# name: S4\ndegree 4\norder 24\n(1,2,3,4)\n(1,2)\n",
    )
    .unwrap();
    let o = samesize(&["--data", dir.to_str().unwrap(), "group", "uset", "S4"]);
    std::fs::remove_dir_all(&dir).unwrap();
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
    // Class sizes 1, 3, 6, 6, 8.
    assert_eq!(stdout(&o), "{1,3,8,12}\n");
}
