use std::path::PathBuf;
use std::process::{Command, Output};

fn corpus(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("corpus").join(name).display().to_string()
}

fn ssx(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ssx")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn sing_of_constant_z2_has_one_simplex_per_level() {
    let o = ssx(&["sing", &corpus("sgpd/constant_z2.json")]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("counts: (1,1,1,1)"), "{}", stdout(&o));
}

#[test]
fn dstar_of_a_horn_in_its_simplex() {
    let o = ssx(&["dstar", "--ambient", "2", &corpus("sset/horn2_1.json")]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("row 0: counts (7,4), components 3, edges 4"), "{}", stdout(&o));
}

#[test]
fn check_kan_exit_codes() {
    let o = ssx(&["check-kan", "--mode", "kan", &corpus("functor/z2_to_terminal.json")]);
    assert_eq!(o.status.code(), Some(0));
    let o = ssx(&["check-kan", "--mode", "kan", &corpus("functor/point_to_interval.json")]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("witness: no lift for Λ^1_0 ⊂ Δ^1"), "{}", stdout(&o));
}

#[test]
fn check_reedy_of_the_constant_interval_fails_at_one() {
    let o = ssx(&["check-reedy", &corpus("sgpd-map/constant_interval_to_terminal.json")]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(ssx(&["homology", "--ambient", "2", &corpus("sset/delta1.json")]).status.code(), Some(2));
    assert_eq!(ssx(&["verify-suite", "nope"]).status.code(), Some(2));
    assert_eq!(ssx(&["describe", "/nonexistent.json"]).status.code(), Some(2));
    assert_eq!(ssx(&[]).status.code(), Some(2));
}

#[test]
fn json_report_is_written() {
    let out = std::env::temp_dir().join(format!("ssx-report-{}.json", std::process::id()));
    let o = ssx(&["homology", "--out", &out.display().to_string(), &corpus("sset/boundary2.json")]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    std::fs::remove_file(&out).ok();
    assert!(v["command"].as_str().unwrap().starts_with("homology"));
}
