use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn sextic(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sextic")).args(args).output().expect("binary runs")
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("json output")
}

fn curve_file(name: &str) -> String {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../core/data/curves");
    dir.join(format!("{name}.json")).to_string_lossy().into_owned()
}

#[test]
fn single_set_classification() {
    let out = sextic(&["classify", "--set", "3E6", "--kernels", "all"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    let f = &v["families"][0];
    assert_eq!(f["kernel_orbits"].as_array().unwrap().len(), 1);
    assert_eq!(f["kernel_orbits"][0]["group_label"], "S3");
    assert_eq!(f["kernel_orbits"][0]["orbits"], serde_json::json!(["3E6"]));

    let v = stdout_json(&sextic(&["classify", "--set", "A11+A5"]));
    assert_eq!(v["families"][0]["kernel_orbits"][0]["group_label"], "trivial");
    assert_eq!(v["all_match"], true);
}

#[test]
fn first_kernel_only() {
    let v = stdout_json(&sextic(&["classify", "--set", "9A2", "--kernels", "first"]));
    assert_eq!(v["families"][0]["kernel_orbits"].as_array().unwrap().len(), 1);
}

#[test]
fn sets_outside_the_catalog() {
    let out = sextic(&["classify", "--set", "A3"]);
    assert_eq!(out.status.code(), Some(2));
    let out = sextic(&["classify", "--set", "3A2", "--kernel", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let v = stdout_json(&out);
    let f = &v["families"][0];
    assert_eq!(f["matches_theorem"], Value::Null);
    assert_eq!(f["kernel_orbits"][0]["kernel_orbit"]["size"], 4);
    assert_eq!(f["kernel_orbits"][0]["group_label"], "S3");
    // 2A2 carries no isotropic vector of order 3
    let v = stdout_json(&sextic(&["classify", "--set", "2A2", "--kernel", "3"]));
    assert_eq!(v["families"][0]["kernel_orbits"], serde_json::json!([]));
}

#[test]
fn malformed_inputs_exit_two() {
    assert_eq!(sextic(&["classify", "--set", "Q7"]).status.code(), Some(2));
    assert_eq!(sextic(&["classify", "--set", "3E6", "--kernel", "4"]).status.code(), Some(2));
    assert_eq!(sextic(&["curve", "/nonexistent.json"]).status.code(), Some(2));
    let out = sextic(&["curve", &curve_file("zero_discriminant")]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("discriminant vanishes"));
    assert_eq!(sextic(&["verify", "--only", "nonsense"]).status.code(), Some(2));
    assert_eq!(sextic(&["dessins", "--k", "3"]).status.code(), Some(2));
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["classify", "--set", "2E6+2A2"][..],
        &["dessins", "--k", "2", "--stable"],
        &["curve", &curve_file("a8_three_a0")],
        &["dump-families"],
    ] {
        let a = sextic(args);
        let b = sextic(args);
        assert_eq!(a.status.code(), Some(0), "{args:?}");
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn thread_cap_does_not_change_results() {
    let capped = Command::new(env!("CARGO_BIN_EXE_sextic"))
        .args(["classify", "--set", "2A8"])
        .env("SEXTIC_THREADS", "1")
        .output()
        .unwrap();
    assert_eq!(capped.stdout, sextic(&["classify", "--set", "2A8"]).stdout);
    let bad = Command::new(env!("CARGO_BIN_EXE_sextic")).args(["dump-families"]).env("SEXTIC_THREADS", "x").output();
    assert_eq!(bad.unwrap().status.code(), Some(2));
}

#[test]
fn dumped_families_round_trip() {
    let v = stdout_json(&sextic(&["dump-families"]));
    assert_eq!(v["families"].as_array().unwrap().len(), 34);
}

#[test]
fn corrupted_family_fails_named_check() {
    let out = sextic(&["dump-families"]);
    let mut v: Value = serde_json::from_slice(&out.stdout).unwrap();
    let fams = v["families"].as_array_mut().unwrap();
    let f = fams.iter_mut().find(|f| f["essential"] == "3A6").unwrap();
    f["kernel"] = serde_json::json!({"kind": "elementary", "p": 3, "rank": 1});
    fams.retain(|f| f["essential"] == "3A6" || f["essential"] == "3E6");
    let path = std::env::temp_dir().join(format!("sextic-corrupt-{}.json", std::process::id()));
    std::fs::write(&path, serde_json::to_string(&v).unwrap()).unwrap();

    let out = sextic(&["verify", "--only", "theorem", "--families", path.to_str().unwrap(), "--format", "md"]);
    std::fs::remove_file(&path).ok();
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.starts_with("FAIL theorem"), "{text}");
    assert!(text.contains("3A6"), "{text}");
}

#[test]
fn subset_run() {
    let out = sextic(&["verify", "--only", "table1", "--format", "md"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8_lossy(&out.stdout);
    assert_eq!(text.lines().count(), 1);
    assert!(text.starts_with("PASS table1"));
}

#[test]
fn curve_reports() {
    let v = stdout_json(&sextic(&["curve", &curve_file("two_d4")]));
    assert_eq!(v["isotrivial"], true);
    assert_eq!(v["maximal"], false);
    assert_eq!(v["fiber_multiset"], "2D4~");
    let v = stdout_json(&sextic(&["curve", &curve_file("two_a4_two_a0")]));
    assert_eq!(v["fiber_multiset"], "2A4~+2A0*");
    assert_eq!(v["milnor"], 8);
    assert_eq!(v["maximal"], true);
    let md = sextic(&["curve", &curve_file("four_cusps"), "--format", "md"]);
    assert!(String::from_utf8_lossy(&md.stdout).contains("| x^4 - x = 0 | (0, 0, 3) | A2~ | 2 |"));
}
