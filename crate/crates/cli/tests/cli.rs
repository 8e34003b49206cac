use std::process::{Command, Output};

use nilorb::OrbitReport;
use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nilorb"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> (Value, i32) {
    let mut all = args.to_vec();
    all.extend(["--output", "json"]);
    let o = run(&all);
    (
        serde_json::from_str(&stdout(&o)).expect("json output"),
        o.status.code().unwrap(),
    )
}

#[test]
fn orbits_table() {
    let o = run(&["orbits", "A2", "--output", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let rows: Vec<OrbitReport> = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(rows.len(), 3);
    for r in &rows {
        let back: OrbitReport = serde_json::from_str(&serde_json::to_string(r).unwrap()).unwrap();
        assert_eq!(&back, r);
    }
    let (g2, _) = json(&["orbits", "G2"]);
    let regular_sub = g2
        .as_array()
        .unwrap()
        .iter()
        .find(|r| r["diagram"] == serde_json::json!([0, 2]))
        .unwrap();
    assert_eq!(regular_sub["divisible"], true);
    assert_eq!(regular_sub["half"], serde_json::json!([0, 1]));
}

#[test]
fn type_errors() {
    assert_eq!(run(&["orbits", "Z9"]).status.code(), Some(2));
    assert_eq!(run(&["orbits", "A9"]).status.code(), Some(2));
    assert_eq!(
        run(&["--trials", "0", "orbits", "A2"]).status.code(),
        Some(2)
    );
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn pair_tables() {
    for (t, n) in [("E6", 6), ("F4", 4), ("G2", 1)] {
        let (v, code) = json(&["pairs", t]);
        assert_eq!(code, 0);
        assert_eq!(v.as_array().unwrap().len(), n, "{t}");
    }
    let (f4, _) = json(&["pairs", "F4"]);
    let fails: Vec<&Value> = f4
        .as_array()
        .unwrap()
        .iter()
        .filter(|r| r["very_friendly"] == "fail")
        .collect();
    assert_eq!(fails.len(), 1);
    assert_eq!(fails[0]["lower_label"], "A1+Ã2");
    assert_eq!(fails[0]["a2_source"], "reference");
}

#[test]
fn e7_pairs() {
    let (v, _) = json(&["pairs", "E7"]);
    let rows = v.as_array().unwrap();
    assert_eq!(rows.len(), 8);
    assert!(rows.iter().all(|r| r["very_friendly"] == "pass"));
    assert_eq!(
        rows.iter()
            .filter(|r| r["lower_reachable"] == false)
            .count(),
        1
    );
}

#[test]
fn classical_actions() {
    let (v, code) = json(&["classical", "so", "5,3", "divide"]);
    assert_eq!(code, 0);
    assert_eq!(v["half"], "3,2,2,1");
    assert!(v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .all(|c| c["verdict"] == "pass"));
    assert_eq!(
        run(&["classical", "sp", "3,1", "classify"]).status.code(),
        Some(2)
    );
    assert_eq!(
        run(&["classical", "sl", "1,1,1", "divide"]).status.code(),
        Some(2)
    );
    assert_eq!(
        run(&["classical", "sl", "2,2", "divide"]).status.code(),
        Some(2)
    );
    let (m, _) = json(&["classical", "sp", "3,3", "matrices"]);
    assert_eq!(m["e"].as_array().unwrap().len(), 6);
    assert!(m["e2"].is_array() && m["phi"].is_array());
    let (levi, _) = json(&["classical", "sl", "3,3,1", "levi"]);
    assert_eq!(levi["divisible"], true);
    let (c, _) = json(&["classical", "sl", "3", "classify"]);
    assert_eq!(c["diagrams"], serde_json::json!([[2, 2]]));
}

#[test]
fn verify_checks() {
    let (v, code) = json(&["verify", "F4", "0,2,0,2", "--check", "very-friendly"]);
    assert_eq!(code, 1);
    let ev = v["checks"][0]["evidence"].as_str().unwrap();
    assert!(ev.contains("3 < 5"), "{ev}");
    // The same orbit written in the other labelling.
    let (w, code) = json(&[
        "verify",
        "F4",
        "2,0,2,0",
        "--numbering",
        "vo",
        "--check",
        "very-friendly",
    ]);
    assert_eq!(code, 1);
    assert_eq!(w["diagram"], serde_json::json!([2, 0, 2, 0]));

    let (a2, code) = json(&["verify", "A2", "2,2", "--check", "dims"]);
    assert_eq!(code, 0);
    assert!(a2["checks"][0]["evidence"]
        .as_str()
        .unwrap()
        .contains("dim g^e = dim g(0) + dim g(1) = 2 + 0 = 2"));
    assert_eq!(run(&["verify", "A2", "2,1"]).status.code(), Some(2));

    let (e6, code) = json(&["verify", "E6", "1,1,1,0,1,1", "--check", "reachable,nilgen"]);
    assert_eq!(code, 1);
    assert!(e6["checks"]
        .as_array()
        .unwrap()
        .iter()
        .all(|c| c["verdict"] == "fail"));
    let (g2, code) = json(&["verify", "G2", "0,2"]);
    assert_eq!(code, 1, "{g2}");
    let checks = g2["checks"].as_array().unwrap();
    assert_eq!(checks.len(), 6);
    let failed: Vec<&str> = checks
        .iter()
        .filter(|c| c["verdict"] == "fail")
        .map(|c| c["name"].as_str().unwrap())
        .collect();
    assert_eq!(failed, ["reachable", "nilgen"]);
}

#[test]
fn verify_csv_rows() {
    let o = run(&[
        "verify",
        "A2",
        "1,1",
        "--check",
        "height,reachable",
        "--output",
        "csv",
        "--seed",
        "7",
    ]);
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "diagram,check,verdict,evidence,seed");
    assert_eq!(lines.len(), 3);
    assert!(lines[1].ends_with(",7"));
}

#[test]
fn sl3_profiles() {
    let (v, code) = json(&["sl3", "1", "1"]);
    assert_eq!(code, 0);
    assert_eq!(v, serde_json::json!([1, 2, 1]));
    let (v, _) = json(&["sl3", "2", "1"]);
    assert_eq!(v, serde_json::json!([1, 2, 2, 1]));
    assert_eq!(run(&["sl3", "-1", "0"]).status.code(), Some(2));
}

#[test]
fn deterministic_output() {
    for args in [
        vec!["pairs", "F4", "--output", "json", "--seed", "3"],
        vec!["verify", "E6", "2,0,0,2,0,2", "--output", "json"],
    ] {
        assert_eq!(stdout(&run(&args)), stdout(&run(&args)));
    }
}

#[test]
fn numbering_only_relabels() {
    let (b, _) = json(&["orbits", "F4"]);
    let (v, _) = json(&["orbits", "F4", "--numbering", "vo"]);
    let rev = |x: &Value| -> Vec<Value> { x.as_array().unwrap().iter().rev().cloned().collect() };
    let mut from_b: Vec<(Value, Value)> = b
        .as_array()
        .unwrap()
        .iter()
        .map(|r| (Value::from(rev(&r["diagram"])), r["dim_orbit"].clone()))
        .collect();
    let mut from_v: Vec<(Value, Value)> = v
        .as_array()
        .unwrap()
        .iter()
        .map(|r| (r["diagram"].clone(), r["dim_orbit"].clone()))
        .collect();
    from_b.sort_by_key(|p| p.0.to_string());
    from_v.sort_by_key(|p| p.0.to_string());
    assert_eq!(from_b, from_v);
}
