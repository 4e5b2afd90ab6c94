use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn fixture(name: &str) -> String {
    let mut p = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    p.push("tests/fixtures");
    p.push(name);
    p.display().to_string()
}

fn cox(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cox")).args(args).output().expect("run cox")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn classify_affine_triangle() {
    let o = cox(&["classify", "--system", &fixture("a2t.cox")]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "component {1,2,3}: Affine(Ã₂)");
}

#[test]
fn aci_query_on_affine_a1() {
    let o = cox(&[
        "aci",
        "--system",
        &fixture("a1inf.cox"),
        "--action",
        &fixture("swap.act"),
        "--query",
        "1 ; 0",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("NotACI: w ∉ W(O_ρ)"), "{out}");
    assert!(out.contains("growth: 25 distinct conjugates"), "{out}");
}

#[test]
fn aci_swap_is_not_almost_central() {
    let o = cox(&[
        "--json",
        "aci",
        "--system",
        &fixture("a1inf.cox"),
        "--action",
        &fixture("swap.act"),
        "--query",
        "e ; 1",
    ]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(v["result"]["verdict"].as_str().unwrap().starts_with("NotACI"));
    assert_eq!(v["certificates"]["growth"]["reached"], Value::Bool(true));
}

#[test]
fn verify_tables_passes() {
    let o = cox(&["verify-tables"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.trim_end().ends_with("passed, 0 failed"), "{out}");
    assert!(!out.contains("FAIL"));
}

#[test]
fn fixed_point_subgroup_of_a3() {
    let o = cox(&["--json", "fixed", "--system", &fixture("a3.cox"), "--tau", "(1 3)"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["result"]["coxeter_matrix"], serde_json::json!([["1", "4"], ["4", "1"]]));
}

#[test]
fn oracle_agrees_for_wreath_product() {
    let o = cox(&["oracle", "--system", &fixture("a2a2.cox"), "--action", &fixture("a2a2swap.act")]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("agree: true"));
}

#[test]
fn exit_codes() {
    // missing flag
    assert_eq!(cox(&["length", "--system", &fixture("a3.cox")]).status.code(), Some(2));
    // unreadable system
    assert_eq!(cox(&["classify", "--system", "no/such/file.cox"]).status.code(), Some(2));
    // letter out of range
    assert_eq!(cox(&["length", "--system", &fixture("a3.cox"), "--word", "4"]).status.code(), Some(2));
    // not an automorphism
    assert_eq!(cox(&["fixed", "--system", &fixture("a3.cox"), "--tau", "(1 2)"]).status.code(), Some(2));
    // infinite parabolic has no longest element
    assert_eq!(cox(&["longest", "--system", &fixture("a1inf.cox")]).status.code(), Some(1));
    // group index out of range
    assert_eq!(
        cox(&["aci", "--system", &fixture("a1inf.cox"), "--query", "1 ; 3"]).status.code(),
        Some(2)
    );
}

#[test]
fn json_round_trips_for_every_verb() {
    let a2t = fixture("a2t.cox");
    let a1 = fixture("a1inf.cox");
    let a3 = fixture("a3.cox");
    let swap = fixture("swap.act");
    let runs: Vec<Vec<&str>> = vec![
        vec!["components", "--system", &a2t],
        vec!["classify", "--system", &a2t],
        vec!["roots", "--system", &a2t, "--depth", "3"],
        vec!["length", "--system", &a3, "--word", "2 1 2"],
        vec!["reduce", "--system", &a3, "--word", "2 1 2"],
        vec!["longest", "--system", &a3, "--subset", "{1,2}"],
        vec!["order", "--system", &a1, "--word", "1 2"],
        vec!["fixed", "--system", &a3, "--tau", "(1 3)"],
        vec!["finite-index", "--system", &a2t, "--tau", "(1 2 3)"],
        vec!["essential", "--system", &a1, "--word", "1 2", "--depth", "4"],
        vec!["aci", "--system", &a1, "--action", &swap, "--query", "1 ; 0"],
        vec!["verify-tables", "--table", "2"],
        vec!["oracle", "--system", &a3],
    ];
    for args in runs {
        for approx in [false, true] {
            let mut full = vec!["--json"];
            if approx {
                full.push("--approx");
            }
            full.extend(args.iter().copied());
            let o = cox(&full);
            assert_eq!(o.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
            let text = stdout(&o);
            let v: Value = serde_json::from_str(&text).unwrap();
            assert_eq!(serde_json::to_string_pretty(&v).unwrap(), text.trim_end(), "{args:?}");
            let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
            assert_eq!(keys, ["certificates", "inputs", "result", "undecided", "verb"], "{args:?}");
            assert!(!has_float(&v), "{args:?}: floats in output");
        }
    }
}

fn has_float(v: &Value) -> bool {
    match v {
        Value::Number(n) => n.is_f64(),
        Value::Array(a) => a.iter().any(has_float),
        Value::Object(o) => o.values().any(has_float),
        _ => false,
    }
}

#[test]
fn results_match_library_values() {
    let o = cox(&["--json", "length", "--system", &fixture("a3.cox"), "--word", "2 1 2"]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["result"]["length"], 3);
    assert_eq!(v["result"]["reduced"], "1 2 1");
    assert_eq!(v["certificates"]["inversion_set"].as_array().unwrap().len(), 3);

    let o = cox(&["--json", "finite-index", "--system", &fixture("a2t.cox"), "--tau", "(1 2 3)"]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["result"]["finite_index"], false);

    let o = cox(&["--json", "order", "--system", &fixture("a3.cox"), "--word", "1 2 3"]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["result"]["order"], "4");
}
