use std::process::{Command, Output};

use serde_json::Value;

fn olg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_olg")).args(args).output().expect("olg runs")
}

fn json(args: &[&str]) -> Value {
    let mut all = vec!["--format", "json"];
    all.extend_from_slice(args);
    let out = olg(&all);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

#[test]
fn classify_fermat() {
    let v = json(&["classify", "x1^3"]);
    assert_eq!(v["atom_labels"][0], "Fermat(3)");
    assert_eq!(v["weights"][0], "1/3");
    assert_eq!(v["milnor"], "2");
    assert_eq!(v["header"]["polynomial"], "x1^3");
}

#[test]
fn classify_loop() {
    let v = json(&["classify", "x1^2*x2 + x2^2*x1"]);
    assert_eq!(v["atom_labels"][0], "Loop(2,2)");
    assert_eq!(v["weights"], serde_json::json!(["1/3", "1/3"]));
    assert_eq!(v["milnor"], "4");
}

#[test]
fn cross_term_is_rejected() {
    let out = olg(&["classify", "x1^2 + x1*x2"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("NotClassifiable"));
}

#[test]
fn bad_arguments_exit_one() {
    assert_eq!(olg(&["nonsense"]).status.code(), Some(1));
    assert_eq!(olg(&["sectors", "x1^3", "--group", "gens:1/2"]).status.code(), Some(1));
}

#[test]
fn symmetry_orders() {
    assert_eq!(json(&["symmetry", "x1^3"])["order"], 3);
    assert_eq!(json(&["symmetry", "x1^2*x2 + x2^2*x1"])["order"], 3);
    assert_eq!(json(&["symmetry", "x1^2*x2 + x2^2"])["order"], 4);
}

#[test]
fn exponent_matrix_file() {
    let dir = std::env::temp_dir().join(format!("olg-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("chain.json");
    std::fs::write(&path, r#"{"E": [[2,1],[0,2]]}"#).unwrap();
    let v = json(&["symmetry", path.to_str().unwrap()]);
    assert_eq!(v["order"], 4);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn fermat_product_table() {
    let v = json(&["product", "x1^3", "--group", "full"]);
    let table = v["table"].as_array().unwrap();
    let entry = table.iter().find(|e| e["a"] == "1*1[1/3]" && e["b"] == "1*1[2/3]").unwrap();
    // 3/(1 − ζ_3) = 2 + ζ_3.
    assert_eq!(entry["product"], "((2 + z3)*x1)*1[0]");
}

#[test]
fn trivial_group_is_the_jacobian_ring() {
    let v = json(&["product", "x1^3", "--group", "gens:"]);
    assert_eq!(v["dim"], 2);
    assert_eq!(v["table"].as_array().unwrap().len(), 3);
}

#[test]
fn loop_oracle_agrees() {
    let out = olg(&["--format", "json", "product", "x1^2*x2 + x2^2*x1", "--oracle"]);
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["oracle"]["agree"], true);
}

#[test]
fn frobenius_passes() {
    for w in ["x1^3", "x1^2*x2 + x2^2*x1", "x1^3 + x2^3"] {
        let v = json(&["frobenius", w]);
        assert_eq!(v["passed"], true, "{w}");
    }
}

#[test]
fn invariant_subalgebra_of_fermat() {
    // For x^3 with G_W, only the identity-sector unit is invariant.
    let v = json(&["product", "x1^3", "--invariant"]);
    assert_eq!(v["invariant"]["basis"].as_array().unwrap().len(), 1);
}

#[test]
fn bracelab_fixture_and_seed() {
    let dir = std::env::temp_dir().join(format!("olg-fixture-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("dual.json");
    // Q[x]/(x^2) with x ↦ −x.
    std::fs::write(
        &path,
        r#"{"name": "dual numbers", "dim": 2,
            "mult": [[[1,0],[0,1]],[[0,1],[0,0]]],
            "unit": [1,0], "curving": null,
            "generators": [[[1,0],[0,-1]]]}"#,
    )
    .unwrap();
    let args = ["--seed", "7", "bracelab", "--fixture", path.to_str().unwrap(), "--samples", "5", "--cohomology", "1"];
    let a = olg(&[&["--format", "json"][..], &args].concat());
    let b = olg(&[&["--format", "json"][..], &args].concat());
    assert_eq!(a.status.code(), Some(0), "{}", String::from_utf8_lossy(&a.stderr));
    assert_eq!(a.stdout, b.stdout);
    let v: Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["suite"]["seed"], 7);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn csv_sectors() {
    let out = olg(&["--format", "csv", "sectors", "x1^3"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().count(), 4);
    assert!(text.starts_with("g,moving,dim,parity"));
}
