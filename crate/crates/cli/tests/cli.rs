use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn stiefel(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_stiefel"))
        .args(args)
        .env_remove("STIEFEL_SEED")
        .output()
        .expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("stdout is JSON")
}

fn write(dir: &Path, name: &str, body: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, body).unwrap();
    p.to_str().unwrap().to_string()
}

fn catalog_file(dir: &Path, name: &str) -> String {
    let out = stiefel(&["catalog", "get", name]);
    assert_eq!(code(&out), 0);
    write(dir, &format!("{name}.json"), std::str::from_utf8(&out.stdout).unwrap())
}

#[test]
fn catalog_commands() {
    let list = String::from_utf8(stiefel(&["catalog", "list"]).stdout).unwrap();
    for name in ["s3_g1", "rp3", "s1xs2"] {
        assert!(list.lines().any(|l| l == name), "{list}");
    }
    let rp3 = json(&stiefel(&["catalog", "get", "rp3"]));
    assert_eq!(rp3["genus"], 1);
    assert_eq!(rp3["k_second_rows"], serde_json::json!([[1, 0]]));
    assert_eq!(code(&stiefel(&["catalog", "get", "lens(6,2)"])), 1);
    assert_eq!(code(&stiefel(&["catalog", "get", "poincare"])), 1);
}

#[test]
fn homology_reports_and_errors() {
    let dir = tempfile::tempdir().unwrap();
    let rp3 = catalog_file(dir.path(), "rp3");
    let out = stiefel(&["homology", &rp3]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!((v["h1_dim"].as_u64(), v["h2_dim"].as_u64()), (Some(1), Some(1)));

    let bad = write(dir.path(), "bad.json", r#"{"schema_version":"1","genus":1,"k_second_rows":[[1,0,1]]}"#);
    let out = stiefel(&["homology", &bad]);
    assert_eq!(code(&out), 1);
    assert!(String::from_utf8_lossy(&out.stderr).contains("k_second_rows[0]"));

    let garbage = write(dir.path(), "garbage.json", "{not json");
    assert_eq!(code(&stiefel(&["homology", &garbage])), 1);
    assert_eq!(code(&stiefel(&["homology", "/nonexistent/input.json"])), 1);
}

#[test]
fn certify_exit_code_contract() {
    let dir = tempfile::tempdir().unwrap();
    let rp3 = catalog_file(dir.path(), "rp3");

    let ok = stiefel(&["certify", &rp3, "--a-star", "01", "--oracle"]);
    assert_eq!(code(&ok), 0);
    let v = json(&ok);
    assert_eq!(v["verdict"], "certified");
    assert_eq!(v["oracle_agreement"], true);
    assert!(v["certificate"]["transcript"].as_array().unwrap().iter().all(|e| e["b_star"] == 0));

    let obstructed = stiefel(&["certify", &rp3, "--a-star", "10"]);
    assert_eq!(code(&obstructed), 2);
    let v = json(&obstructed);
    assert_eq!(v["verdict"], "obstructed");
    assert_eq!(v["witness"]["alpha"], serde_json::json!([1, 0]));
    assert!(v.get("oracle_agreement").is_none());

    assert_eq!(code(&stiefel(&["certify", &rp3, "--a-star", "011"])), 1);
    assert_eq!(code(&stiefel(&["certify", &rp3])), 1);
    assert_eq!(code(&stiefel(&["certify", &rp3, "--bogus-flag"])), 1);

    let request = write(
        dir.path(),
        "req.json",
        &format!(r#"{{"manifold":{},"a_star":[0,1],"run_oracle":true}}"#, std::fs::read_to_string(&rp3).unwrap()),
    );
    let via_request = stiefel(&["certify", &request]);
    assert_eq!(code(&via_request), 0);
    assert_eq!(json(&via_request)["oracle_agreement"], true);
    assert_eq!(code(&stiefel(&["certify", &request, "--a-star", "01"])), 1);
}

#[test]
fn certify_oracle_agrees_on_catalog() {
    let dir = tempfile::tempdir().unwrap();
    for name in ["s3_g0", "s3_g1", "rp3", "s1xs2", "lens(5,2)", "sum_s1xs2(2)", "sum_rp3(3)"] {
        let path = catalog_file(dir.path(), name);
        let g = json(&stiefel(&["catalog", "get", name]))["genus"].as_u64().unwrap() as u32;
        for mask in 0..1u64 << (2 * g) {
            let bits: String = (0..2 * g).rev().map(|i| if mask >> i & 1 == 1 { '1' } else { '0' }).collect();
            let out = stiefel(&["certify", &path, "--a-star", &bits, "--oracle"]);
            assert!(matches!(code(&out), 0 | 2), "{name} {bits}");
            assert_eq!(json(&out)["oracle_agreement"], true, "{name} {bits}");
        }
    }
}

#[test]
fn invalid_splitting_is_reported() {
    let dir = tempfile::tempdir().unwrap();
    let dep = write(
        dir.path(),
        "dep.json",
        r#"{"schema_version":"1","genus":2,"k_second_rows":[[1,0,1,0],[1,0,1,0]]}"#,
    );
    let out = stiefel(&["certify", &dep, "--a-star", "0000"]);
    assert_eq!(code(&out), 1);
    assert_eq!(json(&out)["verdict"], "invalid");
}

#[test]
fn output_flag_writes_the_report() {
    let dir = tempfile::tempdir().unwrap();
    let s3 = catalog_file(dir.path(), "s3_g1");
    let target = dir.path().join("report.json");
    let out = stiefel(&["certify", &s3, "--a-star", "10", "--output", target.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    assert_eq!(std::fs::read(&target).unwrap(), out.stdout);
}

#[test]
fn represent_examples() {
    let v = json(&stiefel(&["represent", "--genus", "1", "--class", "11"]));
    assert_eq!(v["components"], serde_json::json!(["Desing(1)"]));
    let v = json(&stiefel(&["represent", "--genus", "2", "--class", "1110"]));
    assert_eq!(v["components"], serde_json::json!(["Desing(1)", "Mu(2)"]));
    assert_eq!(v["bands"].as_array().unwrap().len(), 1);
    let v = json(&stiefel(&["represent", "--genus", "2", "--class", "0000"]));
    assert_eq!(v["components"], serde_json::json!([]));
    assert!(v["note"].as_str().unwrap().contains("empty"));
    assert_eq!(code(&stiefel(&["represent", "--genus", "2", "--class", "111"])), 1);
    assert_eq!(code(&stiefel(&["represent", "--genus", "1", "--class", "1x"])), 1);
}

#[test]
fn bundle_classify_inputs() {
    let out = stiefel(&["bundle", "classify", "--json", r#"{"n":3,"weights":[1,1,1],"sign":1}"#]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["total_space_orientable"], true);
    assert_eq!(v["isomorphic_to_normal_bundle"], true);

    let dir = tempfile::tempdir().unwrap();
    let p = write(dir.path(), "b.json", r#"{"n":2,"weights":[1,0]}"#);
    let v = json(&stiefel(&["bundle", "classify", "--input", &p]));
    assert_eq!(v["total_space_orientable"], false);
    assert_eq!(v["w1"], serde_json::json!([1, 0]));
    assert_eq!(code(&stiefel(&["bundle", "classify"])), 1);
}

#[test]
fn selftest_suites() {
    for suite in ["s3-frames", "curves", "bundles"] {
        let out = stiefel(&["selftest", suite]);
        assert_eq!(code(&out), 0, "{suite}: {}", String::from_utf8_lossy(&out.stderr));
    }
    let out = stiefel(&["selftest", "oracle-equivalence", "--max-genus", "2", "--samples", "10"]);
    assert_eq!(code(&out), 0);
    assert_eq!(code(&stiefel(&["selftest", "nope"])), 1);

    let failing = stiefel(&["selftest", "s3-frames", "--samples", "5", "--tol=-1"]);
    assert_eq!(code(&failing), 4);
    assert!(String::from_utf8_lossy(&failing.stderr).contains("first failure"));
}

#[test]
fn seed_comes_from_flag_then_environment() {
    let run = |env: Option<&str>, extra: &[&str]| {
        let mut c = Command::new(env!("CARGO_BIN_EXE_stiefel"));
        c.args(["selftest", "bundles", "--samples", "5"]).args(extra);
        match env {
            Some(s) => c.env("STIEFEL_SEED", s),
            None => c.env_remove("STIEFEL_SEED"),
        };
        c.output().unwrap()
    };
    assert_eq!(json(&run(None, &[]))["seed"], 0);
    assert_eq!(json(&run(Some("9"), &[]))["seed"], 9);
    assert_eq!(json(&run(Some("9"), &["--seed", "4"]))["seed"], 4);
    assert_eq!(code(&run(Some("nine"), &[])), 1);
}

#[test]
fn help_and_version_succeed() {
    assert_eq!(code(&stiefel(&["--help"])), 0);
    assert_eq!(code(&stiefel(&["--version"])), 0);
    assert_eq!(code(&stiefel(&[])), 1);
}
