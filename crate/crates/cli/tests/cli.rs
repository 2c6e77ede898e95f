use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn prook(args: &[&str]) -> Output {
    prook_with(args, None, &[])
}

fn prook_with(args: &[&str], stdin: Option<&str>, env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_prook"));
    cmd.args(args).env_remove("PROOK_MAX_K").stdout(Stdio::piped()).stderr(Stdio::piped()).stdin(Stdio::piped());
    for (k, v) in env {
        cmd.env(k, v);
    }
    let mut child = cmd.spawn().expect("binary runs");
    {
        let mut pipe = child.stdin.take().unwrap();
        if let Some(text) = stdin {
            pipe.write_all(text.as_bytes()).unwrap();
        }
    }
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_str(&stdout(o)).unwrap_or_else(|e| panic!("bad json ({e}): {}", stdout(o)))
}

#[test]
fn enumerate_counts() {
    let o = prook(&["enumerate", "--n", "3"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().count(), 21);
    assert_eq!(json(&prook(&["enumerate", "--n", "3", "--format", "json"]))["count"], 20);
    assert_eq!(json(&prook(&["enumerate", "--n", "0", "--format", "json"]))["count"], 1);
    assert_eq!(json(&prook(&["enumerate", "--n", "3", "--edges", "2", "--format", "json"]))["count"], 9);
    let first = &json(&prook(&["enumerate", "--n", "2", "--format", "json"]))["diagrams"][0];
    assert_eq!(first.to_string(), r#"{"n":2,"edges":[]}"#);
}

#[test]
fn enumerate_cap() {
    let o = prook(&["enumerate", "--n", "11"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("705432"), "{}", stderr(&o));
}

#[test]
fn multiply_worked_product() {
    let input = r#"{"n":5,"edges":[[1,2],[2,5],[5,3]]}
{"n":5,"edges":[[2,1],[4,2]]}"#;
    let o = prook_with(&["multiply"], Some(input), &[]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert_eq!(stdout(&o).trim(), r#"{"n":5,"edges":[[2,2],[4,5]]}"#);
}

#[test]
fn multiply_identity_and_elements() {
    let input = r#"{"n":3,"edges":[[1,1],[2,2],[3,3]]} {"n":3,"terms":[{"diagram":{"n":3,"edges":[[1,2]]},"coeff":"1/2"}]}"#;
    let o = prook_with(&["multiply"], Some(input), &[]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert_eq!(
        stdout(&o).trim(),
        r#"{"n":3,"terms":[{"diagram":{"n":3,"edges":[[1,2]]},"coeff":"1/2"}]}"#
    );
}

#[test]
fn multiply_matrix_units() {
    // X_{(1,2)} X_{(2,1)} = X_{(1,1)} since β = {2} = τ of the right factor
    let input = r#"{"n":2,"edges":[[2,1]]} {"n":2,"edges":[[1,2]]}"#;
    let o = prook_with(&["multiply", "--matrix-units"], Some(input), &[]);
    assert!(o.status.success(), "{}", stderr(&o));
    let expected = r#"{"n":2,"terms":[{"diagram":{"n":2,"edges":[]},"coeff":"-1/1"},{"diagram":{"n":2,"edges":[[1,1]]},"coeff":"1/1"}]}"#;
    assert_eq!(stdout(&o).trim(), expected);
    // mismatched sets multiply to zero
    let o = prook_with(&["multiply", "--matrix-units"], Some(r#"{"n":2,"edges":[[1,1]]} {"n":2,"edges":[[1,2]]}"#), &[]);
    assert_eq!(stdout(&o).trim(), r#"{"n":2,"terms":[]}"#);
}

#[test]
fn multiply_errors_name_the_input() {
    let o = prook_with(&["multiply"], Some(r#"{"n":2,"edges":[[1,1]]} {"n":3,"edges":[[1,1]]}"#), &[]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("input 2"), "{}", stderr(&o));
    let o = prook_with(&["multiply"], Some(r#"{"n":2,"edges":[[1,1]]} {"n":2,"edges":[[1,3]]}"#), &[]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("input 2"), "{}", stderr(&o));
    let o = prook_with(&["multiply"], Some(r#"{"n":2,"edges":[]}"#), &[]);
    assert_eq!(o.status.code(), Some(2));
}

fn multiplicities(o: &Output) -> Vec<u64> {
    json(o)["summands"].as_array().unwrap().iter().map(|s| s["multiplicity"].as_u64().unwrap()).collect()
}

#[test]
fn decompose_tables() {
    let o = prook(&["decompose", "--k", "4"]);
    assert_eq!(stdout(&o), "L[1,3]           1\nL[2,2]           3\nL[3,1]           3\nL[4,0]           1\n");
    assert_eq!(multiplicities(&prook(&["decompose", "--k", "1", "--format", "json"])), vec![1]);
    let q = prook(&["decompose", "--k", "6", "--quantum", "--format", "json"]);
    assert_eq!(multiplicities(&q), vec![1, 5, 10, 10, 5, 1]);
    assert_eq!(json(&q)["summands"][5]["label"], "L_q[q^6,q^0]");
    assert_eq!(prook(&["decompose", "--k", "0"]).status.code(), Some(2));
}

#[test]
fn vectors() {
    let o = prook(&["vector", "--k", "4", "--subset", "1,2"]);
    assert_eq!(stdout(&o).trim(), "x⊗x⊗x⊗y - y⊗x⊗x⊗x");
    let o = prook(&["vector", "--k", "3", "--subset", "1", "--quantum", "--format", "json"]);
    assert_eq!(
        stdout(&o).trim(),
        r#"{"k":3,"entries":[{"mask":"0b001","coeff":{"0":"-1/1"}},{"mask":"0b100","coeff":{"-2":"1/1"}}]}"#
    );
    assert_eq!(prook(&["vector", "--k", "3", "--subset", "3"]).status.code(), Some(2));
}

#[test]
fn verify_gl_passes() {
    let o = prook(&["verify", "gl", "--k", "5"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let r = json(&o);
    assert_eq!(r["status"], "pass");
    let claims: Vec<&str> = r["claims"].as_array().unwrap().iter().map(|c| c["claim"].as_str().unwrap()).collect();
    assert_eq!(
        claims,
        ["superalgebra-relations", "highest-weight-pairs", "direct-sum", "decomposition", "commuting-actions"]
    );
    assert!(r.get("elapsed_ms").is_none());
}

#[test]
fn verify_hecke_counts_products() {
    let r = json(&prook(&["verify", "hecke", "--k", "5"]));
    assert_eq!(r["status"], "pass");
    assert_eq!(r["claims"][2]["notes"]["products"], 4900);
}

#[test]
fn verify_centralizer_dimension() {
    let r = json(&prook(&["verify", "centralizer", "--k", "5"]));
    assert_eq!(r["status"], "pass");
    assert_eq!(r["claims"][1]["notes"]["dimension"], 70);
    let q = json(&prook(&["verify", "q-centralizer", "--k", "4", "--q0", "1/3"]));
    assert_eq!(q["status"], "pass");
    assert_eq!(q["claims"][0]["notes"]["dimension"], 20);
}

#[test]
fn verify_quantum_reports_the_sign_counterexample() {
    let o = prook(&["verify", "quantum", "--k", "3"]);
    assert_eq!(o.status.code(), Some(1));
    let r = json(&o);
    assert_eq!(r["status"], "fail");
    assert_eq!(r["counterexample"]["claim"], "sigma-signs-as-stated");
    let failing: Vec<&Value> = r["claims"].as_array().unwrap().iter().filter(|c| c["status"] == "fail").collect();
    assert_eq!(failing.len(), 1);
}

#[test]
fn output_is_deterministic() {
    let a = prook(&["verify", "matrix-units", "--n", "5", "--seed", "7"]);
    let b = prook(&["--jobs", "1", "verify", "matrix-units", "--n", "5", "--seed", "7"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let c = prook(&["verify", "matrix-units", "--n", "5", "--seed", "8"]);
    assert_ne!(a.stdout, c.stdout);
}

#[test]
fn usage_errors() {
    assert_eq!(prook(&["verify", "nonsense"]).status.code(), Some(2));
    assert_eq!(prook(&["verify", "centralizer", "--k", "6"]).status.code(), Some(2));
    assert_eq!(prook(&["verify", "q-centralizer", "--k", "2", "--q0", "1"]).status.code(), Some(2));
    assert_eq!(prook(&["verify", "q-centralizer", "--k", "2", "--q0", "-1"]).status.code(), Some(2));
    assert_eq!(prook(&["verify", "q-centralizer", "--k", "2", "--q0", "1/0"]).status.code(), Some(2));
    assert_eq!(prook(&["verify", "gl", "--n", "2", "--k", "2"]).status.code(), Some(2));
    let o = prook_with(&["verify", "gl", "--k", "4"], None, &[("PROOK_MAX_K", "3")]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("PROOK_MAX_K"));
}

#[test]
fn verify_all_summarizes_every_suite() {
    let o = prook_with(&["verify", "all", "--format", "table"], None, &[("PROOK_MAX_K", "3")]);
    assert_eq!(o.status.code(), Some(1));
    let text = stdout(&o);
    assert!(text.lines().last().unwrap().starts_with("FAIL  suite all"));
    for suite in ["rook-modules", "matrix-units", "gl", "quantum", "centralizer", "q-centralizer", "hecke"] {
        assert!(text.contains(&format!("suite={suite}")), "{suite} missing");
    }
    let fails: Vec<&str> = text.lines().filter(|l| l.starts_with("FAIL  ") && !l.contains("suite all")).collect();
    assert_eq!(fails.len(), 1, "{text}");
    assert!(fails[0].contains("sigma-signs-as-stated"));
}
