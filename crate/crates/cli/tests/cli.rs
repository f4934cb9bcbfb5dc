use std::process::{Command, Output};

use mirrorforge::exactnum::xi;
use mirrorforge::{LambdaLaurent, Ring};
use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mirrorforge"))
        .args(args)
        .env_remove("MIRRORFORGE_ORDER")
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("valid json")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

#[test]
fn tau_csv_rows() {
    let out = run(&["compute", "tau", "--order", "6", "--format", "csv"]);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    let rows: Vec<&str> = text.lines().skip(1).collect();
    assert_eq!(rows, ["tau,1,\"1\"", "tau,6,\"13/1125000\""]);
}

#[test]
fn i0_low_order_is_one() {
    let out = run(&["compute", "i0", "--order", "4", "--format", "csv"]);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().skip(1).collect::<Vec<_>>(), ["I_0,0,\"1\""]);
}

#[test]
fn f1_fjrw_has_both_coefficients() {
    let out = run(&["compute", "f1", "--theory", "fjrw", "--order", "10", "--format", "json"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    let entries = v["entries"].as_array().unwrap();
    assert_eq!(entries.len(), 1);
    let coeffs = entries[0]["series"]["coeffs"].as_array().unwrap();
    assert_eq!(coeffs[5], serde_json::json!({"n": "-1", "d": "28125"}));
    assert_ne!(coeffs[10]["n"], "0");
    for k in [1, 2, 3, 4, 6, 7, 8, 9] {
        assert_eq!(coeffs[k]["n"], "0");
    }
}

#[test]
fn env_overrides_default_order() {
    let out = Command::new(env!("CARGO_BIN_EXE_mirrorforge"))
        .args(["compute", "l", "--format", "json"])
        .env("MIRRORFORGE_ORDER", "7")
        .output()
        .unwrap();
    assert_eq!(code(&out), 0);
    assert_eq!(json(&out)["order"], 7);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(code(&run(&["verify", "bogus"])), 2);
    assert_eq!(code(&run(&["verify", "--suites", "pf,nope"])), 2);
    assert_eq!(code(&run(&["verify", "zz", "--order", "4"])), 2);
    assert_eq!(code(&run(&["compute", "nothing"])), 2);
    assert_eq!(code(&run(&["dump", "graphs", "--g", "3", "--n", "1"])), 2);
}

#[test]
fn pf_suite_passes() {
    let out = run(&["verify", "pf", "--order", "40", "--format", "json"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    let rep = &v.as_array().unwrap()[0];
    assert_eq!(rep["suite"], "pf");
    assert_eq!(rep["status"], "pass");
    assert!(rep["first_failure"].is_null());
    assert!(rep["elapsed_ms"].is_u64());
    let keys: Vec<&String> = rep.as_object().unwrap().keys().collect();
    assert_eq!(keys, ["elapsed_ms", "first_failure", "status", "suite"]);
}

#[test]
fn several_suites_with_jobs() {
    let out = run(&["verify", "ipp", "zz", "tails", "--order", "10", "--jobs", "2"]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stdout));
    let text = String::from_utf8(out.stdout).unwrap();
    let heads: Vec<&str> = text.lines().filter(|l| !l.starts_with(' ')).collect();
    assert_eq!(heads.len(), 3);
    assert!(heads.iter().all(|l| l.contains("PASS")));
}

#[test]
fn residues_fail_with_exit_one() {
    let out = run(&["verify", "residues", "--dmax", "5", "--format", "json"]);
    assert_eq!(code(&out), 1);
    let v = json(&out);
    assert_eq!(v[0]["status"], "fail");
    assert!(v[0]["first_failure"].is_object());
}

#[test]
fn graphs_g1_n1() {
    let out = run(&["dump", "graphs", "--g", "1", "--n", "1"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["count"], 2);
    let mut auts: Vec<u64> = v["graphs"]
        .as_array()
        .unwrap()
        .iter()
        .map(|g| g["automorphisms"].as_u64().unwrap())
        .collect();
    auts.sort();
    assert_eq!(auts, [1, 2]);
}

#[test]
fn frame_delta_constants() {
    let out = run(&["dump", "frame", "--order", "5"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    for a in 0..5 {
        let c0 = &v["delta"][a]["coeffs"][0];
        let want = LambdaLaurent::monomial(6, xi(3 * a as i64)).to_json();
        assert_eq!(c0, &want, "Δ_{a}");
    }
}

#[test]
fn rmatrix_order_zero_is_zero() {
    let out = run(&["dump", "rmatrix", "--order", "0"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    for row in v["r1"].as_array().unwrap() {
        for e in row.as_array().unwrap() {
            assert!(e["coeffs"]
                .as_array()
                .unwrap()
                .iter()
                .all(|c| c.as_array().unwrap().is_empty()));
        }
    }
}

#[test]
fn output_is_deterministic() {
    let a = run(&["compute", "r1", "--order", "6", "--format", "json"]);
    let b = run(&["compute", "r1", "--order", "6", "--format", "json"]);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn out_flag_writes_file() {
    let dir = std::env::temp_dir().join(format!("mirrorforge-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("yukawa.json");
    let out = run(&[
        "compute",
        "yukawa",
        "--order",
        "10",
        "--format",
        "json",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["target"], "yukawa");
    std::fs::remove_dir_all(dir).ok();
}
