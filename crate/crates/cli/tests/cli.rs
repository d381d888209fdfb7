// Copyright 2026 The coherent-shield Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

//! End-to-end runs of the binary on the bundled codes.

use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_coherent-shield"))
        .args(args)
        .env_remove("COHERENT_SHIELD_CAP")
        .output()
        .expect("spawn")
}

fn code(args: &[&str]) -> i32 {
    run(args).status.code().expect("exit code")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8")
}

fn json(args: &[&str]) -> Value {
    let o = run(args);
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("{args:?}: {e}: {}", stdout(&o)))
}

#[test]
fn check_exit_codes() {
    assert_eq!(code(&["check", "shor16.code", "--all-l"]), 0);
    assert_eq!(code(&["check", "qrm16.code", "--level", "4"]), 0);
    assert_eq!(code(&["check", "qrm16.code", "--all-l"]), 1);
    assert_eq!(code(&["check", "seed513.code", "--all-l"]), 1);
    assert_eq!(code(&["check", "seed513.code", "--angle", "0.7853981633974483"]), 1);
    assert_eq!(code(&["check", "qrm16.code", "--t-conditions"]), 0);
    assert_eq!(code(&["check", "no-such.code"]), 2);
    assert_eq!(code(&["check", "shor16.code", "--level", "0"]), 2);
}

#[test]
fn qrm_failure_names_a_component() {
    let v = json(&["check", "qrm16.code", "--all-l", "--json"]);
    assert_eq!(v["schema"], 1);
    assert_eq!(v["verdict"], "fail");
    let entries = v["reports"][0]["entries"].as_array().unwrap();
    let witness = entries.iter().find_map(|e| e["witness"].as_object()).expect("a witness");
    assert_eq!(witness["kind"], "component");
    assert_eq!(witness["size"], 1);
}

#[test]
fn check_json_is_versioned() {
    let v = json(&["check", "shor16.code", "--level", "2", "--level", "3", "--json"]);
    assert_eq!(v["schema"], 1);
    assert_eq!(v["verdict"], "pass");
    let reports = v["reports"].as_array().unwrap();
    assert_eq!(reports.len(), 2);
    assert!(reports.iter().all(|r| r["schema"] == 1 && r["check"] == "theorem1"));
}

#[test]
fn construct_lift_then_distance() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("lift.code");
    let out_s = out.to_str().unwrap();
    assert_eq!(code(&["construct", "seed513.code", "--m", "2", "--out", out_s]), 0);
    let text = std::fs::read_to_string(&out).unwrap();
    assert!(text.contains("n 10\n"));
    let v = json(&["distance", out_s, "--json"]);
    assert_eq!(v["d"], 4);
    assert_eq!(code(&["check", out_s, "--all-l"]), 0);
    assert_eq!(code(&["construct", "seed513.code", "--m", "3"]), 2);
    assert_eq!(code(&["construct", "seed513.code", "--m", "2", "--y-pattern", "11"]), 2);
}

#[test]
fn shor_family_reproduces_bundled_code() {
    let o = run(&["construct", "--family", "shor", "--L", "2", "--y-pattern", "0110"]);
    assert_eq!(o.status.code(), Some(0));
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("f.code");
    std::fs::write(&path, &o.stdout).unwrap();
    let built = coherent_shield::codefile::parse_code_file(&stdout(&o)).unwrap().as_css().unwrap().unwrap();
    let bundled = coherent_shield::codefile::parse_code_file(coherent_shield::codefile::bundled::SHOR16)
        .unwrap()
        .as_css()
        .unwrap()
        .unwrap();
    assert!(built.c2().span_eq(bundled.c2()));
    assert!(built.c1_perp().span_eq(bundled.c1_perp()));
    assert_eq!(built.y(), bundled.y());
    assert_eq!(code(&["distance", path.to_str().unwrap()]), 0);
    assert_eq!(code(&["construct", "--family", "shor"]), 2);
}

#[test]
fn distance_examples() {
    let v = json(&["distance", "shor16.code", "--json"]);
    assert_eq!(v["d"], 4);
    assert_eq!(v["witness"].as_str().unwrap().chars().skip(1).filter(|&c| c != 'I').count(), 4);
    let o = run(&["distance", "shor16.code", "--cap-weight", "3"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).contains("d >= 4"));
}

#[test]
fn enumerate_rm24() {
    let v = json(&["enumerate", "qrm16.code", "--which", "z", "--json"]);
    let coeffs: Vec<&str> = v["coefficients"].as_array().unwrap().iter().map(|c| c.as_str().unwrap()).collect();
    let want = ["1", "0", "0", "0", "140", "0", "448", "0", "870", "0", "448", "0", "140", "0", "0", "0", "1"];
    assert_eq!(coeffs, want);
    let x = json(&["enumerate", "qrm16.code", "--which", "x", "--json"]);
    assert_eq!(x["coefficients"][16], "1");
}

#[test]
fn simulate_code512() {
    let v = json(&["simulate", "code512.code", "--theta", "0.7", "--json"]);
    assert_eq!(v["verdict"], "pass");
    let r = &v["report"]["results"][0];
    assert!((r["min_fidelity"].as_f64().unwrap() - 1.0).abs() < 1e-12);
    assert!((r["phase"].as_f64().unwrap() - (-0.7)).abs() < 1e-12);
    assert_eq!(code(&["simulate", "qrm16.code", "--theta", "0.3"]), 1);
}

#[test]
fn validate_reports_anticommuting_pair() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.code");
    std::fs::write(&bad, "code bad\nn 2\nkind stab\ngen + X:10 Z:00\ngen + X:00 Z:10\n").unwrap();
    let o = run(&["validate", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("generators 0 and 1 anticommute"));

    let syntax = dir.path().join("syntax.code");
    std::fs::write(&syntax, "code s\nn 2\nkind stab\ngen ? X:10 Z:00\n").unwrap();
    let o = run(&["validate", syntax.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 4, column 5"));

    for name in ["shor16", "qrm16", "seed513", "code512", "dualrail"] {
        assert_eq!(code(&["validate", name]), 0, "{name}");
    }
}

#[test]
fn enumeration_cap_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_coherent-shield"))
        .args(["enumerate", "qrm16.code"])
        .env("COHERENT_SHIELD_CAP", "2^4")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
    let o = Command::new(env!("CARGO_BIN_EXE_coherent-shield"))
        .args(["enumerate", "qrm16.code"])
        .env("COHERENT_SHIELD_CAP", "bogus")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn threads_flag_gives_identical_reports() {
    let one = run(&["--threads", "1", "check", "shor16.code", "--level", "3", "--json"]);
    let many = run(&["--threads", "4", "check", "shor16.code", "--level", "3", "--json"]);
    assert_eq!(one.stdout, many.stdout);
}

#[test]
fn bundled_files_exist_on_disk() {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("../core/codes");
    for name in ["shor16", "qrm16", "seed513", "code512", "dualrail"] {
        let path = dir.join(format!("{name}.code"));
        assert_eq!(code(&["validate", path.to_str().unwrap()]), 0);
    }
}

#[test]
fn shor_family_parameters() {
    for (l, summary) in [("1", "[[4,1,2]]"), ("3", "[[36,1,6]]")] {
        let o = run(&["construct", "--family", "shor", "--L", l]);
        assert_eq!(o.status.code(), Some(0));
        let err = String::from_utf8_lossy(&o.stderr);
        assert!(err.contains(summary) && err.contains("oblivious: yes"), "{err}");
    }
}
