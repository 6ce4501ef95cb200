use std::fs;

use serde_json::Value;
use superint::cli::main_with_args;

fn run(args: &[&str]) -> i32 {
    let mut v = vec!["superint".to_string()];
    v.extend(args.iter().map(|s| s.to_string()));
    main_with_args(v)
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["--alpha", "1", "--beta", "1", "verify", "commutator"]), 2);
    assert_eq!(run(&["--alpha", "1/0", "verify", "commutator"]), 2);
    assert_eq!(run(&["--suites", "nonsense", "verify"]), 2);
    assert_eq!(run(&["verify", "nonsense"]), 2);
    assert_eq!(run(&["frobnicate"]), 2);
    assert_eq!(run(&["--omega", "0", "dump", "h"]), 2);
    assert_eq!(run(&["--help"]), 0);
}

#[test]
fn pass_fail_and_skip() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("r.json");
    let o = out.to_str().unwrap();
    assert_eq!(run(&["--suites", "commutator,painleve", "--out", o, "verify"]), 0);
    let r: Value = serde_json::from_str(&fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(r["status"], "pass");
    assert_eq!(r["schema_version"], 1);
    assert_eq!(r["instances"][0]["suites"].as_array().unwrap().len(), 2);

    assert_eq!(run(&["--fault-c12-offset", "1", "verify", "commutator"]), 1);
    assert_eq!(run(&["--fault-k-quarter", "3/4", "verify", "painleve"]), 1);

    assert_eq!(run(&["--alpha", "1/4", "--out", o, "verify", "numeric"]), 0);
    let r: Value = serde_json::from_str(&fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(r["instances"][0]["suites"][0]["status"], "skipped");
}

fn strip_timing(v: &mut Value) {
    match v {
        Value::Object(m) => {
            m.remove("timing_ms");
            m.remove("seconds");
            m.values_mut().for_each(strip_timing);
        }
        Value::Array(a) => a.iter_mut().for_each(strip_timing),
        _ => {}
    }
}

#[test]
fn reports_are_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    let mut reports = Vec::new();
    for name in ["a.json", "b.json"] {
        let path = dir.path().join(name);
        let args = ["--random", "2", "--seed", "11", "--suites", "eigen,painleve,oscillator", "--out", path.to_str().unwrap(), "verify"];
        assert_eq!(run(&args), 0);
        let mut v: Value = serde_json::from_str(&fs::read_to_string(&path).unwrap()).unwrap();
        strip_timing(&mut v);
        reports.push(serde_json::to_string(&v).unwrap());
    }
    assert_eq!(reports[0], reports[1]);
    let v: Value = serde_json::from_str(&reports[0]).unwrap();
    assert_eq!(v["instances"].as_array().unwrap().len(), 3);
    assert_eq!(v["config"]["seed"], 11);
}

#[test]
fn config_file_then_flags() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("run.toml");
    let out = dir.path().join("r.json");
    fs::write(&cfg, format!("alpha = \"3/2\"\nbeta = \"5/2\"\nsuites = \"painleve\"\nout = {:?}\n", out)).unwrap();
    assert_eq!(run(&["--config", cfg.to_str().unwrap(), "verify"]), 0);
    let r: Value = serde_json::from_str(&fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(r["instances"][0]["params"]["b"], "4");
    assert_eq!(run(&["--config", cfg.to_str().unwrap(), "--beta", "3/2", "verify"]), 2);
    fs::write(&cfg, "alpha = 1\nbogus = 3\n").unwrap();
    assert_eq!(run(&["--config", cfg.to_str().unwrap(), "verify"]), 2);
}

#[test]
fn painleve_report_json() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("p.json");
    assert_eq!(run(&["--out", out.to_str().unwrap(), "painleve", "report"]), 0);
    let r: Value = serde_json::from_str(&fs::read_to_string(&out).unwrap()).unwrap();
    for key in ["params", "q", "gammaBranches", "residualZero"] {
        assert!(r.get(key).is_some(), "missing {key}");
    }
    assert_eq!(r["residualZero"], true);
    assert_eq!(r["gammaBranches"]["minusBranch"], true);
    assert_eq!(r["q"]["q9"], "-17/8");
}

#[test]
fn csv_outputs() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("s.csv");
    let o = out.to_str().unwrap();
    assert_eq!(run(&["--out", o, "spectrum", "--numeric"]), 0);
    let text = fs::read_to_string(&out).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("m,n,E_exact,E_numeric,rel_error,mesh_levels"));
    assert_eq!(lines.count(), 6);

    assert_eq!(run(&["--out", o, "wavefunction", "--m", "1", "--n", "2", "--nr", "5", "--nphi", "4"]), 0);
    let text = fs::read_to_string(&out).unwrap();
    assert!(text.starts_with("r,phi,psi\n"));
    assert_eq!(text.lines().count(), 21);

    assert_eq!(run(&["--out", o, "oscillator", "spectrum", "--max-p", "2", "--format", "json"]), 0);
    let v: Value = serde_json::from_str(&fs::read_to_string(&out).unwrap()).unwrap();
    assert!(v.as_array().unwrap().iter().any(|r| r["family"] == 3 && r["admissible"] == true));
}

#[test]
fn dump_one_term_per_line() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("l2.txt");
    assert_eq!(run(&["--out", out.to_str().unwrap(), "dump", "l2"]), 0);
    let text = fs::read_to_string(&out).unwrap();
    let terms: Vec<&str> = text.lines().collect();
    assert_eq!(terms.len(), 15);
    assert!(terms.iter().all(|t| t.contains(" * dr^") && t.contains("dphi^")));
    assert!(terms.iter().any(|t| t.ends_with("dr^0 dphi^4")));
}
