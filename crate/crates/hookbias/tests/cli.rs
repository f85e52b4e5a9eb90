use std::process::{Command, Output};

fn hookbias(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hookbias"))
        .args(args)
        .env_remove("HOOKBIAS_CACHE_DIR")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn count_examples() {
    let o = hookbias(&["count", "--family", "distinct", "--stat", "hook", "--t", "2", "--n", "7"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "6\n");
    let o = hookbias(&["count", "--n", "0", "--t", "5", "--family", "odd", "--stat", "hook"]);
    assert_eq!(stdout(&o), "0\n");
    let o = hookbias(&["count", "--family", "odd", "--stat", "parts", "--n", "5"]);
    assert_eq!(stdout(&o), "9\n");
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["frobnicate"][..],
        &["count", "--family", "distinct", "--stat", "hook", "--n", "7"],
        &["count", "--family", "primes", "--stat", "hook", "--t", "1", "--n", "7"],
        &["scan", "bias", "--t", "4", "--source", "genfun"],
        &["scan", "bias", "--n-max", "500"],
        &["certify"],
        &["certify", "--toy", "--abc", "2,2,2"],
        &["identity", "nekrasov-okounkov", "--z", "1", "--order", "40"],
    ] {
        let o = hookbias(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    }
    assert_eq!(hookbias(&["--help"]).status.code(), Some(0));
}

#[test]
fn failed_certificate_exits_1() {
    // q(n + 2) <= 1.1 q(n) is false for every n that matters.
    let o = hookbias(&[
        "certify", "--lhs", "10@2", "--rhs", "11@0", "--m", "1", "--abc", "4,4,4", "--cap", "200",
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL"));
}

#[test]
fn covered_certificate_with_exceptions_is_not_a_proof() {
    // q(n + 3) <= 2 q(n) fails only at n = 2 and n = 4.
    let o = hookbias(&["certify", "--lhs", "1@3", "--rhs", "2@0", "--m", "1"]);
    let out = stdout(&o);
    assert_eq!(o.status.code(), Some(1));
    assert!(out.contains("[2, 4]"), "{out}");
    assert!(out.contains("fails exactly at the listed violations"), "{out}");
    assert!(!out.contains("holds for all"), "{out}");
}

#[test]
fn structured_certificate() {
    let o = hookbias(&[
        "certify", "--paper-t3", "--abc", "180,7,471177", "--cap", "2000", "--format", "structured",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(doc["tool"], "hookbias");
    assert_eq!(doc["command"], "certify");
    assert_eq!(doc["params"]["spec"], "paper_t3");
    let summary = &doc["summary"];
    assert_eq!(summary["L"], 78);
    assert_eq!(summary["epsilon"].as_f64(), Some(6.375));
    assert_eq!(summary["verified_from"], 25);
    assert_eq!(summary["verified_to"], 2000);
    assert_eq!(summary["violations"], serde_json::json!([]));
    assert_eq!(summary["covers_threshold"], false);
    assert!((summary["N_A"].as_f64().unwrap() - 67910.506).abs() < 1e-2);
}

#[test]
fn scans_and_identities() {
    let o = hookbias(&["scan", "bias", "--t", "3", "--n-max", "40", "--differences"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("consistent with conjectured value 7"));
    let o = hookbias(&["scan", "bias", "--t", "2,3", "--n-max", "400", "--source", "genfun"]);
    assert_eq!(o.status.code(), Some(0));
    let o = hookbias(&["scan", "identities", "--n-max", "20"]);
    assert_eq!(o.status.code(), Some(0));
    let o = hookbias(&["scan", "congruence", "--m-max", "3", "--n-max", "30"]);
    assert_eq!(o.status.code(), Some(0));
    let o = hookbias(&["identity", "han-multiple", "--t", "3", "--y", "2", "--z", "1", "--order", "10"]);
    assert_eq!(o.status.code(), Some(0));
    let o = hookbias(&["identity", "bisection", "--order", "120"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn series_and_asym() {
    let o = hookbias(&["series", "--name", "b2", "--order", "7", "--format", "structured"]);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(doc["sections"][0]["rows"][7], serde_json::json!([7, 6]));
    let o = hookbias(&["asym", "envelope", "--n", "10,100,1000"]);
    assert_eq!(o.status.code(), Some(0));
    let o = hookbias(&["asym", "bessel", "--x", "3.5,50"]);
    assert_eq!(o.status.code(), Some(0));
    let o = hookbias(&["asym", "wright", "--series", "a2", "--n", "1000"]);
    assert!(stdout(&o).contains("1000"));
    let o = hookbias(&["asym", "laurent", "--name", "lo2", "--z", "0.001"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn out_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.txt");
    let o = hookbias(&[
        "count", "--family", "odd", "--stat", "hook", "--t", "3", "--n", "7", "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(path).unwrap(), "5\n");
}
