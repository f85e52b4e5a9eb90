use std::fs;
use std::path::Path;
use std::process::Command;

fn run(cache: &Path, args: &[&str]) -> (Option<i32>, String, String) {
    let o = Command::new(env!("CARGO_BIN_EXE_hookbias"))
        .args(args)
        .env("HOOKBIAS_CACHE_DIR", cache)
        .output()
        .expect("binary runs");
    (
        o.status.code(),
        String::from_utf8(o.stdout).unwrap(),
        String::from_utf8(o.stderr).unwrap(),
    )
}

const CERTIFY: &[&str] = &["certify", "--paper-t3", "--abc", "180,7,471177", "--cap", "1500", "--format", "structured"];
const SCAN: &[&str] = &["scan", "bias", "--pair", "selfconj_vs_distinctodd", "--n-max", "60"];

#[test]
fn warm_cache_reports_are_identical() {
    let dir = tempfile::tempdir().unwrap();
    for args in [CERTIFY, SCAN] {
        let cold = run(dir.path(), args);
        let warm = run(dir.path(), args);
        assert_eq!(cold.0, Some(0));
        assert_eq!(cold, warm);
    }
    assert!(dir.path().join("rho-m9.tsv").exists());
    assert!(dir.path().join("totals-self_conjugate-t10.tsv").exists());
}

#[test]
fn corrupt_files_are_recomputed() {
    let dir = tempfile::tempdir().unwrap();
    let reference = run(dir.path(), CERTIFY);
    let rho = dir.path().join("rho-m9.tsv");
    let pristine = fs::read_to_string(&rho).unwrap();

    // Drop the tail: the record count no longer matches the header.
    let cut: String = pristine.lines().take(200).map(|l| format!("{l}\n")).collect();
    fs::write(&rho, cut).unwrap();
    let (code, out, err) = run(dir.path(), CERTIFY);
    assert_eq!((code, out.as_str()), (Some(0), reference.1.as_str()));
    assert!(err.contains("corrupt cache file"), "{err}");
    assert_eq!(fs::read_to_string(&rho).unwrap(), pristine);

    // A mangled record label.
    let tampered = pristine.replacen("\n100\t", "\n100x\t", 1);
    fs::write(&rho, tampered).unwrap();
    let (_, out, err) = run(dir.path(), CERTIFY);
    assert_eq!(out, reference.1);
    assert!(err.contains("corrupt cache file"));

    fs::write(&rho, "garbage").unwrap();
    let (_, out, _) = run(dir.path(), CERTIFY);
    assert_eq!(out, reference.1);
}

#[test]
fn explicit_cache_dir_wins() {
    let env_dir = tempfile::tempdir().unwrap();
    let flag_dir = tempfile::tempdir().unwrap();
    let mut args: Vec<&str> = vec!["count", "--family", "odd", "--stat", "hook", "--t", "2", "--n", "12"];
    let flag = flag_dir.path().to_str().unwrap().to_owned();
    args.extend(["--cache-dir", &flag]);
    let (code, out, _) = run(env_dir.path(), &args);
    assert_eq!((code, out.as_str()), (Some(0), "34\n"));
    assert!(flag_dir.path().join("totals-odd-t10.tsv").exists());
    assert!(fs::read_dir(env_dir.path()).unwrap().next().is_none());
}
