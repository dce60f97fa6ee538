use std::io::Write;

use symbreak::catalog::VerificationReport;
use symbreak::cli::{run, EXIT_OK, EXIT_USAGE};

fn symbreak(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("symbreak").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn spec_file(name: &str, body: &str) -> std::path::PathBuf {
    let path = std::env::temp_dir().join(format!("symbreak-cli-{}-{name}.json", std::process::id()));
    std::fs::File::create(&path).unwrap().write_all(body.as_bytes()).unwrap();
    path
}

#[test]
fn distinguishing_number_of_a5() {
    let (code, out, _) = symbreak(&["distinguishing", "-g", "A5"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out.trim(), "4");
}

#[test]
fn malformed_specs_are_usage_errors() {
    let path = spec_file("bad", r#"{"degree": 3, "generators": ["(1,2"]}"#);
    let (code, _, err) = symbreak(&["info", path.to_str().unwrap()]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("cycle"), "{err}");
    let path = spec_file("unknown", r#"{"degree": 3, "gens": []}"#);
    assert_eq!(symbreak(&["info", path.to_str().unwrap()]).0, EXIT_USAGE);
    assert_eq!(symbreak(&["info", "-g", "NotAGroup"]).0, EXIT_USAGE);
    assert_eq!(symbreak(&["verify-paper", "--table", "7"]).0, EXIT_USAGE);
    assert_eq!(symbreak(&["no-such-command"]).0, EXIT_USAGE);
}

#[test]
fn info_reads_a_spec_file() {
    let path = spec_file("l32", r#"{"degree": 7, "generators": ["(1,4)(6,7)", "(1,3,2)(4,7,5)"]}"#);
    let (code, out, _) = symbreak(&["info", path.to_str().unwrap()]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("order 168") && out.contains("primitive true"), "{out}");
}

#[test]
fn table_one_sweep_passes() {
    let (code, out, _) = symbreak(&["verify-paper", "--table", "1", "--effort", "quick"]);
    assert_eq!(code, EXIT_OK, "{out}");
    assert!(out.contains("14/14 reports pass"), "{out}");
    let (code, out, _) = symbreak(&["--json", "verify-paper", "--table", "1"]);
    assert_eq!(code, EXIT_OK);
    let reports: Vec<VerificationReport> = serde_json::from_str(&out).unwrap();
    assert_eq!(reports.len(), 14);
    assert!(reports.iter().all(VerificationReport::passed));
    let again: Vec<VerificationReport> = serde_json::from_str(&serde_json::to_string(&reports).unwrap()).unwrap();
    assert_eq!(again, reports);
}

#[test]
fn sum_and_decompose() {
    let path = spec_file(
        "sum",
        r#"{"sum": {"kind": "parallel", "components": ["L3(2)@7", {"degree": 7, "generators": ["(1,4)(6,7)", "(1,3,2)(4,7,5)"]}]}}"#,
    );
    let (code, out, err) = symbreak(&["sum", path.to_str().unwrap()]);
    assert_eq!(code, EXIT_OK, "{err}");
    let spec: serde_json::Value = serde_json::from_str(out.lines().next().unwrap()).unwrap();
    assert!(out.contains("order 168"), "{out}");
    assert_eq!(spec["degree"], 14);
    let (code, out, _) = symbreak(&["decompose", "-g", "L3(2)||psiL3(2)", "--block", "1,2,3,4,5,6,7"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("parallel"), "{out}");
}

#[test]
fn regular_sets_and_orbitals() {
    let (code, out, _) = symbreak(&["--json", "regular-set", "-g", "L2(7)@8"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(serde_json::from_str::<serde_json::Value>(&out).unwrap()["result"], "none");
    let (code, out, _) = symbreak(&["--json", "regular-set", "-g", "L3(2)||psiL3(2)", "--min", "4", "--max", "4"]);
    assert_eq!(code, EXIT_OK);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["set"].as_array().unwrap().len(), 4, "{out}");
    let (_, out, _) = symbreak(&["orbitals", "-g", "A6||psiA6"]);
    assert!(out.starts_with("3 orbitals"), "{out}");
    let (_, out, _) = symbreak(&["orbitals", "-g", "A6^(2)"]);
    assert!(out.starts_with("4 orbitals"), "{out}");
}

#[test]
fn catalog_listing() {
    let (code, out, _) = symbreak(&["catalog", "list"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("M24@24") && out.contains("L2(9)||A6"), "{out}");
}
