use std::process::Command;

fn run(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_eqcohom")).args(args).output().expect("run eqcohom");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout).into_owned(),
        String::from_utf8_lossy(&out.stderr).into_owned(),
    )
}

#[test]
fn group_query() {
    let (code, out, _) = run(&["group", "--p", "2", "--ring", "S0", "--grading", "3L-1"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("H^{-1 + 3L}(S0)"), "{out}");
    let (code, out, _) = run(&["group", "--p", "2", "--ring", "S0", "--grading", "4L-2"]);
    assert_eq!(code, 0);
    assert!(out.contains("e^2*xi"), "{out}");
}

#[test]
fn mul_matches_normalized_product() {
    let (code, out, _) = run(&["mul", "--p", "3", "chic(0)*xi(0,1)", "chic(1)*xi(1,1)"]);
    assert_eq!(code, 0);
    let (code2, out2, _) = run(&["normalize", "--p", "3", out.trim()]);
    assert_eq!(code2, 0);
    assert_eq!(out, out2);
}

#[test]
fn grid_formats() {
    let (code, out, _) = run(&["grid", "--p", "2", "--ring", "S0", "--window", "8"]);
    assert_eq!(code, 0);
    assert!(out.contains("A_GG") && out.contains("e^-2 dxi^-1"), "{out}");
    let (code, out, _) = run(&["grid", "--p", "2", "--ring", "EG", "--window", "3", "--format", "svg"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("<svg"), "{out}");
    let (code, out, _) = run(&["grid", "--p", "5", "--grading", "M2-M1", "--window", "2", "--format", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["p"], 5);
}

#[test]
fn suites() {
    let (code, out, _) = run(&["run-suite", "les-exactness", "--p", "5"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("PASS"));
    let (code, out, _) = run(&["run-suite", "relations", "--p", "3"]);
    assert_eq!(code, 0, "{out}");
    let (code, out, _) = run(&["run-suite", "ext", "--p", "2"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("2 classes"), "{out}");
    let (code, out, _) =
        run(&["run-suite", "eta-oracle", "--p", "2", "--seed", "9", "--trials", "5", "--format", "json"]);
    assert_eq!(code, 0, "{out}");
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["seed"], 9);
}

#[test]
fn other_verbs() {
    let (code, out, _) = run(&["ext-classify", "--p", "3"]);
    assert_eq!(code, 0);
    assert!(out.contains("3 classes"), "{out}");
    let (code, out, _) = run(&["les-check", "--p", "3", "--grading", "M1-4"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("exact"), "{out}");
    let (code, out, _) = run(&["basis", "--p", "3", "--ring", "B", "--grading", "omega*", "--window", "3"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 3, "{out}");
    let (code, out, _) = run(&["eta", "--p", "2", "c"]);
    assert_eq!(code, 0);
    assert!(out.contains('σ'), "{out}");
    let (code, _, _) = run(&["verify-relations", "--p", "2", "--window", "2"]);
    assert_eq!(code, 0);
}

#[test]
fn usage_errors_exit_2_with_span() {
    let (code, _, err) = run(&["group", "--p", "5", "--grading", "2 + L"]);
    assert_eq!(code, 2);
    assert!(err.contains("2 + L\n      ^"), "{err}");
    let (code, _, _) = run(&["group", "--p", "6", "--grading", "1"]);
    assert_eq!(code, 2);
    let (code, _, _) = run(&["frobnicate"]);
    assert_eq!(code, 2);
    let (code, _, _) = run(&["run-suite", "nonsense"]);
    assert_eq!(code, 2);
    let (code, _, _) = run(&["group", "--p", "3"]);
    assert_eq!(code, 2);
}
