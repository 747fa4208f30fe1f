use std::process::Command as Process;

use hopfkit_cli::job::JobEcho;
use hopfkit_cli::{invoke, reverify_witnesses, Outcome, Report};
use serde_json::Value;

fn hopfkit(args: &[&str]) -> (i32, String, String) {
    let out = Process::new(env!("CARGO_BIN_EXE_hopfkit"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().expect("exit code"),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn machine(args: &[&str]) -> (i32, Value) {
    let mut full = args.to_vec();
    full.extend(["--format", "machine"]);
    let (code, stdout, stderr) = hopfkit(&full);
    let v = serde_json::from_str(&stdout).unwrap_or_else(|e| panic!("{e}: {stdout}{stderr}"));
    (code, v)
}

fn check<'a>(report: &'a Value, name: &str) -> &'a Value {
    report["checks"]
        .as_array()
        .unwrap()
        .iter()
        .find(|c| c["name"] == name)
        .unwrap_or_else(|| panic!("no check {name:?}"))
}

#[test]
fn hopf_group_algebra_passes_with_antipode() {
    let (code, r) = machine(&["hopf", "group_Z2_Q"]);
    assert_eq!(code, 0);
    assert_eq!(r["verdict"], "Hopf: true");
    let hopf = check(&r, "Hopf");
    assert_eq!(hopf["status"], "pass");
    assert_eq!(hopf["witness"]["antipode"]["rows"], 2);
    assert_eq!(
        check(&r, "gamma_left invertible")["witness"]["kind"],
        "inverse"
    );
    assert!(reverify_witnesses(&r).unwrap() > 0);
}

#[test]
fn hopf_idempotent_monoid_fails_with_kernel() {
    let (code, r) = machine(&["hopf", "monoid_idem_Q"]);
    assert_eq!(code, 1);
    assert_eq!(r["verdict"], "Hopf: false");
    let hopf = check(&r, "Hopf");
    assert_eq!(hopf["status"], "fail");
    assert_eq!(hopf["witness"]["kind"], "kernel");
    assert!(reverify_witnesses(&r).unwrap() > 0);
}

#[test]
fn tampered_witness_is_rejected() {
    let (_, mut r) = machine(&["hopf", "group_Z3_Q"]);
    let checks = r["checks"].as_array_mut().unwrap();
    let gamma = checks
        .iter_mut()
        .find(|c| c["name"] == "gamma_left invertible")
        .unwrap();
    gamma["witness"]["evidence"]["entries"][0][0] = Value::from("5/1");
    assert!(reverify_witnesses(&r).is_err());
}

#[test]
fn powerset_exits_one_with_findings() {
    let (code, r) = machine(&["finset", "powerset", "--max", "3"]);
    assert_eq!(code, 1);
    let text = r.to_string();
    assert!(
        text.contains("1_1 not Galois for P, Galois for P+"),
        "{text}"
    );
}

#[test]
fn input_errors_exit_two() {
    let (code, _, stderr) = hopfkit(&["hopf", "no_such_input"]);
    assert_eq!(code, 2);
    assert!(stderr.starts_with("input error"));
    assert_eq!(hopfkit(&["hopf"]).0, 2);
    assert_eq!(hopfkit(&["hopf", "group_Z2_Q", "--field", "Fp:4"]).0, 2);
    assert_eq!(hopfkit(&["hopf", "powerset"]).0, 2);
    assert_eq!(hopfkit(&["finset", "group_Z2_Q", "--field", "Q"]).0, 2);
}

#[test]
fn malformed_file_reports_position() {
    let dir = std::env::temp_dir().join(format!("hopfkit-contract-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("bad.json");
    std::fs::write(&path, "{\n  \"field\": \"Q\",\n  \"dim\": \n}").unwrap();
    let (code, _, stderr) = hopfkit(&["validate", path.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(stderr.contains("line"), "{stderr}");
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn exported_file_round_trips() {
    let (code, text, _) = hopfkit(&["export", "group_S3_F3"]);
    assert_eq!(code, 0);
    let dir = std::env::temp_dir().join(format!("hopfkit-export-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("s3.json");
    std::fs::write(&path, text).unwrap();
    let (from_file, a) = machine(&["hopf", path.to_str().unwrap()]);
    let (bundled, b) = machine(&["hopf", "group_S3_F3"]);
    assert_eq!((from_file, bundled), (0, 0));
    assert_eq!(a["checks"], b["checks"]);
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn field_override_is_echoed() {
    let (code, r) = machine(&["hopf", "group_Z2_Q", "--field", "Fp:2"]);
    assert_eq!(code, 0);
    assert_eq!(r["job"]["field"], "Fp:2");
}

#[test]
fn list_corpus_has_required_entries() {
    let (code, stdout, _) = hopfkit(&["list-corpus"]);
    assert_eq!(code, 0);
    let names: Vec<&str> = stdout.lines().collect();
    for g in ["Z2", "Z3", "Z4", "Z2xZ2", "S3"] {
        for f in ["Q", "F2", "F3"] {
            let n = format!("group_{g}_{f}");
            assert!(names.contains(&n.as_str()), "{n}");
        }
    }
    for n in ["monoid_idem_Q", "trivial_Q", "powerset", "presheaf_01"] {
        assert!(names.contains(&n), "{n}");
    }
}

#[test]
fn reports_are_byte_identical() {
    for args in [
        ["fusion", "group_Z3_F2"],
        ["hopfmod", "monoid_idem_Q"],
        ["finset", "presheaf_01"],
    ] {
        let a = hopfkit(&[args[0], args[1], "--format", "machine"]);
        let b = hopfkit(&[args[0], args[1], "--format", "machine"]);
        assert_eq!(a, b, "{args:?}");
    }
}

#[test]
fn text_and_machine_agree_on_verdict() {
    let (_, text, _) = hopfkit(&["hopf", "group_Z4_F2"]);
    let (_, r) = machine(&["hopf", "group_Z4_F2"]);
    let verdict = r["verdict"].as_str().unwrap();
    assert!(text.contains(&format!("verdict: {verdict}")), "{text}");
}

#[test]
fn in_process_invocation_matches_binary() {
    let args = ["hopfkit", "antipode", "group_S3_Q", "--format", "machine"];
    let inv = invoke(args);
    let (code, stdout, _) = hopfkit(&args[1..]);
    assert_eq!((inv.code, inv.stdout), (code, stdout));
}

#[test]
fn failed_consistency_check_exits_three() {
    let echo = JobEcho {
        command: "hopf".into(),
        input: "synthetic".into(),
        field: None,
        dim_bound: 1,
        max: None,
    };
    let mut r = Report::new(echo);
    r.claim("claim", false);
    assert_eq!(r.outcome(), Outcome::False);
    assert_eq!(r.outcome().exit_code(), 1);
    r.consistency("agreement", false);
    assert_eq!(r.outcome(), Outcome::Inconsistent);
    assert_eq!(r.outcome().exit_code(), 3);
}
