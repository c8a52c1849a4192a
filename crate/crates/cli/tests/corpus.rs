use std::fs;
use std::path::Path;

use lfk_cli::corpus::run_dir;
use lfk_cli::{run, EXIT_FAIL, EXIT_PASS};
use lfk_core::Status;

fn corpus_dir() -> &'static Path {
    Path::new(concat!(env!("CARGO_MANIFEST_DIR"), "/../../corpus"))
}

#[test]
fn shipped_corpus_passes() {
    let r = run_dir(corpus_dir());
    let failures: Vec<_> = r
        .clauses
        .iter()
        .filter(|c| c.status != Status::Pass)
        .map(|c| c.name.as_str())
        .collect();
    assert!(r.is_pass(), "failing cases: {:?}", failures);
    assert!(r.clauses.len() >= 60);
}

#[test]
fn corpus_subcommand_reports_each_case() {
    let dir = corpus_dir().join("levels");
    let r = run(vec!["lfk".into(), "corpus".into(), "run".into(), dir.display().to_string()]);
    assert_eq!(r.code, EXIT_PASS, "{}", r.stdout);
    let json = r.json.unwrap();
    let names: Vec<_> = json["clauses"].as_array().unwrap().iter().map(|c| c["name"].as_str().unwrap().to_string()).collect();
    assert!(names.contains(&"tangency_quartic".to_string()), "{:?}", names);
}

#[test]
fn runner_detects_mismatches() {
    let dir = tempfile::tempdir().unwrap();
    let case = |verdict: &str, output: &str| {
        format!(
            r#"{{"dim": 2, "flavor": "real", "command": "check-integrable",
               "inputs": {{"form": "Re(z2*dz1 + I*dz2)"}},
               "expect": {{"verdict": "{}", "output": {{{}}}}}}}"#,
            verdict, output
        )
    };
    fs::write(dir.path().join("wrong_verdict.json"), case("PASS", "")).unwrap();
    fs::write(dir.path().join("right_verdict.json"), case("FAIL", "")).unwrap();
    fs::write(dir.path().join("missing_output.json"), case("FAIL", r#""theta": "0""#)).unwrap();
    fs::write(dir.path().join("unknown_field.json"), r#"{"dim": 1, "flavor": "real", "command": "mirror", "expect": {"verdict": "PASS"}, "extra": 1}"#).unwrap();

    let r = run_dir(dir.path());
    assert!(!r.is_pass());
    assert_eq!(r.clause("right_verdict").unwrap().status, Status::Pass);
    for name in ["wrong_verdict", "missing_output", "unknown_field"] {
        assert_eq!(r.clause(name).unwrap().status, Status::Fail, "{}", name);
    }

    let cli = run(vec!["lfk".into(), "corpus".into(), "run".into(), dir.path().display().to_string()]);
    assert_eq!(cli.code, EXIT_FAIL);
}

#[test]
fn empty_corpus_is_an_error() {
    let dir = tempfile::tempdir().unwrap();
    let r = run_dir(dir.path());
    assert!(!r.is_pass());
}

#[test]
fn reports_are_deterministic() {
    let argv = || {
        ["lfk", "--dim", "2", "--flavor", "complexified", "pencil-theta", "--eta1=w1*w2*(z2*dz1 + z1*dz2)", "--eta2=z1*z2*(w2*dw1 + w1*dw2)"]
            .map(String::from)
            .to_vec()
    };
    let strip = |mut v: serde_json::Value| {
        v.as_object_mut().unwrap().remove("millis");
        v
    };
    let a = strip(run(argv()).json.unwrap());
    let b = strip(run(argv()).json.unwrap());
    assert_eq!(a, b);
}
