use std::fs;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_algebroid")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

#[test]
fn documented_examples() {
    let out = run(&["translate", "--fixture", "W1", "--expr", "X1^2"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "1⊗X1^2 - 2*X1⊗X1 + X1^2⊗1\n");

    let out = run(&["mul", "--fixture", "W1", "--left", "x1", "--right", "X1"]);
    assert_eq!(stdout(&out), "X1*x1 - 1\n");

    let out = run(&["coprod", "--fixture", "W1", "--expr", "X1^2"]);
    assert_eq!(stdout(&out), "1⊗X1^2 + 2*X1⊗X1 + X1^2⊗1\n");

    let out = run(&["antipode", "--fixture", "W1", "--functional", "theta(1; x1)", "--precision", "2"]);
    assert_eq!(stdout(&out), "{[0]: x1} @2\n");

    let out = run(&["convolve", "--fixture", "W1", "--left", "{[1]: -1}", "--right", "{[1]: -1}", "--precision", "3"]);
    assert_eq!(stdout(&out), "{[2]: 2} @3\n");

    let out = run(&["zeta", "--fixture", "W1", "--phi", "1", "--m", "x1", "--precision", "3"]);
    assert_eq!(stdout(&out), "{[0]: x1, [1]: -1} @3\n");
}

#[test]
fn check_reports_pass() {
    let out = run(&["check", "--fixture", "W1", "--level", "2"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    let text = stdout(&out);
    assert!(text.lines().filter(|l| !l.starts_with("summary")).all(|l| l.starts_with("PASS ")));
    assert!(text.ends_with("failed\n"));
}

#[test]
fn jets_matrix_output() {
    let out = run(&["jets-matrix", "--fixture", "W1", "--level", "2"]);
    assert_eq!(
        stdout(&out),
        "       X^[0]  X^[1]  X^[2]\nh^[0]      1      0      0\nh^[1]      0     -1      0\nh^[2]      0      0      2\ndet = -2\n"
    );
    let out = run(&["jets-matrix", "--fixture", "W1", "--level", "1", "--json"]);
    assert_eq!(stdout(&out), "{\"determinant\":\"-1\",\"matrix\":[[\"1\",\"0\"],[\"0\",\"-1\"]]}\n");
    let out = run(&["jets-matrix", "--fixture", "AFF", "--level", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
}

#[test]
fn usage_errors_exit_2_without_output() {
    for args in [
        &["mul", "--fixture", "W1", "--left", "x1 +", "--right", "X1"][..],
        &["mul", "--fixture", "W3", "--left", "x1", "--right", "X1"],
        &["mul", "--left", "x1", "--right", "X1"],
        &["frobnicate"],
        &["check", "--suite", "nope"],
        &["antipode", "--fixture", "W1", "--functional", "{[3]: 1}", "--precision", "2"],
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty(), "{args:?}");
        assert!(!stderr(&out).is_empty());
    }
    let out = run(&["mul", "--fixture", "W1", "--left", "x1 +", "--right", "X1"]);
    assert!(stderr(&out).contains("expression grammar"));
}

#[test]
fn session_configs() {
    let dir = tempfile::tempdir().unwrap();
    let pres = r#"{"variables": 1, "rank": 1, "anchor": [["1"]], "bracket": {}}"#;
    fs::write(dir.path().join("w1.json"), pres).unwrap();
    fs::write(dir.path().join("exp.json"), r#"{"rank": 1, "matrices": [[["1"]]]}"#).unwrap();

    let minimal = dir.path().join("minimal.json");
    fs::write(&minimal, r#"{"presentation": "w1.json"}"#).unwrap();
    let out = run(&["mul", "--config", minimal.to_str().unwrap(), "--left", "x1", "--right", "X1"]);
    assert_eq!(stdout(&out), "X1*x1 - 1\n");

    let with_rep = dir.path().join("rep.json");
    fs::write(&with_rep, r#"{"presentation": "w1.json", "representations": ["exp.json"], "precision": 3}"#).unwrap();
    let out = run(&["zeta", "--config", with_rep.to_str().unwrap(), "--phi", "1", "--m", "1"]);
    assert_eq!(stdout(&out), "{[0]: 1, [1]: 1, [2]: 1, [3]: 1} @3\n");

    let negative = dir.path().join("negative.json");
    fs::write(&negative, r#"{"presentation": "w1.json", "precision": -1}"#).unwrap();
    let out = run(&["mul", "--config", negative.to_str().unwrap(), "--left", "1", "--right", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("/precision"), "{}", stderr(&out));

    let missing = dir.path().join("missing.json");
    fs::write(&missing, r#"{"presentation": "w1.json", "representations": ["nowhere.json"]}"#).unwrap();
    let out = run(&["mul", "--config", missing.to_str().unwrap(), "--left", "1", "--right", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("/representations/0") && stderr(&out).contains("nowhere.json"), "{}", stderr(&out));

    let unflat = dir.path().join("unflat.json");
    let aff = r#"{"variables": 1, "rank": 2, "anchor": [["1"], ["x1"]], "bracket": {"1,2": ["1", "0"], "2,1": ["-1", "0"]}}"#;
    fs::write(dir.path().join("aff.json"), aff).unwrap();
    fs::write(dir.path().join("bad.json"), r#"{"rank": 1, "matrices": [[["1"]], [["0"]]]}"#).unwrap();
    fs::write(&unflat, r#"{"presentation": "aff.json", "representations": ["bad.json"]}"#).unwrap();
    let out = run(&["zeta", "--config", unflat.to_str().unwrap(), "--phi", "1", "--m", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("not flat"), "{}", stderr(&out));
}

#[test]
fn deterministic_output() {
    let args = ["check", "--fixture", "AFF", "--level", "2", "--seed", "11"];
    assert_eq!(run(&args).stdout, run(&args).stdout);
    let a = run(&["density", "--fixture", "W2", "--level", "2", "--samples", "6", "--seed", "3"]);
    assert_eq!(a.stdout, run(&["density", "--fixture", "W2", "--level", "2", "--samples", "6", "--seed", "3"]).stdout);
    assert!(stdout(&a).contains("no conclusion"));
}
