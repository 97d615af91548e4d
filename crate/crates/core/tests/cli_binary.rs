//! Black-box tests of the installed binary: exit-code contract,
//! byte-identical determinism, and round-tripping of emitted JSON.

use std::process::{Command, Output, Stdio};

fn tiltbg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tiltbg"))
        .args(args)
        .stdin(Stdio::null())
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

const LINE_BUNDLE_O2: &str = r#"{"variety":{"kind":"proj_space3"},"s":["1","2","2","4/3"]}"#;
const IDEAL_SHEAF_LIKE: &str = r#"{"variety":{"kind":"proj_space3"},"s":["1","0","-1","1"]}"#;
const BAD_DELTA: &str = r#"{"variety":{"kind":"proj_space3"},"s":["1","0","1","0"]}"#;
const STRUCTURE_O: &str = r#"{"variety":{"kind":"proj_space3"},"s":["1","0","0","0"]}"#;
const TWIST_OM1: &str = r#"{"variety":{"kind":"proj_space3"},"s":["1","-1","1/2","-1/6"]}"#;

#[test]
fn exit_code_matrix() {
    // (args, expected exit code)
    let cases: Vec<(Vec<&str>, i32)> = vec![
        (vec!["eval-bound", "theta", "1/2"], 0),
        (vec!["eval-bound", "gamma_small", "-7/3"], 0),
        (vec!["eval-bound", "xi", "2"], 2),
        (vec!["eval-bound", "nope", "0"], 2),
        (vec!["check-bg", "--character", LINE_BUNDLE_O2, "--form", "classical"], 0),
        (vec!["check-bg", "--character", BAD_DELTA, "--form", "tilt"], 1),
        (
            vec![
                "check-bg", "--character", IDEAL_SHEAF_LIKE, "--form", "bg3", "--beta", "0",
                "--alpha", "1",
            ],
            0,
        ),
        (
            // bg3 needs a point strictly above the parabola
            vec![
                "check-bg", "--character", IDEAL_SHEAF_LIKE, "--form", "bg3", "--beta", "2",
                "--alpha", "1",
            ],
            2,
        ),
        (vec!["check-bg", "--character", "not json", "--form", "tilt"], 2),
        (vec!["wall", "--v", STRUCTURE_O, "--w", TWIST_OM1], 0),
        (vec!["wall", "--v", STRUCTURE_O, "--w", STRUCTURE_O], 0),
        (vec!["derive-xi", "--d", "1", "--mu", "1/4"], 0),
        (vec!["derive-xi", "--d", "0", "--mu", "1/4"], 2),
        (vec!["derive-xi", "--d", "1", "--mu", "3/4"], 2),
        (vec!["derive-xi", "--d", "1"], 2),
        (vec!["alpha-mu", "--d", "4", "--mu", "1/2"], 0),
        (vec!["alpha-mu", "--d", "0", "--mu", "1/2"], 2),
        (vec!["pushforward", "--d", "2", "--r", "1", "--a", "0", "--b", "0"], 0),
        (vec!["pushforward", "--d", "0", "--r", "1", "--a", "0", "--b", "0"], 2),
        (vec!["star-shaped", "--f", "theta", "--d", "2"], 0),
        (vec!["star-shaped", "--f", "/no/such/file.json", "--d", "2"], 2),
        (vec!["check-restriction-hypotheses", "--f", "xi", "--d", "1"], 0),
        (vec!["check-restriction-hypotheses", "--f", "xi", "--d", "0"], 2),
        (vec!["figures", "--which", "3", "--csv", "/tmp/fig3.csv"], 2),
        (vec!["no-such-command"], 2),
    ];
    for (args, expected) in cases {
        let out = tiltbg(&args);
        assert_eq!(
            code(&out),
            expected,
            "args {:?}\nstdout: {}\nstderr: {}",
            args,
            String::from_utf8_lossy(&out.stdout),
            String::from_utf8_lossy(&out.stderr),
        );
    }
}

#[test]
fn stdout_is_byte_deterministic() {
    let runs: Vec<Vec<&str>> = vec![
        vec!["eval-bound", "theta", "-13/7"],
        vec!["wall", "--v", STRUCTURE_O, "--w", TWIST_OM1, "--boundary", "theta"],
        vec!["derive-xi", "--d", "2", "--grid", "16", "--jobs", "4"],
    ];
    for args in runs {
        let a = tiltbg(&args);
        let b = tiltbg(&args);
        assert_eq!(a.stdout, b.stdout, "args {args:?}");
    }
}

#[test]
fn emitted_json_round_trips_into_parsers() {
    // pushforward output feeds check-bg and wall
    let out = tiltbg(&["pushforward", "--d", "2", "--r", "1", "--a", "0", "--b", "0"]);
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let character = serde_json::to_string(&doc["payload"]["character"]).unwrap();
    let out = tiltbg(&["check-bg", "--character", &character, "--form", "tilt"]);
    assert_eq!(code(&out), 0);
    let out = tiltbg(&["wall", "--v", &character, "--w", STRUCTURE_O]);
    assert_eq!(code(&out), 0);

    // a bound function written to disk loads back through --f
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("xi.json");
    std::fs::write(
        &path,
        serde_json::to_string_pretty(&tiltbg::bounds::xi_bound()).unwrap(),
    )
    .unwrap();
    let out = tiltbg(&["star-shaped", "--f", path.to_str().unwrap(), "--d", "1"]);
    assert_eq!(code(&out), 0);
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(doc["payload"]["holds"], true);
}

#[test]
fn check_bg_reads_stdin_when_no_flag() {
    use std::io::Write;
    let mut child = Command::new(env!("CARGO_BIN_EXE_tiltbg"))
        .args(["check-bg", "--form", "classical"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(LINE_BUNDLE_O2.as_bytes())
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(out.status.code(), Some(0));
}
