use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::{Command, Stdio};

use rankarg_cli::{run, InputFormat, OutputMode, SolveRequest, Source, Task};

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
}

fn golden(name: &str) -> String {
    let path = Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name);
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

fn solve(file: &str, task: &str, output: OutputMode) -> rankarg_cli::Outcome {
    let format = if file.ends_with(".tgf") {
        InputFormat::Tgf
    } else {
        InputFormat::Apx
    };
    let mut request = SolveRequest::new(Source::Path(fixture(file)), format, task.parse().unwrap());
    request.output = output;
    run(&request)
}

const FIXTURES: [&str; 10] = [
    "simple-reinstatement",
    "3-loop",
    "attack-on-2-loop",
    "attack-from-2-loop",
    "3-1-loop",
    "3-2-loop",
    "2-loop-chain",
    "splitted-3-chain",
    "spoon",
    "pqr",
];

#[test]
fn weights_match_golden_json() {
    for name in FIXTURES {
        let out = solve(&format!("{name}.apx"), "WEIGHTS", OutputMode::Json);
        assert_eq!(out.code, 0, "{name}: {}", out.stderr);
        assert_eq!(
            out.stdout,
            golden(&format!("{name}.weights.json")),
            "{name}"
        );
    }
}

#[test]
fn compare_matches_golden_json() {
    for name in FIXTURES {
        let out = solve(&format!("{name}.apx"), "COMPARE", OutputMode::Json);
        assert_eq!(
            out.stdout,
            golden(&format!("{name}.compare.json")),
            "{name}"
        );
    }
}

#[test]
fn tgf_and_apx_agree() {
    for name in FIXTURES {
        for task in ["EE-JZ", "WEIGHTS", "EE-PR"] {
            let a = solve(&format!("{name}.apx"), task, OutputMode::Json);
            let t = solve(&format!("{name}.tgf"), task, OutputMode::Json);
            assert_eq!(a, t, "{name} {task}");
        }
    }
}

#[test]
fn text_outputs() {
    let out = solve("simple-reinstatement.apx", "EE-JZ", OutputMode::Text);
    assert_eq!(out.stdout, "[a,c]\n");
    let out = solve("spoon.apx", "EE-JZ", OutputMode::Text);
    assert_eq!(out.stdout, "[a,c]\n[a,d]\n[b,d]\n");
    let out = solve("attack-from-2-loop.apx", "SE-JZ", OutputMode::Text);
    assert_eq!(out.stdout, "[b]\n");
    let out = solve("2-loop-chain.apx", "WEIGHTS", OutputMode::Text);
    assert!(out.stdout.contains("[a,c]: 1 *\n"));
    assert!(out.stdout.contains("[b]: 2\n"));
    let out = solve("3-loop.apx", "EE-GR", OutputMode::Text);
    assert_eq!(out.stdout, "[]\n");
    let out = solve("attack-from-2-loop.apx", "EE-ST", OutputMode::Text);
    assert_eq!(out.stdout, "[b]\n[a,c]\n");
}

#[test]
fn compare_marks_divergence() {
    let out = solve("3-loop.apx", "COMPARE", OutputMode::Text);
    let pr = out.stdout.lines().find(|l| l.starts_with("PR")).unwrap();
    assert!(pr.contains("differs"));
    let out = solve("simple-reinstatement.apx", "COMPARE", OutputMode::Text);
    assert!(out.stdout.lines().skip(1).all(|l| l.contains("same")));
}

#[test]
fn principles_table() {
    let out = solve("3-loop.apx", "PRINCIPLES", OutputMode::Json);
    let json: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(json["principles"]["reinstatement"], false);
    assert_eq!(json["principles"]["conflict-freedom"], true);
    assert!(json.get("corpus").is_none());

    let mut request = SolveRequest::new(
        Source::Path(fixture("spoon.apx")),
        InputFormat::Apx,
        Task::Principles,
    );
    request.seed = Some(11);
    request.output = OutputMode::Json;
    let json: serde_json::Value = serde_json::from_str(&run(&request).stdout).unwrap();
    assert_eq!(json["principles"]["directionality"], false);
    assert_eq!(json["corpus"]["seed"], 11);
    for p in [
        "isomorphy",
        "conflict-freedom",
        "cf-maximality",
        "inclusion-maximality",
    ] {
        assert_eq!(json["corpus"]["failures"][p], 0, "{p}");
    }
}

#[test]
fn check_model_on_measure_files() {
    let check = |measure: &str| {
        let mut request = SolveRequest::new(
            Source::Path(fixture("pqr.apx")),
            InputFormat::Apx,
            Task::CheckModel,
        );
        request.measure = Some(fixture(measure));
        request.output = OutputMode::Json;
        let out = run(&request);
        assert_eq!(out.code, 0, "{}", out.stderr);
        serde_json::from_str::<serde_json::Value>(&out.stdout).unwrap()
    };
    let jz = check("pqr-jz.measure");
    assert_eq!(jz["model"], true);
    assert_eq!(jz["extensions"], serde_json::json!([["p", "r"]]));
    let perturbed = check("pqr-perturbed.measure");
    assert_eq!(perturbed["model"], true);
    assert_eq!(perturbed["extensions"], serde_json::json!([["p"], ["q"]]));
    assert_eq!(check("pqr-uniform.measure")["model"], false);

    // measure for the wrong number of arguments
    let mut request = SolveRequest::new(
        Source::Path(fixture("spoon.apx")),
        InputFormat::Apx,
        Task::CheckModel,
    );
    request.measure = Some(fixture("pqr-jz.measure"));
    assert_eq!(run(&request).code, 1);
}

#[test]
fn verify_flag_cross_checks() {
    for name in FIXTURES {
        let mut request = SolveRequest::new(
            Source::Path(fixture(&format!("{name}.apx"))),
            InputFormat::Apx,
            Task::EnumerateJz,
        );
        request.verify = true;
        assert_eq!(run(&request).code, 0, "{name}");
    }
}

#[test]
fn json_schema_is_stable() {
    let out = solve("spoon.apx", "EE-JZ", OutputMode::Json);
    let json: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    let keys: Vec<&String> = json.as_object().unwrap().keys().collect();
    assert_eq!(keys, ["extensions", "task"]);
    assert_eq!(json["task"], "EE-JZ");
    assert_eq!(
        json["extensions"],
        serde_json::json!([["a", "c"], ["a", "d"], ["b", "d"]])
    );
}

#[test]
fn missing_file_is_input_error() {
    let out = solve("does-not-exist.apx", "EE-JZ", OutputMode::Text);
    assert_eq!(out.code, 1);
    assert!(out.stderr.starts_with("input error"));
}

fn binary() -> Command {
    Command::new(env!("CARGO_BIN_EXE_rankarg"))
}

#[test]
fn binary_reads_stdin() {
    let mut child = binary()
        .args(["--task", "EE-JZ"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(b"arg(a). arg(b). att(a,b).\n")
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "[a]\n");
}

#[test]
fn binary_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.apx");
    std::fs::write(&bad, "arg(a).\natt(a,b).\n").unwrap();
    let out = binary().arg(&bad).output().unwrap();
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));

    let out = binary()
        .args(["-f", "tgf", "-t", "WEIGHTS"])
        .arg(fixture("spoon.tgf"))
        .env("RANKARG_THREADS", "2")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));

    let out = binary()
        .arg(fixture("spoon.apx"))
        .env("RANKARG_THREADS", "zero")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));

    let out = binary().args(["--task", "NOPE"]).output().unwrap();
    assert_eq!(out.status.code(), Some(1), "usage errors are input errors");

    let out = binary().arg("--help").output().unwrap();
    assert_eq!(out.status.code(), Some(0));
}
