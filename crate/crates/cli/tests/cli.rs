use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_poset-zeta"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is a JSON report")
}

fn write_family(dir: &Path, family: &str, param: &str) -> String {
    let path = dir.join(format!("{family}-{param}.txt"));
    let out = run(&["gen", family, param, "--out", path.to_str().unwrap()]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    path.to_str().unwrap().to_owned()
}

fn without_timings(mut v: Value) -> Value {
    v.as_object_mut().unwrap().remove("timings");
    v
}

#[test]
fn gen_writes_the_text_format() {
    let out = run(&["gen", "chain", "4"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let body: Vec<&str> = text.lines().filter(|l| !l.starts_with('#')).collect();
    assert_eq!(body, ["4", "1 2", "2 3", "3 4"]);

    let out = run(&["gen", "boolean", "2"]);
    let text = String::from_utf8(out.stdout).unwrap();
    let body: Vec<&str> = text.lines().filter(|l| !l.starts_with('#')).collect();
    assert_eq!(body, ["4", "1 2", "1 3", "2 4", "3 4"]);

    let out = run(&["gen", "divisor", "12"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().find(|l| !l.starts_with('#')), Some("6"));
}

#[test]
fn gen_file_normalizes() {
    let dir = tempfile::tempdir().unwrap();
    let raw = dir.path().join("raw.txt");
    // transitively implied relation and a comment; labels out of order
    std::fs::write(&raw, "# v\n3\n3 1\n1 2\n3 2\n").unwrap();
    let out = run(&["gen", "file", raw.to_str().unwrap()]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let body: Vec<&str> = text.lines().filter(|l| !l.starts_with('#')).collect();
    assert_eq!(body, ["3", "1 2", "2 3"]);
}

#[test]
fn compute_worked_example() {
    let dir = tempfile::tempdir().unwrap();
    let b2 = write_family(dir.path(), "boolean", "2");

    let det = json(&run(&["compute", &b2, "--what", "det"]));
    assert_eq!(det["results"]["det"], "4");
    assert_eq!(det["results"]["det_mobius"], "4");
    assert_eq!(det["pass"], true);
    assert_eq!(det["poset"]["elements"], 4);

    let chi = json(&run(&["compute", &b2, "--what", "charpoly"]));
    assert_eq!(
        chi["results"]["a"],
        serde_json::json!(["1", "0", "-5", "4", "0"])
    );

    let c = json(&run(&["compute", &b2, "--what", "cvec"]));
    assert_eq!(
        c["results"]["c"],
        serde_json::json!(["2", "10", "20", "16"])
    );

    for (lengths, count) in [("2", "5"), ("3", "4"), ("4", "2"), ("2,2", "2")] {
        let f = json(&run(&[
            "compute",
            &b2,
            "--what",
            "fcount",
            "--lengths",
            lengths,
        ]));
        assert_eq!(f["results"]["count"], count, "{lengths}");
    }

    let z = json(&run(&["compute", &b2, "--what", "zeta"]));
    assert_eq!(
        z["results"]["symmetric"][1],
        serde_json::json!(["1", "2", "0", "1"])
    );
    let m = json(&run(&["compute", &b2, "--what", "mobius"]));
    assert_eq!(
        m["results"]["mobius"][0],
        serde_json::json!(["1", "-1", "-1", "1"])
    );
}

#[test]
fn output_goes_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let b2 = write_family(dir.path(), "boolean", "2");
    let report = dir.path().join("report.json");
    let out = run(&[
        "compute",
        &b2,
        "--what",
        "det",
        "--out",
        report.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(report).unwrap()).unwrap();
    assert_eq!(v["results"]["det"], "4");
}

#[test]
fn verify_suites_pass() {
    let cases: [(&[&str], usize); 8] = [
        (&["verify", "chain", "--max-n", "12"], 12),
        (
            &[
                "verify", "theorem2", "--max-n", "7", "--count", "100", "--seed", "42",
            ],
            100,
        ),
        (&["verify", "eq6", "--max-rank", "4"], 4),
        (&["verify", "theorem1", "--count", "50"], 50),
        (&["verify", "corollary1"], 10),
        (&["verify", "boolean", "--max-rank", "6"], 7),
        (&["verify", "lemma3", "--max-rank", "5"], 15),
        (&["verify", "lemma4", "--max-rank", "4"], 2),
    ];
    for (args, checks) in cases {
        let out = run(args);
        assert_eq!(out.status.code(), Some(0), "{args:?}");
        let report = json(&out);
        let list = report["checks"].as_array().unwrap();
        assert_eq!(list.len(), checks, "{args:?}");
        assert!(list
            .iter()
            .all(|c| c["pass"] == true && c["expected"] == c["actual"]));
    }
}

#[test]
fn randomized_reports_are_deterministic() {
    let args = [
        "verify", "theorem2", "--max-n", "6", "--count", "20", "--seed", "9",
    ];
    let a = without_timings(json(&run(&args)));
    let b = without_timings(json(&run(&args)));
    assert_eq!(a, b);
    assert_eq!(a["seed"], 9);
    let c = without_timings(json(&run(&[
        "verify", "theorem2", "--max-n", "6", "--count", "20", "--seed", "10",
    ])));
    assert_ne!(a["checks"], c["checks"]);
}

#[test]
fn usage_and_input_errors_exit_2() {
    assert_eq!(run(&["bogus"]).status.code(), Some(2));
    assert_eq!(run(&["gen", "chain", "x"]).status.code(), Some(2));
    assert_eq!(run(&["gen", "boolean", "99"]).status.code(), Some(2));
    assert_eq!(
        run(&["compute", "/no/such/file", "--what", "det"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["verify", "theorem2", "--max-n", "20"]).status.code(),
        Some(2)
    );

    let dir = tempfile::tempdir().unwrap();
    let cyclic = dir.path().join("cyclic.txt");
    std::fs::write(&cyclic, "2\n1 2\n2 1\n").unwrap();
    let out = run(&["compute", cyclic.to_str().unwrap(), "--what", "det"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("cycle"));

    let big = write_family(dir.path(), "chain", "13");
    assert_eq!(
        run(&["compute", &big, "--what", "cvec"]).status.code(),
        Some(2)
    );
    let raised = run(&[
        "compute",
        &big,
        "--what",
        "fcount",
        "--lengths",
        "2",
        "--cap",
        "13",
    ]);
    assert_eq!(raised.status.code(), Some(0));
    assert_eq!(
        run(&["compute", &big, "--what", "fcount"]).status.code(),
        Some(2)
    );
}

#[test]
fn text_format() {
    let out = run(&["verify", "chain", "--max-n", "3", "--format", "text"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("[ok] chain 3: expected 4, got 4"));
    assert!(text.ends_with("3/3 checks passed\n"));
}
