use std::process::{Command as Proc, Output};

use serde_json::Value;

use seifert_cli::{batch_csv, batch_jsonl, run, run_batch, Command, Input, InputRecord};
use seifert_core::random::{seifert_sample, SeifertBox};
use seifert_core::rational::parse_q;
use seifert_core::report::{ClassChoice, Method};
use seifert_core::seifert::invariants;
use seifert_core::LauferOptions;

const FOUR_LEG: &str = r#"{"seifert":{"b0":1,"legs":[[5,1],[5,1],[7,1],[10,1]]}}"#;

fn seifert(args: &[&str], env: &[(&str, &str)]) -> Output {
    let mut cmd = Proc::new(env!("CARGO_BIN_EXE_seifert"));
    cmd.args(args).env_remove("SEIFERT_STEP_BUDGET");
    for (k, v) in env {
        cmd.env(k, v);
    }
    cmd.output().expect("binary runs")
}

fn json_out(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("stdout is JSON")
}

fn input(line: &str) -> Input {
    InputRecord::parse(line).unwrap().input().unwrap()
}

#[test]
fn four_leg_frobenius() {
    let o = seifert(&["frobenius", FOUR_LEG], &[]);
    assert!(o.status.success());
    let v = json_out(&o);
    assert_eq!(v["semigroup"]["frobenius"], 3);
    assert_eq!(v["semigroup"]["formula"], 3);
    assert_eq!(v["semigroup"]["bruteForce"], 3);
    assert_eq!(v["agree"], true);
}

#[test]
fn sigma_237_frobenius() {
    let v = run(
        Command::Frobenius(Method::Brute),
        &input(r#"{"alphas":[2,3,7]}"#),
        LauferOptions::default(),
    )
    .unwrap();
    assert_eq!(v["semigroup"]["frobenius"], 43);
    let v = run(
        Command::Frobenius(Method::Formula),
        &input(r#"{"alphas":[2,3,7]}"#),
        LauferOptions::default(),
    )
    .unwrap();
    assert_eq!(v["semigroup"]["frobenius"], 43);
}

#[test]
fn e8_is_rational() {
    let o = seifert(&["info", r#"{"alphas":[2,3,5]}"#], &[]);
    assert!(o.status.success());
    let v = json_out(&o);
    assert_eq!(v["rational"], true);
    assert_eq!(v["gamma"], "-1");
    assert!(v["zK"].as_array().unwrap().iter().all(|c| c == "0"));
}

#[test]
fn record_from_stdin() {
    use std::io::Write;
    let mut child = Proc::new(env!("CARGO_BIN_EXE_seifert"))
        .arg("bh")
        .stdin(std::process::Stdio::piped())
        .stdout(std::process::Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(br#"{"bh":[2,3,7]}"#)
        .unwrap();
    let o = child.wait_with_output().unwrap();
    assert!(o.status.success());
    assert_eq!(json_out(&o)["generators"], serde_json::json!([6, 14, 21]));
}

#[test]
fn rationals_round_trip() {
    for sf in seifert_sample(4, 40, SeifertBox::default()) {
        let line = serde_json::json!({ "seifert": sf }).to_string();
        let v = run(Command::Info, &input(&line), LauferOptions::default()).unwrap();
        let inv = invariants(&sf);
        assert_eq!(parse_q(v["e"].as_str().unwrap()).unwrap(), inv.e);
        assert_eq!(parse_q(v["gamma"].as_str().unwrap()).unwrap(), inv.gamma);
        for c in v["zK"].as_array().unwrap() {
            let s = c.as_str().unwrap();
            assert_eq!(seifert_core::rational::format_q(&parse_q(s).unwrap()), s);
        }
    }
}

#[test]
fn laufer_trace() {
    let o = seifert(&["laufer", "--class", "zk+e0", "--trace", FOUR_LEG], &[]);
    assert!(o.status.success());
    let v = json_out(&o);
    assert_eq!(v["sCheck"], "18/5");
    assert_eq!(
        v["trace"].as_array().unwrap().len() as u64,
        v["stepCount"].as_u64().unwrap()
    );
    let v = run(
        Command::Laufer {
            class: ClassChoice::Zk,
            trace: false,
        },
        &input(FOUR_LEG),
        LauferOptions::default(),
    )
    .unwrap();
    assert!(v.get("trace").is_none());
}

#[test]
fn exit_codes() {
    assert_eq!(
        seifert(&["info", r#"{"alphas":[2,4,7]}"#], &[])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(seifert(&["info", "{"], &[]).status.code(), Some(1));
    assert_eq!(
        seifert(&["info", r#"{"alphas":[2,3,7],"bh":[2,3,7]}"#], &[])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        seifert(&["bh", r#"{"bh":[4,4,4]}"#], &[]).status.code(),
        Some(0)
    );
    assert_eq!(
        seifert(&["verify", r#"{"bh":[4,4,4]}"#], &[]).status.code(),
        Some(1)
    );
    assert_eq!(seifert(&["verify", FOUR_LEG], &[]).status.code(), Some(0));
    assert_eq!(
        seifert(&["frobenius", FOUR_LEG], &[("SEIFERT_STEP_BUDGET", "x")])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        seifert(&["frobenius", FOUR_LEG], &[("SEIFERT_STEP_BUDGET", "1")])
            .status
            .code(),
        Some(1)
    );
    // An exhausted budget inside the suite is reported as a failed check.
    let o = seifert(&["verify", FOUR_LEG], &[("SEIFERT_STEP_BUDGET", "1")]);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(json_out(&o)["passed"], false);
}

#[test]
fn verify_random_is_reproducible() {
    let args = [
        "verify",
        "--random",
        "6",
        "--seed",
        "9",
        "--max-alpha",
        "12",
        "--max-legs",
        "4",
    ];
    let a = seifert(&args, &[]);
    assert!(a.status.success(), "{}", String::from_utf8_lossy(&a.stdout));
    assert_eq!(a.stdout, seifert(&args, &[]).stdout);
    assert_eq!(String::from_utf8(a.stdout).unwrap().lines().count(), 6);
}

fn batch_input() -> String {
    let mut lines = vec![
        r#"{"id":"sigma237","alphas":[2,3,7]}"#.to_string(),
        FOUR_LEG.to_string(),
        r#"{"bh":[6,10,14]}"#.to_string(),
        String::new(),
    ];
    for sf in seifert_sample(12, 30, SeifertBox::default()) {
        lines.push(serde_json::json!({ "seifert": sf }).to_string());
    }
    lines.join("\n")
}

#[test]
fn batch_is_independent_of_jobs() {
    let text = batch_input();
    let opts = LauferOptions::default();
    let cmd = Command::Frobenius(Method::Both);
    let one = run_batch(&text, cmd, opts, 1).unwrap();
    for jobs in [2, 4, 8] {
        let many = run_batch(&text, cmd, opts, jobs).unwrap();
        assert_eq!(batch_jsonl(&one), batch_jsonl(&many));
        assert_eq!(batch_csv(&one).unwrap(), batch_csv(&many).unwrap());
    }
    assert_eq!(one.len(), 33);
    assert_eq!(one[3].line, 5);
    assert!(one.iter().all(|r| r.outcome.is_ok()));
}

#[test]
fn batch_files() {
    let dir = tempfile::tempdir().unwrap();
    let inp = dir.path().join("in.jsonl");
    std::fs::write(&inp, batch_input() + "\nnot json\n").unwrap();
    let mut outs = Vec::new();
    for (jobs, name) in [
        ("1", "a.jsonl"),
        ("4", "b.jsonl"),
        ("1", "a.csv"),
        ("4", "b.csv"),
    ] {
        let out = dir.path().join(name);
        let o = seifert(
            &[
                "batch",
                "--in",
                inp.to_str().unwrap(),
                "--out",
                out.to_str().unwrap(),
                "--jobs",
                jobs,
            ],
            &[],
        );
        assert_eq!(
            o.status.code(),
            Some(1),
            "the malformed line is a hard error"
        );
        outs.push(std::fs::read(&out).unwrap());
    }
    assert_eq!(outs[0], outs[1]);
    assert_eq!(outs[2], outs[3]);
    let lines: Vec<Value> = String::from_utf8(outs[0].clone())
        .unwrap()
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(lines[0]["id"], "sigma237");
    assert_eq!(lines[0]["result"]["semigroup"]["frobenius"], 43);
    assert_eq!(lines.last().unwrap()["ok"], false);
    let csv = String::from_utf8(outs[2].clone()).unwrap();
    assert!(csv.starts_with("line,id,ok,result.semigroup.frobenius"));
    assert_eq!(csv.lines().count(), lines.len() + 1);
}
