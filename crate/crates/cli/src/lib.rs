//! Input records, command dispatch and the batch runner behind the `seifert`
//! binary.

use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};

use seifert_core::brieskorn::{bh_seifert, classify};
use seifert_core::report::{self, ClassChoice, Method};
use seifert_core::seifert::ihs_from_alphas;
use seifert_core::verify::{verify_brieskorn, verify_seifert, VerifyConfig, VerifyReport};
use seifert_core::{Error as CoreError, LauferOptions, SeifertData};

pub const STEP_BUDGET_VAR: &str = "SEIFERT_STEP_BUDGET";

/// One input line: exactly one of `seifert`, `alphas`, `bh`, plus an optional id.
#[derive(Clone, Debug, PartialEq, Eq, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct InputRecord {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub id: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seifert: Option<SeifertData>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alphas: Option<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bh: Option<Vec<i64>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Input {
    Seifert(SeifertData),
    Alphas(Vec<i64>),
    Bh(Vec<i64>),
}

#[derive(Debug)]
pub enum CliError {
    /// Malformed or invalid input; exit code 1.
    Input(String),
    /// A verification check failed; exit code 2.
    Verification(Value),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) => 1,
            CliError::Verification(_) => 2,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Input(msg) => f.write_str(msg),
            CliError::Verification(_) => f.write_str("verification failed"),
        }
    }
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl InputRecord {
    pub fn parse(line: &str) -> Result<Self, CliError> {
        serde_json::from_str(line).map_err(|e| CliError::Input(format!("bad record: {e}")))
    }

    pub fn input(&self) -> Result<Input, CliError> {
        match (&self.seifert, &self.alphas, &self.bh) {
            (Some(sf), None, None) => Ok(Input::Seifert(sf.clone())),
            (None, Some(a), None) => Ok(Input::Alphas(a.clone())),
            (None, None, Some(a)) => Ok(Input::Bh(a.clone())),
            _ => Err(CliError::Input(
                "record needs exactly one of \"seifert\", \"alphas\", \"bh\"".into(),
            )),
        }
    }
}

impl Input {
    /// The Seifert data the record describes. Brieskorn-Hamm exponents go
    /// through classification and synthesis.
    pub fn seifert(&self) -> Result<SeifertData, CliError> {
        Ok(match self {
            Input::Seifert(sf) => sf.clone(),
            Input::Alphas(a) => ihs_from_alphas(a)?,
            Input::Bh(a) => {
                let cls = classify(a)?;
                if !cls.is_qhs() {
                    return Err(CoreError::NotQhs(a.clone()).into());
                }
                bh_seifert(&cls)?
            }
        })
    }
}

/// Laufer options with the step budget taken from `SEIFERT_STEP_BUDGET` if set.
pub fn laufer_options() -> Result<LauferOptions, CliError> {
    let opts = LauferOptions::default();
    match std::env::var(STEP_BUDGET_VAR) {
        Ok(s) => s
            .trim()
            .parse::<u64>()
            .map(|b| opts.with_budget(b))
            .map_err(|_| {
                CliError::Input(format!(
                    "{STEP_BUDGET_VAR} must be a non-negative integer, got {s:?}"
                ))
            }),
        Err(_) => Ok(opts),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    Info,
    Frobenius(Method),
    Semigroup { up_to: i64 },
    Laufer { class: ClassChoice, trace: bool },
    Bh,
    Verify { seed: u64 },
}

fn to_value<T: Serialize>(t: &T) -> Value {
    serde_json::to_value(t).expect("reports serialize")
}

fn verify_value(report: &VerifyReport) -> Result<Value, CliError> {
    let v = json!({
        "seifert": report.seifert,
        "passed": report.passed(),
        "checks": report.checks,
    });
    if report.passed() {
        Ok(v)
    } else {
        Err(CliError::Verification(v))
    }
}

pub fn verify_config(seed: u64, opts: LauferOptions) -> VerifyConfig {
    VerifyConfig {
        opts,
        seed,
        ..VerifyConfig::default()
    }
}

/// Runs one command on one input. Verification failures carry the full report.
pub fn run(cmd: Command, input: &Input, opts: LauferOptions) -> Result<Value, CliError> {
    match cmd {
        Command::Info => Ok(to_value(&report::info(&input.seifert()?)?)),
        Command::Frobenius(method) => {
            let r = report::frobenius(&input.seifert()?, method, opts)?;
            if r.agree {
                Ok(to_value(&r))
            } else {
                Err(CliError::Verification(to_value(&r)))
            }
        }
        Command::Semigroup { up_to } => {
            if up_to < 0 {
                return Err(CliError::Input("--up-to must be non-negative".into()));
            }
            Ok(to_value(&report::semigroup(&input.seifert()?, up_to)?))
        }
        Command::Laufer { class, trace } => Ok(to_value(&report::laufer(
            &input.seifert()?,
            class,
            trace,
            opts,
        )?)),
        Command::Bh => match input {
            Input::Bh(a) => Ok(to_value(&report::brieskorn(a)?)),
            _ => Err(CliError::Input(
                "bh needs a record with \"bh\" exponents".into(),
            )),
        },
        Command::Verify { seed } => {
            let cfg = verify_config(seed, opts);
            match input {
                Input::Bh(a) => match verify_brieskorn(a, cfg)? {
                    Some(r) => verify_value(&r),
                    None => Err(CoreError::NotQhs(a.clone()).into()),
                },
                _ => verify_value(&verify_seifert(&input.seifert()?, cfg)),
            }
        }
    }
}

/// Result of one batch line.
#[derive(Clone, Debug, PartialEq)]
pub struct BatchRow {
    pub line: usize,
    pub id: Option<String>,
    pub outcome: Result<Value, (u8, Value)>,
}

impl BatchRow {
    pub fn exit_code(&self) -> u8 {
        self.outcome.as_ref().err().map_or(0, |e| e.0)
    }

    pub fn to_json(&self) -> Value {
        let mut obj = Map::new();
        obj.insert("line".into(), json!(self.line));
        if let Some(id) = &self.id {
            obj.insert("id".into(), json!(id));
        }
        match &self.outcome {
            Ok(v) => {
                obj.insert("ok".into(), json!(true));
                obj.insert("result".into(), v.clone());
            }
            Err((_, v)) => {
                obj.insert("ok".into(), json!(false));
                obj.insert("error".into(), v.clone());
            }
        }
        Value::Object(obj)
    }
}

fn run_line(line_no: usize, line: &str, cmd: Command, opts: LauferOptions) -> BatchRow {
    let record = match InputRecord::parse(line) {
        Ok(r) => r,
        Err(e) => {
            return BatchRow {
                line: line_no,
                id: None,
                outcome: Err((e.exit_code(), json!(e.to_string()))),
            }
        }
    };
    let outcome = record
        .input()
        .and_then(|input| run(cmd, &input, opts))
        .map_err(|e| {
            let code = e.exit_code();
            match e {
                CliError::Input(msg) => (code, json!(msg)),
                CliError::Verification(v) => (code, v),
            }
        });
    BatchRow {
        line: line_no,
        id: record.id,
        outcome,
    }
}

/// Runs `cmd` over the non-blank lines of `text` on `jobs` threads. Rows come
/// back in input order, so the output does not depend on `jobs`.
pub fn run_batch(
    text: &str,
    cmd: Command,
    opts: LauferOptions,
    jobs: usize,
) -> Result<Vec<BatchRow>, CliError> {
    let lines: Vec<(usize, &str)> = text
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| (i + 1, l))
        .collect();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| CliError::Input(format!("thread pool: {e}")))?;
    Ok(pool.install(|| {
        lines
            .par_iter()
            .map(|&(n, l)| run_line(n, l, cmd, opts))
            .collect()
    }))
}

pub fn batch_jsonl(rows: &[BatchRow]) -> String {
    let mut out = String::new();
    for row in rows {
        out.push_str(&row.to_json().to_string());
        out.push('\n');
    }
    out
}

/// Scalar leaves of `v`, keyed by dotted path. Arrays are skipped.
fn flatten(prefix: &str, v: &Value, out: &mut Vec<(String, String)>) {
    let key = |k: &str| {
        if prefix.is_empty() {
            k.to_string()
        } else {
            format!("{prefix}.{k}")
        }
    };
    match v {
        Value::Object(m) => {
            for (k, v) in m {
                flatten(&key(k), v, out);
            }
        }
        Value::Array(_) => {}
        Value::Null => out.push((prefix.to_string(), String::new())),
        Value::String(s) => out.push((prefix.to_string(), s.clone())),
        other => out.push((prefix.to_string(), other.to_string())),
    }
}

/// CSV with one row per record; columns are the union of scalar fields in
/// first-seen order.
pub fn batch_csv(rows: &[BatchRow]) -> Result<String, CliError> {
    let flat: Vec<Vec<(String, String)>> = rows
        .iter()
        .map(|r| {
            let mut out = Vec::new();
            flatten("", &r.to_json(), &mut out);
            out
        })
        .collect();
    let mut columns: Vec<String> = Vec::new();
    for row in &flat {
        for (k, _) in row {
            if !columns.contains(k) {
                columns.push(k.clone());
            }
        }
    }
    let mut w = csv::Writer::from_writer(Vec::new());
    let io = |e: csv::Error| CliError::Input(format!("csv: {e}"));
    w.write_record(&columns).map_err(io)?;
    for row in &flat {
        let cells = columns.iter().map(|c| {
            row.iter()
                .find(|(k, _)| k == c)
                .map_or("", |(_, v)| v.as_str())
        });
        w.write_record(cells).map_err(io)?;
    }
    let bytes = w
        .into_inner()
        .map_err(|e| CliError::Input(format!("csv: {e}")))?;
    Ok(String::from_utf8(bytes).expect("csv output is UTF-8"))
}
