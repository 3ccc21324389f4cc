use std::io::{Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::Value;

use seifert_cli::{
    batch_csv, batch_jsonl, laufer_options, run, run_batch, verify_config, CliError, Command,
    InputRecord,
};
use seifert_core::random::{seifert_sample, SeifertBox};
use seifert_core::report::{ClassChoice, Method};
use seifert_core::verify::verify_seifert;

/// Semigroups, Frobenius numbers and Laufer sequences of Seifert rational
/// homology spheres.
#[derive(Parser)]
#[command(name = "seifert", version)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct RecordArg {
    /// JSON record, e.g. '{"alphas":[2,3,7]}'; read from stdin when omitted.
    record: Option<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Formula,
    Brute,
    Both,
}

#[derive(Clone, Copy, ValueEnum)]
enum ClassArg {
    Zk,
    #[value(name = "zk+e0")]
    ZkE0,
    Zero,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutFormat {
    Jsonl,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum BatchOp {
    Info,
    Frobenius,
    Semigroup,
    Laufer,
    Bh,
    Verify,
}

#[derive(Subcommand)]
enum Cmd {
    /// Invariants, canonical cycle, Gorenstein and rationality flags.
    Info(RecordArg),
    /// Frobenius numbers of the semigroup and the module.
    Frobenius {
        #[command(flatten)]
        rec: RecordArg,
        #[arg(long, value_enum, default_value = "both")]
        method: MethodArg,
    },
    /// Membership table, generators, Apery set, gaps, symmetry, Poincare series.
    Semigroup {
        #[command(flatten)]
        rec: RecordArg,
        #[arg(long, default_value_t = 50)]
        up_to: i64,
    },
    /// Minimal anti-nef representative of a class and the Laufer scalars.
    Laufer {
        #[command(flatten)]
        rec: RecordArg,
        #[arg(long, value_enum, default_value = "zk")]
        class: ClassArg,
        #[arg(long)]
        trace: bool,
    },
    /// Brieskorn-Hamm classification, Seifert data and generators.
    Bh(RecordArg),
    /// Invariant and oracle suite; exits 2 on any failed check.
    Verify {
        #[command(flatten)]
        rec: RecordArg,
        /// Verify K seeded random inputs instead of a record.
        #[arg(long, value_name = "K")]
        random: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 30)]
        max_alpha: i64,
        #[arg(long, default_value_t = 5)]
        max_legs: usize,
    },
    /// One result per JSON Lines record, in input order.
    Batch {
        #[arg(long = "in", value_name = "FILE")]
        input: PathBuf,
        /// Output file; format follows the extension (.csv or .jsonl).
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
        /// Output format when writing to stdout or an unknown extension.
        #[arg(long, value_enum)]
        format: Option<OutFormat>,
        #[arg(long, value_enum, default_value = "frobenius")]
        op: BatchOp,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 50)]
        up_to: i64,
    },
}

fn read_record(rec: RecordArg) -> Result<seifert_cli::Input, CliError> {
    let text = match rec.record {
        Some(s) => s,
        None => {
            let mut s = String::new();
            std::io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| CliError::Input(format!("stdin: {e}")))?;
            s
        }
    };
    InputRecord::parse(text.trim())?.input()
}

fn method(m: MethodArg) -> Method {
    match m {
        MethodArg::Formula => Method::Formula,
        MethodArg::Brute => Method::Brute,
        MethodArg::Both => Method::Both,
    }
}

fn class(c: ClassArg) -> ClassChoice {
    match c {
        ClassArg::Zk => ClassChoice::Zk,
        ClassArg::ZkE0 => ClassChoice::ZkE0,
        ClassArg::Zero => ClassChoice::Zero,
    }
}

/// Writes to stdout, ignoring a closed pipe.
fn emit(text: &str) {
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(text.as_bytes()).and_then(|_| out.flush());
}

fn print(v: &Value) {
    emit(&format!(
        "{}\n",
        serde_json::to_string_pretty(v).expect("JSON values serialize")
    ));
}

fn single(cmd: Command, rec: RecordArg) -> Result<(), CliError> {
    let opts = laufer_options()?;
    let input = read_record(rec)?;
    print(&run(cmd, &input, opts)?);
    Ok(())
}

fn verify_random(k: usize, seed: u64, max_alpha: i64, max_legs: usize) -> Result<(), CliError> {
    if max_alpha < 2 || max_legs < 3 {
        return Err(CliError::Input(
            "--max-alpha must be >= 2 and --max-legs >= 3".into(),
        ));
    }
    let opts = laufer_options()?;
    let bx = SeifertBox {
        max_alpha,
        max_legs,
        lcm_cap: i64::MAX,
    };
    let mut failed = 0;
    for sf in seifert_sample(seed, k, bx) {
        let r = verify_seifert(&sf, verify_config(seed, opts));
        if !r.passed() {
            failed += 1;
        }
        emit(&format!(
            "{}\n",
            serde_json::json!({"seifert": r.seifert, "passed": r.passed(), "checks": r.checks})
        ));
    }
    eprintln!("{} of {k} inputs passed", k - failed);
    if failed > 0 {
        Err(CliError::Verification(Value::Null))
    } else {
        Ok(())
    }
}

#[allow(clippy::too_many_arguments)]
fn batch(
    input: PathBuf,
    out: Option<PathBuf>,
    format: Option<OutFormat>,
    op: BatchOp,
    jobs: usize,
    seed: u64,
    up_to: i64,
) -> Result<u8, CliError> {
    let opts = laufer_options()?;
    let text = std::fs::read_to_string(&input)
        .map_err(|e| CliError::Input(format!("{}: {e}", input.display())))?;
    let cmd = match op {
        BatchOp::Info => Command::Info,
        BatchOp::Frobenius => Command::Frobenius(Method::Both),
        BatchOp::Semigroup => Command::Semigroup { up_to },
        BatchOp::Laufer => Command::Laufer {
            class: ClassChoice::Zk,
            trace: false,
        },
        BatchOp::Bh => Command::Bh,
        BatchOp::Verify => Command::Verify { seed },
    };
    let rows = run_batch(&text, cmd, opts, jobs)?;
    let by_ext = out
        .as_ref()
        .and_then(|p| p.extension())
        .and_then(|e| match e.to_str() {
            Some("csv") => Some(OutFormat::Csv),
            Some("jsonl") | Some("json") => Some(OutFormat::Jsonl),
            _ => None,
        });
    let body = match format.or(by_ext).unwrap_or(OutFormat::Jsonl) {
        OutFormat::Jsonl => batch_jsonl(&rows),
        OutFormat::Csv => batch_csv(&rows)?,
    };
    match out {
        Some(p) => std::fs::write(&p, body)
            .map_err(|e| CliError::Input(format!("{}: {e}", p.display())))?,
        None => emit(&body),
    }
    // Input errors dominate verification failures.
    let codes: Vec<u8> = rows.iter().map(|r| r.exit_code()).collect();
    Ok(if codes.contains(&1) {
        1
    } else {
        codes.into_iter().max().unwrap_or(0)
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.cmd {
        Cmd::Info(rec) => single(Command::Info, rec),
        Cmd::Frobenius { rec, method: m } => single(Command::Frobenius(method(m)), rec),
        Cmd::Semigroup { rec, up_to } => single(Command::Semigroup { up_to }, rec),
        Cmd::Laufer {
            rec,
            class: c,
            trace,
        } => single(
            Command::Laufer {
                class: class(c),
                trace,
            },
            rec,
        ),
        Cmd::Bh(rec) => single(Command::Bh, rec),
        Cmd::Verify {
            rec,
            random: Some(k),
            seed,
            max_alpha,
            max_legs,
        } => {
            if rec.record.is_some() {
                Err(CliError::Input(
                    "pass either a record or --random, not both".into(),
                ))
            } else {
                verify_random(k, seed, max_alpha, max_legs)
            }
        }
        Cmd::Verify { rec, seed, .. } => single(Command::Verify { seed }, rec),
        Cmd::Batch {
            input,
            out,
            format,
            op,
            jobs,
            seed,
            up_to,
        } => match batch(input, out, format, op, jobs, seed, up_to) {
            Ok(code) => return ExitCode::from(code),
            Err(e) => Err(e),
        },
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            match &e {
                CliError::Input(msg) => eprintln!("error: {msg}"),
                CliError::Verification(Value::Null) => eprintln!("error: verification failed"),
                CliError::Verification(v) => {
                    print(v);
                    eprintln!("error: verification failed");
                }
            }
            ExitCode::from(e.exit_code())
        }
    }
}
