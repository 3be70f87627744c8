//! The `lattica` command-line front end.

pub mod dot;
pub mod expr;
pub mod report;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use lattica_core::congruence::DEFAULT_ORACLE_LIMIT;
use lattica_core::corpus::Corpus;
use lattica_core::document::{dump_structure, load_structure, DocumentError};
use lattica_core::theorems::{find, registry, Outcome};
use lattica_core::{all_congruences, brute_force_congruences, classify, CongruenceError, Signature, Structure};
use thiserror::Error;

use crate::expr::{evaluate, parse_expr, EvalError, Evaluated, SyntaxError};
use crate::report::{CongruenceReport, MemberReport, Report, Summary, VerdictReport};

pub const ORACLE_ENV: &str = "LATTICA_ORACLE_MAX";

#[derive(Debug, Parser)]
#[command(name = "lattica", version, about = "Finite lattices, involution lattices and their congruences")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Input {
    /// Construction expression, e.g. `osum(chain(3), dual(chain(3)))`
    #[arg(long, conflicts_with = "file")]
    pub expr: Option<String>,
    /// JSON lattice document
    #[arg(long)]
    pub file: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Fix {
    #[value(name = "0")]
    Zero,
    #[value(name = "01")]
    ZeroOne,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the JSON document of a structure
    Eval {
        #[command(flatten)]
        input: Input,
    },
    /// Count (and list) congruences
    Con {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value = "lat", value_parser = parse_signature)]
        sig: Signature,
        /// Keep congruences with singleton classes at 0 (or at 0 and 1)
        #[arg(long)]
        fix: Option<Fix>,
        #[arg(long)]
        list: bool,
        #[arg(long)]
        json: bool,
    },
    /// Report the taxonomy flags of a structure
    Classify {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        json: bool,
    },
    /// Run a registered property check on the shipped corpus, or `all`
    Verify {
        id: String,
        #[arg(long)]
        json: bool,
    },
    /// Hasse diagram in DOT
    Dot {
        #[command(flatten)]
        input: Input,
    },
    /// Compare the congruence algorithm with exhaustive enumeration
    OracleCheck {
        #[arg(long, default_value_t = DEFAULT_ORACLE_LIMIT)]
        max_n: usize,
        #[command(flatten)]
        input: Input,
    },
}

fn parse_signature(s: &str) -> Result<Signature, String> {
    s.parse().map_err(|e: CongruenceError| e.to_string())
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("no input: give --expr or --file")]
    NoInput,
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error(transparent)]
    Syntax(#[from] SyntaxError),
    #[error(transparent)]
    Eval(#[from] EvalError),
    #[error(transparent)]
    Document(#[from] DocumentError),
    #[error(transparent)]
    Congruence(#[from] CongruenceError),
    #[error("unknown theorem id '{0}'")]
    UnknownTheorem(String),
    #[error("{ORACLE_ENV}: '{0}' is not a number")]
    BadOracleCap(String),
}

/// What a successful run prints, and its exit code (0, or 1 for a refuted
/// property).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub code: i32,
}

impl Output {
    fn ok(stdout: String) -> Self {
        Output { stdout, code: 0 }
    }
}

fn load(input: &Input) -> Result<Evaluated, CliError> {
    match (&input.expr, &input.file) {
        (Some(text), _) => Ok(evaluate(&parse_expr(text)?)?),
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
                path: path.clone(),
                source,
            })?;
            Ok(Evaluated {
                structure: load_structure(&text)?,
                tower: None,
            })
        }
        (None, None) => Err(CliError::NoInput),
    }
}

fn json_line<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("report serializes");
    s.push('\n');
    s
}

fn fixed_constants(s: &Structure, fix: Option<Fix>) -> Vec<usize> {
    let l = s.lattice();
    match fix {
        None => vec![],
        Some(Fix::Zero) => vec![l.bottom()],
        Some(Fix::ZeroOne) => vec![l.bottom(), l.top()],
    }
}

fn congruences(s: &Structure, sig: Signature, fix: Option<Fix>, list: bool) -> Result<CongruenceReport, CliError> {
    let set = all_congruences(s, sig)?.fix_constants(&fixed_constants(s, fix));
    Ok(CongruenceReport {
        signature: sig.name(),
        fix: fix.map(|f| match f {
            Fix::Zero => "0",
            Fix::ZeroOne => "01",
        }),
        count: set.len(),
        listing: list.then(|| set.iter().map(ToString::to_string).collect()),
    })
}

/// Oracle element cap: `LATTICA_ORACLE_MAX` when set.
pub fn oracle_cap() -> Result<usize, CliError> {
    match std::env::var(ORACLE_ENV) {
        Ok(v) => v.trim().parse().map_err(|_| CliError::BadOracleCap(v)),
        Err(_) => Ok(DEFAULT_ORACLE_LIMIT),
    }
}

fn signatures_of(s: &Structure) -> Vec<Signature> {
    Signature::ALL
        .into_iter()
        .filter(|sig| (!sig.uses_involution() || s.inv().is_some()) && (!sig.uses_brouwer() || s.brouwer().is_some()))
        .collect()
}

fn oracle_check(max_n: usize, input: &Input) -> Result<Output, CliError> {
    let cap = oracle_cap()?;
    let limit = max_n.min(cap);
    let targets: Vec<(String, Structure)> = if input.expr.is_some() || input.file.is_some() {
        let s = load(input)?.structure;
        if s.n() > limit {
            return Err(CongruenceError::TooLarge { n: s.n(), limit }.into());
        }
        vec![("input".to_string(), s)]
    } else {
        Corpus::standard()
            .all()
            .filter(|e| e.structure.n() <= limit)
            .map(|e| (e.name.clone(), e.structure.clone()))
            .collect()
    };
    let mut out = String::new();
    let (mut compared, mut mismatches) = (0, 0);
    for (name, s) in &targets {
        for sig in signatures_of(s) {
            let fast = all_congruences(s, sig)?;
            let slow = brute_force_congruences(s, sig, limit)?;
            compared += 1;
            if fast != slow {
                mismatches += 1;
                out.push_str(&format!("MISMATCH {name} {sig}: {} vs {}\n", fast.len(), slow.len()));
            }
        }
    }
    out.push_str(&format!(
        "oracle-check: {} structures, {compared} comparisons, {mismatches} mismatches (n <= {limit})\n",
        targets.len()
    ));
    Ok(Output {
        stdout: out,
        code: if mismatches == 0 { 0 } else { 1 },
    })
}

fn verdict(o: Outcome) -> VerdictReport {
    VerdictReport {
        id: o.id,
        holds: o.failure.is_none(),
        instances: o.instances,
        witness: o.failure,
    }
}

fn verify(id: &str, json: bool) -> Result<Output, CliError> {
    let corpus = Corpus::standard();
    let verdicts: Vec<VerdictReport> = if id == "all" {
        registry().iter().map(|t| verdict(t.run(&corpus))).collect()
    } else {
        let t = find(id).ok_or_else(|| CliError::UnknownTheorem(id.to_string()))?;
        vec![verdict(t.run(&corpus))]
    };
    let code = if verdicts.iter().all(|v| v.holds) { 0 } else { 1 };
    let stdout = if json {
        json_line(&verdicts)
    } else {
        verdicts.iter().map(VerdictReport::line).collect()
    };
    Ok(Output { stdout, code })
}

pub fn run(cli: &Cli) -> Result<Output, CliError> {
    match &cli.command {
        Command::Eval { input } => Ok(Output::ok(dump_structure(&load(input)?.structure))),
        Command::Dot { input } => Ok(Output::ok(dot::to_dot(&load(input)?.structure))),
        Command::Con {
            input,
            sig,
            fix,
            list,
            json,
        } => {
            let ev = load(input)?;
            let mut report = Report::new(Summary::of(&ev.structure));
            report.congruences.push(congruences(&ev.structure, *sig, *fix, *list)?);
            if let Some(t) = &ev.tower {
                for (i, m) in t.members().iter().enumerate() {
                    let c = congruences(m, *sig, *fix, false)?;
                    report.members.push(MemberReport {
                        index: i,
                        n: m.n(),
                        count: c.count,
                    });
                }
            }
            Ok(Output::ok(if *json { json_line(&report) } else { report.render_con() }))
        }
        Command::Classify { input, json } => {
            let s = load(input)?.structure;
            let mut report = Report::new(Summary::of(&s));
            report.taxonomy = Some(classify(&s));
            Ok(Output::ok(if *json { json_line(&report) } else { report.render_classify() }))
        }
        Command::Verify { id, json } => verify(id, *json),
        Command::OracleCheck { max_n, input } => oracle_check(*max_n, input),
    }
}
