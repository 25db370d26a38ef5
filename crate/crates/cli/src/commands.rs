use std::fs;
use std::path::{Path, PathBuf};
use std::time::Duration;

use serde_json::{json, Value};
use teq_core::counterexample::{label, ClaimEntry};
use teq_core::search::{search_random, SearchConfig, SearchMode, SearchReport};
use teq_core::{
    build_counterexample, find_isomorphism, verify_claims, AltSet, ParseError, TeqCache, Tournament,
    VerificationReport,
};
use thiserror::Error;

use crate::indices::{check_index, one_based, parse_list};
use crate::{Cli, Command, Mode};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{}: {source}", path.display())]
    Read {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("{}: {source}", path.display())]
    Malformed {
        path: PathBuf,
        #[source]
        source: ParseError,
    },
    #[error("writing witnesses to {}: {source}", path.display())]
    Write {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Read { .. } | CliError::Malformed { .. } | CliError::Write { .. } => 3,
        }
    }
}

pub struct Output {
    pub text: String,
    pub status: u8,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, status: 0 }
    }
}

fn load(path: &Path) -> Result<Tournament, CliError> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Read { path: path.into(), source })?;
    Tournament::parse(&text).map_err(|source| CliError::Malformed { path: path.into(), source })
}

fn pretty(v: Value) -> String {
    serde_json::to_string_pretty(&v).expect("json values serialize") + "\n"
}

fn line(set: AltSet) -> String {
    set.to_string() + "\n"
}

pub fn run(cli: &Cli) -> Result<Output, CliError> {
    let json = cli.json;
    match &cli.command {
        Command::VerifyCounterexample => {
            let report = verify_claims(&build_counterexample());
            let text = if json { pretty(report_json(&report)) } else { format!("{report}\n") };
            Ok(Output { text, status: if report.passed() { 0 } else { 1 } })
        }
        Command::Teq { file } => {
            let t = load(file)?;
            let set = TeqCache::new(t.clone()).teq().expect("no deadline");
            let text = if json {
                pretty(json!({ "order": t.order(), "teq": one_based(set) }))
            } else {
                line(set)
            };
            Ok(Output::ok(text))
        }
        Command::MinimalRetentive { file } => {
            let t = load(file)?;
            let sets = teq_core::minimal_retentive_sets(&t);
            let text = if json {
                let sets: Vec<_> = sets.iter().map(|&s| one_based(s)).collect();
                pretty(json!({ "order": t.order(), "minimal_retentive_sets": sets }))
            } else {
                sets.iter().map(|&s| line(s)).collect()
            };
            Ok(Output::ok(text))
        }
        Command::Retentive { file, set } => {
            let t = load(file)?;
            let set = parse_list(set, t.order()).map_err(CliError::Usage)?;
            let retentive = TeqCache::new(t).is_retentive(set).expect("set validated");
            let text = if json {
                pretty(json!({ "set": one_based(set), "retentive": retentive }))
            } else if retentive {
                "retentive\n".into()
            } else {
                "not retentive\n".into()
            };
            Ok(Output { text, status: if retentive { 0 } else { 1 } })
        }
        Command::Dominators { file, alt, within } => {
            let t = load(file)?;
            let x = check_index(*alt, t.order()).map_err(CliError::Usage)?;
            let within = match within {
                Some(list) => parse_list(list, t.order()).map_err(CliError::Usage)?,
                None => t.universe(),
            };
            let dom = t.dominators(within, x).expect("validated");
            let text = if json {
                pretty(json!({ "alt": alt, "within": one_based(within), "dominators": one_based(dom) }))
            } else {
                line(dom)
            };
            Ok(Output::ok(text))
        }
        Command::Isomorphic { file_a, file_b } => {
            let a = load(file_a)?;
            let b = load(file_b)?;
            let found = find_isomorphism(&a, &b);
            let text = match (&found, json) {
                (Some(m), true) => {
                    let map: Vec<usize> = m.as_slice().iter().map(|v| v + 1).collect();
                    pretty(json!({ "isomorphic": true, "mapping": map }))
                }
                (None, true) => pretty(json!({ "isomorphic": false, "mapping": null })),
                (Some(m), false) => {
                    let pairs: Vec<String> =
                        m.as_slice().iter().enumerate().map(|(i, v)| format!("{}->{}", i + 1, v + 1)).collect();
                    format!("isomorphic\n{}\n", pairs.join(" "))
                }
                (None, false) => "not isomorphic\n".into(),
            };
            Ok(Output { text, status: if found.is_some() { 0 } else { 1 } })
        }
        Command::Gen { order, seed } => {
            let t = Tournament::random(*order, *seed).map_err(|e| CliError::Usage(e.to_string()))?;
            let text = if json {
                pretty(json!({ "order": order, "seed": seed, "tournament": t.to_text() }))
            } else {
                t.to_text()
            };
            Ok(Output::ok(text))
        }
        Command::Search { order, trials, seed, mode, time_budget_ms, witness_cap, out, kv } => {
            let config = SearchConfig {
                order: *order,
                trials: *trials,
                seed: *seed,
                mode: match mode {
                    Mode::Uniform => SearchMode::Uniform,
                    Mode::Structured => SearchMode::Structured,
                },
                time_budget: time_budget_ms.map(Duration::from_millis),
                witness_cap: *witness_cap,
            };
            let report = search_random(&config).map_err(|e| CliError::Usage(e.to_string()))?;
            let files = match out {
                Some(dir) => report
                    .write_witnesses(dir)
                    .map_err(|source| CliError::Write { path: dir.clone(), source })?,
                None => Vec::new(),
            };
            let text = if json {
                pretty(search_json(&report, &files))
            } else if *kv {
                report.to_key_value()
            } else {
                format!("{report}\n")
            };
            Ok(Output::ok(text))
        }
    }
}

fn claim_json(c: &ClaimEntry) -> Value {
    json!({
        "id": c.id,
        "description": c.description,
        "passed": c.passed,
        "expected": c.expected.map(one_based),
        "computed": c.computed.map(one_based),
        "detail": c.detail,
    })
}

fn report_json(r: &VerificationReport) -> Value {
    let labels = |s: AltSet| s.iter().map(label).collect::<Vec<_>>();
    json!({
        "verdict": if r.passed() { "pass" } else { "fail" },
        "claims": r.claims.iter().map(claim_json).collect::<Vec<_>>(),
        "minimal_sets": r.minimal_sets.iter().map(|&s| one_based(s)).collect::<Vec<_>>(),
        "minimal_set_labels": r.minimal_sets.iter().map(|&s| labels(s)).collect::<Vec<_>>(),
        "isomorphism": r.isomorphism.as_ref().map(|m| m.as_slice().iter().map(|v| v + 1).collect::<Vec<_>>()),
        "notes": r.notes,
    })
}

fn search_json(r: &SearchReport, files: &[PathBuf]) -> Value {
    let c = &r.config;
    let witnesses: Vec<Value> = r
        .witnesses
        .iter()
        .enumerate()
        .map(|(k, w)| {
            json!({
                "trial": w.trial,
                "seed": w.seed,
                "minimal_sets": w.minimal_sets.iter().map(|&s| one_based(s)).collect::<Vec<_>>(),
                "tournament": w.tournament,
                "file": files.get(k).map(|p| p.display().to_string()),
            })
        })
        .collect();
    let multiplicity: serde_json::Map<String, Value> =
        r.multiplicity.iter().map(|(k, v)| (k.to_string(), json!(v))).collect();
    json!({
        "order": c.order,
        "mode": c.mode.to_string(),
        "seed": c.seed,
        "trials": c.trials,
        "trials_run": r.trials_run,
        "found": r.found,
        "timed_out": r.timed_out,
        "multiplicity": multiplicity,
        "witnesses": witnesses,
        "timing": {
            "total_ms": r.timing.total.as_secs_f64() * 1e3,
            "mean_trial_ms": r.timing.mean_trial.as_secs_f64() * 1e3,
            "max_trial_ms": r.timing.max_trial.as_secs_f64() * 1e3,
        },
    })
}
