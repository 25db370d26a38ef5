//! Seeded search for tournaments with more than one minimal TEQ-retentive set.
//!
//! Trial `t` of a run with seed `s` draws its tournament from
//! [`trial_seed`]`(s, t)`, so every trial is reproducible on its own and the
//! report does not depend on how trials are scheduled across threads.

use std::collections::BTreeMap;
use std::fmt;
use std::fs;
use std::io;
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use thiserror::Error;

use crate::altset::{AltSet, MAX_ORDER};
use crate::error::{TeqError, TournamentError};
use crate::teq::{minimal_retentive_sets, TeqCache};
use crate::tournament::Tournament;

pub const DEFAULT_WITNESS_CAP: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("order {0} out of range (must be 1..=64)")]
    InvalidOrder(usize),
    #[error("structured mode needs an order divisible by 4, got {0}")]
    StructuredOrder(usize),
    #[error("trials must be at least 1")]
    NoTrials,
    #[error("unknown search mode {0:?} (expected uniform or structured)")]
    UnknownMode(String),
}

/// How each trial's tournament is drawn.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum SearchMode {
    /// Uniformly random tournament of the target order.
    #[default]
    Uniform,
    /// Random half of order `n/2`, doubled by [`compose_structured`].
    Structured,
}

impl fmt::Display for SearchMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SearchMode::Uniform => "uniform",
            SearchMode::Structured => "structured",
        })
    }
}

impl FromStr for SearchMode {
    type Err = SearchError;

    fn from_str(s: &str) -> Result<Self, SearchError> {
        match s {
            "uniform" => Ok(SearchMode::Uniform),
            "structured" => Ok(SearchMode::Structured),
            other => Err(SearchError::UnknownMode(other.to_string())),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    pub order: usize,
    pub trials: u64,
    pub seed: u64,
    pub mode: SearchMode,
    /// Per-trial limit on TEQ computation; `None` means unlimited.
    pub time_budget: Option<Duration>,
    /// Maximum number of witnesses kept in the report. Counts stay exact.
    pub witness_cap: usize,
}

impl SearchConfig {
    pub fn new(order: usize, trials: u64, seed: u64) -> Self {
        SearchConfig {
            order,
            trials,
            seed,
            mode: SearchMode::Uniform,
            time_budget: None,
            witness_cap: DEFAULT_WITNESS_CAP,
        }
    }

    pub fn with_mode(mut self, mode: SearchMode) -> Self {
        self.mode = mode;
        self
    }

    pub fn validate(&self) -> Result<(), SearchError> {
        if self.order == 0 || self.order > MAX_ORDER {
            return Err(SearchError::InvalidOrder(self.order));
        }
        if self.trials == 0 {
            return Err(SearchError::NoTrials);
        }
        if self.mode == SearchMode::Structured && !self.order.is_multiple_of(4) {
            return Err(SearchError::StructuredOrder(self.order));
        }
        Ok(())
    }
}

/// SplitMix64 output function.
fn mix64(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Seed of trial `trial` in a run seeded with `seed`:
/// `mix64(mix64(seed) + (trial + 1) * 0x9e3779b97f4a7c15)` with wrapping
/// arithmetic, where `mix64` is the SplitMix64 finalizer.
pub fn trial_seed(seed: u64, trial: u64) -> u64 {
    mix64(mix64(seed).wrapping_add(trial.wrapping_add(1).wrapping_mul(0x9e37_79b9_7f4a_7c15)))
}

/// Doubles `half` (order `2k`, first `k` alternatives forming part 1) into a
/// tournament of order `4k`: an X copy on `0..2k` and a Y copy on `2k..4k`,
/// with `X1 > Y2`, `X2 > Y1`, `Y1 > X1`, `Y2 > X2` across.
pub fn compose_structured(half: &Tournament, split: usize) -> Result<Tournament, TournamentError> {
    let m = half.order();
    if !m.is_multiple_of(2) {
        return Err(TournamentError::OddOrder(m));
    }
    if split * 2 != m {
        return Err(TournamentError::IndexOutOfRange { index: split, order: m });
    }
    if 2 * m > MAX_ORDER {
        return Err(TournamentError::InvalidOrder(2 * m));
    }
    let first_part = |v: usize| v % m < split;
    Ok(Tournament::from_fn(2 * m, |i, j| {
        // i < j throughout
        if j < m || i >= m {
            half.beats(i % m, j % m)
        } else {
            // i in X, j in Y: X1 beats Y2, X2 beats Y1
            first_part(i) != first_part(j)
        }
    }))
}

/// Default trial generator for `config`.
pub fn draw(config: &SearchConfig, seed: u64) -> Tournament {
    match config.mode {
        SearchMode::Uniform => Tournament::random(config.order, seed).expect("validated order"),
        SearchMode::Structured => {
            let half = Tournament::random(config.order / 2, seed).expect("validated order");
            compose_structured(&half, config.order / 4).expect("validated order")
        }
    }
}

/// A tournament found with two or more minimal retentive sets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub trial: u64,
    pub seed: u64,
    /// The tournament in the text format.
    pub tournament: String,
    pub minimal_sets: Vec<AltSet>,
}

impl Witness {
    /// Parses the stored tournament and checks it again from scratch.
    pub fn reverify(&self) -> bool {
        Tournament::parse(&self.tournament).is_ok_and(|t| minimal_retentive_sets(&t).len() >= 2)
    }

    pub fn file_name(&self) -> String {
        format!("witness-{:08}.txt", self.trial)
    }
}

/// Wall-clock figures. Not part of report equality.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct TimingStats {
    pub total: Duration,
    pub mean_trial: Duration,
    pub max_trial: Duration,
}

#[derive(Clone, Debug)]
pub struct SearchReport {
    pub config: SearchConfig,
    pub trials_run: u64,
    /// Trials with at least two minimal retentive sets.
    pub found: u64,
    pub timed_out: u64,
    /// Number of minimal retentive sets -> number of trials.
    pub multiplicity: BTreeMap<usize, u64>,
    /// First `witness_cap` findings in trial order.
    pub witnesses: Vec<Witness>,
    pub timing: TimingStats,
}

/// Equality ignores `timing`.
impl PartialEq for SearchReport {
    fn eq(&self, other: &Self) -> bool {
        self.config == other.config
            && self.trials_run == other.trials_run
            && self.found == other.found
            && self.timed_out == other.timed_out
            && self.multiplicity == other.multiplicity
            && self.witnesses == other.witnesses
    }
}

impl SearchReport {
    /// `key=value` lines; see the README for the field list.
    pub fn to_key_value(&self) -> String {
        let c = &self.config;
        let mut lines = vec![
            format!("order={}", c.order),
            format!("mode={}", c.mode),
            format!("seed={}", c.seed),
            format!("trials={}", c.trials),
            format!("trials_run={}", self.trials_run),
            format!("found={}", self.found),
            format!("timed_out={}", self.timed_out),
        ];
        for (k, v) in &self.multiplicity {
            lines.push(format!("multiplicity.{k}={v}"));
        }
        lines.push(format!("witnesses={}", self.witnesses.len()));
        for (n, w) in self.witnesses.iter().enumerate() {
            lines.push(format!("witness.{n}.trial={}", w.trial));
            lines.push(format!("witness.{n}.seed={}", w.seed));
            let sets: Vec<String> = w.minimal_sets.iter().map(|s| s.to_string().replace(' ', ",")).collect();
            lines.push(format!("witness.{n}.minimal_sets={}", sets.join(";")));
        }
        lines.push(format!("time.total_ms={:.3}", self.timing.total.as_secs_f64() * 1e3));
        lines.push(format!("time.mean_trial_ms={:.3}", self.timing.mean_trial.as_secs_f64() * 1e3));
        lines.push(format!("time.max_trial_ms={:.3}", self.timing.max_trial.as_secs_f64() * 1e3));
        lines.join("\n") + "\n"
    }

    /// Writes one text-format file per witness into `dir`.
    pub fn write_witnesses(&self, dir: &Path) -> io::Result<Vec<PathBuf>> {
        fs::create_dir_all(dir)?;
        self.witnesses
            .iter()
            .map(|w| {
                let path = dir.join(w.file_name());
                fs::write(&path, &w.tournament)?;
                Ok(path)
            })
            .collect()
    }
}

impl fmt::Display for SearchReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = &self.config;
        writeln!(f, "search: order {} ({} mode), seed {}, {} trials", c.order, c.mode, c.seed, c.trials)?;
        writeln!(f, "multiple minimal retentive sets: {} of {}", self.found, self.trials_run)?;
        if self.timed_out > 0 {
            writeln!(f, "timed out: {}", self.timed_out)?;
        }
        for (k, v) in &self.multiplicity {
            writeln!(f, "  {k} minimal set(s): {v}")?;
        }
        for w in &self.witnesses {
            let sets: Vec<String> = w.minimal_sets.iter().map(|s| format!("{{{s}}}")).collect();
            writeln!(f, "witness trial {} (seed {}): {}", w.trial, w.seed, sets.join(" "))?;
        }
        write!(
            f,
            "time: {:.3}s total, {:.3}ms mean, {:.3}ms max per trial",
            self.timing.total.as_secs_f64(),
            self.timing.mean_trial.as_secs_f64() * 1e3,
            self.timing.max_trial.as_secs_f64() * 1e3
        )
    }
}

enum Outcome {
    Sets(Vec<AltSet>),
    TimedOut,
}

struct TrialRecord {
    trial: u64,
    seed: u64,
    tournament: Tournament,
    outcome: Outcome,
    elapsed: Duration,
}

/// Runs the search with the default generator for `config.mode`.
pub fn search_random(config: &SearchConfig) -> Result<SearchReport, SearchError> {
    search_with(config, |seed| draw(config, seed))
}

/// Runs the search drawing trial tournaments from `generate(trial_seed)`.
pub fn search_with<G>(config: &SearchConfig, generate: G) -> Result<SearchReport, SearchError>
where
    G: Fn(u64) -> Tournament + Sync,
{
    config.validate()?;
    let start = Instant::now();
    let records: Vec<TrialRecord> = (0..config.trials)
        .into_par_iter()
        .map(|trial| run_trial(config, &generate, trial))
        .collect();
    Ok(aggregate(config, records, start.elapsed()))
}

fn run_trial<G: Fn(u64) -> Tournament>(config: &SearchConfig, generate: &G, trial: u64) -> TrialRecord {
    let seed = trial_seed(config.seed, trial);
    let started = Instant::now();
    let tournament = generate(seed);
    let mut cache = TeqCache::new(tournament.clone());
    if let Some(budget) = config.time_budget {
        cache = cache.with_deadline(started + budget);
    }
    let outcome = match cache.minimal_retentive_sets() {
        Ok(sets) => Outcome::Sets(sets),
        Err(TeqError::TimedOut) => Outcome::TimedOut,
        Err(e) => unreachable!("generated tournament rejected: {e}"),
    };
    TrialRecord { trial, seed, tournament, outcome, elapsed: started.elapsed() }
}

fn aggregate(config: &SearchConfig, records: Vec<TrialRecord>, total: Duration) -> SearchReport {
    let mut report = SearchReport {
        config: config.clone(),
        trials_run: 0,
        found: 0,
        timed_out: 0,
        multiplicity: BTreeMap::new(),
        witnesses: Vec::new(),
        timing: TimingStats { total, ..TimingStats::default() },
    };
    let mut summed = Duration::ZERO;
    for r in records {
        report.trials_run += 1;
        summed += r.elapsed;
        report.timing.max_trial = report.timing.max_trial.max(r.elapsed);
        match r.outcome {
            Outcome::TimedOut => report.timed_out += 1,
            Outcome::Sets(sets) => {
                *report.multiplicity.entry(sets.len()).or_default() += 1;
                if sets.len() >= 2 {
                    report.found += 1;
                    if report.witnesses.len() < config.witness_cap {
                        report.witnesses.push(Witness {
                            trial: r.trial,
                            seed: r.seed,
                            tournament: r.tournament.to_text(),
                            minimal_sets: sets,
                        });
                    }
                }
            }
        }
    }
    if report.trials_run > 0 {
        report.timing.mean_trial = summed / report.trials_run as u32;
    }
    report
}
