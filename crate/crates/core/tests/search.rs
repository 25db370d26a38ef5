use std::time::Duration;

use teq_core::search::{search_random, search_with, trial_seed, SearchConfig, SearchMode, Witness};
use teq_core::{build_counterexample, minimal_retentive_sets, Tournament};

#[test]
fn reports_are_reproducible() {
    let config = SearchConfig::new(12, 100, 2024);
    let a = search_random(&config).unwrap();
    let b = search_random(&config).unwrap();
    assert_eq!(a, b);
    assert_eq!(a.to_key_value().lines().filter(|l| !l.starts_with("time.")).collect::<Vec<_>>(),
               b.to_key_value().lines().filter(|l| !l.starts_with("time.")).collect::<Vec<_>>());
}

#[test]
fn trials_draw_distinct_tournaments() {
    let mut seen: Vec<Tournament> =
        (0..20).map(|trial| Tournament::random(10, trial_seed(1, trial)).unwrap()).collect();
    seen.sort_by_key(|t| t.to_text());
    seen.dedup();
    assert_eq!(seen.len(), 20);
}

#[test]
fn witnesses_round_trip_through_files() {
    let dir = tempfile::tempdir().unwrap();
    let config = SearchConfig::new(24, 3, 0);
    let report = search_with(&config, |_| build_counterexample().tournament).unwrap();
    let paths = report.write_witnesses(dir.path()).unwrap();
    assert_eq!(paths.len(), 3);
    for p in paths {
        let t = Tournament::parse(&std::fs::read_to_string(p).unwrap()).unwrap();
        assert!(minimal_retentive_sets(&t).len() >= 2);
    }
}

#[test]
fn bogus_witness_fails_reverification() {
    let w = Witness { trial: 0, seed: 0, tournament: Tournament::transitive(5).to_text(), minimal_sets: vec![] };
    assert!(!w.reverify());
    let w = Witness { tournament: "garbage".into(), ..w };
    assert!(!w.reverify());
}

#[test]
fn structured_mode_runs() {
    let mut config = SearchConfig::new(16, 50, 3).with_mode(SearchMode::Structured);
    config.time_budget = Some(Duration::from_secs(60));
    let report = search_random(&config).unwrap();
    assert_eq!(report.trials_run, 50);
    assert_eq!(report.timed_out, 0);
    assert_eq!(report.multiplicity.values().sum::<u64>(), 50);
    for w in &report.witnesses {
        assert!(w.reverify());
    }
}
